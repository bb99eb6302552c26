#!/usr/bin/env python3
"""Regenerates include/mbposd/codes_data.hpp from the files under codes/."""

import os

ROOT = os.path.join(os.path.dirname(__file__), "..")
CODES = os.path.join(ROOT, "codes")
OUT = os.path.join(ROOT, "include", "mbposd", "codes_data.hpp")

NAMES = ["ccsds_128_64", "ldpc_96_48", "ldpc_32_16", "hamming_7_4"]


def main():
    parts = [
        "#pragma once\n",
        "// Generated by scripts/embed_codes.py from codes/*.alist; do not edit.\n",
        "\n#include <string_view>\n",
        "\nnamespace mbposd::data {\n",
    ]
    for name in NAMES:
        with open(os.path.join(CODES, name + ".alist")) as f:
            text = f.read()
        parts.append(f"\ninline constexpr std::string_view k_{name} = R\"ALIST({text})ALIST\";\n")
    parts.append("\n}  // namespace mbposd::data\n")
    with open(OUT, "w") as f:
        f.write("".join(parts))
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
