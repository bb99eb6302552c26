#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "mbposd/code.hpp"
#include "mbposd/codes_data.hpp"

namespace mbposd {

inline const std::vector<std::string>& bundled_code_names() {
    static const std::vector<std::string> names = {"ccsds_128_64", "ldpc_96_48", "ldpc_32_16",
                                                   "hamming_7_4"};
    return names;
}

inline CodeSpec load_bundled_code(const std::string& name) {
    if (name == "ccsds_128_64") return load_alist(std::string(data::k_ccsds_128_64), name);
    if (name == "ldpc_96_48") return load_alist(std::string(data::k_ldpc_96_48), name);
    if (name == "ldpc_32_16") return load_alist(std::string(data::k_ldpc_32_16), name);
    if (name == "hamming_7_4") return load_alist(std::string(data::k_hamming_7_4), name);
    throw AlistError("unknown bundled code '" + name + "'");
}

/// Accepts either a bundled code name or a path to an alist file.
inline CodeSpec resolve_code(const std::string& name_or_path) {
    for (const auto& n : bundled_code_names())
        if (n == name_or_path) return load_bundled_code(n);
    std::ifstream in(name_or_path);
    if (!in) throw AlistError("cannot open code file '" + name_or_path + "'");
    return load_alist(in, name_or_path);
}

}  // namespace mbposd
