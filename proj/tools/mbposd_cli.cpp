// Monte-Carlo simulation and single-frame decoding front end.
//
// Exit codes: 0 success, 1 configuration error, 2 code-file error.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mbposd/bundled_codes.hpp"
#include "mbposd/mbposd.hpp"
#include "mbposd/na_bound.hpp"
#include "mbposd/sim.hpp"

namespace {

using namespace mbposd;

double parse_double(const std::string& s, const char* what) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw std::invalid_argument(std::string("cannot parse ") + what + " value '" + s + "'");
    return v;
}

std::vector<double> parse_list(const std::string& s, const char* what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(parse_double(item, what));
    }
    if (out.empty()) throw std::invalid_argument(std::string("empty list for ") + what);
    return out;
}

struct CommonOpts {
    std::string code;
    std::string decoder = "mbp-osd";
    int order = 3;
    std::string snr = "1,1.5,2,2.5,3";
    long frames = 0;
    long target_errors = 0;
    long frame_cap = 1000000;
    std::string beta;
    std::string lambda;
    int alpha = 0;  // 0 = girth rule
    int tmax = 30;
    uint64_t seed = 1;
    int workers = 1;
    std::string out;
    std::string trace;
    bool no_timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool wants_decoder = true) {
    cmd->add_option("--code", o.code, "bundled code name or alist path")->required();
    if (wants_decoder) {
        cmd->add_option("--decoder", o.decoder, "bp | osd | bp-osd | mbp-osd");
        cmd->add_option("--order", o.order, "OSD reprocessing order m");
        cmd->add_option("--beta", o.beta, "mBP offset (default: per-code)");
        cmd->add_option("--lambda", o.lambda, "stopping threshold, 'inf' accepted");
        cmd->add_option("--alpha", o.alpha, "mBP iterations (default: girth rule)");
        cmd->add_option("--tmax", o.tmax, "maximum BP iterations");
    }
    cmd->add_option("--seed", o.seed, "campaign seed");
}

void add_campaign(CLI::App* cmd, CommonOpts& o) {
    add_common(cmd, o);
    cmd->add_option("--snr", o.snr, "comma list of SNR points in dB (SNR = 2/N0)");
    cmd->add_option("--frames", o.frames, "frames per grid cell");
    cmd->add_option("--target-errors", o.target_errors, "stop each cell at this many frame errors");
    cmd->add_option("--frame-cap", o.frame_cap, "frame limit per cell in target mode");
    cmd->add_option("--workers", o.workers, "worker threads");
    cmd->add_option("--out", o.out, "CSV output path");
    cmd->add_option("--trace", o.trace, "JSON-lines per-frame trace path");
    cmd->add_flag("--no-timing", o.no_timing, "suppress wall-clock timing for reproducible CSV");
}

CampaignConfig to_campaign(const CommonOpts& o, SweepAxis axis) {
    CampaignConfig cfg;
    cfg.code = o.code;
    cfg.decoder = decoder_from_string(o.decoder);
    cfg.order = o.order;
    cfg.snr_db = parse_list(o.snr, "--snr");
    if (o.target_errors > 0) {
        cfg.target_errors = o.target_errors;
        cfg.frame_cap = o.frame_cap;
    } else {
        cfg.frames = o.frames > 0 ? o.frames : 10000;
    }
    cfg.seed = o.seed;
    cfg.bp.max_iters = o.tmax;
    if (o.alpha > 0) cfg.alpha = o.alpha;
    cfg.workers = o.workers;
    cfg.measure_time = !o.no_timing;
    cfg.trace_path = o.trace;
    cfg.axis = axis;
    if (axis != SweepAxis::kBeta && !o.beta.empty()) cfg.beta = parse_double(o.beta, "--beta");
    if (axis != SweepAxis::kLambda && !o.lambda.empty())
        cfg.lambda = parse_double(o.lambda, "--lambda");
    return cfg;
}

void print_report(const TrialReport& rep) {
    std::printf("# code=%s (%d,%d) decoder=%s order=%d seed=%llu\n", rep.code_name.c_str(), rep.n,
                rep.k, to_string(rep.decoder), rep.order,
                static_cast<unsigned long long>(rep.seed));
    std::printf("%8s %9s %9s %7s %11s %9s %9s %12s %12s %9s\n", "snr_db", "sweep", "frames", "errs",
                "bler", "gamma", "undet", "mean_flops", "mean_bops", "ms/frame");
    for (const CellStats& c : rep.cells) {
        std::printf("%8.3g %9.4g %9ld %7ld %11.4e %9.4f %9.2e %12.4e %12.4e %9.4f\n", c.snr_db,
                    c.sweep_value, c.frames, c.frame_errors, c.bler, c.gamma_hat,
                    c.undetected_ratio, c.mean_flops, c.mean_bops, c.mean_ms);
    }
}

int run_simulate(const CommonOpts& o, SweepAxis axis, const std::string& sweep_list) {
    CampaignConfig cfg = to_campaign(o, axis);
    if (axis == SweepAxis::kBeta)
        cfg.sweep = parse_list(sweep_list.empty() ? "0.4,0.45,0.5,0.55,0.6,0.65,0.7,0.75,0.8,0.85,0.9,0.95,1.0"
                                                  : sweep_list,
                               "--beta");
    if (axis == SweepAxis::kLambda)
        cfg.sweep = parse_list(sweep_list.empty() ? "0.5,1,2,5,10,inf" : sweep_list, "--lambda");
    TrialReport rep = run_campaign(cfg);
    print_report(rep);
    if (!o.out.empty()) {
        export_report(rep, o.out);
        std::printf("# wrote %s\n", o.out.c_str());
    }
    return 0;
}

int run_inspect(const std::string& name, bool with_dmin) {
    CodeSpec code = resolve_code(name);
    std::printf("code:    %s\n", code.name.c_str());
    std::printf("n:       %d\n", code.n);
    std::printf("k:       %d\n", code.k);
    std::printf("rate:    %.4f\n", static_cast<double>(code.k) / code.n);
    if (code.girth)
        std::printf("girth:   %d\n", *code.girth);
    else
        std::printf("girth:   acyclic\n");
    std::printf("alpha:   %d%s\n", alpha_from_girth(code.girth),
                code.girth ? "" : "  (acyclic fallback)");
    const bool gh_ok = [&] {
        for (std::size_t r = 0; r < code.gen.rows(); ++r)
            if (syndrome(code.pcm, code.gen.row_vec(r)).any()) return false;
        return true;
    }();
    std::printf("rank(G): %zu (expected %d)\n", gf2_rank(code.gen), code.k);
    std::printf("rank(H): %zu (expected %d)\n", gf2_rank(code.pcm), code.n - code.k);
    std::printf("G*H^T:   %s\n", gh_ok ? "zero" : "NONZERO");
    std::printf("edges:   %d\n", code.graph.n_edges);
    if (with_dmin) {
        if (code.k <= kMinDistanceMaxK)
            std::printf("d_min:   %d\n", min_distance_bruteforce(code));
        else
            std::printf("d_min:   skipped (k > %d)\n", kMinDistanceMaxK);
    }
    return 0;
}

std::vector<double> read_llr_file(const std::string& path, const std::string& format, int n) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open LLR file '" + path + "'");
    std::vector<double> llr;
    if (format == "bin") {
        llr.resize(static_cast<std::size_t>(n));
        in.read(reinterpret_cast<char*>(llr.data()), static_cast<std::streamsize>(n * sizeof(double)));
        if (in.gcount() != static_cast<std::streamsize>(n * sizeof(double)))
            throw std::invalid_argument("LLR file too short");
    } else if (format == "hex") {
        std::string hex, line;
        while (in >> line) hex += line;
        if (hex.size() != static_cast<std::size_t>(n) * 16)
            throw std::invalid_argument("hex LLR file must hold exactly " + std::to_string(n) +
                                        " doubles (" + std::to_string(n * 16) + " hex digits)");
        llr.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            uint64_t bits = 0;
            for (int b = 0; b < 8; ++b) {  // little-endian byte order
                const std::string byte = hex.substr(static_cast<std::size_t>(i) * 16 + b * 2, 2);
                bits |= static_cast<uint64_t>(std::stoul(byte, nullptr, 16)) << (8 * b);
            }
            double v;
            std::memcpy(&v, &bits, sizeof(v));
            llr[static_cast<std::size_t>(i)] = v;
        }
    } else if (format == "text") {
        double v;
        while (in >> v) llr.push_back(v);
        if (llr.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("text LLR file holds " + std::to_string(llr.size()) +
                                        " values, code needs " + std::to_string(n));
    } else {
        throw std::invalid_argument("unknown LLR format '" + format + "' (hex|bin|text)");
    }
    return llr;
}

int run_decode(const CommonOpts& o, const std::string& llr_path, const std::string& format,
               bool dump_candidates) {
    CodeSpec code = resolve_code(o.code);
    const LlrVector llr = read_llr_file(llr_path, format, code.n);

    MbpOsdConfig cfg;
    cfg.bp.max_iters = o.tmax;
    cfg.mbp.alpha = o.alpha > 0 ? o.alpha : alpha_from_girth(code.girth);
    cfg.mbp.beta = o.beta.empty() ? default_beta(code.n, code.k, o.order)
                                  : parse_double(o.beta, "--beta");
    cfg.order = o.order;
    cfg.lambda = o.lambda.empty() ? default_lambda(code.n, code.k) : parse_double(o.lambda, "--lambda");

    const DecoderKind kind = decoder_from_string(o.decoder);
    MbpOsdDecoder dec(code);
    std::vector<OsdCandidate> candidates;
    std::vector<OsdCandidate>* cand_ptr = dump_candidates ? &candidates : nullptr;

    BitVec estimate;
    std::printf("code: %s (%d,%d)  decoder: %s\n", code.name.c_str(), code.n, code.k,
                o.decoder.c_str());
    OpCounters counters;
    switch (kind) {
        case DecoderKind::kBp: {
            BpResult r = dec.bp_only(llr, cfg.bp, &counters);
            std::printf("path: %s  iters: %d  D_x: %.6g\n",
                        r.converged ? "bp-converged" : "bp-failed", r.iters_used,
                        stopping_whd(r.estimate, llr));
            estimate = r.estimate;
            break;
        }
        case DecoderKind::kOsd: {
            OsdResult r = osd_decode(code, llr, cfg.order, &counters, cand_ptr);
            std::printf("path: osd-selected  whd: %.6g  phase: %d\n", r.whd, r.best_phase);
            estimate = r.estimate;
            break;
        }
        case DecoderKind::kBpOsd: {
            DecodeOutcome out = dec.baseline_decode(llr, cfg.order, cfg.bp);
            std::printf("path: %s  bp_iters: %d  whd: %.6g\n", to_string(out.path), out.bp_iters,
                        out.whd);
            counters = out.counters;
            estimate = out.estimate;
            break;
        }
        case DecoderKind::kMbpOsd: {
            DecodeOutcome out = dec.decode(llr, cfg, cand_ptr);
            std::printf("path: %s  bp_iters: %d  whd: %.6g  alpha: %d  beta: %.3g  lambda: %.3g\n",
                        to_string(out.path), out.bp_iters, out.whd, cfg.mbp.alpha, cfg.mbp.beta,
                        cfg.lambda);
            counters = out.counters;
            estimate = out.estimate;
            break;
        }
    }
    std::printf("counters: flops=%.6g bops=%.6g bp_iters=%ld mbp_iters=%ld\n",
                counters.total_flops(), counters.total_bops(), counters.bp_iterations,
                counters.mbp_iterations);
    std::printf("syndrome: %s\n", syndrome(code.pcm, estimate).any() ? "NONZERO" : "zero");
    std::printf("estimate: ");
    for (int i = 0; i < code.n; ++i) std::printf("%d", estimate.get(i) ? 1 : 0);
    std::printf("\n");
    if (dump_candidates) {
        std::printf("# candidates (sorted domain): tep_weight whd bits\n");
        for (const OsdCandidate& c : candidates) {
            std::printf("%d %.9g ", c.tep_weight, c.whd);
            for (std::size_t i = 0; i < c.codeword.size(); ++i)
                std::printf("%d", c.codeword.get(i) ? 1 : 0);
            std::printf("\n");
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mBP-OSD decoder and Monte-Carlo BLER simulator for short LDPC codes"};
    app.require_subcommand(1);

    CommonOpts sim_opts, beta_opts, lambda_opts, decode_opts;
    std::string beta_list, lambda_list;

    CLI::App* simulate = app.add_subcommand("simulate", "BLER/complexity campaign over an SNR grid");
    add_campaign(simulate, sim_opts);

    CLI::App* sweep_beta = app.add_subcommand("sweep-beta", "sweep the mBP offset at each SNR");
    add_campaign(sweep_beta, beta_opts);
    sweep_beta->add_option("--beta-list", beta_list, "comma list of beta values (default 0.4..1.0)");

    CLI::App* sweep_lambda =
        app.add_subcommand("sweep-lambda", "sweep the stopping threshold at each SNR");
    add_campaign(sweep_lambda, lambda_opts);
    sweep_lambda->add_option("--lambda-list", lambda_list,
                             "comma list of lambda values, 'inf' accepted");

    std::string inspect_code_name;
    bool inspect_dmin = false;
    CLI::App* inspect = app.add_subcommand("inspect-code", "print code parameters and checks");
    inspect->add_option("--code", inspect_code_name, "bundled code name or alist path")->required();
    inspect->add_flag("--dmin", inspect_dmin, "also compute the minimum distance (k <= 24)");

    std::string llr_path, llr_format = "text";
    bool dump_candidates = false;
    CLI::App* decode = app.add_subcommand("decode", "decode one frame from an LLR file");
    add_common(decode, decode_opts);
    decode->add_option("--llr", llr_path, "LLR input file")->required();
    decode->add_option("--format", llr_format, "hex | bin | text");
    decode->add_flag("--dump-candidates", dump_candidates, "print the OSD candidate list");

    try {
        app.parse(argc, argv);
        if (simulate->parsed()) return run_simulate(sim_opts, SweepAxis::kNone, "");
        if (sweep_beta->parsed()) return run_simulate(beta_opts, SweepAxis::kBeta, beta_list);
        if (sweep_lambda->parsed()) return run_simulate(lambda_opts, SweepAxis::kLambda, lambda_list);
        if (inspect->parsed()) return run_inspect(inspect_code_name, inspect_dmin);
        if (decode->parsed()) return run_decode(decode_opts, llr_path, llr_format, dump_candidates);
        return 1;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const mbposd::AlistError& e) {
        std::fprintf(stderr, "code error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
