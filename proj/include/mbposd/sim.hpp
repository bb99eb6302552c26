#pragma once

#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "mbposd/bundled_codes.hpp"
#include "mbposd/mbposd.hpp"

namespace mbposd {

enum class DecoderKind { kBp, kOsd, kBpOsd, kMbpOsd };

inline const char* to_string(DecoderKind d) {
    switch (d) {
        case DecoderKind::kBp: return "bp";
        case DecoderKind::kOsd: return "osd";
        case DecoderKind::kBpOsd: return "bp-osd";
        case DecoderKind::kMbpOsd: return "mbp-osd";
    }
    return "?";
}

inline DecoderKind decoder_from_string(const std::string& s) {
    if (s == "bp") return DecoderKind::kBp;
    if (s == "osd") return DecoderKind::kOsd;
    if (s == "bp-osd") return DecoderKind::kBpOsd;
    if (s == "mbp-osd") return DecoderKind::kMbpOsd;
    throw std::invalid_argument("unknown decoder '" + s + "' (expected bp|osd|bp-osd|mbp-osd)");
}

enum class SweepAxis { kNone, kBeta, kLambda };

struct CampaignConfig {
    std::string code;                    ///< bundled name or alist path
    DecoderKind decoder = DecoderKind::kMbpOsd;
    int order = 3;
    std::vector<double> snr_db;
    long frames = 0;                     ///< frames per cell (fixed mode)
    long target_errors = 0;              ///< stop a cell at this many frame errors...
    long frame_cap = 0;                  ///< ...but never beyond this many frames
    uint64_t seed = 1;
    BpConfig bp;
    std::optional<int> alpha;            ///< refinement iterations; girth rule when unset
    std::optional<double> beta;          ///< offset; per-code default when unset
    std::optional<double> lambda;        ///< threshold; per-code default (mbp-osd) or +inf
    SweepAxis axis = SweepAxis::kNone;
    std::vector<double> sweep;           ///< values for the active axis
    int workers = 1;
    bool measure_time = true;            ///< off = mean_ms column reads 0 (reproducible output)
    std::string trace_path;              ///< JSON-lines per-frame trace, empty = off

    void validate() const {
        if (snr_db.empty()) throw std::invalid_argument("campaign: SNR grid is empty");
        const bool fixed = frames > 0;
        const bool targeted = target_errors > 0;
        if (!fixed && !targeted) throw std::invalid_argument("campaign: need frames or target errors >= 1");
        if (fixed && targeted)
            throw std::invalid_argument("campaign: frames and target-errors are mutually exclusive");
        if (targeted && frame_cap < 1) throw std::invalid_argument("campaign: target mode needs a frame cap");
        if (workers < 1) throw std::invalid_argument("campaign: workers must be >= 1");
        if (axis != SweepAxis::kNone && sweep.empty())
            throw std::invalid_argument("campaign: sweep axis set but no sweep values");
        if (axis == SweepAxis::kNone && !sweep.empty())
            throw std::invalid_argument("campaign: sweep values without a sweep axis");
        if (order < 0) throw std::invalid_argument("campaign: negative order");
        bp.validate();
    }
};

struct CellStats {
    double snr_db = 0.0;
    double sweep_value = std::numeric_limits<double>::quiet_NaN();
    double beta = 0.0, lambda = 0.0;
    int alpha = 0;
    long frames = 0;
    long frame_errors = 0;
    long bit_errors = 0;
    double bler = 0.0, bler_lo = 0.0, bler_hi = 0.0;
    long osd_invocations = 0;
    double gamma_hat = 0.0;            ///< fraction of frames sent to the OSD stage
    long undetected_errors = 0;        ///< wrong frames accepted by the stopping rule
    double undetected_ratio = 0.0;     ///< NaN when there are no errors at all
    double mean_flops = 0.0;           ///< modeled: BP ops + OSD FLOPs, per frame
    double mean_bops = 0.0;            ///< modeled OSD BOPs per frame
    double mean_ms = 0.0;
    double mean_bp_iters = 0.0;
};

struct TrialReport {
    std::string code_name;
    int n = 0, k = 0;
    DecoderKind decoder = DecoderKind::kMbpOsd;
    int order = 0;
    uint64_t seed = 0;
    std::vector<CellStats> cells;
};

namespace detail {

inline void wilson_interval(long errors, long n, double& lo, double& hi) {
    if (n <= 0) { lo = hi = 0.0; return; }
    const double z = 1.959963984540054;
    const double p = static_cast<double>(errors) / n;
    const double z2n = z * z / n;
    const double denom = 1.0 + z2n;
    const double center = (p + z2n / 2.0) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2n / (4.0 * n)) / denom;
    lo = std::max(0.0, center - half);
    hi = std::min(1.0, center + half);
}

struct FrameRecord {
    bool error = false;
    int bit_errors = 0;
    bool osd_invoked = false;
    bool accepted = false;    ///< the decoder's early/stopping rule fired
    bool bp_converged = false;
    double whd = 0.0;
    int bp_iters = 0;
    OpCounters counters;
    double ms = 0.0;
};

/// Runs `frames` trials split over worker threads in fixed-size batches.
/// Results are folded in trial order after each batch, so every aggregate is
/// independent of the worker count; `should_stop` is consulted only at batch
/// boundaries for the same reason.
template <typename MakeCtx, typename PerFrame, typename Fold, typename ShouldStop>
long run_frames(long frames, int workers, MakeCtx&& make_ctx, PerFrame&& per_frame, Fold&& fold,
                ShouldStop&& should_stop) {
    constexpr long kBatch = 512;
    using Ctx = decltype(make_ctx());
    std::vector<Ctx> ctxs;
    ctxs.reserve(workers);
    for (int w = 0; w < workers; ++w) ctxs.push_back(make_ctx());

    std::vector<FrameRecord> recs(kBatch);
    long done = 0;
    while (done < frames) {
        const long batch = std::min(kBatch, frames - done);
        std::exception_ptr first_error;
        std::mutex err_mutex;
        auto work = [&](int w) {
            try {
                for (long i = w; i < batch; i += workers)
                    recs[static_cast<std::size_t>(i)] = per_frame(ctxs[static_cast<std::size_t>(w)], done + i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> threads;
            threads.reserve(workers);
            for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
            for (auto& t : threads) t.join();
        }
        if (first_error) std::rethrow_exception(first_error);
        for (long i = 0; i < batch; ++i) fold(recs[static_cast<std::size_t>(i)], done + i);
        done += batch;
        if (should_stop()) break;
    }
    return done;
}

}  // namespace detail

/// Monte-Carlo campaign over the (snr x sweep) grid. Trial t of every cell
/// shares the message and unit-variance noise substreams (common random
/// numbers), so cells differ only through the channel scale and the decoder
/// parameters, and the whole report is a pure function of (config, seed).
inline TrialReport run_campaign(const CampaignConfig& cfg) {
    cfg.validate();
    const CodeSpec code = resolve_code(cfg.code);

    TrialReport report;
    report.code_name = code.name;
    report.n = code.n;
    report.k = code.k;
    report.decoder = cfg.decoder;
    report.order = cfg.order;
    report.seed = cfg.seed;

    std::ofstream trace;
    if (!cfg.trace_path.empty()) {
        trace.open(cfg.trace_path);
        if (!trace) throw std::runtime_error("cannot open trace file '" + cfg.trace_path + "'");
    }

    const int alpha = cfg.alpha ? *cfg.alpha : alpha_from_girth(code.girth);
    const std::vector<double> sweep_values =
        cfg.axis == SweepAxis::kNone ? std::vector<double>{std::numeric_limits<double>::quiet_NaN()}
                                     : cfg.sweep;

    for (double snr : cfg.snr_db) {
        for (double sweep_value : sweep_values) {
            double beta = cfg.beta ? *cfg.beta : default_beta(code.n, code.k, cfg.order);
            double lambda = cfg.lambda
                                ? *cfg.lambda
                                : (cfg.decoder == DecoderKind::kMbpOsd ? default_lambda(code.n, code.k)
                                                                       : kLambdaInfinite);
            if (cfg.axis == SweepAxis::kBeta) beta = sweep_value;
            if (cfg.axis == SweepAxis::kLambda) lambda = sweep_value;

            MbpOsdConfig mcfg;
            mcfg.bp = cfg.bp;
            mcfg.mbp.alpha = alpha;
            mcfg.mbp.beta = beta;
            mcfg.order = cfg.order;
            mcfg.lambda = lambda;
            if (cfg.decoder == DecoderKind::kMbpOsd) mcfg.validate();

            const ChannelParams params = ChannelParams::from_snr_db(snr, cfg.seed);

            CellStats cell;
            cell.snr_db = snr;
            cell.sweep_value = sweep_value;
            cell.beta = beta;
            cell.lambda = lambda;
            cell.alpha = alpha;

            OpCounters totals;
            double total_ms = 0.0;
            long total_bp_iters = 0;
            long bp_unconverged = 0;

            auto per_frame = [&](MbpOsdDecoder& dec, long trial) {
                detail::FrameRecord rec;
                const BitVec msg = random_message(static_cast<std::size_t>(code.k), cfg.seed,
                                                  static_cast<uint64_t>(trial));
                const BitVec cw = encode(code.gen, msg);
                const std::vector<double> recv =
                    transmit(modulate(cw), params, static_cast<uint64_t>(trial));
                const LlrVector llr = channel_llr(recv, params, cfg.bp.l_max);

                const auto t0 = std::chrono::steady_clock::now();
                BitVec estimate;
                switch (cfg.decoder) {
                    case DecoderKind::kBp: {
                        BpResult r = dec.bp_only(llr, cfg.bp, &rec.counters);
                        rec.bp_converged = r.converged;
                        rec.bp_iters = r.iters_used;
                        rec.whd = stopping_whd(r.estimate, llr);
                        rec.accepted = r.converged && rec.whd <= lambda;
                        estimate = std::move(r.estimate);
                        break;
                    }
                    case DecoderKind::kOsd: {
                        OsdResult r = osd_decode(code, llr, cfg.order, &rec.counters);
                        rec.osd_invoked = true;
                        rec.whd = r.whd;
                        estimate = std::move(r.estimate);
                        break;
                    }
                    case DecoderKind::kBpOsd: {
                        DecodeOutcome out = dec.baseline_decode(llr, cfg.order, cfg.bp);
                        rec.bp_converged = out.converged_bp;
                        rec.bp_iters = out.bp_iters;
                        rec.osd_invoked = out.path == DecodePath::kOsdSelected;
                        rec.accepted = out.path == DecodePath::kEarlyTerminated;
                        rec.whd = out.whd;
                        rec.counters = out.counters;
                        estimate = std::move(out.estimate);
                        break;
                    }
                    case DecoderKind::kMbpOsd: {
                        DecodeOutcome out = dec.decode(llr, mcfg);
                        rec.bp_converged = out.converged_bp;
                        rec.bp_iters = out.bp_iters;
                        rec.osd_invoked = out.path == DecodePath::kOsdSelected;
                        rec.accepted = out.path == DecodePath::kEarlyTerminated;
                        rec.whd = out.whd;
                        rec.counters = out.counters;
                        estimate = std::move(out.estimate);
                        break;
                    }
                }
                if (cfg.measure_time) {
                    const auto t1 = std::chrono::steady_clock::now();
                    rec.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
                }
                rec.bit_errors = static_cast<int>(hamming_distance(estimate, cw));
                rec.error = rec.bit_errors != 0;
                return rec;
            };

            auto fold = [&](const detail::FrameRecord& rec, long trial) {
                ++cell.frames;
                if (rec.error) {
                    ++cell.frame_errors;
                    cell.bit_errors += rec.bit_errors;
                    if (rec.accepted) ++cell.undetected_errors;
                }
                if (rec.osd_invoked) ++cell.osd_invocations;
                if (!rec.bp_converged) ++bp_unconverged;
                totals += rec.counters;
                total_ms += rec.ms;
                total_bp_iters += rec.bp_iters;
                if (trace.is_open()) {
                    nlohmann::json j;
                    j["frame_id"] = trial;
                    j["snr_db"] = snr;
                    if (cfg.axis != SweepAxis::kNone) j["sweep_value"] = sweep_value;
                    j["path"] = cfg.decoder == DecoderKind::kBp
                                    ? (rec.bp_converged ? "bp-converged" : "bp-failed")
                                    : (rec.osd_invoked ? "osd-selected" : "early-terminated");
                    j["bp_iters"] = rec.bp_iters;
                    j["whd"] = rec.whd;
                    j["counters"] = {{"flops", rec.counters.total_flops()},
                                     {"bops", rec.counters.total_bops()},
                                     {"bp_iterations", rec.counters.bp_iterations},
                                     {"mbp_iterations", rec.counters.mbp_iterations}};
                    j["correct"] = !rec.error;
                    trace << j.dump() << '\n';
                }
            };

            const long max_frames = cfg.frames > 0 ? cfg.frames : cfg.frame_cap;
            auto should_stop = [&]() {
                return cfg.target_errors > 0 && cell.frame_errors >= cfg.target_errors;
            };
            detail::run_frames(
                max_frames, cfg.workers, [&]() { return MbpOsdDecoder(code); }, per_frame, fold,
                should_stop);

            cell.bler = cell.frames ? static_cast<double>(cell.frame_errors) / cell.frames : 0.0;
            detail::wilson_interval(cell.frame_errors, cell.frames, cell.bler_lo, cell.bler_hi);
            // For pure BP the OSD stage does not exist; gamma_hat reports the
            // fraction of frames that would have handed over (no convergence).
            const long handovers =
                cfg.decoder == DecoderKind::kBp ? bp_unconverged : cell.osd_invocations;
            cell.gamma_hat = cell.frames ? static_cast<double>(handovers) / cell.frames : 0.0;
            cell.undetected_ratio = cell.frame_errors
                                        ? static_cast<double>(cell.undetected_errors) / cell.frame_errors
                                        : std::numeric_limits<double>::quiet_NaN();
            if (cell.frames) {
                cell.mean_flops = totals.total_flops() / cell.frames;
                cell.mean_bops = totals.total_bops() / cell.frames;
                cell.mean_ms = total_ms / cell.frames;
                cell.mean_bp_iters = static_cast<double>(total_bp_iters) / cell.frames;
            }
            report.cells.push_back(cell);
        }
    }
    return report;
}

struct UndetectedStats {
    long frames = 0;
    long total_errors = 0;
    long undetected = 0;              ///< wrong BP outputs that pass the stopping rule
    std::optional<double> ratio;      ///< empty when no errors occurred
};

/// Ratio of wrong BP outputs accepted by the stopping criterion to all wrong
/// BP outputs, at the given threshold. A missing ratio means the run saw no
/// decoding errors and needs more frames.
inline UndetectedStats measure_undetected_ratio(const CodeSpec& code, double snr_db, double lambda,
                                                long frames, uint64_t seed, int workers = 1,
                                                const BpConfig& bp_cfg = {}) {
    if (frames < 1) throw std::invalid_argument("measure_undetected_ratio: frames must be >= 1");
    const ChannelParams params = ChannelParams::from_snr_db(snr_db, seed);
    UndetectedStats st;

    auto per_frame = [&](BpDecoder& dec, long trial) {
        const BitVec msg =
            random_message(static_cast<std::size_t>(code.k), seed, static_cast<uint64_t>(trial));
        const BitVec cw = encode(code.gen, msg);
        const std::vector<double> recv = transmit(modulate(cw), params, static_cast<uint64_t>(trial));
        const LlrVector llr = channel_llr(recv, params, bp_cfg.l_max);
        BpResult r = dec.decode(llr, bp_cfg);
        detail::FrameRecord rec;
        rec.error = r.estimate != cw;
        rec.accepted = r.converged && stopping_whd(r.estimate, llr) <= lambda;
        return rec;
    };
    auto fold = [&](const detail::FrameRecord& rec, long) {
        ++st.frames;
        if (rec.error) {
            ++st.total_errors;
            if (rec.accepted) ++st.undetected;
        }
    };
    detail::run_frames(
        frames, workers, [&]() { return BpDecoder(code); }, per_frame, fold, []() { return false; });
    if (st.total_errors > 0) st.ratio = static_cast<double>(st.undetected) / st.total_errors;
    return st;
}

namespace detail {

inline std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace detail

inline std::string report_to_csv(const TrialReport& report) {
    std::ostringstream out;
    out << "snr_db,sweep_value,frames,frame_errors,bler,bler_lo,bler_hi,gamma_hat,"
           "undetected_ratio,mean_flops,mean_bops,mean_ms\n";
    for (const CellStats& c : report.cells) {
        out << detail::csv_num(c.snr_db) << ',' << detail::csv_num(c.sweep_value) << ',' << c.frames
            << ',' << c.frame_errors << ',' << detail::csv_num(c.bler) << ','
            << detail::csv_num(c.bler_lo) << ',' << detail::csv_num(c.bler_hi) << ','
            << detail::csv_num(c.gamma_hat) << ',' << detail::csv_num(c.undetected_ratio) << ','
            << detail::csv_num(c.mean_flops) << ',' << detail::csv_num(c.mean_bops) << ','
            << detail::csv_num(c.mean_ms) << '\n';
    }
    return out.str();
}

inline void export_report(const TrialReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open report file '" + path + "'");
    out << report_to_csv(report);
    if (!out) throw std::runtime_error("failed writing report file '" + path + "'");
}

}  // namespace mbposd
