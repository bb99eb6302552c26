#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mbposd/bp.hpp"
#include "mbposd/osd.hpp"

namespace mbposd {

inline constexpr double kLambdaInfinite = std::numeric_limits<double>::infinity();

struct MbpOsdConfig {
    BpConfig bp;
    MbpConfig mbp;
    int order = 3;
    double lambda = kLambdaInfinite;  ///< WHD acceptance threshold, (0, +inf]

    void validate() const {
        bp.validate();
        mbp.validate();
        if (order < 0) throw std::invalid_argument("MbpOsdConfig: negative order");
        if (!(lambda > 0.0)) throw std::invalid_argument("MbpOsdConfig: lambda must be positive");
    }
};

/// D_x: sum of |l_i| over positions where x disagrees with the hard decision
/// of the channel LLR.
inline double stopping_whd(const BitVec& x, const LlrVector& channel_llr) {
    if (x.size() != channel_llr.size()) throw std::invalid_argument("stopping_whd: length mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const bool z = channel_llr[i] < 0.0;
        if (x.get(i) != z) d += std::abs(channel_llr[i]);
    }
    return d;
}

/// Accept x as final when x H^T = 0 and D_x <= lambda; lambda = +inf reduces
/// this to the syndrome test alone.
inline bool stopping_criterion(const BitVec& x, const LlrVector& channel_llr, const CodeSpec& code,
                               double lambda) {
    if (syndrome(code.pcm, x).any()) return false;
    return stopping_whd(x, channel_llr) <= lambda;
}

enum class DecodePath { kEarlyTerminated, kOsdSelected };

inline const char* to_string(DecodePath p) {
    return p == DecodePath::kEarlyTerminated ? "early-terminated" : "osd-selected";
}

struct DecodeOutcome {
    BitVec estimate;
    DecodePath path = DecodePath::kEarlyTerminated;
    double whd = 0.0;       ///< D_x on the early path, the candidate WHD otherwise
    OpCounters counters;
    bool converged_bp = false;
    int bp_iters = 0;
    int osd_phase = 0;      ///< TEP weight of the winning candidate (OSD path)
};

/// End-to-end decoder: BP attempt, stopping criterion, offset-BP refinement
/// of the channel LLR, then order-m OSD over the refined posterior.
class MbpOsdDecoder {
public:
    explicit MbpOsdDecoder(const CodeSpec& code) : code_(&code), bp_(code) {}

    const CodeSpec& code() const { return *code_; }

    DecodeOutcome decode(const LlrVector& channel_llr, const MbpOsdConfig& cfg,
                         std::vector<OsdCandidate>* debug_candidates = nullptr) {
        cfg.validate();
        DecodeOutcome out;
        BpResult bp = bp_.decode(channel_llr, cfg.bp, &out.counters);
        out.converged_bp = bp.converged;
        out.bp_iters = bp.iters_used;

        const double dx = stopping_whd(bp.estimate, channel_llr);
        if (bp.converged && dx <= cfg.lambda) {
            out.estimate = std::move(bp.estimate);
            out.path = DecodePath::kEarlyTerminated;
            out.whd = dx;
            return out;
        }

        const LlrVector refined = bp_.refine(channel_llr, cfg.mbp, cfg.bp, &out.counters);
        OsdResult osd = osd_decode(*code_, refined, cfg.order, &out.counters, debug_candidates);
        out.estimate = std::move(osd.estimate);
        out.path = DecodePath::kOsdSelected;
        out.whd = osd.whd;
        out.osd_phase = osd.best_phase;
        return out;
    }

    /// Plain concatenation baseline: on BP failure the BP posterior itself is
    /// fed to OSD (no refinement, syndrome-only acceptance).
    DecodeOutcome baseline_decode(const LlrVector& channel_llr, int order, const BpConfig& bp_cfg) {
        bp_cfg.validate();
        DecodeOutcome out;
        BpResult bp = bp_.decode(channel_llr, bp_cfg, &out.counters);
        out.converged_bp = bp.converged;
        out.bp_iters = bp.iters_used;
        if (bp.converged) {
            out.whd = stopping_whd(bp.estimate, channel_llr);
            out.estimate = std::move(bp.estimate);
            out.path = DecodePath::kEarlyTerminated;
            return out;
        }
        OsdResult osd = osd_decode(*code_, bp.posterior, order, &out.counters);
        out.estimate = std::move(osd.estimate);
        out.path = DecodePath::kOsdSelected;
        out.whd = osd.whd;
        out.osd_phase = osd.best_phase;
        return out;
    }

    /// Last BP hard decision, exposed for undetected-error bookkeeping.
    BpResult bp_only(const LlrVector& channel_llr, const BpConfig& cfg, OpCounters* counters = nullptr) {
        return bp_.decode(channel_llr, cfg, counters);
    }

private:
    const CodeSpec* code_;
    BpDecoder bp_;
};

/// Shipped per-code defaults for the acceptance threshold; +inf elsewhere.
inline double default_lambda(int n, int k) {
    if (n == 32 && k == 16) return 1.0;
    if (n == 96 && k == 48) return 1.0;
    if (n == 128 && k == 64) return 10.0;
    return kLambdaInfinite;
}

/// Offsets found by per-code sweeps (sweep-beta); larger orders want smaller
/// offsets, and short girth-4 graphs want very small ones.
inline double default_beta(int n, int k, int order) {
    if (n == 32 && k == 16) return 0.2;
    if (n == 96 && k == 48) return order >= 2 ? 0.3 : 0.4;
    if (n == 128 && k == 64) return order <= 1 ? 0.65 : (order == 2 ? 0.6 : 0.5);
    return 0.5;
}

}  // namespace mbposd
