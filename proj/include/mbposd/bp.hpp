#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mbposd/channel.hpp"
#include "mbposd/code.hpp"
#include "mbposd/op_counters.hpp"

namespace mbposd {

struct BpConfig {
    int max_iters = 30;        ///< T_max
    double l_max = 30.0;       ///< global LLR/message clip
    double tanh_eps = 1e-12;   ///< keeps atanh arguments away from +/-1

    void validate() const {
        if (max_iters < 1) throw std::invalid_argument("BpConfig: max_iters must be >= 1");
        if (!(l_max > 0.0)) throw std::invalid_argument("BpConfig: l_max must be positive");
        if (!(tanh_eps > 0.0 && tanh_eps < 1.0)) throw std::invalid_argument("BpConfig: tanh_eps outside (0,1)");
    }
};

/// Offset-BP refinement parameters: beta scales the extrinsic sum, alpha is
/// the fixed number of refinement iterations.
struct MbpConfig {
    int alpha = 2;
    double beta = 0.6;

    void validate() const {
        if (alpha < 1) throw std::invalid_argument("MbpConfig: alpha must be >= 1");
        if (!(beta > 0.0 && beta <= 1.0)) throw std::invalid_argument("MbpConfig: beta outside (0,1]");
    }
};

/// alpha = floor(g/4 + 1); an acyclic graph puts no constraint on the
/// iteration count, so it falls back to 2.
inline int alpha_from_girth(std::optional<int> girth) {
    if (!girth) return 2;
    return static_cast<int>(*girth / 4 + 1);
}

namespace detail {

/// Product-except-self over tanh(M/2) via prefix/suffix products, then
/// E = 2 atanh(clamped product). Exact zeros propagate without divisions.
inline void cn_core(std::span<const double> tanh_half, std::span<double> out, double tanh_eps,
                    double l_max) {
    const std::size_t d = tanh_half.size();
    double suffix = 1.0;
    out[0] = 1.0;
    for (std::size_t t = 1; t < d; ++t) out[t] = out[t - 1] * tanh_half[t - 1];
    for (std::size_t t = d; t-- > 0;) {
        double p = out[t] * suffix;
        suffix *= tanh_half[t];
        p = std::clamp(p, -1.0 + tanh_eps, 1.0 - tanh_eps);
        out[t] = std::clamp(2.0 * std::atanh(p), -l_max, l_max);
    }
}

}  // namespace detail

/// E_j = 2 atanh( prod_{i' != i} tanh(M_i'/2) ) for every edge of one check
/// node. Degree-1 checks are rejected at code load, so the product is never
/// empty here.
inline void check_node_update(std::span<const double> incoming, std::span<double> outgoing,
                              const BpConfig& cfg) {
    if (incoming.size() < 2) throw std::invalid_argument("check_node_update: check degree below 2");
    if (outgoing.size() != incoming.size())
        throw std::invalid_argument("check_node_update: output size mismatch");
    std::vector<double> t(incoming.size());
    for (std::size_t i = 0; i < incoming.size(); ++i) t[i] = std::tanh(0.5 * incoming[i]);
    detail::cn_core(t, outgoing, cfg.tanh_eps, cfg.l_max);
}

inline std::vector<double> check_node_update(std::span<const double> incoming, const BpConfig& cfg) {
    std::vector<double> out(incoming.size());
    check_node_update(incoming, out, cfg);
    return out;
}

/// M_j = llr_i + beta * (sum of extrinsics except edge j); returns the
/// posterior L_i = llr_i + beta * (full sum). Everything clips to +/- l_max.
inline double variable_node_update(double llr_i, std::span<const double> extrinsics, double beta,
                                   std::span<double> messages_out, double l_max) {
    if (messages_out.size() != extrinsics.size())
        throw std::invalid_argument("variable_node_update: output size mismatch");
    double sum = 0.0;
    for (double e : extrinsics) sum += e;
    for (std::size_t t = 0; t < extrinsics.size(); ++t)
        messages_out[t] = std::clamp(llr_i + beta * (sum - extrinsics[t]), -l_max, l_max);
    return std::clamp(llr_i + beta * sum, -l_max, l_max);
}

struct BpResult {
    BitVec estimate;
    LlrVector posterior;
    bool converged = false;
    int iters_used = 0;
};

/// Flooding-schedule sum-product decoder. Holds per-decode message buffers;
/// use one instance per worker thread.
class BpDecoder {
public:
    explicit BpDecoder(const CodeSpec& code)
        : code_(&code),
          e_(code.graph.n_edges, 0.0),
          m_(code.graph.n_edges, 0.0),
          tanh_buf_(code.graph.n_edges, 0.0),
          posterior_(code.n, 0.0) {}

    const CodeSpec& code() const { return *code_; }

    /// Plain BP (beta = 1): runs until x H^T = 0 or max_iters.
    BpResult decode(const LlrVector& llr, const BpConfig& cfg, OpCounters* counters = nullptr) {
        cfg.validate();
        check_input(llr);
        reset();
        BpResult res;
        res.estimate = BitVec(static_cast<std::size_t>(code_->n));
        int iter = 0;
        bool converged = false;
        while (iter < cfg.max_iters && !converged) {
            ++iter;
            run_iteration(llr, 1.0, cfg);
            harden(res.estimate);
            converged = !syndrome(code_->pcm, res.estimate).any();
        }
        if (counters) counters->add_bp_iterations(code_->n, code_->k, iter, /*refinement=*/false);
        res.posterior = posterior_;
        res.converged = converged;
        res.iters_used = iter;
        return res;
    }

    /// Offset-BP refinement: exactly alpha iterations on the original channel
    /// LLR, starting from zeroed extrinsics, no early exit. Returns L'.
    LlrVector refine(const LlrVector& llr, const MbpConfig& mbp, const BpConfig& cfg,
                     OpCounters* counters = nullptr) {
        cfg.validate();
        mbp.validate();
        check_input(llr);
        reset();
        for (int t = 0; t < mbp.alpha; ++t) run_iteration(llr, mbp.beta, cfg);
        if (counters) counters->add_bp_iterations(code_->n, code_->k, mbp.alpha, /*refinement=*/true);
        return posterior_;
    }

private:
    void check_input(const LlrVector& llr) const {
        if (llr.size() != static_cast<std::size_t>(code_->n))
            throw std::invalid_argument("BpDecoder: LLR length does not match code length");
    }

    void reset() {
        std::fill(e_.begin(), e_.end(), 0.0);
        std::fill(m_.begin(), m_.end(), 0.0);
    }

    void run_iteration(const LlrVector& llr, double beta, const BpConfig& cfg) {
        const TannerGraph& g = code_->graph;
        for (int i = 0; i < g.n_vars; ++i) {
            const auto& edges = g.var_edges[i];
            double sum = 0.0;
            for (int e : edges) sum += e_[e];
            for (int e : edges) m_[e] = std::clamp(llr[i] + beta * (sum - e_[e]), -cfg.l_max, cfg.l_max);
        }
        for (int j = 0; j < g.n_checks; ++j) {
            const auto& edges = g.chk_edges[j];
            const std::size_t d = edges.size();
            for (std::size_t t = 0; t < d; ++t) tanh_buf_[t] = std::tanh(0.5 * m_[edges[t]]);
            detail::cn_core({tanh_buf_.data(), d}, {scratch_out(d), d}, cfg.tanh_eps, cfg.l_max);
            for (std::size_t t = 0; t < d; ++t) e_[edges[t]] = out_buf_[t];
        }
        for (int i = 0; i < g.n_vars; ++i) {
            double sum = 0.0;
            for (int e : g.var_edges[i]) sum += e_[e];
            posterior_[i] = std::clamp(llr[i] + beta * sum, -cfg.l_max, cfg.l_max);
        }
    }

    double* scratch_out(std::size_t d) {
        if (out_buf_.size() < d) out_buf_.resize(d);
        return out_buf_.data();
    }

    void harden(BitVec& x) const {
        x.clear();
        for (int i = 0; i < code_->n; ++i)
            if (posterior_[i] < 0.0) x.set(static_cast<std::size_t>(i), true);
    }

    const CodeSpec* code_;
    std::vector<double> e_, m_, tanh_buf_, out_buf_;
    LlrVector posterior_;
};

}  // namespace mbposd
