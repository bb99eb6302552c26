#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "mbposd/channel.hpp"
#include "mbposd/code.hpp"
#include "mbposd/op_counters.hpp"

namespace mbposd {

/// Reliability-ordered decoding state: the composite permutation pi2 o pi1,
/// the systematic generator, and the hard decision of the sorted LLR.
struct OsdWorkspace {
    int n = 0;
    int k = 0;
    LlrVector sorted_llr;          ///< l'' = pi2(pi1(l))
    std::vector<double> weight;    ///< |l''_i|
    std::vector<int> perm;         ///< sorted position -> original position
    std::vector<int> inv_perm;     ///< original position -> sorted position
    BitMatrix gsys;                ///< [I_K | P]
    BitVec y;                      ///< hard decision of l''
    BitVec y_mrp;                  ///< first K bits of y
};

/// pi1 sorts by |l| descending (stable, ties by ascending index); Gaussian
/// elimination supplies pi2 so the first K sorted positions are linearly
/// independent.
inline OsdWorkspace prepare_workspace(const CodeSpec& code, const LlrVector& llr) {
    if (llr.size() != static_cast<std::size_t>(code.n))
        throw std::invalid_argument("prepare_workspace: LLR length does not match code length");
    const std::size_t n = llr.size();

    std::vector<int> pi1(n);
    std::iota(pi1.begin(), pi1.end(), 0);
    std::stable_sort(pi1.begin(), pi1.end(), [&](int a, int b) {
        return std::abs(llr[a]) > std::abs(llr[b]);
    });

    SystematicForm sys = gaussian_eliminate(code.gen, pi1);

    OsdWorkspace ws;
    ws.n = code.n;
    ws.k = code.k;
    ws.gsys = std::move(sys.mat);
    ws.perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) ws.perm[i] = pi1[static_cast<std::size_t>(sys.perm[i])];
    ws.inv_perm = invert_permutation(ws.perm);
    ws.sorted_llr.resize(n);
    ws.weight.resize(n);
    ws.y = BitVec(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double v = llr[static_cast<std::size_t>(ws.perm[i])];
        ws.sorted_llr[i] = v;
        ws.weight[i] = std::abs(v);
        if (v < 0.0) ws.y.set(i, true);
    }
    ws.y_mrp = BitVec(static_cast<std::size_t>(code.k));
    for (int i = 0; i < code.k; ++i)
        if (ws.y.get(static_cast<std::size_t>(i))) ws.y_mrp.set(static_cast<std::size_t>(i), true);
    return ws;
}

/// Weight-q test error patterns over k positions in lexicographic support
/// order; q = 0 yields the single empty pattern, q > k yields nothing.
class TepEnumerator {
public:
    TepEnumerator(int k, int q) : k_(k), q_(q) {
        if (q_ < 0) throw std::invalid_argument("TepEnumerator: negative weight");
    }

    /// Fills `support` with the next pattern; false when exhausted.
    bool next(std::vector<int>& support) {
        if (done_) return false;
        if (q_ > k_) { done_ = true; return false; }
        if (!started_) {
            started_ = true;
            cur_.resize(q_);
            std::iota(cur_.begin(), cur_.end(), 0);
            support = cur_;
            return true;
        }
        int i = q_ - 1;
        while (i >= 0 && cur_[i] == k_ - q_ + i) --i;
        if (i < 0) { done_ = true; return false; }
        ++cur_[i];
        for (int t = i + 1; t < q_; ++t) cur_[t] = cur_[t - 1] + 1;
        support = cur_;
        return true;
    }

private:
    int k_, q_;
    bool started_ = false, done_ = false;
    std::vector<int> cur_;
};

/// Weighted Hamming distance: sum of |l''_i| over positions where the
/// candidate disagrees with y, over the full range of coordinates.
inline double whd(const BitVec& candidate, const BitVec& y, std::span<const double> weights) {
    if (candidate.size() != y.size() || weights.size() != y.size())
        throw std::invalid_argument("whd: length mismatch");
    double d = 0.0;
    auto cw = candidate.words(), yw = y.words();
    for (std::size_t t = 0; t < cw.size(); ++t) {
        uint64_t diff = cw[t] ^ yw[t];
        while (diff) {
            const int b = std::countr_zero(diff);
            d += weights[(t << 6) + static_cast<std::size_t>(b)];
            diff &= diff - 1;
        }
    }
    return d;
}

namespace detail {

/// Same sum with an early exit once `bound` is reached (the running sum is
/// monotone, so any abort can only discard candidates that are not strictly
/// better than the incumbent).
inline double whd_bounded(std::span<const uint64_t> cand, std::span<const uint64_t> y,
                          std::span<const double> weights, double bound) {
    double d = 0.0;
    for (std::size_t t = 0; t < cand.size(); ++t) {
        uint64_t diff = cand[t] ^ y[t];
        while (diff) {
            const int b = std::countr_zero(diff);
            d += weights[(t << 6) + static_cast<std::size_t>(b)];
            if (d >= bound) return d;
            diff &= diff - 1;
        }
    }
    return d;
}

}  // namespace detail

struct OsdCost {
    double flops = 0;
    double bops = 0;
};

inline double binomial(int n, int r) {
    if (r < 0 || r > n) return 0.0;
    double v = 1.0;
    for (int t = 0; t < r; ++t) v = v * (n - t) / (t + 1);
    return std::round(v);
}

/// Closed-form cost model of an order-m OSD call: N log2 N FLOPs for the
/// sort, N min(K^2,(N-K)^2) BOPs for the elimination, and per phase q
/// C(K,q)(N-K) FLOPs plus C(K,q) K (N-K) BOPs for reprocessing.
inline OsdCost osd_complexity_estimate(int n, int k, int order) {
    if (n <= 0 || k <= 0 || k >= n || order < 0)
        throw std::invalid_argument("osd_complexity_estimate: bad dimensions");
    const double nn = n, kk = k, mm = n - k;
    OsdCost c;
    c.flops = nn * std::log2(nn);
    c.bops = nn * std::min(kk * kk, mm * mm);
    for (int q = 0; q <= order; ++q) {
        const double comb = binomial(k, q);
        c.flops += comb * mm;
        c.bops += comb * kk * mm;
    }
    return c;
}

struct OsdCandidate {
    BitVec codeword;  ///< sorted-domain candidate
    double whd = 0.0;
    int tep_weight = 0;
};

struct OsdResult {
    BitVec estimate;  ///< original coordinate order
    double whd = 0.0;
    int best_phase = 0;
};

/// Order-m reprocessing over a prepared workspace. Candidates are generated
/// as c_e = c_0 XOR (rows of G'' in the TEP support); the minimum-WHD
/// candidate wins, ties broken by lower TEP weight then enumeration order.
inline OsdResult osd_reprocess(const OsdWorkspace& ws, int order, OpCounters* counters = nullptr,
                               std::vector<OsdCandidate>* debug_candidates = nullptr) {
    if (order < 0) throw std::invalid_argument("osd_decode: negative order");
    const std::size_t n = static_cast<std::size_t>(ws.n);
    const int k = ws.k;

    BitVec c0 = encode(ws.gsys, ws.y_mrp);
    double best_whd = whd(c0, ws.y, ws.weight);
    BitVec best = c0;
    int best_phase = 0;
    if (debug_candidates) debug_candidates->push_back({c0, best_whd, 0});

    BitVec cur(n);
    std::vector<int> support;
    for (int q = 1; q <= std::min(order, k); ++q) {
        TepEnumerator teps(k, q);
        while (teps.next(support)) {
            auto cw = cur.words();
            std::copy(c0.words().begin(), c0.words().end(), cw.begin());
            for (int pos : support) xor_into(cw, ws.gsys.row(static_cast<std::size_t>(pos)));
            if (debug_candidates) {
                const double d = whd(cur, ws.y, ws.weight);
                debug_candidates->push_back({cur, d, q});
                if (d < best_whd) {
                    best_whd = d;
                    best = cur;
                    best_phase = q;
                }
            } else {
                const double d = detail::whd_bounded(cw, ws.y.words(), ws.weight, best_whd);
                if (d < best_whd) {
                    best_whd = d;
                    best = cur;
                    best_phase = q;
                }
            }
        }
    }

    if (counters) {
        const OsdCost cost = osd_complexity_estimate(ws.n, ws.k, order);
        counters->osd_flops += cost.flops;
        counters->osd_bops += cost.bops;
    }

    OsdResult res;
    res.whd = best_whd;
    res.best_phase = best_phase;
    res.estimate = BitVec(n);
    for (std::size_t i = 0; i < n; ++i)
        if (best.get(i)) res.estimate.set(static_cast<std::size_t>(ws.perm[i]), true);
    return res;
}

inline OsdResult osd_decode(const CodeSpec& code, const LlrVector& llr, int order,
                            OpCounters* counters = nullptr,
                            std::vector<OsdCandidate>* debug_candidates = nullptr) {
    const OsdWorkspace ws = prepare_workspace(code, llr);
    return osd_reprocess(ws, order, counters, debug_candidates);
}

}  // namespace mbposd
