#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace mbposd {

/// Operation-count model for one message-passing iteration. The constants
/// are the per-iteration averages for computing the variable-node family of
/// updates (one bucket) and the check-node update (the other); they are a
/// cost model, not measured instruction counts.
struct BpIterationCost {
    double additions = 0;
    double multiplications = 0;
    double divisions = 0;

    static BpIterationCost model(int n, int k) {
        const double nn = n, mm = n - k;
        BpIterationCost c;
        c.additions = nn * mm + 2.0 * nn * mm;
        c.multiplications = 8.0 * nn * (mm - 1.0) + 3.0 * nn * (mm - 1.0);
        c.divisions = nn * mm;
        return c;
    }

    double total() const { return additions + multiplications + divisions; }
};

/// Modeled operation counts accumulated across the stages of one decode
/// (or summed over a campaign). Floating-point and binary operations are
/// tracked separately.
struct OpCounters {
    double bp_additions = 0;
    double bp_multiplications = 0;
    double bp_divisions = 0;
    double osd_flops = 0;
    double osd_bops = 0;
    long bp_iterations = 0;
    long mbp_iterations = 0;

    void add_bp_iterations(int n, int k, int iters, bool refinement) {
        const BpIterationCost c = BpIterationCost::model(n, k);
        bp_additions += c.additions * iters;
        bp_multiplications += c.multiplications * iters;
        bp_divisions += c.divisions * iters;
        (refinement ? mbp_iterations : bp_iterations) += iters;
    }

    double total_flops() const { return bp_additions + bp_multiplications + bp_divisions + osd_flops; }
    double total_bops() const { return osd_bops; }

    OpCounters& operator+=(const OpCounters& o) {
        bp_additions += o.bp_additions;
        bp_multiplications += o.bp_multiplications;
        bp_divisions += o.bp_divisions;
        osd_flops += o.osd_flops;
        osd_bops += o.osd_bops;
        bp_iterations += o.bp_iterations;
        mbp_iterations += o.mbp_iterations;
        return *this;
    }
};

/// Upper bound on the mean per-frame cost: T_max*C_BP + gamma*(alpha*C_BP + C_OSD),
/// where gamma is the probability that the OSD stage runs.
inline double complexity_bound(double gamma, int t_max, int alpha, double c_bp, double c_osd) {
    if (gamma < 0.0 || gamma > 1.0) throw std::invalid_argument("complexity_bound: gamma outside [0,1]");
    return t_max * c_bp + gamma * (alpha * c_bp + c_osd);
}

}  // namespace mbposd
