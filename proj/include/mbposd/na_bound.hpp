#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace mbposd {

inline double q_func(double x) { return 0.5 * std::erfc(x / 1.4142135623730951); }

namespace detail {

/// log2(1 + e^-t) without overflow on either tail.
inline double softplus2(double t) {
    constexpr double inv_ln2 = 1.4426950408889634;
    if (t >= 0.0) return std::log1p(std::exp(-t)) * inv_ln2;
    return (-t + std::log1p(std::exp(t))) * inv_ln2;
}

/// Information density of BI-AWGN (bits) at y, with +1 transmitted and
/// noise variance sigma2: i(y) = 1 - log2(1 + exp(-2y/sigma2)).
inline double bi_awgn_density(double y, double sigma2) {
    return 1.0 - softplus2(2.0 * y / sigma2);
}

inline double std_normal_pdf(double z) {
    return 0.3989422804014327 * std::exp(-0.5 * z * z);
}

inline double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
    if (intervals % 2) ++intervals;
    const double h = (b - a) / intervals;
    double s = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

/// Composite 10-point Gauss-Legendre.
inline double gauss_legendre(const std::function<double(double)>& f, double a, double b, int panels) {
    static const double xs[5] = {0.1488743389816312, 0.4333953941292472, 0.6794095682990244,
                                 0.8650633666889845, 0.9739065285171717};
    static const double wsv[5] = {0.2955242247147529, 0.2692667193099963, 0.2190863625159820,
                                  0.1494513491505806, 0.0666713443086881};
    const double w = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * w, half = 0.5 * w;
        double s = 0.0;
        for (int i = 0; i < 5; ++i)
            s += wsv[i] * (f(mid - half * xs[i]) + f(mid + half * xs[i]));
        total += s * half;
    }
    return total;
}

}  // namespace detail

struct BiAwgnStats {
    double capacity = 0.0;    ///< bits/channel use
    double dispersion = 0.0;  ///< bits^2
};

/// Capacity and dispersion of BI-AWGN at linear SNR (sigma^2 = 1/snr),
/// by quadrature over z ~ N(0,1) with y = 1 + sigma z.
/// `use_simpson` selects the alternative integrator (cross-check path).
inline BiAwgnStats bi_awgn_stats(double snr_linear, bool use_simpson = false) {
    if (!(snr_linear > 0.0)) throw std::invalid_argument("bi_awgn_stats: SNR must be positive");
    const double sigma2 = 1.0 / snr_linear;
    const double sigma = std::sqrt(sigma2);
    const double zmax = 12.0;

    auto first = [&](double z) {
        return detail::std_normal_pdf(z) * detail::bi_awgn_density(1.0 + sigma * z, sigma2);
    };
    auto second = [&](double z) {
        const double i = detail::bi_awgn_density(1.0 + sigma * z, sigma2);
        return detail::std_normal_pdf(z) * i * i;
    };

    BiAwgnStats st;
    if (use_simpson) {
        st.capacity = detail::simpson(first, -zmax, zmax, 6000);
        const double second_moment = detail::simpson(second, -zmax, zmax, 6000);
        st.dispersion = second_moment - st.capacity * st.capacity;
    } else {
        st.capacity = detail::gauss_legendre(first, -zmax, zmax, 160);
        const double second_moment = detail::gauss_legendre(second, -zmax, zmax, 160);
        st.dispersion = second_moment - st.capacity * st.capacity;
    }
    st.dispersion = std::max(st.dispersion, 0.0);
    return st;
}

/// Finite-blocklength normal-approximation BLER at rate R = K/N:
/// epsilon = Q( (C - R + log2(N)/(2N)) * sqrt(N/V) ).
inline double na_reference(int n, int k, double snr_db) {
    if (n <= 0 || k <= 0 || k >= n) throw std::invalid_argument("na_reference: need 0 < K < N");
    const double snr = std::pow(10.0, snr_db / 10.0);
    const BiAwgnStats st = bi_awgn_stats(snr);
    const double rate = static_cast<double>(k) / n;
    const double margin = st.capacity - rate + std::log2(static_cast<double>(n)) / (2.0 * n);
    if (st.dispersion < 1e-12) return margin > 0.0 ? 0.0 : 1.0;
    return q_func(margin * std::sqrt(n / st.dispersion));
}

}  // namespace mbposd
