#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "mbposd/bit_matrix.hpp"

namespace mbposd {

using LlrVector = std::vector<double>;

inline constexpr double kDefaultLlrClip = 30.0;

/// BPSK over AWGN with the convention SNR = 2/N0 (so sigma^2 = N0/2 = 1/SNR).
struct ChannelParams {
    double snr_db = 0.0;
    double n0 = 2.0;
    uint64_t seed = 1;

    static ChannelParams from_snr_db(double snr_db, uint64_t seed) {
        ChannelParams p;
        p.snr_db = snr_db;
        p.n0 = 2.0 / std::pow(10.0, snr_db / 10.0);
        p.seed = seed;
        if (!(p.n0 > 0.0)) throw std::invalid_argument("ChannelParams: N0 must be positive");
        return p;
    }

    double noise_sigma() const { return std::sqrt(n0 / 2.0); }
};

namespace detail {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace detail

/// Deterministic substream keyed by (seed, stream tag, trial index).
/// Gaussians come from an explicit Box-Muller transform over mt19937_64
/// output, so the values are identical across standard libraries.
class TrialRng {
public:
    TrialRng(uint64_t seed, uint64_t stream, uint64_t trial)
        : eng_(detail::splitmix64(detail::splitmix64(seed ^ detail::splitmix64(stream)) ^ trial)) {}

    uint64_t next_u64() { return eng_(); }

    /// Uniform on (0, 1].
    double uniform() { return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53; }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    bool bit() { return (eng_() >> 63) != 0; }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Stream tags keep the message and noise substreams of one trial apart.
inline constexpr uint64_t kNoiseStream = 0x6e6f697365ull;
inline constexpr uint64_t kMessageStream = 0x6d657373ull;

/// s_i = 1 - 2 c_i.
inline std::vector<double> modulate(const BitVec& codeword) {
    std::vector<double> s(codeword.size());
    for (std::size_t i = 0; i < codeword.size(); ++i) s[i] = codeword.get(i) ? -1.0 : 1.0;
    return s;
}

/// r = s + w with w ~ N(0, N0/2) i.i.d.; a pure function of (seed, trial_index).
inline std::vector<double> transmit(std::span<const double> symbols, const ChannelParams& params,
                                    uint64_t trial_index) {
    TrialRng rng(params.seed, kNoiseStream, trial_index);
    const double sigma = params.noise_sigma();
    std::vector<double> r(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) r[i] = symbols[i] + sigma * rng.gaussian();
    return r;
}

/// l_i = 4 r_i / N0, clipped to +/- l_max.
inline LlrVector channel_llr(std::span<const double> received, const ChannelParams& params,
                             double l_max = kDefaultLlrClip) {
    LlrVector llr(received.size());
    for (std::size_t i = 0; i < received.size(); ++i) {
        const double v = 4.0 * received[i] / params.n0;
        llr[i] = std::clamp(v, -l_max, l_max);
    }
    return llr;
}

/// Hard decision with the tie l_i = 0 mapping to bit 0.
inline BitVec hard_decision(std::span<const double> llr) {
    BitVec x(llr.size());
    for (std::size_t i = 0; i < llr.size(); ++i)
        if (llr[i] < 0.0) x.set(i, true);
    return x;
}

inline BitVec random_message(std::size_t k, uint64_t seed, uint64_t trial_index) {
    TrialRng rng(seed, kMessageStream, trial_index);
    BitVec m(k);
    for (std::size_t i = 0; i < k; ++i)
        if (rng.bit()) m.set(i, true);
    return m;
}

}  // namespace mbposd
