#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "mbposd/bundled_codes.hpp"
#include "mbposd/channel.hpp"
#include "mbposd/osd.hpp"

using namespace mbposd;

namespace {

BitVec ml_oracle(const CodeSpec& code, const LlrVector& llr, double* best_whd = nullptr) {
    const BitVec z = hard_decision(llr);
    std::vector<double> w(llr.size());
    for (std::size_t i = 0; i < llr.size(); ++i) w[i] = std::abs(llr[i]);
    BitVec best;
    double best_d = std::numeric_limits<double>::infinity();
    for (uint64_t msg = 0; msg < (uint64_t{1} << code.k); ++msg) {
        BitVec m(static_cast<std::size_t>(code.k));
        for (int b = 0; b < code.k; ++b)
            if ((msg >> b) & 1) m.set(static_cast<std::size_t>(b), true);
        const BitVec cw = encode(code.gen, m);
        const double d = whd(cw, z, w);
        if (d < best_d) {
            best_d = d;
            best = cw;
        }
    }
    if (best_whd) *best_whd = best_d;
    return best;
}

LlrVector noisy_frame(const CodeSpec& code, double snr_db, uint64_t seed, uint64_t trial,
                      BitVec* cw_out = nullptr) {
    const ChannelParams p = ChannelParams::from_snr_db(snr_db, seed);
    const BitVec msg = random_message(static_cast<std::size_t>(code.k), seed, trial);
    const BitVec cw = encode(code.gen, msg);
    if (cw_out) *cw_out = cw;
    return channel_llr(transmit(modulate(cw), p, trial), p);
}

}  // namespace

TEST_CASE("prepare_workspace fixed point for sorted input and systematic generator") {
    CodeSpec cs;
    cs.n = 4;
    cs.k = 2;
    cs.gen = BitMatrix::from_rows({{1, 0, 1, 0}, {0, 1, 1, 1}});
    cs.pcm = BitMatrix::from_rows({{1, 1, 1, 0}, {0, 1, 0, 1}});
    LlrVector llr{4.0, -3.0, 2.0, 1.0};
    OsdWorkspace ws = prepare_workspace(cs, llr);
    CHECK(ws.perm == std::vector<int>{0, 1, 2, 3});
    CHECK(ws.gsys == cs.gen);
    CHECK(ws.sorted_llr == llr);
    CHECK(ws.y.get(1));
    CHECK_FALSE(ws.y.get(0));
}

TEST_CASE("prepare_workspace sorts by reliability") {
    CodeSpec cs;
    cs.n = 3;
    cs.k = 1;
    cs.gen = BitMatrix::from_rows({{1, 1, 1}});
    cs.pcm = BitMatrix::from_rows({{1, 1, 0}, {0, 1, 1}});
    LlrVector llr{0.1, -3.0, 2.0};
    OsdWorkspace ws = prepare_workspace(cs, llr);
    CHECK(ws.perm == std::vector<int>{1, 2, 0});
    CHECK(ws.sorted_llr == LlrVector{-3.0, 2.0, 0.1});
    CHECK(ws.y.get(0));      // -3.0 hardens to 1
    CHECK_FALSE(ws.y.get(1));
}

TEST_CASE("prepare_workspace invariants on random frames") {
    CodeSpec code = load_bundled_code("hamming_7_4");
    for (uint64_t trial = 0; trial < 200; ++trial) {
        LlrVector llr = noisy_frame(code, 1.0, 1234, trial);
        OsdWorkspace ws = prepare_workspace(code, llr);

        // two-segment reliability monotonicity
        for (int i = 1; i < code.k; ++i) CHECK(ws.weight[i - 1] >= ws.weight[i]);
        for (int i = code.k + 1; i < code.n; ++i) CHECK(ws.weight[i - 1] >= ws.weight[i]);

        // first K columns of gsys are the identity
        for (int r = 0; r < code.k; ++r)
            for (int c = 0; c < code.k; ++c) CHECK(ws.gsys.get(r, c) == (r == c));

        // permutation round trip
        for (int i = 0; i < code.n; ++i) CHECK(ws.inv_perm[ws.perm[i]] == i);

        // every gsys row maps back to a codeword of the original code
        for (int r = 0; r < code.k; ++r) {
            BitVec orig(code.n);
            for (int i = 0; i < code.n; ++i)
                if (ws.gsys.get(r, i)) orig.set(ws.perm[i], true);
            CHECK_FALSE(syndrome(code.pcm, orig).any());
        }

        // sorted llr is the permuted channel llr
        for (int i = 0; i < code.n; ++i) CHECK(ws.sorted_llr[i] == llr[ws.perm[i]]);
    }
}

TEST_CASE("TepEnumerator") {
    SECTION("phase 0 yields one empty pattern") {
        TepEnumerator t(4, 0);
        std::vector<int> s{-1};
        REQUIRE(t.next(s));
        CHECK(s.empty());
        CHECK_FALSE(t.next(s));
    }
    SECTION("C(4,2) patterns in lexicographic order") {
        TepEnumerator t(4, 2);
        std::vector<std::vector<int>> got;
        std::vector<int> s;
        while (t.next(s)) got.push_back(s);
        const std::vector<std::vector<int>> expect{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        CHECK(got == expect);
    }
    SECTION("weight above k yields nothing") {
        TepEnumerator t(3, 4);
        std::vector<int> s;
        CHECK_FALSE(t.next(s));
    }
    SECTION("order 0..2 over k = 64 counts 2081 patterns") {
        long count = 0;
        for (int q = 0; q <= 2; ++q) {
            TepEnumerator t(64, q);
            std::vector<int> s;
            while (t.next(s)) ++count;
        }
        CHECK(count == 2081);
    }
}

TEST_CASE("whd") {
    BitVec y(3);
    y.set(1, true);
    std::vector<double> w{3.0, 2.0, 0.1};
    CHECK(whd(y, y, w) == 0.0);

    BitVec one(3);
    one.set(1, true);
    one.set(0, true);
    CHECK(whd(one, y, std::vector<double>{1.7, 9.0, 9.0}) == Catch::Approx(1.7));

    BitVec cand(3);
    cand.set(0, true);
    cand.set(1, true);
    cand.set(2, true);
    CHECK(whd(cand, y, w) == Catch::Approx(3.1));

    CHECK_THROWS_AS(whd(BitVec(2), y, w), std::invalid_argument);
}

TEST_CASE("osd_decode on a noiseless frame returns the codeword at phase 0") {
    CodeSpec code = load_bundled_code("ldpc_32_16");
    const ChannelParams p = ChannelParams::from_snr_db(300.0, 77);
    const BitVec msg = random_message(16, 77, 0);
    const BitVec cw = encode(code.gen, msg);
    LlrVector llr = channel_llr(modulate(cw), p);
    for (int order : {0, 2, 4}) {
        OsdResult r = osd_decode(code, llr, order);
        CHECK(r.estimate == cw);
        CHECK(r.whd == 0.0);
        CHECK(r.best_phase == 0);
    }
}

TEST_CASE("order-K OSD equals the exhaustive WHD argmin on the Hamming code") {
    CodeSpec code = load_bundled_code("hamming_7_4");
    for (uint64_t trial = 0; trial < 500; ++trial) {
        LlrVector llr = noisy_frame(code, 0.0, 99, trial);
        double oracle_whd = 0.0;
        const BitVec oracle = ml_oracle(code, llr, &oracle_whd);
        OsdResult r = osd_decode(code, llr, code.k);
        CHECK(r.estimate == oracle);
        CHECK(r.whd == Catch::Approx(oracle_whd).margin(1e-12));
        CHECK_FALSE(syndrome(code.pcm, r.estimate).any());
    }
}

TEST_CASE("order-4 OSD enumerates the whole Hamming codebook") {
    CodeSpec code = load_bundled_code("hamming_7_4");
    LlrVector llr = noisy_frame(code, 0.0, 7, 3);
    std::vector<OsdCandidate> cands;
    OsdResult r = osd_decode(code, llr, code.k, nullptr, &cands);
    CHECK(cands.size() == 16);  // sum_q C(4,q) = 2^4
    std::set<std::vector<uint8_t>> distinct;
    double min_whd = std::numeric_limits<double>::infinity();
    for (const auto& c : cands) {
        distinct.insert(c.codeword.to_bits());
        min_whd = std::min(min_whd, c.whd);
    }
    CHECK(distinct.size() == 16);
    CHECK(r.whd == Catch::Approx(min_whd));
}

TEST_CASE("returned WHD is the minimum over all generated candidates") {
    CodeSpec code = load_bundled_code("ldpc_32_16");
    for (uint64_t trial = 0; trial < 20; ++trial) {
        LlrVector llr = noisy_frame(code, 1.0, 11, trial);
        std::vector<OsdCandidate> cands;
        OsdResult r = osd_decode(code, llr, 2, nullptr, &cands);
        CHECK(cands.size() == 1 + 16 + 120);
        double min_whd = std::numeric_limits<double>::infinity();
        for (const auto& c : cands) min_whd = std::min(min_whd, c.whd);
        CHECK(r.whd == Catch::Approx(min_whd).margin(1e-12));
    }
}

TEST_CASE("min WHD is non-increasing in the order") {
    CodeSpec code = load_bundled_code("ldpc_32_16");
    for (uint64_t trial = 0; trial < 30; ++trial) {
        LlrVector llr = noisy_frame(code, 1.0, 21, trial);
        double prev = std::numeric_limits<double>::infinity();
        for (int order = 0; order <= 4; ++order) {
            OsdResult r = osd_decode(code, llr, order);
            CHECK(r.whd <= prev + 1e-12);
            prev = r.whd;
        }
    }
}

TEST_CASE("phase-0 recovers the codeword whenever the MRPs are error free") {
    CodeSpec code = load_bundled_code("ldpc_32_16");
    int clean_mrp_frames = 0;
    for (uint64_t trial = 0; trial < 100; ++trial) {
        BitVec cw;
        LlrVector llr = noisy_frame(code, 4.0, 31, trial, &cw);
        OsdWorkspace ws = prepare_workspace(code, llr);
        bool mrp_clean = true;
        for (int i = 0; i < code.k; ++i)
            if (ws.y.get(i) != cw.get(ws.perm[i])) mrp_clean = false;
        if (!mrp_clean) continue;
        ++clean_mrp_frames;
        OsdResult r = osd_decode(code, llr, 0);
        CHECK(r.estimate == cw);
    }
    CHECK(clean_mrp_frames > 50);
}

TEST_CASE("osd_complexity_estimate") {
    // reprocessing terms isolated by subtracting the sort and elimination parts
    OsdCost c0 = osd_complexity_estimate(128, 64, 0);
    CHECK(c0.flops - 128.0 * std::log2(128.0) == Catch::Approx(64.0));
    CHECK(c0.bops - 128.0 * 64.0 * 64.0 == Catch::Approx(1.0 * 64.0 * 64.0));

    OsdCost c2 = osd_complexity_estimate(8, 4, 2);
    CHECK(c2.flops - 8.0 * std::log2(8.0) == Catch::Approx(44.0));
    CHECK(c2.bops - 8.0 * 16.0 == Catch::Approx(176.0));

    // the reprocessing sums lower-bound the totals
    OsdCost big = osd_complexity_estimate(128, 64, 3);
    double repro_flops = 0, repro_bops = 0;
    for (int q = 0; q <= 3; ++q) {
        repro_flops += binomial(64, q) * 64.0;
        repro_bops += binomial(64, q) * 64.0 * 64.0;
    }
    CHECK(big.flops >= repro_flops);
    CHECK(big.bops >= repro_bops);

    CHECK_THROWS_AS(osd_complexity_estimate(8, 8, 1), std::invalid_argument);
}

TEST_CASE("osd counters follow the cost model") {
    CodeSpec code = load_bundled_code("ldpc_32_16");
    LlrVector llr = noisy_frame(code, 2.0, 3, 0);
    OpCounters counters;
    osd_decode(code, llr, 3, &counters);
    const OsdCost c = osd_complexity_estimate(32, 16, 3);
    CHECK(counters.osd_flops == Catch::Approx(c.flops));
    CHECK(counters.osd_bops == Catch::Approx(c.bops));
    CHECK(counters.bp_iterations == 0);
}

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6.0);
    CHECK(binomial(64, 2) == 2016.0);
    CHECK(binomial(48, 3) == 17296.0);
    CHECK(binomial(5, 0) == 1.0);
    CHECK(binomial(5, 6) == 0.0);
}
