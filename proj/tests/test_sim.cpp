#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mbposd/na_bound.hpp"
#include "mbposd/sim.hpp"

using namespace mbposd;

namespace {

CampaignConfig small_campaign() {
    CampaignConfig cfg;
    cfg.code = "ldpc_32_16";
    cfg.decoder = DecoderKind::kMbpOsd;
    cfg.order = 1;
    cfg.snr_db = {2.0};
    cfg.frames = 200;
    cfg.seed = 11;
    cfg.measure_time = false;
    return cfg;
}

}  // namespace

TEST_CASE("campaign config validation") {
    CampaignConfig cfg = small_campaign();
    SECTION("zero frames rejected") {
        cfg.frames = 0;
        CHECK_THROWS_AS(run_campaign(cfg), std::invalid_argument);
    }
    SECTION("frames and target mode are exclusive") {
        cfg.target_errors = 10;
        cfg.frame_cap = 100;
        CHECK_THROWS_AS(run_campaign(cfg), std::invalid_argument);
    }
    SECTION("target mode needs a cap") {
        cfg.frames = 0;
        cfg.target_errors = 10;
        CHECK_THROWS_AS(run_campaign(cfg), std::invalid_argument);
    }
    SECTION("empty snr grid rejected") {
        cfg.snr_db.clear();
        CHECK_THROWS_AS(run_campaign(cfg), std::invalid_argument);
    }
    SECTION("sweep values without an axis rejected") {
        cfg.sweep = {0.5};
        CHECK_THROWS_AS(run_campaign(cfg), std::invalid_argument);
    }
    SECTION("unknown decoder string") {
        CHECK_THROWS_AS(decoder_from_string("turbo"), std::invalid_argument);
    }
}

TEST_CASE("noiseless campaign has zero BLER and zero gamma") {
    CampaignConfig cfg;
    cfg.code = "ccsds_128_64";
    cfg.decoder = DecoderKind::kBp;
    cfg.snr_db = {300.0};
    cfg.frames = 100;
    cfg.seed = 3;
    cfg.measure_time = false;
    TrialReport rep = run_campaign(cfg);
    REQUIRE(rep.cells.size() == 1);
    CHECK(rep.cells[0].frames == 100);
    CHECK(rep.cells[0].frame_errors == 0);
    CHECK(rep.cells[0].bler == 0.0);
    CHECK(rep.cells[0].gamma_hat == 0.0);
    CHECK(std::isnan(rep.cells[0].undetected_ratio));
    CHECK(rep.cells[0].mean_bp_iters == Catch::Approx(1.0));
}

TEST_CASE("campaign is bit-identical across worker counts") {
    CampaignConfig cfg = small_campaign();
    cfg.snr_db = {1.0, 2.0};
    cfg.frames = 600;  // spans two batches
    std::string csv1, csv4;
    cfg.workers = 1;
    csv1 = report_to_csv(run_campaign(cfg));
    cfg.workers = 4;
    csv4 = report_to_csv(run_campaign(cfg));
    CHECK(csv1 == csv4);
}

TEST_CASE("target-error mode stops at a batch boundary") {
    CampaignConfig cfg = small_campaign();
    cfg.frames = 0;
    cfg.target_errors = 5;
    cfg.frame_cap = 100000;
    cfg.snr_db = {0.0};  // very noisy: errors arrive quickly
    TrialReport rep = run_campaign(cfg);
    REQUIRE(rep.cells.size() == 1);
    CHECK(rep.cells[0].frame_errors >= 5);
    CHECK(rep.cells[0].frames < 100000);
    CHECK(rep.cells[0].frames % 512 == 0);
}

TEST_CASE("sweep axis produces one cell per value") {
    CampaignConfig cfg = small_campaign();
    cfg.frames = 100;
    cfg.axis = SweepAxis::kBeta;
    cfg.sweep = {0.4, 0.6, 0.8};
    TrialReport rep = run_campaign(cfg);
    REQUIRE(rep.cells.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(rep.cells[i].sweep_value == cfg.sweep[i]);
        CHECK(rep.cells[i].beta == cfg.sweep[i]);
    }

    cfg.axis = SweepAxis::kLambda;
    cfg.sweep = {0.5, kLambdaInfinite};
    rep = run_campaign(cfg);
    REQUIRE(rep.cells.size() == 2);
    CHECK(rep.cells[0].lambda == 0.5);
    CHECK(std::isinf(rep.cells[1].lambda));
}

TEST_CASE("csv export") {
    TrialReport empty;
    const std::string header =
        "snr_db,sweep_value,frames,frame_errors,bler,bler_lo,bler_hi,gamma_hat,"
        "undetected_ratio,mean_flops,mean_bops,mean_ms\n";
    CHECK(report_to_csv(empty) == header);

    CampaignConfig cfg = small_campaign();
    cfg.frames = 50;
    TrialReport rep = run_campaign(cfg);
    const std::string csv = report_to_csv(rep);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line + "\n" == header);
    std::getline(in, line);
    // every field reparses as a number (strtod accepts nan/inf)
    int nfields = 0;
    const char* p = line.c_str();
    for (;;) {
        char* end = nullptr;
        std::strtod(p, &end);
        if (end == p) break;
        ++nfields;
        if (*end != ',') break;
        p = end + 1;
    }
    CHECK(nfields == 12);

    const std::string path = "test_report_tmp.csv";
    export_report(rep, path);
    std::ifstream back(path);
    std::stringstream buf;
    buf << back.rdbuf();
    CHECK(buf.str() == csv);
    std::remove(path.c_str());
}

TEST_CASE("csv reparse tolerates nan sweep value") {
    CampaignConfig cfg = small_campaign();
    cfg.frames = 30;
    TrialReport rep = run_campaign(cfg);
    const std::string csv = report_to_csv(rep);
    CHECK(csv.find("nan") != std::string::npos);  // sweep_value without a sweep
    const std::size_t header_end = csv.find('\n');
    const std::string row = csv.substr(header_end + 1);
    double snr, sweep;
    CHECK(std::sscanf(row.c_str(), "%lf,%lf", &snr, &sweep) == 2);
    CHECK(std::isnan(sweep));
}

TEST_CASE("per-frame trace is valid JSON lines") {
    CampaignConfig cfg = small_campaign();
    cfg.frames = 40;
    cfg.snr_db = {1.0};
    cfg.trace_path = "test_trace_tmp.jsonl";
    TrialReport rep = run_campaign(cfg);
    std::ifstream in(cfg.trace_path);
    REQUIRE(in.good());
    std::string line;
    long lines = 0, correct = 0;
    long expected_id = 0;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j["frame_id"] == expected_id++);
        CHECK((j["path"] == "early-terminated" || j["path"] == "osd-selected"));
        CHECK(j.contains("bp_iters"));
        CHECK(j.contains("whd"));
        CHECK(j["counters"].contains("flops"));
        if (j["correct"].get<bool>()) ++correct;
        ++lines;
    }
    in.close();
    std::remove(cfg.trace_path.c_str());
    CHECK(lines == 40);
    CHECK(correct == 40 - rep.cells[0].frame_errors);
}

TEST_CASE("campaign mean cost respects the complexity bound") {
    CampaignConfig cfg = small_campaign();
    cfg.frames = 400;
    cfg.snr_db = {1.0, 3.0};
    cfg.order = 2;
    TrialReport rep = run_campaign(cfg);
    const BpIterationCost per_iter = BpIterationCost::model(rep.n, rep.k);
    const OsdCost osd_cost = osd_complexity_estimate(rep.n, rep.k, cfg.order);
    for (const CellStats& cell : rep.cells) {
        const double bound_flops = complexity_bound(cell.gamma_hat, cfg.bp.max_iters, cell.alpha,
                                                    per_iter.total(), osd_cost.flops);
        const double bound_bops =
            complexity_bound(cell.gamma_hat, cfg.bp.max_iters, cell.alpha, 0.0, osd_cost.bops);
        CHECK(cell.mean_flops <= bound_flops * 1.01);
        CHECK(cell.mean_bops <= bound_bops * 1.01);
    }
}

TEST_CASE("undetected ratio is monotone in lambda and empty without errors") {
    CodeSpec code = load_bundled_code("ldpc_32_16");
    UndetectedStats tight = measure_undetected_ratio(code, 1.0, 0.01, 3000, 17, 2);
    UndetectedStats mid = measure_undetected_ratio(code, 1.0, 1.0, 3000, 17, 2);
    UndetectedStats open = measure_undetected_ratio(code, 1.0, kLambdaInfinite, 3000, 17, 2);
    REQUIRE(open.ratio.has_value());
    CHECK(tight.total_errors == mid.total_errors);
    CHECK(tight.undetected <= mid.undetected);
    CHECK(mid.undetected <= open.undetected);
    CHECK(open.undetected >= 1);

    CodeSpec hamming = load_bundled_code("hamming_7_4");
    UndetectedStats clean = measure_undetected_ratio(hamming, 300.0, 1.0, 50, 1);
    CHECK(clean.total_errors == 0);
    CHECK_FALSE(clean.ratio.has_value());
}

TEST_CASE("campaign statistics move the right way") {
    // common random numbers across cells make these comparisons tight even
    // at modest frame counts
    CampaignConfig cfg;
    cfg.code = "ldpc_32_16";
    cfg.snr_db = {0.5, 1.5, 2.5, 3.5};
    cfg.frames = 1500;
    cfg.seed = 23;
    cfg.order = 2;
    cfg.measure_time = false;
    cfg.workers = 2;

    cfg.decoder = DecoderKind::kBp;
    const TrialReport bp = run_campaign(cfg);
    cfg.decoder = DecoderKind::kBpOsd;
    const TrialReport bposd = run_campaign(cfg);
    cfg.decoder = DecoderKind::kMbpOsd;
    cfg.lambda = kLambdaInfinite;
    const TrialReport mbposd = run_campaign(cfg);

    for (std::size_t i = 0; i + 1 < cfg.snr_db.size(); ++i) {
        // BLER non-increasing in SNR up to interval overlap
        CHECK(bp.cells[i + 1].bler_lo <= bp.cells[i].bler_hi);
        CHECK(mbposd.cells[i + 1].bler_lo <= mbposd.cells[i].bler_hi);
        // gamma decreases with SNR
        CHECK(mbposd.cells[i + 1].gamma_hat <= mbposd.cells[i].gamma_hat);
    }
    for (std::size_t i = 0; i < cfg.snr_db.size(); ++i) {
        // the combined decoder dominates BP and the plain concatenation
        CHECK(mbposd.cells[i].bler_lo <= bp.cells[i].bler_hi);
        CHECK(mbposd.cells[i].bler_lo <= bposd.cells[i].bler_hi);
        CHECK(mbposd.cells[i].frame_errors <= bp.cells[i].frame_errors);
    }
}

TEST_CASE("na_reference behaves like an achievability curve") {
    // monotone decreasing in SNR, vanishing at high SNR
    double prev = 1.0;
    for (double snr = 0.0; snr <= 4.01; snr += 0.5) {
        const double eps = na_reference(128, 64, snr);
        CHECK(eps <= prev + 1e-12);
        CHECK(eps >= 0.0);
        CHECK(eps <= 1.0);
        prev = eps;
    }
    CHECK(na_reference(128, 64, 20.0) < 1e-9);
    CHECK_THROWS_AS(na_reference(128, 0, 1.0), std::invalid_argument);
}

TEST_CASE("dual quadratures agree on capacity and dispersion") {
    for (double snr_db : {0.0, 1.5, 3.0, 6.0}) {
        const double snr = std::pow(10.0, snr_db / 10.0);
        const BiAwgnStats a = bi_awgn_stats(snr, false);
        const BiAwgnStats b = bi_awgn_stats(snr, true);
        CHECK(a.capacity == Catch::Approx(b.capacity).margin(1e-6));
        CHECK(a.dispersion == Catch::Approx(b.dispersion).margin(1e-6));
        CHECK(a.capacity > 0.0);
        CHECK(a.capacity < 1.0);
        CHECK(a.dispersion > 0.0);
    }
    // capacity grows with SNR
    CHECK(bi_awgn_stats(2.0).capacity > bi_awgn_stats(1.0).capacity);
}
