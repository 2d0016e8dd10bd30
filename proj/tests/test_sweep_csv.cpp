#include "icsrs/csv.hpp"
#include "icsrs/sweep.hpp"

#include "icsrs/errors.hpp"
#include "icsrs/qkd.hpp"
#include "icsrs/recipes.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

using namespace icsrs;

namespace {

ScenarioConfig parse(const std::string& text) {
    LoadResult r = load_config_string(text);
    REQUIRE_MESSAGE(r.config.has_value(),
                    (r.errors.empty() ? "no errors" : r.errors.front()));
    return *r.config;
}

const char* kLengthSweepText =
    "[link]\n"
    "length_km = 50\n"
    "alpha_c_db_per_km = 0.22\n"
    "alpha_q_db_per_km = 0.21\n"
    "h_per_m = 1e-6\n"
    "[plan]\n"
    "channel = 1548 0 co\n"
    "[sweep]\n"
    "variable = length\n"
    "lo = 1\n"
    "hi = 100\n"
    "points = 100\n";

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(bool(in));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("length sweep rows reproduce the direct library calls bitwise") {
    const ScenarioConfig cfg = parse(kLengthSweepText);
    const SweepResult res = run_sweep(cfg);
    CHECK(res.variable == SweepVariable::Length);
    REQUIRE(res.rows.size() == 100);
    CHECK(res.rows.front().x == 1.0);
    CHECK(res.rows.back().x == 100.0);

    const SweepRow& row = res.rows[39];
    REQUIRE(row.x == 40.0);

    const FiberLink link(40.0, AttenuationCoeff::from_db_per_km(0.22),
                         AttenuationCoeff::from_db_per_km(0.21),
                         CouplingCoeff::from_per_m(1e-6));
    const RamanEfficiency eta{6e-9};
    const Power p0{1.0};  // 0 dBm
    CHECK(row.fwd_icsrs_mw_nm == forward_icsrs(link, p0, eta).mw_per_nm);
    CHECK(row.bwd_icsrs_mw_nm == backward_icsrs(link, p0, eta).mw_per_nm);
    CHECK(row.fwd_srs_mw_nm ==
          forward_srs_singlecore(link.alpha_c, link.alpha_q, 40.0, p0, eta).mw_per_nm);
    CHECK(row.bwd_srs_mw_nm ==
          backward_srs_singlecore(link.alpha_c, link.alpha_q, 40.0, p0, eta).mw_per_nm);
    CHECK(row.fwd_icsrs_mw_nm == doctest::Approx(1.2714287088648145e-9).epsilon(1e-12));

    // co channel: the click chain sees the forward noise
    const ClickProbability click =
        noise_to_click_prob(NoiseDensity(row.fwd_icsrs_mw_nm), cfg.receiver);
    CHECK(row.icsrs_click_prob == click.value);
    const KeyRate kr = secure_key_rate(
        LinkBudget(link_transmissivity(link.alpha_q, 40.0, cfg.receiver),
                   vacuum_yield(click.value, cfg.receiver)),
        cfg.receiver);
    CHECK(row.skr == kr.rate);
    CHECK(row.qber == kr.qber);
}

TEST_CASE("counter-propagating channels load the backward noise into the key chain") {
    std::string text = kLengthSweepText;
    text.replace(text.find("1548 0 co"), 9, "1548 0 counter");
    const SweepResult res = run_sweep(parse(text));
    const SweepRow& row = res.rows[39];
    REQUIRE(row.x == 40.0);
    // noise totals are direction-agnostic, so they match the co-channel run
    const SweepResult co = run_sweep(parse(kLengthSweepText));
    CHECK(row.fwd_icsrs_mw_nm == co.rows[39].fwd_icsrs_mw_nm);
    CHECK(row.bwd_icsrs_mw_nm == co.rows[39].bwd_icsrs_mw_nm);
    // but the click probability switches to the backward density
    const ClickProbability click = noise_to_click_prob(
        NoiseDensity(row.bwd_icsrs_mw_nm), parse(text).receiver);
    CHECK(row.icsrs_click_prob == click.value);
    CHECK(row.icsrs_click_prob != co.rows[39].icsrs_click_prob);
    CHECK(row.skr > co.rows[39].skr);  // backward noise is weaker at 40 km
}

TEST_CASE("coupling sweep starts from an exactly noiseless point") {
    const ScenarioConfig cfg = parse(
        "[link]\n"
        "length_km = 50\n"
        "alpha_c_db_per_km = 0.22\n"
        "alpha_q_db_per_km = 0.21\n"
        "h_per_m = 1e-6\n"
        "[plan]\n"
        "channel = 1548 0 co\n"
        "[sweep]\n"
        "variable = h_ij\n"
        "lo = 0\n"
        "hi = 1e-6\n"
        "points = 3\n");
    const SweepResult res = run_sweep(cfg);
    REQUIRE(res.rows.size() == 3);
    const SweepRow& r0 = res.rows[0];
    CHECK(r0.x == 0.0);
    CHECK(r0.fwd_icsrs_mw_nm == 0.0);
    CHECK(r0.bwd_icsrs_mw_nm == 0.0);
    CHECK(r0.icsrs_click_prob == 0.0);
    CHECK(r0.fwd_srs_mw_nm > 0.0);  // single-core noise does not need coupling
    CHECK(r0.skr == doctest::Approx(0.00091025775728036854).epsilon(1e-12));
    // more coupling, more noise, less key
    CHECK(res.rows[1].fwd_icsrs_mw_nm < res.rows[2].fwd_icsrs_mw_nm);
    CHECK(res.rows[2].skr < res.rows[0].skr);
}

TEST_CASE("attenuation sweeps substitute the swept coefficient") {
    const ScenarioConfig cfg = parse(
        "[link]\n"
        "length_km = 50\n"
        "alpha_c_db_per_km = 0.22\n"
        "alpha_q_db_per_km = 0.21\n"
        "h_per_m = 1e-6\n"
        "[plan]\n"
        "channel = 1548 0 co\n"
        "[sweep]\n"
        "variable = alpha_q\n"
        "lo = 0.046\n"
        "hi = 0.07\n"
        "points = 49\n");
    const SweepRow row = evaluate_scenario(cfg, 0.05);
    const FiberLink link(50.0, AttenuationCoeff::from_db_per_km(0.22),
                         AttenuationCoeff(0.05), CouplingCoeff::from_per_m(1e-6));
    CHECK(row.fwd_icsrs_mw_nm ==
          forward_icsrs(link, Power{1.0}, RamanEfficiency{6e-9}).mw_per_nm);
    // and the transmissivity follows the swept alpha_q as well
    const ClickProbability click =
        noise_to_click_prob(NoiseDensity(row.fwd_icsrs_mw_nm), cfg.receiver);
    const KeyRate kr = secure_key_rate(
        LinkBudget(link_transmissivity(AttenuationCoeff(0.05), 50.0, cfg.receiver),
                   vacuum_yield(click.value, cfg.receiver)),
        cfg.receiver);
    CHECK(row.skr == kr.rate);
}

TEST_CASE("launch-power sweep overrides every channel and scales exactly") {
    const ScenarioConfig cfg = parse(
        "[link]\n"
        "length_km = 50\n"
        "alpha_c_db_per_km = 0.22\n"
        "alpha_q_db_per_km = 0.21\n"
        "h_per_m = 1e-6\n"
        "[plan]\n"
        "channel = 1548 7 co\n"
        "channel = 1552 -2 counter\n"
        "[sweep]\n"
        "variable = launch_power\n"
        "lo = 0.5\n"
        "hi = 8\n"
        "points = 2\n");
    const SweepRow lo = evaluate_scenario(cfg, 0.5);
    const SweepRow hi = evaluate_scenario(cfg, 8.0);
    // the configured 7 dBm / -2 dBm are both replaced by the abscissa power,
    // so a x16 power step scales every noise column and the click prob by x16
    CHECK(hi.fwd_icsrs_mw_nm == 16.0 * lo.fwd_icsrs_mw_nm);
    CHECK(hi.bwd_icsrs_mw_nm == 16.0 * lo.bwd_icsrs_mw_nm);
    CHECK(hi.fwd_srs_mw_nm == 16.0 * lo.fwd_srs_mw_nm);
    CHECK(hi.bwd_srs_mw_nm == 16.0 * lo.bwd_srs_mw_nm);
    CHECK(hi.icsrs_click_prob == 16.0 * lo.icsrs_click_prob);
    // both channels see the same flat eta and link, so they contribute equally
    const FiberLink link(50.0, AttenuationCoeff::from_db_per_km(0.22),
                         AttenuationCoeff::from_db_per_km(0.21),
                         CouplingCoeff::from_per_m(1e-6));
    CHECK(lo.fwd_icsrs_mw_nm ==
          2.0 * forward_icsrs(link, Power{0.5}, RamanEfficiency{6e-9}).mw_per_nm);
}

TEST_CASE("evaluate_scenario matches the corresponding run_sweep row") {
    const ScenarioConfig cfg = parse(kLengthSweepText);
    const SweepResult res = run_sweep(cfg);
    const SweepRow direct = evaluate_scenario(cfg, res.rows[10].x);
    CHECK(direct.fwd_icsrs_mw_nm == res.rows[10].fwd_icsrs_mw_nm);
    CHECK(direct.skr == res.rows[10].skr);
    CHECK(direct.qber == res.rows[10].qber);
}

TEST_CASE("a link with no clicks at all sweeps to zero rate, half qber") {
    ScenarioConfig cfg;  // defaults; no channels
    cfg.receiver.det_efficiency = 0.0;
    cfg.receiver.dark_count_prob = 0.0;
    cfg.sweep = SweepSpec{SweepVariable::Length, 10.0, 20.0, 3, false};
    const SweepResult res = run_sweep(cfg);
    for (const auto& row : res.rows) {
        CHECK(row.skr == 0.0);
        CHECK(row.qber == 0.5);
        CHECK(row.icsrs_click_prob == 0.0);
    }
}

TEST_CASE("failures inside a sweep name the offending point") {
    ScenarioConfig cfg;
    cfg.sweep = SweepSpec{SweepVariable::AlphaC, -0.05, 0.05, 3, false};
    CHECK_THROWS_WITH_AS(run_sweep(cfg), doctest::Contains("sweep point alpha_c = "),
                         std::runtime_error);
}

TEST_CASE("csv header names the abscissa per variable") {
    CHECK(csv_header(SweepVariable::Length) ==
          "length_km,forward_icsrs_mw_per_nm,forward_icsrs_dbm_per_nm,"
          "backward_icsrs_mw_per_nm,backward_icsrs_dbm_per_nm,"
          "forward_srs_mw_per_nm,forward_srs_dbm_per_nm,"
          "backward_srs_mw_per_nm,backward_srs_dbm_per_nm,"
          "icsrs_click_prob,skr_per_gate,qber");
    CHECK(csv_header(SweepVariable::Coupling).rfind("h_per_m,", 0) == 0);
    CHECK(csv_header(SweepVariable::AlphaC).rfind("alpha_c_per_km,", 0) == 0);
    CHECK(csv_header(SweepVariable::AlphaQ).rfind("alpha_q_per_km,", 0) == 0);
    CHECK(csv_header(SweepVariable::LaunchPower).rfind("launch_power_mw,", 0) == 0);
}

TEST_CASE("csv rows are fixed-width scientific, -inf for zero-power dBm") {
    SweepResult res;
    res.variable = SweepVariable::Length;
    SweepRow row;
    row.x = 2.5;
    row.fwd_icsrs_mw_nm = 1.0;   // 0 dBm exactly
    row.bwd_icsrs_mw_nm = 0.0;   // -inf dBm
    row.fwd_srs_mw_nm = 1.0;
    row.bwd_srs_mw_nm = 1.0;
    row.icsrs_click_prob = 0.25;
    row.skr = 1.25e-3;
    row.qber = 0.5;
    res.rows.push_back(row);

    CsvMetadata meta;
    meta.lines = {"scenario: unit test", "profile: flat"};
    std::ostringstream out;
    write_csv(out, res, meta);
    CHECK(out.str() ==
          "# scenario: unit test\n"
          "# profile: flat\n" +
              csv_header(SweepVariable::Length) + "\n" +
              "2.50000000000e+00,1.00000000000e+00,0.00000000000e+00,"
              "0.00000000000e+00,-inf,"
              "1.00000000000e+00,0.00000000000e+00,"
              "1.00000000000e+00,0.00000000000e+00,"
              "2.50000000000e-01,1.25000000000e-03,5.00000000000e-01\n");
}

TEST_CASE("csv file writing is atomic and byte-deterministic") {
    const ScenarioConfig cfg = parse(kLengthSweepText);
    SweepResult res = run_sweep(cfg);
    res.rows.resize(10);

    const std::string path = "/tmp/icsrs_sweep_test.csv";
    std::remove(path.c_str());
    std::remove((path + ".tmp").c_str());

    CsvMetadata meta;
    meta.lines = {"source: test"};
    write_csv_file(path, res, meta);
    CHECK_FALSE(std::ifstream(path + ".tmp").good());  // no temp file left behind
    const std::string first = slurp(path);

    std::ostringstream direct;
    write_csv(direct, res, meta);
    CHECK(first == direct.str());

    write_csv_file(path, res, meta);
    CHECK(slurp(path) == first);
    std::remove(path.c_str());
}

TEST_CASE("unwritable csv destinations raise an I/O error") {
    SweepResult res;
    res.variable = SweepVariable::Length;
    CHECK_THROWS_AS(write_csv_file("/nonexistent_dir/out.csv", res),
                    std::ios_base::failure);
}

TEST_CASE("bundled recipes parse clean and strict") {
    const auto& all = recipes();
    REQUIRE(all.size() == 6);
    const char* expected[] = {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7"};
    for (std::size_t i = 0; i < all.size(); ++i) {
        CAPTURE(all[i].name);
        CHECK(all[i].name == expected[i]);
        CHECK_FALSE(all[i].summary.empty());
        const LoadResult r = load_config_string(all[i].config_text, all[i].name, true);
        CHECK_MESSAGE(r.errors.empty(),
                      (r.errors.empty() ? "" : r.errors.front()));
        CHECK(r.config.has_value());
    }
    CHECK_THROWS_WITH_AS(find_recipe("fig9"), doctest::Contains("fig2"),
                         std::out_of_range);
}

TEST_CASE("the 40 km DWDM recipe models the 16-channel grid") {
    const Recipe& r = find_recipe("fig6");
    const LoadResult parsed = load_config_string(r.config_text, r.name, true);
    REQUIRE(parsed.config.has_value());
    const ScenarioConfig& c = *parsed.config;
    CHECK(c.link.length_km == 40.0);
    CHECK(c.plan.channels.size() == 16);
    CHECK(c.plan.quantum_wavelength.nm ==
          doctest::Approx(1549.3150284237726).epsilon(1e-12));
    CHECK(c.sweep.variable == SweepVariable::LaunchPower);
    CHECK(c.sweep.log_spacing);
}

TEST_CASE("the length-sweep recipe reproduces the forward-noise peak") {
    const Recipe& r = find_recipe("fig4");
    const LoadResult parsed = load_config_string(r.config_text, r.name, true);
    REQUIRE(parsed.config.has_value());
    const SweepResult res = run_sweep(*parsed.config);
    REQUIRE(res.rows.size() == 100);
    std::size_t best = 0;
    for (std::size_t i = 1; i < res.rows.size(); ++i)
        if (res.rows[i].fwd_icsrs_mw_nm > res.rows[best].fwd_icsrs_mw_nm) best = i;
    CHECK(res.rows[best].x == 40.0);
    CHECK(res.rows[best].fwd_icsrs_mw_nm ==
          doctest::Approx(1.2714287088648145e-9).epsilon(1e-12));
}
