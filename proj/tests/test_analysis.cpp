#include "icsrs/analysis.hpp"

#include "icsrs/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace icsrs;

namespace {

FiberLink reference_template() {
    return FiberLink(1.0, AttenuationCoeff::from_db_per_km(0.22),
                     AttenuationCoeff::from_db_per_km(0.21),
                     CouplingCoeff::from_per_m(1e-6));
}

const Power kP0{1.0};
const RamanEfficiency kEta{6e-9};

} // namespace

TEST_CASE("find_peak locates an analytic maximum") {
    auto parabola = [](double x) { return -(x - 3.0) * (x - 3.0) + 2.0; };
    const Peak p = find_peak(parabola, 0.0, 10.0, 0.25, 1e-10);
    CHECK(p.x == doctest::Approx(3.0).epsilon(1e-8));
    CHECK(p.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("find_peak result is insensitive to halving the grid step") {
    auto bump = [](double x) { return x * std::exp(-0.7 * x); };
    const Peak coarse = find_peak(bump, 0.0, 20.0, 0.4, 1e-9);
    const Peak fine = find_peak(bump, 0.0, 20.0, 0.2, 1e-9);
    CHECK(std::abs(coarse.x - fine.x) <= 1e-3);
    CHECK(coarse.x == doctest::Approx(1.0 / 0.7).epsilon(1e-6));
}

TEST_CASE("find_peak refuses boundary maxima and flat curves") {
    CHECK_THROWS_AS(find_peak([](double x) { return x; }, 0.0, 1.0, 0.1, 1e-6),
                    PeakSearchError);
    CHECK_THROWS_AS(find_peak([](double x) { return -x; }, 0.0, 1.0, 0.1, 1e-6),
                    PeakSearchError);
    CHECK_THROWS_AS(find_peak([](double) { return 4.0; }, 0.0, 1.0, 0.1, 1e-6),
                    PeakSearchError);
}

TEST_CASE("find_peak validates its bracket and steps") {
    auto f = [](double x) { return -x * x; };
    CHECK_THROWS_AS(find_peak(f, 1.0, 1.0, 0.1, 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(find_peak(f, 2.0, 1.0, 0.1, 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(find_peak(f, -1.0, 1.0, 0.0, 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(find_peak(f, -1.0, 1.0, 0.1, -1e-6), std::invalid_argument);
}

TEST_CASE("forward intercore noise peaks near 39.6 km on the reference link") {
    const Peak p = find_forward_peak(reference_template(), kP0, kEta);
    CHECK(std::abs(p.x - 39.584055272547053) <= 1e-3);
    CHECK(p.value == doctest::Approx(1.2715680412403000e-9).epsilon(1e-9));
}

TEST_CASE("a flat zero noise curve has no peak to find") {
    CHECK_THROWS_AS(find_forward_peak(reference_template(), kP0, RamanEfficiency{0.0}),
                    PeakSearchError);
}

TEST_CASE("single-core peak length closed form") {
    CHECK(forward_srs_peak_length(AttenuationCoeff::from_db_per_km(0.22),
                                  AttenuationCoeff::from_db_per_km(0.21)) ==
          doctest::Approx(20.203386088286968).epsilon(1e-12));
    const AttenuationCoeff same(0.05);
    CHECK(forward_srs_peak_length(same, same) == doctest::Approx(20.0).epsilon(1e-14));
    CHECK_THROWS_AS(forward_srs_peak_length(AttenuationCoeff(0.0), same),
                    std::domain_error);
}

TEST_CASE("closed-form peak length agrees with the generic finder") {
    const auto ac = AttenuationCoeff::from_db_per_km(0.22);
    const auto aq = AttenuationCoeff::from_db_per_km(0.21);
    auto srs_curve = [&](double length_km) {
        if (length_km <= 0.0) return 0.0;
        return forward_srs_singlecore(ac, aq, length_km, kP0, kEta).mw_per_nm;
    };
    const Peak p = find_peak(srs_curve, 0.0, 200.0, 0.01, 1e-4);
    CHECK(std::abs(p.x - 20.203386088286968) <= 0.05);
}

TEST_CASE("intercore vs single-core comparison at 5 km") {
    const SrsComparison cmp = compare_srs_icsrs(reference_template(), kP0, kEta, 5.0);
    CHECK(cmp.forward_ratio == doctest::Approx(0.0049738286419529564).epsilon(1e-10));
    CHECK(cmp.backward_ratio == doctest::Approx(0.004574518296754539).epsilon(1e-10));
    // short spans: intercore noise is a sub-percent fraction of single-core SRS
    CHECK(cmp.forward_ratio < 0.01);
    CHECK(cmp.backward_ratio < cmp.forward_ratio);
    REQUIRE(cmp.icsrs_peak_km.has_value());
    REQUIRE(cmp.srs_peak_km.has_value());
    CHECK(std::abs(*cmp.icsrs_peak_km - 39.584055272547053) <= 1e-3);
    CHECK(std::abs(*cmp.srs_peak_km - 20.203386088286968) <= 0.05);
    CHECK(*cmp.icsrs_peak_km > *cmp.srs_peak_km);  // crosstalk delays the maximum
}

TEST_CASE("the relative weight of intercore noise grows with span length") {
    const SrsComparison at5 = compare_srs_icsrs(reference_template(), kP0, kEta, 5.0);
    const SrsComparison at100 = compare_srs_icsrs(reference_template(), kP0, kEta, 100.0);
    CHECK(at100.forward_ratio ==
          doctest::Approx(0.090178252794310616).epsilon(1e-10));
    CHECK(at100.forward_ratio > at5.forward_ratio);
    CHECK(at100.backward_ratio > at5.backward_ratio);
}

TEST_CASE("comparison of all-zero curves reports empty peaks, zero ratios") {
    const SrsComparison cmp =
        compare_srs_icsrs(reference_template(), kP0, RamanEfficiency{0.0}, 5.0);
    CHECK(cmp.forward_ratio == 0.0);
    CHECK(cmp.backward_ratio == 0.0);
    CHECK_FALSE(cmp.icsrs_peak_km.has_value());
    CHECK_FALSE(cmp.srs_peak_km.has_value());
    CHECK_THROWS_AS(compare_srs_icsrs(reference_template(), kP0, kEta, 0.0),
                    std::invalid_argument);
}
