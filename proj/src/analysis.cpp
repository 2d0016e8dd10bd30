#include "icsrs/analysis.hpp"

#include "icsrs/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace icsrs {

namespace {

constexpr double kBracketLoKm = 0.0;
constexpr double kBracketHiKm = 200.0;
constexpr double kGridStepKm = 0.01;
constexpr double kRefineTolKm = 1e-4;
constexpr double kNeighborSlack = 1e-8;  // relative, absorbs refinement rounding

} // namespace

Peak find_peak(const std::function<double(double)>& fn, double lo, double hi,
               double grid_step, double refine_tol) {
    if (!(lo < hi)) throw std::invalid_argument("peak bracket requires lo < hi");
    if (!(grid_step > 0.0 && refine_tol > 0.0))
        throw std::invalid_argument("grid step and refine tolerance must be positive");

    // Coarse traversal, ties broken toward smaller x.
    std::vector<double> xs;
    for (double x = lo; x < hi; x += grid_step) xs.push_back(x);
    xs.push_back(hi);
    std::size_t best = 0;
    double best_val = fn(xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double v = fn(xs[i]);
        if (v > best_val) {
            best = i;
            best_val = v;
        }
    }
    if (best == 0 || best + 1 == xs.size())
        throw PeakSearchError("no interior maximum: best sample at bracket edge x = " +
                              std::to_string(xs[best]));

    // Ternary refinement inside the bracketing pair of grid cells.
    double a = xs[best - 1];
    double b = xs[best + 1];
    while (b - a > refine_tol) {
        const double m1 = a + (b - a) / 3.0;
        const double m2 = b - (b - a) / 3.0;
        if (fn(m1) >= fn(m2))
            b = m2;  // ties drift toward smaller x
        else
            a = m1;
    }
    const double x_peak = 0.5 * (a + b);
    const double v_peak = fn(x_peak);

    // The refined value must dominate the neighboring grid samples, or the
    // curve was not unimodal-with-interior-peak to begin with.
    const double slack = kNeighborSlack * std::fabs(v_peak);
    if (!(v_peak + slack >= fn(xs[best - 1]) && v_peak + slack >= fn(xs[best + 1])))
        throw PeakSearchError("refined point does not dominate its grid neighbors near x = " +
                              std::to_string(x_peak));
    return Peak{x_peak, v_peak};
}

Peak find_forward_peak(const FiberLink& link_template, Power p0, RamanEfficiency eta) {
    auto fn = [&](double length_km) {
        if (length_km <= 0.0) return 0.0;
        return forward_icsrs(link_template.with_length(length_km), p0, eta).mw_per_nm;
    };
    return find_peak(fn, kBracketLoKm, kBracketHiKm, kGridStepKm, kRefineTolKm);
}

double forward_srs_peak_length(AttenuationCoeff alpha_c, AttenuationCoeff alpha_q) {
    if (!(alpha_c.per_km > 0.0 && alpha_q.per_km > 0.0))
        throw std::domain_error("peak length needs strictly positive attenuations");
    if (alpha_c.per_km == alpha_q.per_km) return 1.0 / alpha_c.per_km;
    return std::log(alpha_q.per_km / alpha_c.per_km) /
           (alpha_q.per_km - alpha_c.per_km);
}

SrsComparison compare_srs_icsrs(const FiberLink& link_template, Power p0,
                                RamanEfficiency eta, double at_length_km) {
    if (!(at_length_km > 0.0))
        throw std::invalid_argument("comparison length must be positive");
    if (eta.per_km_nm == 0.0 || p0.mw == 0.0) return SrsComparison{};  // all-zero curves

    const FiberLink at_link = link_template.with_length(at_length_km);
    const double fwd_icsrs = forward_icsrs(at_link, p0, eta).mw_per_nm;
    const double bwd_icsrs = backward_icsrs(at_link, p0, eta).mw_per_nm;
    const double fwd_srs = forward_srs_singlecore(at_link.alpha_c, at_link.alpha_q,
                                                  at_length_km, p0, eta)
                               .mw_per_nm;
    const double bwd_srs = backward_srs_singlecore(at_link.alpha_c, at_link.alpha_q,
                                                   at_length_km, p0, eta)
                               .mw_per_nm;

    SrsComparison cmp;
    cmp.forward_ratio = fwd_icsrs / fwd_srs;
    cmp.backward_ratio = bwd_icsrs / bwd_srs;
    cmp.icsrs_peak_km = find_forward_peak(link_template, p0, eta).x;

    auto srs_curve = [&](double length_km) {
        if (length_km <= 0.0) return 0.0;
        return forward_srs_singlecore(link_template.alpha_c, link_template.alpha_q,
                                      length_km, p0, eta)
            .mw_per_nm;
    };
    cmp.srs_peak_km =
        find_peak(srs_curve, kBracketLoKm, kBracketHiKm, kGridStepKm, kRefineTolKm).x;

    if (*cmp.icsrs_peak_km < *cmp.srs_peak_km)
        throw std::logic_error("intercore peak unexpectedly precedes the single-core peak");
    return cmp;
}

} // namespace icsrs
