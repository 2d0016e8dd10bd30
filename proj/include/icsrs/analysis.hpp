#pragma once

#include "icsrs/fiber.hpp"
#include "icsrs/raman.hpp"
#include "icsrs/units.hpp"

#include <functional>
#include <optional>

namespace icsrs {

struct Peak {
    double x = 0.0;
    double value = 0.0;
};

/// Interior maximum of fn on [lo, hi]: coarse grid at `grid_step`, then
/// ternary refinement to `refine_tol` in x. Throws PeakSearchError when the
/// best grid sample sits on the boundary or the curve is flat to within
/// relative 1e-8 of its neighbours (no interior peak to report).
Peak find_peak(const std::function<double(double)>& fn, double lo, double hi,
               double grid_step, double refine_tol);

/// Forward ICSRS noise density vs. length peaks at finite L (growth of the
/// crosstalk-seeded Stokes wave vs. fibre loss). Searched over [0, 200] km,
/// 0.01 km grid, refined to 1e-4 km.
Peak find_forward_peak(const FiberLink& link_template, Power p0, RamanEfficiency eta);

/// Single-core forward-SRS peak length, closed form:
///   L* = ln(alpha_q / alpha_c) / (alpha_q - alpha_c),  -> 1/alpha as they meet.
double forward_srs_peak_length(AttenuationCoeff alpha_c, AttenuationCoeff alpha_q);

struct SrsComparison {
    double forward_ratio = 0.0;   // ICSRS forward / single-core forward SRS
    double backward_ratio = 0.0;  // ICSRS backward / single-core backward SRS
    std::optional<double> icsrs_peak_km;  // absent when the curves are flat zero
    std::optional<double> srs_peak_km;
};

/// Ratios are evaluated at the given length; peak lengths over [0, 200] km.
/// Zero eta or p0 gives the all-zero table (flat curves have no peaks).
SrsComparison compare_srs_icsrs(const FiberLink& link_template, Power p0,
                                RamanEfficiency eta, double at_length_km);

} // namespace icsrs
