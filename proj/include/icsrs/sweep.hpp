#pragma once

#include "icsrs/config.hpp"

#include <vector>

namespace icsrs {

struct SweepRow {
    double x = 0.0;
    // Direction-agnostic plan totals: what a receiver at either fibre end
    // would collect from every channel, regardless of propagation sense.
    double fwd_icsrs_mw_nm = 0.0;
    double bwd_icsrs_mw_nm = 0.0;
    double fwd_srs_mw_nm = 0.0;   // single-core equivalents, same plan
    double bwd_srs_mw_nm = 0.0;
    // Plan-faithful quantities: co channels contribute forward noise,
    // counter channels backward, as configured.
    double icsrs_click_prob = 0.0;
    double skr = 0.0;             // secure bits per gate, floored
    double qber = 0.0;
};

struct SweepResult {
    SweepVariable variable = SweepVariable::Length;
    std::vector<SweepRow> rows;
};

/// Evaluates the scenario at every abscissa point. A dead link (no clicks at
/// all) yields skr = 0 and qber = 0.5 for that row; noise columns are always
/// computed.
SweepResult run_sweep(const ScenarioConfig& config);

/// Single evaluation used by run_sweep, exposed for spot checks.
SweepRow evaluate_scenario(const ScenarioConfig& config, double x);

} // namespace icsrs
