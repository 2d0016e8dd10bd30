#include "icsrs/sweep.hpp"

#include "icsrs/errors.hpp"
#include "icsrs/qkd.hpp"
#include "icsrs/raman.hpp"

#include <stdexcept>
#include <string>

namespace icsrs {

namespace {

SweepRow evaluate_point(const ScenarioConfig& config, const RamanProfile& profile,
                        double x) {
    FiberLink link = config.link;
    ChannelPlan plan = config.plan;
    switch (config.sweep.variable) {
        case SweepVariable::Length:
            link = link.with_length(x);
            break;
        case SweepVariable::Coupling:
            link.h = CouplingCoeff::from_per_m(x);
            break;
        case SweepVariable::AlphaC:
            link.alpha_c = AttenuationCoeff(x);
            break;
        case SweepVariable::AlphaQ:
            link.alpha_q = AttenuationCoeff(x);
            break;
        case SweepVariable::LaunchPower:
            for (auto& ch : plan.channels) ch.launch_power = Power(x);
            break;
    }

    SweepRow row;
    row.x = x;

    // Direction-agnostic totals over every channel, for the noise columns.
    for (const auto& ch : plan.channels) {
        const RamanEfficiency eta =
            profile.eta(plan.quantum_wavelength.nm - ch.wavelength.nm);
        FiberLink ch_link = link;
        if (ch.alpha_c) ch_link.alpha_c = *ch.alpha_c;
        row.fwd_icsrs_mw_nm += forward_icsrs(ch_link, ch.launch_power, eta).mw_per_nm;
        row.bwd_icsrs_mw_nm += backward_icsrs(ch_link, ch.launch_power, eta).mw_per_nm;
        row.fwd_srs_mw_nm += forward_srs_singlecore(ch_link.alpha_c, ch_link.alpha_q,
                                                    ch_link.length_km, ch.launch_power, eta)
                                 .mw_per_nm;
        row.bwd_srs_mw_nm += backward_srs_singlecore(ch_link.alpha_c, ch_link.alpha_q,
                                                     ch_link.length_km, ch.launch_power, eta)
                                 .mw_per_nm;
    }

    // Plan-faithful key-rate chain: co channels load the forward noise,
    // counter channels the backward noise.
    const AggregateNoise agg = aggregate_icsrs(plan, link, profile);
    const ClickProbability click = noise_to_click_prob(agg.at_quantum_wavelength,
                                                       config.receiver);
    row.icsrs_click_prob = click.value;
    const double t_l =
        link_transmissivity(link.alpha_q, link.length_km, config.receiver);
    const double y0 = vacuum_yield(click.value, config.receiver);
    try {
        const KeyRate kr = secure_key_rate(LinkBudget(t_l, y0), config.receiver);
        row.skr = kr.rate;
        row.qber = kr.qber;
    } catch (const DeadLinkError&) {
        row.skr = 0.0;
        row.qber = 0.5;  // no clicks at all: maximally uncertain
    }
    return row;
}

} // namespace

SweepResult run_sweep(const ScenarioConfig& config) {
    const RamanProfile profile = resolve_profile(config.profile_name);
    SweepResult result;
    result.variable = config.sweep.variable;
    const std::vector<double> xs = config.sweep.grid();
    result.rows.reserve(xs.size());
    for (double x : xs) {
        try {
            result.rows.push_back(evaluate_point(config, profile, x));
        } catch (const std::exception& e) {
            throw std::runtime_error("sweep point " + to_string(config.sweep.variable) +
                                     " = " + std::to_string(x) + ": " + e.what());
        }
    }
    return result;
}

SweepRow evaluate_scenario(const ScenarioConfig& config, double x) {
    return evaluate_point(config, resolve_profile(config.profile_name), x);
}

} // namespace icsrs
