#include "icsrs/qkd.hpp"

#include "icsrs/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace icsrs {

void QuantumReceiver::validate() const {
    auto fail = [](const std::string& field, double v) {
        throw std::invalid_argument("receiver." + field + " out of range: " +
                                    std::to_string(v));
    };
    if (!(det_efficiency >= 0.0 && det_efficiency <= 1.0))
        fail("det_efficiency", det_efficiency);
    if (!(dark_count_prob >= 0.0)) fail("dark_count_prob", dark_count_prob);
    if (!(gate_width_s > 0.0)) fail("gate_width_ns", gate_width_s * 1e9);
    if (!(rx_bandwidth_ghz > 0.0)) fail("rx_bandwidth_ghz", rx_bandwidth_ghz);
    if (!(misalignment_error >= 0.0 && misalignment_error <= 0.5))
        fail("misalignment_error", misalignment_error);
    if (!(mean_photon_number > 0.0)) fail("mean_photon_number", mean_photon_number);
    if (!(error_correction_eff >= 1.0))
        fail("error_correction_efficiency", error_correction_eff);
    if (!(protocol_factor > 0.0 && protocol_factor <= 1.0))
        fail("protocol_factor", protocol_factor);
}

LinkBudget::LinkBudget(double t_l, double y0) : t_l(t_l), y0(y0) {
    if (!(t_l >= 0.0 && t_l <= 1.0))
        throw std::invalid_argument("transmissivity must lie in [0, 1], got " +
                                    std::to_string(t_l));
    if (!(y0 >= 0.0))
        throw std::invalid_argument("vacuum yield must be nonnegative, got " +
                                    std::to_string(y0));
}

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("binary entropy argument " + std::to_string(x) +
                                " outside [0, 1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

ClickProbability noise_to_click_prob(NoiseDensity density, const QuantumReceiver& rx) {
    rx.validate();
    const double bw_nm = bandwidth_ghz_to_nm(rx.rx_bandwidth_ghz, rx.wavelength);
    const double photon_energy_j =
        kPlanckJs * kLightSpeedMps / (rx.wavelength.nm * 1e-9);
    const double photons = density.mw_per_nm * 1e-3 * bw_nm * rx.det_efficiency *
                           rx.gate_width_s / photon_energy_j;
    return ClickProbability{photons, photons > 0.1};
}

double vacuum_yield(double p_icsrs_click, const QuantumReceiver& rx) {
    if (!(p_icsrs_click >= 0.0))
        throw std::invalid_argument("noise click probability must be nonnegative");
    return rx.dark_count_prob + p_icsrs_click;
}

double link_transmissivity(AttenuationCoeff alpha_q, double length_km,
                           const QuantumReceiver& rx) {
    if (!(length_km >= 0.0)) throw std::domain_error("length must be nonnegative");
    return std::exp(-alpha_q.per_km * length_km) * rx.det_efficiency;
}

KeyRate secure_key_rate(const LinkBudget& budget, const QuantumReceiver& rx) {
    rx.validate();
    const double y0 = budget.y0;
    const double t_l = budget.t_l;
    const double mu = rx.mean_photon_number;
    const double e_d = rx.misalignment_error;

    const double y1 = y0 + t_l;
    if (y1 == 0.0) throw DeadLinkError("Y1 = 0: link carries no clicks at all");

    const double q1 = y1 * mu * std::exp(-mu);
    const double e1 = (0.5 * y0 + e_d * t_l) / y1;
    const double signal_gain = -std::expm1(-t_l * mu);  // 1 - e^{-t_l mu}
    const double q_mu = y0 + signal_gain;
    const double e_mu = (0.5 * y0 + e_d * signal_gain) / q_mu;

    const double r = rx.protocol_factor *
                     (-q_mu * rx.error_correction_eff * binary_entropy(e_mu) +
                      q1 * (1.0 - binary_entropy(e1)));
    return KeyRate{std::max(r, 0.0), e_mu, r};
}

MaxDistance max_secure_distance(const FiberLink& link_template, Power p0,
                                RamanEfficiency eta, const QuantumReceiver& rx,
                                NoiseMode mode) {
    rx.validate();
    constexpr double kBracketKm = 500.0;
    constexpr double kResolutionKm = 0.1;

    auto rate_at = [&](double length_km) {
        double noise_mw_nm = 0.0;
        if (length_km > 0.0 && mode != NoiseMode::None) {
            const FiberLink link = link_template.with_length(length_km);
            if (mode == NoiseMode::Forward || mode == NoiseMode::Both)
                noise_mw_nm += forward_icsrs(link, p0, eta).mw_per_nm;
            if (mode == NoiseMode::Backward || mode == NoiseMode::Both)
                noise_mw_nm += backward_icsrs(link, p0, eta).mw_per_nm;
        }
        const double p_click = noise_to_click_prob(NoiseDensity(noise_mw_nm), rx).value;
        const double t_l = link_transmissivity(link_template.alpha_q, length_km, rx);
        return secure_key_rate(LinkBudget(t_l, vacuum_yield(p_click, rx)), rx).rate_unfloored;
    };

    if (rate_at(kBracketKm) > 0.0) return {kBracketKm, true};

    // Coarse 1 km scan for the last positive point, assuming no resurrection
    // beyond the first zero crossing.
    double last_positive = -1.0;
    for (double length = 0.0; length <= kBracketKm; length += 1.0) {
        if (rate_at(length) > 0.0) last_positive = length;
    }
    if (last_positive < 0.0)
        throw std::domain_error("secure rate is nonpositive everywhere in [0, 500] km");

    double lo = last_positive;        // R > 0 here
    double hi = last_positive + 1.0;  // R <= 0 here
    while (hi - lo > kResolutionKm) {
        const double mid = 0.5 * (lo + hi);
        (rate_at(mid) > 0.0 ? lo : hi) = mid;
    }
    return {lo, false};
}

} // namespace icsrs
