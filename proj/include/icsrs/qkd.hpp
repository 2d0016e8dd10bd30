#pragma once

#include "icsrs/fiber.hpp"
#include "icsrs/raman.hpp"
#include "icsrs/units.hpp"

namespace icsrs {

/// Single-photon receiver and decoy-state BB84 protocol parameters.
/// Defaults follow the coexistence scenario typical of C-band QKD field
/// setups: gated InGaAs-style detector, 100 GHz demux filter.
struct QuantumReceiver {
    double det_efficiency = 0.10;        // [0, 1]
    double dark_count_prob = 1e-6;       // per gate
    double gate_width_s = 1e-9;          // s
    double rx_bandwidth_ghz = 100.0;     // optical filter width
    Wavelength wavelength{1550.0};
    double misalignment_error = 0.015;   // e_d in [0, 0.5]
    double mean_photon_number = 0.5;     // mu > 0
    double error_correction_eff = 1.15;  // f >= 1
    double protocol_factor = 0.5;        // q in (0, 1], 1/2 for BB84

    void validate() const;  // throws std::invalid_argument naming the field
};

/// Channel transmissivity and vacuum yield feeding the key-rate formula.
struct LinkBudget {
    double t_l = 0.0;  // total link transmissivity incl. detector, [0, 1]
    double y0 = 0.0;   // vacuum yield per gate (dark counts + noise photons)

    LinkBudget() = default;
    LinkBudget(double t_l, double y0);
};

/// Shannon binary entropy, bits. Domain [0, 1], H2(0) = H2(1) = 0.
double binary_entropy(double x);

struct ClickProbability {
    double value = 0.0;
    // mean photon number per gate exceeded 0.1: the Poisson-mean-as-probability
    // reading is strained there. Advisory only; the value is never clamped.
    bool regime_warning = false;
};

/// Spectral noise density -> per-gate click probability:
///   density[W/nm] * bandwidth_nm * det_efficiency * gate_width / (h c / lambda)
/// i.e. photons collected in the filter window during one gate, times the
/// detection efficiency.
ClickProbability noise_to_click_prob(NoiseDensity density, const QuantumReceiver& rx);

/// Y0 = dark counts + noise clicks.
double vacuum_yield(double p_icsrs_click, const QuantumReceiver& rx);

/// t_l = 10^(-alpha_q[dB/km] L / 10) * det_efficiency.
double link_transmissivity(AttenuationCoeff alpha_q, double length_km,
                           const QuantumReceiver& rx);

struct KeyRate {
    double rate = 0.0;       // secure bits per gate, floored at 0
    double qber = 0.0;       // overall E_mu
    double rate_unfloored = 0.0;
};

/// Decoy-state BB84 lower bound:
///   Y1 = Y0 + t_l;  Q1 = Y1 mu e^{-mu};  e1 = (Y0/2 + e_d t_l) / Y1
///   Qmu = Y0 + 1 - e^{-t_l mu};  Emu = (Y0/2 + e_d (1 - e^{-t_l mu})) / Qmu
///   R = q { -Qmu f H2(Emu) + Q1 [1 - H2(e1)] }
/// Throws DeadLinkError when Y1 == 0.
KeyRate secure_key_rate(const LinkBudget& budget, const QuantumReceiver& rx);

enum class NoiseMode { None, Forward, Backward, Both };

struct MaxDistance {
    double km = 0.0;
    bool bracket_limited = false;  // R still positive at the 500 km bracket end
};

/// Largest L in [0, 500] km with R(L) > 0 at 0.1 km resolution, where the
/// vacuum yield at each L includes the selected ICSRS contribution from a
/// single classical channel (p0, eta) on the given link template. Assumes R
/// does not resurrect beyond its first zero crossing. Throws
/// std::domain_error when R is nonpositive everywhere in the bracket.
MaxDistance max_secure_distance(const FiberLink& link_template, Power p0,
                                RamanEfficiency eta, const QuantumReceiver& rx,
                                NoiseMode mode);

} // namespace icsrs
