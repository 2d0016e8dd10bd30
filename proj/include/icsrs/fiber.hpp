#pragma once

#include "icsrs/units.hpp"

namespace icsrs {

/// One multicore-fiber span with a single interfering core pair.
/// Average coupled-power model; stochastic ICXT fluctuations are out of scope.
struct FiberLink {
    double length_km = 0.0;
    AttenuationCoeff alpha_c;  // classical-core attenuation
    AttenuationCoeff alpha_q;  // quantum-core attenuation
    CouplingCoeff h;           // intercore power coupling h_ij

    FiberLink() = default;
    FiberLink(double length_km, AttenuationCoeff alpha_c, AttenuationCoeff alpha_q,
              CouplingCoeff h);

    /// Same coefficients on a different span length (sweep helper).
    FiberLink with_length(double new_length_km) const;
};

/// Throws unless both attenuations lie in [0.03, 0.12] km^-1 (C-band range).
void validate_cband(const FiberLink& link);

/// Classical signal power at position z in the launch core:
/// p0 exp(-h z) cosh(h z) exp(-alpha_c z). 0 <= z <= length required.
Power classical_power_at(const FiberLink& link, Power p0, double z_km);

/// Average crosstalk power coupled into the adjacent core at z:
/// p0 exp(-h z) sinh(h z) exp(-alpha_c z). 0 <= z <= length required.
Power icxt_power_at(const FiberLink& link, Power p0, double z_km);

/// Fraction of co-located power handed over by coupling: tanh(h z), in [0, 1).
double icxt_transfer(const FiberLink& link, double z_km);

} // namespace icsrs
