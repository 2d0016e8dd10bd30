#pragma once

#include <string>

namespace icsrs {

// Canonical internal units: km, km^-1, mW, nm. Everything quoted per meter
// or in dB is converted at the boundary.
inline constexpr double kPlanckJs = 6.62607015e-34;     // J s (exact, SI 2019)
inline constexpr double kLightSpeedMps = 299792458.0;   // m/s (exact)

/// Linear-scale attenuation, km^-1.
struct AttenuationCoeff {
    double per_km = 0.0;

    AttenuationCoeff() = default;
    explicit AttenuationCoeff(double value_per_km);

    static AttenuationCoeff from_db_per_km(double db_per_km);
    double db_per_km() const;
};

/// db_per_km_to_linear: a -> a ln(10)/10. Rejects negative input.
AttenuationCoeff db_per_km_to_linear(double db_per_km);

/// Intercore power coupling coefficient, km^-1.
struct CouplingCoeff {
    double per_km = 0.0;

    CouplingCoeff() = default;
    explicit CouplingCoeff(double value_per_km);

    static CouplingCoeff from_per_km(double value_per_km);
    static CouplingCoeff from_per_m(double value_per_m);  // exact x1000
    double per_m() const { return per_km / 1000.0; }
};

/// Optical power, mW, nonnegative.
struct Power {
    double mw = 0.0;

    Power() = default;
    explicit Power(double value_mw);

    static Power from_mw(double value_mw);
    static Power from_dbm(double value_dbm);
    double dbm() const;  // -inf at 0 mW
};

/// dbm_to_mw: p -> 10^(p/10).
Power dbm_to_mw(double p_dbm);
double mw_to_dbm(double p_mw);

/// Wavelength, nm, restricted to the fiber transparency window [1260, 1675].
struct Wavelength {
    double nm = 1550.0;

    Wavelength() = default;
    explicit Wavelength(double value_nm);

    static Wavelength from_nm(double value_nm);
    static Wavelength from_thz(double frequency_thz);
    double thz() const;
};

/// Frequency window -> wavelength window at a given center: lambda^2 b / c.
/// b in GHz, result in nm. Rejects b <= 0.
double bandwidth_ghz_to_nm(double b_ghz, Wavelength center);

} // namespace icsrs
