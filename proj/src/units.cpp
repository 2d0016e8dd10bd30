#include "icsrs/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace icsrs {

namespace {

void require_nonnegative(double v, const char* what) {
    if (!(v >= 0.0))
        throw std::invalid_argument(std::string(what) + " must be nonnegative, got " +
                                    std::to_string(v));
}

constexpr double kLn10 = 2.302585092994045684;

} // namespace

AttenuationCoeff::AttenuationCoeff(double value_per_km) : per_km(value_per_km) {
    require_nonnegative(value_per_km, "attenuation coefficient");
}

AttenuationCoeff AttenuationCoeff::from_db_per_km(double db_per_km) {
    require_nonnegative(db_per_km, "attenuation (dB/km)");
    return AttenuationCoeff(db_per_km * kLn10 / 10.0);
}

double AttenuationCoeff::db_per_km() const { return per_km * 10.0 / kLn10; }

AttenuationCoeff db_per_km_to_linear(double db_per_km) {
    return AttenuationCoeff::from_db_per_km(db_per_km);
}

CouplingCoeff::CouplingCoeff(double value_per_km) : per_km(value_per_km) {
    require_nonnegative(value_per_km, "coupling coefficient");
}

CouplingCoeff CouplingCoeff::from_per_km(double value_per_km) {
    return CouplingCoeff(value_per_km);
}

CouplingCoeff CouplingCoeff::from_per_m(double value_per_m) {
    return CouplingCoeff(value_per_m * 1000.0);
}

Power::Power(double value_mw) : mw(value_mw) { require_nonnegative(value_mw, "power"); }

Power Power::from_mw(double value_mw) { return Power(value_mw); }

Power Power::from_dbm(double value_dbm) { return Power(std::pow(10.0, value_dbm / 10.0)); }

double Power::dbm() const { return 10.0 * std::log10(mw); }

Power dbm_to_mw(double p_dbm) { return Power::from_dbm(p_dbm); }

double mw_to_dbm(double p_mw) {
    require_nonnegative(p_mw, "power");
    return 10.0 * std::log10(p_mw);
}

Wavelength::Wavelength(double value_nm) : nm(value_nm) {
    if (!(value_nm >= 1260.0 && value_nm <= 1675.0))
        throw std::invalid_argument("wavelength " + std::to_string(value_nm) +
                                    " nm outside the transparency window [1260, 1675]");
}

Wavelength Wavelength::from_nm(double value_nm) { return Wavelength(value_nm); }

Wavelength Wavelength::from_thz(double frequency_thz) {
    if (!(frequency_thz > 0.0))
        throw std::invalid_argument("frequency must be positive");
    return Wavelength(kLightSpeedMps / (frequency_thz * 1e12) * 1e9);
}

double Wavelength::thz() const { return kLightSpeedMps / (nm * 1e-9) / 1e12; }

double bandwidth_ghz_to_nm(double b_ghz, Wavelength center) {
    if (!(b_ghz > 0.0))
        throw std::invalid_argument("bandwidth must be positive, got " +
                                    std::to_string(b_ghz) + " GHz");
    const double lam_m = center.nm * 1e-9;
    return lam_m * lam_m * (b_ghz * 1e9) / kLightSpeedMps * 1e9;
}

} // namespace icsrs
