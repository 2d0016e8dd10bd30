#include "icsrs/fiber.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace icsrs {

namespace {

void check_position(const FiberLink& link, double z_km) {
    if (!(z_km >= 0.0 && z_km <= link.length_km))
        throw std::out_of_range("position z = " + std::to_string(z_km) +
                                " km outside span [0, " + std::to_string(link.length_km) +
                                "]");
}

} // namespace

FiberLink::FiberLink(double length_km, AttenuationCoeff alpha_c, AttenuationCoeff alpha_q,
                     CouplingCoeff h)
    : length_km(length_km), alpha_c(alpha_c), alpha_q(alpha_q), h(h) {
    if (!(length_km > 0.0))
        throw std::invalid_argument("span length must be positive, got " +
                                    std::to_string(length_km) + " km");
}

FiberLink FiberLink::with_length(double new_length_km) const {
    return FiberLink(new_length_km, alpha_c, alpha_q, h);
}

void validate_cband(const FiberLink& link) {
    auto check = [](AttenuationCoeff a, const char* name) {
        if (!(a.per_km >= 0.03 && a.per_km <= 0.12))
            throw std::invalid_argument(std::string(name) + " = " +
                                        std::to_string(a.per_km) +
                                        " km^-1 outside the C-band range [0.03, 0.12]");
    };
    check(link.alpha_c, "alpha_c");
    check(link.alpha_q, "alpha_q");
}

// exp(-hz) cosh(hz) = (1 + e^{-2hz})/2 and exp(-hz) sinh(hz) = (1 - e^{-2hz})/2;
// the expm1 form keeps the crosstalk branch accurate at small hz and makes the
// two branches sum to exactly e^0 = 1 times the attenuation factor.

Power classical_power_at(const FiberLink& link, Power p0, double z_km) {
    check_position(link, z_km);
    const double w = std::exp(-2.0 * link.h.per_km * z_km);
    return Power(p0.mw * 0.5 * (1.0 + w) * std::exp(-link.alpha_c.per_km * z_km));
}

Power icxt_power_at(const FiberLink& link, Power p0, double z_km) {
    check_position(link, z_km);
    const double one_minus_w = -std::expm1(-2.0 * link.h.per_km * z_km);
    return Power(p0.mw * 0.5 * one_minus_w * std::exp(-link.alpha_c.per_km * z_km));
}

double icxt_transfer(const FiberLink& link, double z_km) {
    check_position(link, z_km);
    return std::tanh(link.h.per_km * z_km);
}

} // namespace icsrs
