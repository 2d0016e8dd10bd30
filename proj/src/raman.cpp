#include "icsrs/raman.hpp"

#include "icsrs/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace icsrs {

namespace {

void require_nonnegative(double v, const char* what) {
    if (!(v >= 0.0))
        throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

// phi(d) = (e^{dL}-1)/d and chi(s) = (e^{-sL}-1)/s. The expm1 forms are
// uniformly accurate through the removable points d = 0, s = 0, so the
// degenerate-denominator cases need no separate series branch.
double phi(double d, double length_km) {
    if (d == 0.0) return length_km;
    return std::expm1(d * length_km) / d;
}

double chi(double s, double length_km) {
    if (s == 0.0) return -length_km;
    return std::expm1(-s * length_km) / s;
}

} // namespace

RamanEfficiency::RamanEfficiency(double value_per_km_nm) : per_km_nm(value_per_km_nm) {
    require_nonnegative(value_per_km_nm, "Raman efficiency");
}

NoiseDensity::NoiseDensity(double value_mw_per_nm) : mw_per_nm(value_mw_per_nm) {
    require_nonnegative(value_mw_per_nm, "noise density");
}

double NoiseDensity::dbm_per_nm() const { return 10.0 * std::log10(mw_per_nm); }

double g_factor(const FiberLink& link) {
    const double d1 = link.alpha_q.per_km - link.alpha_c.per_km;
    const double d2 = d1 - 2.0 * link.h.per_km;
    const double v = std::exp(-link.alpha_q.per_km * link.length_km) *
                     (phi(d1, link.length_km) - phi(d2, link.length_km));
    return std::max(v, 0.0);  // clears sub-ulp cancellation residue
}

double f_factor(const FiberLink& link) {
    const double a = link.alpha_q.per_km + link.alpha_c.per_km;
    const double b = a + 2.0 * link.h.per_km;
    if (b == 0.0)
        throw std::domain_error("all-zero link coefficients: backward factor undefined");
    const double v = chi(b, link.length_km) - chi(a, link.length_km);
    return std::max(v, 0.0);
}

NoiseDensity forward_icsrs(const FiberLink& link, Power p0, RamanEfficiency eta) {
    return NoiseDensity(eta.per_km_nm * p0.mw * g_factor(link));
}

NoiseDensity backward_icsrs(const FiberLink& link, Power p0, RamanEfficiency eta) {
    return NoiseDensity(eta.per_km_nm * p0.mw * f_factor(link));
}

NoiseDensity forward_srs_singlecore(AttenuationCoeff alpha_c, AttenuationCoeff alpha_q,
                                    double length_km, Power p0, RamanEfficiency eta) {
    if (!(length_km >= 0.0)) throw std::domain_error("length must be nonnegative");
    const double v = std::exp(-alpha_q.per_km * length_km) *
                     phi(alpha_q.per_km - alpha_c.per_km, length_km);
    return NoiseDensity(eta.per_km_nm * p0.mw * v);
}

NoiseDensity backward_srs_singlecore(AttenuationCoeff alpha_c, AttenuationCoeff alpha_q,
                                     double length_km, Power p0, RamanEfficiency eta) {
    if (!(length_km >= 0.0)) throw std::domain_error("length must be nonnegative");
    const double a = alpha_q.per_km + alpha_c.per_km;
    if (a == 0.0)
        throw std::domain_error("alpha_q + alpha_c must be positive for backward SRS");
    return NoiseDensity(eta.per_km_nm * p0.mw * -chi(a, length_km));
}

NoiseDensity process_closed_form(RamanProcess process, const FiberLink& link, Power p0,
                                 RamanEfficiency eta) {
    switch (process) {
        case RamanProcess::IcxtThenFsrs:
        case RamanProcess::FsrsThenIcxt:
            return NoiseDensity(0.5 * eta.per_km_nm * p0.mw * g_factor(link));
        case RamanProcess::IcxtThenBsrs:
        case RamanProcess::BsrsThenIcxt:
            return NoiseDensity(0.5 * eta.per_km_nm * p0.mw * f_factor(link));
        case RamanProcess::ForwardSrsSinglecore:
            return forward_srs_singlecore(link.alpha_c, link.alpha_q, link.length_km, p0,
                                          eta);
        case RamanProcess::BackwardSrsSinglecore:
            return backward_srs_singlecore(link.alpha_c, link.alpha_q, link.length_km, p0,
                                           eta);
    }
    throw std::invalid_argument("unknown Raman process");
}

NoiseDensity quadrature_oracle(RamanProcess process, const FiberLink& link, Power p0,
                               RamanEfficiency eta, double rel_tol) {
    // Literal pointwise differential expressions, independent of every closed
    // form above: crosstalk and classical powers via sinh/cosh as written.
    const double ac = link.alpha_c.per_km;
    const double aq = link.alpha_q.per_km;
    const double h = link.h.per_km;
    const double L = link.length_km;
    const double k = eta.per_km_nm * p0.mw;

    auto p_icxt = [=](double z) {
        return std::exp(-h * z) * std::sinh(h * z) * std::exp(-ac * z);
    };
    auto p_cs = [=](double z) {
        return std::exp(-h * z) * std::cosh(h * z) * std::exp(-ac * z);
    };

    std::function<double(double)> integrand;
    switch (process) {
        case RamanProcess::IcxtThenFsrs:
            integrand = [=](double z) { return k * p_icxt(z) * std::exp(-aq * (L - z)); };
            break;
        case RamanProcess::FsrsThenIcxt:
            integrand = [=](double z) {
                return k * p_cs(z) * std::tanh(h * z) * std::exp(-aq * (L - z));
            };
            break;
        case RamanProcess::IcxtThenBsrs:
            integrand = [=](double z) { return k * p_icxt(z) * std::exp(-aq * z); };
            break;
        case RamanProcess::BsrsThenIcxt:
            integrand = [=](double z) {
                return k * p_cs(z) * std::tanh(h * z) * std::exp(-aq * z);
            };
            break;
        case RamanProcess::ForwardSrsSinglecore:
            integrand = [=](double z) {
                return k * std::exp(-ac * z) * std::exp(-aq * (L - z));
            };
            break;
        case RamanProcess::BackwardSrsSinglecore:
            integrand = [=](double z) {
                return k * std::exp(-ac * z) * std::exp(-aq * z);
            };
            break;
        default:
            throw std::invalid_argument("unknown Raman process");
    }

    QuadratureOptions opt;
    opt.rel_tol = rel_tol;
    return NoiseDensity(std::max(integrate(integrand, 0.0, L, opt), 0.0));
}

} // namespace icsrs
