#pragma once

#include "icsrs/fiber.hpp"
#include "icsrs/units.hpp"

namespace icsrs {

/// Spontaneous-Raman conversion efficiency, (km nm)^-1, nonnegative.
/// Treated as an opaque pump-probe-detuning-dependent input.
struct RamanEfficiency {
    double per_km_nm = 0.0;

    RamanEfficiency() = default;
    explicit RamanEfficiency(double value_per_km_nm);
};

/// Spectral noise power density at the receiver, mW per nm of bandwidth.
struct NoiseDensity {
    double mw_per_nm = 0.0;

    NoiseDensity() = default;
    explicit NoiseDensity(double value_mw_per_nm);
    double dbm_per_nm() const;  // -inf at 0
};

/// Forward distance factor, km:
///   G(L) = exp(-aq L) { [e^{(aq-ac)L}-1]/(aq-ac) - [e^{(aq-ac-2h)L}-1]/(aq-ac-2h) }
/// Degenerate denominators are evaluated by their continuous limits.
double g_factor(const FiberLink& link);

/// Backward distance factor, km:
///   F(L) = [e^{-(aq+ac+2h)L}-1]/(aq+ac+2h) - [e^{-(aq+ac)L}-1]/(aq+ac)
/// Monotone in L, saturating at 1/(aq+ac) - 1/(aq+ac+2h).
/// An all-zero-coefficient link is rejected.
double f_factor(const FiberLink& link);

/// Intercore Raman noise co-propagating with the quantum signal, at z = L.
NoiseDensity forward_icsrs(const FiberLink& link, Power p0, RamanEfficiency eta);

/// Intercore Raman noise counter-propagating, at z = 0.
NoiseDensity backward_icsrs(const FiberLink& link, Power p0, RamanEfficiency eta);

/// Same-core spontaneous Raman noise, forward:
///   eta p0 [exp(-ac L) - exp(-aq L)]/(aq - ac), limit eta p0 L exp(-a L) at aq == ac.
NoiseDensity forward_srs_singlecore(AttenuationCoeff alpha_c, AttenuationCoeff alpha_q,
                                    double length_km, Power p0, RamanEfficiency eta);

/// Same-core spontaneous Raman noise, backward:
///   eta p0 [1 - exp(-(aq+ac)L)]/(aq+ac). Rejects aq + ac == 0.
NoiseDensity backward_srs_singlecore(AttenuationCoeff alpha_c, AttenuationCoeff alpha_q,
                                     double length_km, Power p0, RamanEfficiency eta);

/// The four intercore generation processes plus the two single-core ones.
/// IcxtThenFsrs: crosstalk first, Raman in the quantum core (integrand eta P_ICXT(z) e^{-aq(L-z)})
/// FsrsThenIcxt: Raman in the classical core, crosstalk of the noise (eta P_CS(z) tanh(hz) e^{-aq(L-z)})
/// IcxtThenBsrs / BsrsThenIcxt: the backward counterparts (loss factor e^{-aq z})
enum class RamanProcess {
    IcxtThenFsrs,
    FsrsThenIcxt,
    IcxtThenBsrs,
    BsrsThenIcxt,
    ForwardSrsSinglecore,
    BackwardSrsSinglecore,
};

/// Closed-form value of one process. The intercore pairs are algebraically
/// identical halves: each contributes eta p0 G/2 (forward) or eta p0 F/2 (backward).
NoiseDensity process_closed_form(RamanProcess process, const FiberLink& link,
                                 Power p0, RamanEfficiency eta);

/// Ground truth: adaptive quadrature of the literal per-segment differential
/// expression of one process over [0, L]. Independent of every closed form
/// above (the integrands are spelled out pointwise). Non-convergence raises
/// QuadratureError.
NoiseDensity quadrature_oracle(RamanProcess process, const FiberLink& link,
                               Power p0, RamanEfficiency eta, double rel_tol = 1e-10);

} // namespace icsrs
