#include "icsrs/quadrature.hpp"

#include "icsrs/errors.hpp"

#include <array>
#include <cmath>
#include <string>

namespace icsrs {

namespace {

// Gauss-Kronrod 7/15 pair on [-1, 1] (QUADPACK dqk15 abscissae/weights).
// Even-indexed Kronrod nodes carry the embedded 7-point Gauss rule.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussW = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Estimate {
    double integral;  // Kronrod-15 value
    double error;     // |K15 - G7|
};

Estimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double f_mid = f(mid);
    double k15 = kKronrodW[7] * f_mid;
    double g7 = kGaussW[3] * f_mid;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kNodes[i];
        const double pair = f(mid - dx) + f(mid + dx);
        k15 += kKronrodW[i] * pair;
        if (i % 2 == 1) g7 += kGaussW[i / 2] * pair;
    }
    k15 *= half;
    g7 *= half;
    return {k15, std::fabs(k15 - g7)};
}

double refine(const std::function<double(double)>& f, double a, double b,
              const Estimate& est, const QuadratureOptions& opt, int depth) {
    if (est.error <= opt.rel_tol * std::fabs(est.integral)) return est.integral;
    if (depth >= opt.max_depth)
        throw QuadratureError("no convergence to rel_tol = " + std::to_string(opt.rel_tol) +
                              " after " + std::to_string(opt.max_depth) +
                              " bisections on [" + std::to_string(a) + ", " +
                              std::to_string(b) + "]");
    const double mid = 0.5 * (a + b);
    if (!(a < mid && mid < b))
        throw QuadratureError("interval [" + std::to_string(a) + ", " + std::to_string(b) +
                              "] too narrow to bisect further");
    return refine(f, a, mid, gk15(f, a, mid), opt, depth + 1) +
           refine(f, mid, b, gk15(f, mid, b), opt, depth + 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt) {
    if (!(opt.rel_tol > 0.0)) throw QuadratureError("rel_tol must be positive");
    if (opt.max_depth < 0) throw QuadratureError("max_depth must be nonnegative");
    if (a == b) return 0.0;
    if (a > b) return -integrate(f, b, a, opt);
    return refine(f, a, b, gk15(f, a, b), opt, 0);
}

} // namespace icsrs
