#pragma once

#include <functional>

namespace icsrs {

struct QuadratureOptions {
    double rel_tol = 1e-10;
    int max_depth = 60;  // bisection levels per subinterval
};

/// Adaptive Gauss-Kronrod 7/15 on [a, b]. Bisects any subinterval whose
/// |K15 - G7| estimate exceeds the locally apportioned tolerance; throws
/// QuadratureError once a subinterval would need more than max_depth splits.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt = {});

} // namespace icsrs
