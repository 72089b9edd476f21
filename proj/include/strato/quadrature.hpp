#pragma once

#include <functional>

namespace strato {

// Gauss-Kronrod 7/15 pair on [a,b]; err is |K15 - G7|.
struct GkResult {
    double value = 0;
    double err = 0;
};
GkResult gk15(const std::function<double(double)>& f, double a, double b);

// Adaptive bisection to absolute tolerance (plus a small relative guard).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth = 48);

}  // namespace strato
