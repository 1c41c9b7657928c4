#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dfib/errors.hpp"

namespace dfib {

// Uniform evaluation grid with exact endpoints.
struct Grid {
    double start = 0.0;
    double stop = 0.0;
    std::vector<double> points;

    // count >= 2 points from start to stop inclusive.
    static Grid uniform(double start, double stop, int count);
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::int64_t evaluations = 0;
};

// Fourth-order central differences.
//   order 1: step 1e-5 * max(1, |x|), five-point stencil
//   order 2: step 1e-4 * max(1, |x|), five-point stencil
// Anything else is OutOfRange.
double derivative(const std::function<double(double)>& f, double x, int order);

// Same stencils with an explicit step, for callers differentiating a
// function that itself carries quadrature noise.
double derivative(const std::function<double(double)>& f, double x, int order, double step);

// Adaptive Simpson integration of f over [a, b].
//
// Terminates a subinterval when its error estimate fits the proportionally
// split budget; the effective tolerance has a relative floor of
// 1e-14 * |whole-interval estimate| so that large integrals do not chase
// unreachable absolute targets. Summation order is fixed (left before
// right), so results are bitwise reproducible. QuadratureFailure if the
// evaluation cap (1e6) is exhausted; EvaluationFailure on non-finite f.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol = 1e-10);

// max_i |values[i]| / (1 + scale[i]); LengthMismatch unless sizes agree.
double residual_norm(std::span<const double> values, std::span<const double> scale);

}  // namespace dfib
