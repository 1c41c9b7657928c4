#pragma once

#include <cstdint>

#include "dfib/constants.hpp"
#include "dfib/scalar_field.hpp"

namespace dfib {

// Exact Fibonacci number by recurrence; n in [0, 90] (uint64 overflow guard).
std::uint64_t fib_discrete(int n);

// Binet form (e^{pt n} - (-1)^n e^{-pt n}) / sqrt5; n in [0, 70] so the
// result stays exactly representable in a double.
double fib_binet(int n);

// Continuous interpolation (e^{pt x} - cos(pi x) e^{-pt x}) / sqrt5.
// Hits F_n at every integer n >= 0.
double fib_continuous(double x);

// Hyperbolic parity components:
//   even: (2/sqrt5) sinh(pt x)   (F_n at even integers)
//   odd:  (2/sqrt5) cosh(pt x)   (F_n at odd integers)
// Both solve F'' - pt^2 F = 0.
double fib_parity(Parity p, double x);

// Analytic derivative of fib_parity; order must be 1 or 2.
double fib_parity_derivative(Parity p, double x, int order);

// Source term r(x) = F_c'' - pt^2 F_c in closed form:
// e^{-pt x} (pi^2 cos(pi x) - 2 pi pt sin(pi x)) / sqrt5.
double fc_source_term(double x);

// Phi = -F'/F for the parity component:
//   odd:  -pt tanh(pt x)
//   even: -pt coth(pt x), SingularPoint when |pt x| <= 1e-12
double log_derivative(Parity p, double x);

// Field wrappers with analytic derivatives, for the deformation engine.
ScalarField fib_parity_field(Parity p);
ScalarField log_derivative_field(Parity p);

}  // namespace dfib
