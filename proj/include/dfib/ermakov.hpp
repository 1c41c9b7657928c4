#pragma once

#include <vector>

#include "dfib/constants.hpp"
#include "dfib/scalar_field.hpp"

namespace dfib {

// Two independent solutions of the same linear oscillator plus the
// nonlinear coupling; wronskian is W(u1, u2), constant for valid inputs.
struct PinneyInputs {
    ScalarField u1;
    ScalarField u2;
    double k = -1.0;
    double wronskian = 0.0;
};

// Pinney's particular solution sqrt(u1^2 - k u2^2 / W^2) of
// v'' + omega^2 v + k v^{-3} = 0. DomainError on a negative radicand
// or zero wronskian.
double pinney_solution(const PinneyInputs& in, double x);

// Constant-coefficient case omega^2 = -pt^2 built from the parity pair:
// sqrt((4/5) sinh^2(pt x) - (5k/(4 pt^2)) cosh^2(pt x)).
double v_sep(double k, double x);

// Closed-form deformed Pinney solution.
//   odd:  cosh(pt x) sqrt(256 pt^6 - k N_o^2) / (4 pt^2 D_o)
//   even: sinh(pt x) sqrt(256 pt^6 - k N_e^2) / (4 pt^2 D_e)
// The even branch is evaluated in a form with the coth pole multiplied
// out, so x -> 0 tends to the finite limit gamma sqrt(-k)/pt; x = 0
// itself is SingularPoint. DomainError on a negative radicand,
// PoleEncountered on a zero branch denominator.
double v_deformed(Parity p, double gamma, double k, double x);

// Conserved combination of a linear solution u = m u1 + n u2 and the
// Pinney solution v:  -k (u/v)^2 + (u'v - u v')^2.
// Constant in x; equals n^2 W^2 - m^2 k.
struct InvariantReport {
    std::vector<double> grid;
    std::vector<double> values;   // NaN where a point was skipped
    std::vector<bool> valid;
    double mean = 0.0;            // over valid points, fixed summation order
    double max_abs_deviation = 0.0;
    double closed_form = 0.0;
};

InvariantReport invariant_profile(const PinneyInputs& in, double m, double n,
                                  const std::vector<double>& grid);

double invariant_closed(double m, double n, double k, double wronskian);

// Residual of v against v'' + omega_sq v + k v^{-3} = 0 at x, with the
// second derivative taken by central differences. DomainError where v
// vanishes.
double ep_residual(const ScalarField& v, const ScalarField& omega_sq, double k, double x);

}  // namespace dfib
