#pragma once

#include <cstdint>
#include <vector>

#include "dfib/constants.hpp"
#include "dfib/scalar_field.hpp"

namespace dfib {

// Branch denominator of the closed-form deformation:
//   odd:  2 pt (2 gamma + x) + sinh(2 pt x)
//   even: 2 pt (2 gamma - x) + sinh(2 pt x)
double branch_denominator(Parity p, double gamma, double x);

// First deformed solution factor A = 2 sqrt5 pt / D.
// PoleEncountered when |D| <= 1e-12.
double factor_A(Parity p, double gamma, double x);

// Second deformed solution factor:
//   odd:  sqrt5 W [4 pt^2 (2g+x)^2 tanh(pt x) - 2 pt x + sinh(2 pt x)] / (8 pt^2 D)
//   even: sqrt5 W [-4 pt^2 (x-2g)^2 coth(pt x) + 2 pt x + sinh(2 pt x)] / (8 pt^2 D)
// SingularPoint for (even, x = 0); PoleEncountered when |D| <= 1e-12.
// B -> sqrt5 W / (8 pt^2) as x -> +inf.
double factor_B(Parity p, double gamma, double w_norm, double x);

// One evaluated point of a deformed sequence: value = factor * base where
// base is the parity component.
struct DeformedValue {
    double x = 0.0;
    double base = 0.0;
    double factor = 0.0;
    double value = 0.0;
    double gamma = 0.0;
    double w_norm = 0.0;
};

DeformedValue deformed_F(Parity p, double gamma, double x);
DeformedValue deformed_G(Parity p, double gamma, double w_norm, double x);

// Analytic x-derivatives of the deformed solutions (exact Wronskians, no
// finite-difference noise).
double deformed_F_derivative(Parity p, double gamma, double x);
double deformed_G_derivative(Parity p, double gamma, double w_norm, double x);

// Closed-form deformed potential:
//   pt^2 [1 - 8 sinh(2 pt x)/D + 32 H^4 / D^2],  H = cosh(pt x) (odd) / sinh(pt x) (even)
double deformed_potential_closed(Parity p, double gamma, double x);

// Shift (B - 1) * F between the second deformed solution and the parity
// component. SingularPoint for (even, 0): use shift_even_at_zero.
double darboux_shift(Parity p, double gamma, double w_norm, double x);

// x -> 0 limit of the even shift: -4 gamma / 5 at the canonical W.
double shift_even_at_zero(double gamma);
// Same limit for arbitrary W: -W gamma / pt.
double shift_even_at_zero(double gamma, double w_norm);

enum class CellStatus { ok, pole, singular };

// Shift table over parity positions (odd: 1,3,..,2c-1; even: 0,2,..,2c-2),
// one column per gamma. Cells that hit a pole keep NaN and a status flag;
// the rest of the table is still produced.
struct ShiftTable {
    Parity parity = Parity::odd;
    std::vector<int> positions;
    std::vector<double> gammas;
    std::vector<std::uint64_t> fibonacci_values;
    std::vector<std::vector<double>> shifts;        // [row][col]
    std::vector<std::vector<CellStatus>> status;    // [row][col]
};

// count in [1, 20], gammas nonempty (DomainError otherwise).
ShiftTable shift_table(Parity p, const std::vector<double>& gammas, int count);
ShiftTable shift_table(Parity p, const std::vector<double>& gammas, int count,
                       double w_norm);

// Field wrappers with analytic derivatives.
ScalarField deformed_F_field(Parity p, double gamma);
ScalarField deformed_G_field(Parity p, double gamma, double w_norm);
ScalarField deformed_potential_field(Parity p, double gamma);

}  // namespace dfib
