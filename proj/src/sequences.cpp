#include "dfib/sequences.hpp"

#include <cmath>
#include <limits>

#include "dfib/fibonacci.hpp"

namespace dfib {

namespace {

constexpr double kPoleEps = 1e-12;
constexpr double kEvenSingularEps = 1e-12;

void check_pole(double d) {
    if (std::abs(d) <= kPoleEps) {
        throw PoleEncountered("branch denominator vanished");
    }
}

void check_even_origin(Parity p, double x) {
    if (p == Parity::even && std::abs(golden().phi_tilde * x) <= kEvenSingularEps) {
        throw SingularPoint("even branch is singular at x = 0; use shift_even_at_zero");
    }
}

// Numerator of factor_B (the bracket multiplying sqrt5 W / (8 pt^2 D)).
double factor_B_numerator(Parity p, double gamma, double x) {
    const auto& g = golden();
    const double pt = g.phi_tilde;
    const double s2 = std::sinh(2.0 * pt * x);
    if (p == Parity::odd) {
        const double a = 2.0 * gamma + x;
        return 4.0 * pt * pt * a * a * std::tanh(pt * x) - 2.0 * pt * x + s2;
    }
    const double a = x - 2.0 * gamma;
    const double coth = std::cosh(pt * x) / std::sinh(pt * x);
    return -4.0 * pt * pt * a * a * coth + 2.0 * pt * x + s2;
}

// d/dx of the branch denominator.
double branch_denominator_derivative(Parity p, double x) {
    const double pt = golden().phi_tilde;
    const double lin = (p == Parity::odd) ? 2.0 * pt : -2.0 * pt;
    return lin + 2.0 * pt * std::cosh(2.0 * pt * x);
}

// d/dx of factor_B_numerator.
double factor_B_numerator_derivative(Parity p, double gamma, double x) {
    const double pt = golden().phi_tilde;
    const double c2 = std::cosh(2.0 * pt * x);
    if (p == Parity::odd) {
        const double a = 2.0 * gamma + x;
        const double sech = 1.0 / std::cosh(pt * x);
        return 8.0 * pt * pt * a * std::tanh(pt * x)
             + 4.0 * pt * pt * pt * a * a * sech * sech
             - 2.0 * pt + 2.0 * pt * c2;
    }
    const double a = x - 2.0 * gamma;
    const double sh = std::sinh(pt * x);
    const double coth = std::cosh(pt * x) / sh;
    return -8.0 * pt * pt * a * coth
         + 4.0 * pt * pt * pt * a * a / (sh * sh)
         + 2.0 * pt + 2.0 * pt * c2;
}

}  // namespace

double branch_denominator(Parity p, double gamma, double x) {
    const double pt = golden().phi_tilde;
    const double lin = (p == Parity::odd) ? (2.0 * gamma + x) : (2.0 * gamma - x);
    return 2.0 * pt * lin + std::sinh(2.0 * pt * x);
}

double factor_A(Parity p, double gamma, double x) {
    const auto& g = golden();
    const double d = branch_denominator(p, gamma, x);
    check_pole(d);
    return 2.0 * g.sqrt5 * g.phi_tilde / d;
}

double factor_B(Parity p, double gamma, double w_norm, double x) {
    check_even_origin(p, x);
    const auto& g = golden();
    const double pt = g.phi_tilde;
    const double d = branch_denominator(p, gamma, x);
    check_pole(d);
    // W enters as a magnitude; signed Wronskians are reported elsewhere.
    return g.sqrt5 * std::abs(w_norm) * factor_B_numerator(p, gamma, x)
         / (8.0 * pt * pt * d);
}

DeformedValue deformed_F(Parity p, double gamma, double x) {
    DeformedValue out;
    out.x = x;
    out.base = fib_parity(p, x);
    out.factor = factor_A(p, gamma, x);
    out.value = out.base * out.factor;
    out.gamma = gamma;
    out.w_norm = 0.0;
    return out;
}

DeformedValue deformed_G(Parity p, double gamma, double w_norm, double x) {
    DeformedValue out;
    out.x = x;
    out.base = fib_parity(p, x);
    out.factor = factor_B(p, gamma, w_norm, x);
    out.value = out.base * out.factor;
    out.gamma = gamma;
    out.w_norm = w_norm;
    return out;
}

double deformed_F_derivative(Parity p, double gamma, double x) {
    const double d = branch_denominator(p, gamma, x);
    check_pole(d);
    const double a = factor_A(p, gamma, x);
    const double dd = branch_denominator_derivative(p, x);
    const double f = fib_parity(p, x);
    const double fp = fib_parity_derivative(p, x, 1);
    return a * (fp - f * dd / d);
}

double deformed_G_derivative(Parity p, double gamma, double w_norm, double x) {
    check_even_origin(p, x);
    const auto& g = golden();
    const double pt = g.phi_tilde;
    const double d = branch_denominator(p, gamma, x);
    check_pole(d);
    const double c = g.sqrt5 * std::abs(w_norm) / (8.0 * pt * pt);
    const double n = factor_B_numerator(p, gamma, x);
    const double dn = factor_B_numerator_derivative(p, gamma, x);
    const double dd = branch_denominator_derivative(p, x);
    const double b = c * n / d;
    const double db = c * (dn * d - n * dd) / (d * d);
    return db * fib_parity(p, x) + b * fib_parity_derivative(p, x, 1);
}

double deformed_potential_closed(Parity p, double gamma, double x) {
    const double pt = golden().phi_tilde;
    const double d = branch_denominator(p, gamma, x);
    check_pole(d);
    const double s2 = std::sinh(2.0 * pt * x);
    const double h = (p == Parity::odd) ? std::cosh(pt * x) : std::sinh(pt * x);
    const double h2 = h * h;
    return pt * pt * (1.0 - 8.0 * s2 / d + 32.0 * h2 * h2 / (d * d));
}

double darboux_shift(Parity p, double gamma, double w_norm, double x) {
    check_even_origin(p, x);
    return (factor_B(p, gamma, w_norm, x) - 1.0) * fib_parity(p, x);
}

double shift_even_at_zero(double gamma) { return -4.0 * gamma / 5.0; }

double shift_even_at_zero(double gamma, double w_norm) {
    return -std::abs(w_norm) * gamma / golden().phi_tilde;
}

ShiftTable shift_table(Parity p, const std::vector<double>& gammas, int count) {
    return shift_table(p, gammas, count, golden().w_canonical);
}

ShiftTable shift_table(Parity p, const std::vector<double>& gammas, int count,
                       double w_norm) {
    if (count < 1 || count > 20) {
        throw DomainError("shift_table: count must lie in [1, 20]");
    }
    if (gammas.empty()) {
        throw DomainError("shift_table: gammas must be nonempty");
    }
    ShiftTable table;
    table.parity = p;
    table.gammas = gammas;
    for (int m = 0; m < count; ++m) {
        const int pos = (p == Parity::odd) ? (2 * m + 1) : (2 * m);
        table.positions.push_back(pos);
        table.fibonacci_values.push_back(fib_discrete(pos));
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (int row = 0; row < count; ++row) {
        const double x = static_cast<double>(table.positions[static_cast<std::size_t>(row)]);
        std::vector<double> shifts;
        std::vector<CellStatus> status;
        for (double gamma : gammas) {
            if (p == Parity::even && x == 0.0) {
                shifts.push_back(shift_even_at_zero(gamma, w_norm));
                status.push_back(CellStatus::ok);
                continue;
            }
            try {
                shifts.push_back(darboux_shift(p, gamma, w_norm, x));
                status.push_back(CellStatus::ok);
            } catch (const PoleEncountered&) {
                shifts.push_back(nan);
                status.push_back(CellStatus::pole);
            } catch (const SingularPoint&) {
                shifts.push_back(nan);
                status.push_back(CellStatus::singular);
            }
        }
        table.shifts.push_back(std::move(shifts));
        table.status.push_back(std::move(status));
    }
    return table;
}

ScalarField deformed_F_field(Parity p, double gamma) {
    return ScalarField(
        [p, gamma](double x) { return deformed_F(p, gamma, x).value; },
        [p, gamma](double x) { return deformed_F_derivative(p, gamma, x); });
}

ScalarField deformed_G_field(Parity p, double gamma, double w_norm) {
    return ScalarField(
        [p, gamma, w_norm](double x) { return deformed_G(p, gamma, w_norm, x).value; },
        [p, gamma, w_norm](double x) { return deformed_G_derivative(p, gamma, w_norm, x); });
}

ScalarField deformed_potential_field(Parity p, double gamma) {
    auto deriv = [p, gamma](double x) {
        const double pt = golden().phi_tilde;
        const double d = branch_denominator(p, gamma, x);
        check_pole(d);
        const double dd = branch_denominator_derivative(p, x);
        const double s2 = std::sinh(2.0 * pt * x);
        const double ds2 = 2.0 * pt * std::cosh(2.0 * pt * x);
        const double h = (p == Parity::odd) ? std::cosh(pt * x) : std::sinh(pt * x);
        const double dh = pt * ((p == Parity::odd) ? std::sinh(pt * x) : std::cosh(pt * x));
        const double h3 = h * h * h;
        return pt * pt * (-8.0 * (ds2 * d - s2 * dd) / (d * d)
                          + (128.0 * h3 * dh - 64.0 * h3 * h * dd / d) / (d * d));
    };
    return ScalarField(
        [p, gamma](double x) { return deformed_potential_closed(p, gamma, x); },
        std::move(deriv));
}

}  // namespace dfib
