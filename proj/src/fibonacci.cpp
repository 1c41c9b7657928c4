#include "dfib/fibonacci.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace dfib {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::uint64_t fib_discrete(int n) {
    if (n < 0 || n > 90) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "fib_discrete: n = %d outside [0, 90]", n);
        throw OutOfRange(buf);
    }
    std::uint64_t a = 0;  // F_0
    std::uint64_t b = 1;  // F_1
    for (int i = 0; i < n; ++i) {
        const std::uint64_t next = a + b;
        a = b;
        b = next;
    }
    return a;
}

double fib_binet(int n) {
    if (n < 0 || n > 70) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "fib_binet: n = %d outside [0, 70]", n);
        throw OutOfRange(buf);
    }
    const auto& g = golden();
    const double grow = std::exp(g.phi_tilde * n);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return (grow - sign / grow) / g.sqrt5;
}

double fib_continuous(double x) {
    const auto& g = golden();
    const double grow = std::exp(g.phi_tilde * x);
    return (grow - std::cos(kPi * x) * std::exp(-g.phi_tilde * x)) / g.sqrt5;
}

double fib_parity(Parity p, double x) {
    const auto& g = golden();
    const double h = (p == Parity::even) ? std::sinh(g.phi_tilde * x) : std::cosh(g.phi_tilde * x);
    return 2.0 * h / g.sqrt5;
}

double fib_parity_derivative(Parity p, double x, int order) {
    const auto& g = golden();
    if (order == 1) {
        // d/dx swaps sinh and cosh and pulls down one factor of pt.
        const double h = (p == Parity::even) ? std::cosh(g.phi_tilde * x)
                                             : std::sinh(g.phi_tilde * x);
        return 2.0 * g.phi_tilde * h / g.sqrt5;
    }
    if (order == 2) {
        return g.phi_tilde * g.phi_tilde * fib_parity(p, x);
    }
    throw OutOfRange("fib_parity_derivative: order must be 1 or 2");
}

double fc_source_term(double x) {
    const auto& g = golden();
    const double damp = std::exp(-g.phi_tilde * x);
    return damp
           * (kPi * kPi * std::cos(kPi * x) - 2.0 * kPi * g.phi_tilde * std::sin(kPi * x))
           / g.sqrt5;
}

double log_derivative(Parity p, double x) {
    const auto& g = golden();
    const double t = g.phi_tilde * x;
    if (p == Parity::odd) {
        return -g.phi_tilde * std::tanh(t);
    }
    if (std::abs(t) <= 1e-12) {
        throw SingularPoint("log_derivative: even branch is singular at x = 0");
    }
    return -g.phi_tilde / std::tanh(t);
}

ScalarField fib_parity_field(Parity p) {
    return ScalarField([p](double x) { return fib_parity(p, x); },
                       [p](double x) { return fib_parity_derivative(p, x, 1); });
}

ScalarField log_derivative_field(Parity p) {
    return ScalarField([p](double x) { return log_derivative(p, x); },
                       [p](double x) {
                           // odd: -pt^2 sech^2; even: +pt^2 csch^2
                           const auto& g = golden();
                           const double t = g.phi_tilde * x;
                           if (p == Parity::odd) {
                               const double c = std::cosh(t);
                               return -g.phi_tilde * g.phi_tilde / (c * c);
                           }
                           const double s = std::sinh(t);
                           if (s == 0.0) {
                               throw SingularPoint("log-derivative slope singular at x = 0");
                           }
                           return g.phi_tilde * g.phi_tilde / (s * s);
                       });
}

}  // namespace dfib
