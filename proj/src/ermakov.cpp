#include "dfib/ermakov.hpp"

#include <cmath>
#include <limits>

#include "dfib/numerics.hpp"
#include "dfib/sequences.hpp"

namespace dfib {

namespace {

constexpr double kZeroEps = 1e-12;

double pinney_radicand(const PinneyInputs& in, double x) {
    if (std::abs(in.wronskian) <= kZeroEps) {
        throw DomainError("pinney_solution: wronskian must be nonzero");
    }
    const double a = in.u1(x);
    const double b = in.u2(x);
    return a * a - in.k * b * b / (in.wronskian * in.wronskian);
}

}  // namespace

double pinney_solution(const PinneyInputs& in, double x) {
    const double r = pinney_radicand(in, x);
    if (r < 0.0) {
        throw DomainError("pinney_solution: negative radicand");
    }
    return std::sqrt(r);
}

double v_sep(double k, double x) {
    const double pt = golden().phi_tilde;
    const double sh = std::sinh(pt * x);
    const double ch = std::cosh(pt * x);
    const double r = 0.8 * sh * sh - 1.25 * k * ch * ch / (pt * pt);
    if (r < 0.0) {
        throw DomainError("v_sep: negative radicand");
    }
    return std::sqrt(r);
}

double v_deformed(Parity p, double gamma, double k, double x) {
    const auto& g = golden();
    const double pt = g.phi_tilde;
    const double d = branch_denominator(p, gamma, x);
    if (std::abs(d) <= kZeroEps) {
        throw PoleEncountered("v_deformed: branch denominator vanished");
    }
    const double pt2 = pt * pt;
    const double c256 = 256.0 * pt2 * pt2 * pt2;
    if (p == Parity::odd) {
        const double a = 2.0 * gamma + x;
        const double n = 4.0 * pt2 * a * a * std::tanh(pt * x) - 2.0 * pt * x
                       + std::sinh(2.0 * pt * x);
        const double r = c256 - k * n * n;
        if (r < 0.0) {
            throw DomainError("v_deformed: negative radicand");
        }
        return std::cosh(pt * x) * std::sqrt(r) / (4.0 * pt2 * d);
    }
    if (std::abs(pt * x) <= kZeroEps) {
        throw SingularPoint("v_deformed: even branch at x = 0");
    }
    // Multiply sinh into the radicand so the coth pole cancels and x -> 0
    // approaches gamma sqrt(-k) / pt smoothly.
    const double a = x - 2.0 * gamma;
    const double sh = std::sinh(pt * x);
    const double ns = -4.0 * pt2 * a * a * std::cosh(pt * x)
                    + (2.0 * pt * x + std::sinh(2.0 * pt * x)) * sh;
    const double r = c256 * sh * sh - k * ns * ns;
    if (r < 0.0) {
        throw DomainError("v_deformed: negative radicand");
    }
    return std::sqrt(r) / (4.0 * pt2 * d);
}

double invariant_closed(double m, double n, double k, double wronskian) {
    return n * n * wronskian * wronskian - m * m * k;
}

InvariantReport invariant_profile(const PinneyInputs& in, double m, double n,
                                  const std::vector<double>& grid) {
    InvariantReport report;
    report.grid = grid;
    report.closed_form = invariant_closed(m, n, in.k, in.wronskian);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double w2 = in.wronskian * in.wronskian;

    for (double x : grid) {
        double value = nan;
        bool ok = false;
        try {
            const double a = in.u1(x);
            const double ap = in.u1.derivative(x);
            const double b = in.u2(x);
            const double bp = in.u2.derivative(x);
            const double u = m * a + n * b;
            const double up = m * ap + n * bp;
            if (in.k == 0.0) {
                // v = |u1| here, so the bracket collapses to a square that
                // needs neither the sign of u1 nor a division by v.
                const double cross = up * a - u * ap;
                value = cross * cross;
                ok = true;
            } else {
                const double v = pinney_solution(in, x);
                if (std::abs(v) > kZeroEps) {
                    const double vp = (a * ap - in.k * b * bp / w2) / v;
                    const double ratio = u / v;
                    const double cross = up * v - u * vp;
                    value = -in.k * ratio * ratio + cross * cross;
                    ok = true;
                }
            }
        } catch (const Error&) {
            ok = false;
        }
        report.values.push_back(value);
        report.valid.push_back(ok);
    }

    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < report.values.size(); ++i) {
        if (report.valid[i]) {
            sum += report.values[i];
            ++count;
        }
    }
    report.mean = (count > 0) ? sum / static_cast<double>(count) : 0.0;
    double dev = 0.0;
    for (std::size_t i = 0; i < report.values.size(); ++i) {
        if (report.valid[i]) {
            dev = std::max(dev, std::abs(report.values[i] - report.mean));
        }
    }
    report.max_abs_deviation = dev;
    return report;
}

double ep_residual(const ScalarField& v, const ScalarField& omega_sq, double k, double x) {
    const double value = v(x);
    if (std::abs(value) <= kZeroEps) {
        throw DomainError("ep_residual: v vanishes at x");
    }
    const double second = derivative([&v](double t) { return v(t); }, x, 2);
    return second + omega_sq(x) * value + k / (value * value * value);
}

}  // namespace dfib
