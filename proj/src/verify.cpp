#include "dfib/verify.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include <json.hpp>

#include "dfib/constants.hpp"
#include "dfib/darboux.hpp"
#include "dfib/ermakov.hpp"
#include "dfib/fibonacci.hpp"
#include "dfib/numerics.hpp"
#include "dfib/sequences.hpp"

namespace dfib {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

std::vector<double> make_grid(double start, double stop, double step) {
    std::vector<double> g;
    for (double x = start; x <= stop + 1e-9; x += step) {
        g.push_back(x);
    }
    return g;
}

// Published reference tables (shift columns gamma = 2, 3, 4).
constexpr double kOddTable[4][3] = {
    {-0.17634, 0.209938, 0.601617},
    {0.764837, 1.86197, 3.05822},
    {-0.678174, 0.381427, 1.6148},
    {-5.63824, -5.05354, -4.37156},
};
constexpr double kEvenTable[5][3] = {
    {-1.600, -2.400, -3.200},
    {-0.972878, -1.94204, -3.00855},
    {-1.37741, -1.71251, -2.3984},
    {-4.1898, -4.14927, -4.27983},
    {-11.271, -11.1894, -11.1738},
};

// Engine anchor constants: the closed-form family index gamma maps to the
// quadrature constant that reproduces it when the Bernoulli engine is
// anchored at x0 instead of 0.
double gamma_engine(Parity p, double gamma, double x0) {
    const double pt = golden().phi_tilde;
    const double s = std::sinh(2.0 * pt * x0) / (4.0 * pt);
    if (p == Parity::odd) {
        const double ch = std::cosh(pt * x0);
        return (gamma + x0 / 2.0 + s) / (ch * ch);
    }
    const double sh = std::sinh(pt * x0);
    return (gamma - x0 / 2.0 + s) / (sh * sh);
}

// Same mapping for the direct deformed-solution quadrature, which runs on
// the normalized parity component (hence the extra 4/5).
double gamma_quadrature(Parity p, double gamma, double x0) {
    const double pt = golden().phi_tilde;
    const double s = std::sinh(2.0 * pt * x0) / (4.0 * pt);
    const double half = (p == Parity::odd) ? x0 / 2.0 : -x0 / 2.0;
    return 0.8 * (gamma + half + s);
}

struct Suite {
    VerifyLevel level;
    double w_norm;
    double x0;
    VerifyReport report;

    double step() const { return level == VerifyLevel::full ? 0.05 : 0.4; }
    std::vector<double> gammas() const {
        return level == VerifyLevel::full ? std::vector<double>{2.0, 3.0, 4.0}
                                          : std::vector<double>{2.0};
    }
    double x0_even() const {
        return (std::abs(golden().phi_tilde * x0) <= 1e-12) ? 1.0 : x0;
    }

    void add(const std::string& name, double measured, double tolerance) {
        report.checks.push_back({name, measured <= tolerance, measured, tolerance});
    }
    void add_lower_bound(const std::string& name, double measured, double bound) {
        report.checks.push_back({name, measured > bound, measured, bound});
    }
    void add_with_flag(const std::string& name, bool passed, double measured,
                       double tolerance) {
        report.checks.push_back({name, passed, measured, tolerance});
    }

    void run();
    void check_fibcore();
    void check_numerics();
    void check_darboux();
    void check_sequences();
    void check_ermakov();
};

void Suite::check_fibcore() {
    {
        std::vector<double> values;
        std::vector<double> scale;
        for (int n = 0; n <= 70; ++n) {
            const double exact = static_cast<double>(fib_discrete(n));
            values.push_back(fib_binet(n) - exact);
            scale.push_back(exact);
        }
        add("fib_binet_matches_recurrence", residual_norm(values, scale), 1e-12);
    }
    {
        std::vector<double> values;
        std::vector<double> scale;
        for (int n = 0; n <= 30; ++n) {
            const double exact = static_cast<double>(fib_discrete(n));
            values.push_back(fib_continuous(n) - exact);
            scale.push_back(exact);
        }
        add("fib_continuous_hits_integers", residual_norm(values, scale), 1e-12);
    }
    {
        const double pt2 = golden().phi_tilde * golden().phi_tilde;
        std::vector<double> values;
        std::vector<double> scale;
        for (double x : make_grid(-2.0, 8.0, step())) {
            const double d2 = derivative([](double t) { return fib_continuous(t); }, x, 2);
            const double r = fc_source_term(x);
            values.push_back(d2 - pt2 * fib_continuous(x) - r);
            scale.push_back(std::abs(r));
        }
        add("fib_continuous_source_residual", residual_norm(values, scale), 1e-6);
    }
    {
        std::vector<double> values;
        std::vector<double> scale;
        for (Parity p : {Parity::even, Parity::odd}) {
            for (double x : make_grid(-3.0, 5.0, step())) {
                const double fd =
                    derivative([p](double t) { return fib_parity(p, t); }, x, 1);
                const double exact = fib_parity_derivative(p, x, 1);
                values.push_back(fd - exact);
                scale.push_back(std::abs(exact));
            }
        }
        add("parity_derivative_consistency", residual_norm(values, scale), 1e-7);
    }
    {
        const auto& g = golden();
        double worst = std::abs(std::sinh(g.phi_tilde) - 0.5);
        worst = std::max(worst, std::abs(std::cosh(g.phi_tilde) - 0.5 * g.sqrt5));
        worst = std::max(worst, std::abs(std::tanh(g.phi_tilde) - 1.0 / g.sqrt5));
        worst = std::max(worst, std::abs(g.phi - 0.5 * (1.0 + g.sqrt5)));
        add("golden_identity_residuals", worst, 1e-14);
    }
}

void Suite::check_numerics() {
    const double parity_sq = integrate(
        [](double t) {
            const double v = fib_parity(Parity::odd, t);
            return v * v;
        }, 0.0, 1.0, 1e-12).value;
    double worst = std::abs(parity_sq - 0.86467436190347728);
    const double e1 = integrate([](double t) { return std::exp(t); }, 0.0, 1.0, 1e-12).value;
    worst = std::max(worst, std::abs(e1 - (std::exp(1.0) - 1.0)));
    add("quadrature_closed_forms", worst, 1e-12);
}

void Suite::check_darboux() {
    const double pt = golden().phi_tilde;
    const double pt2 = pt * pt;
    const ScalarField flat([pt2](double) { return pt2; }, [](double) { return 0.0; });

    {
        std::vector<double> values;
        std::vector<double> scale;
        for (Parity p : {Parity::even, Parity::odd}) {
            const ScalarField phi = log_derivative_field(p);
            for (double x : make_grid(0.2, 6.0, step())) {
                values.push_back(riccati_residual(phi, flat, x, RiccatiSide::forward));
                scale.push_back(pt2);
            }
        }
        add("riccati_forward_residual", residual_norm(values, scale), 1e-10);
    }
    {
        std::vector<double> values;
        std::vector<double> scale;
        for (Parity p : {Parity::even, Parity::odd}) {
            const ScalarField phi = log_derivative_field(p);
            const ScalarField partner(
                [p, pt, pt2](double x) {
                    const double c = (p == Parity::odd) ? 1.0 / std::cosh(pt * x)
                                                        : 1.0 / std::sinh(pt * x);
                    const double sign = (p == Parity::odd) ? -2.0 : 2.0;
                    return pt2 * (1.0 + sign * c * c);
                });
            for (double x : make_grid(0.2, 6.0, step())) {
                values.push_back(riccati_residual(phi, partner, x, RiccatiSide::partner));
                scale.push_back(pt2);
            }
        }
        add("riccati_partner_residual", residual_norm(values, scale), 1e-10);
    }
    {
        std::vector<double> values;
        std::vector<double> scale;
        for (Parity p : {Parity::even, Parity::odd}) {
            const double base = (p == Parity::odd) ? x0 : x0_even();
            for (double gamma : gammas()) {
                BernoulliContext ctx(log_derivative_field(p), gamma_engine(p, gamma, base),
                                     base, 1e-12);
                const ScalarField phi = log_derivative_field(p);
                for (double x : make_grid(0.5, 6.0, step())) {
                    const double g = ctx.bernoulli(x);
                    const double d =
                        derivative([&ctx](double t) { return ctx.bernoulli(t); }, x, 1, 1e-3);
                    values.push_back(d - (-2.0 * phi(x) * g - g * g));
                    scale.push_back(std::abs(g));
                }
            }
        }
        add("bernoulli_ode_residual", residual_norm(values, scale), 1e-6);
    }
    {
        std::vector<double> values;
        std::vector<double> scale;
        for (Parity p : {Parity::even, Parity::odd}) {
            const double base = (p == Parity::odd) ? x0 : x0_even();
            for (double gamma : gammas()) {
                BernoulliContext ctx(log_derivative_field(p), gamma_engine(p, gamma, base),
                                     base, 1e-12);
                for (double x : make_grid(0.3, 6.0, step())) {
                    const double engine = ctx.family_potential(flat, x);
                    const double closed = deformed_potential_closed(p, gamma, x);
                    values.push_back(engine - closed);
                    scale.push_back(std::abs(closed));
                }
            }
        }
        add("engine_potential_matches_closed", residual_norm(values, scale), 1e-8);
    }
    {
        std::vector<double> values;
        std::vector<double> scale;
        const double gamma = gammas().front();
        BernoulliContext ctx(log_derivative_field(Parity::odd),
                             gamma_engine(Parity::odd, gamma, x0), x0, 1e-12);
        for (double x : make_grid(0.5, 6.0, step())) {
            const double pg = ctx.phi_general(x);
            const double dpg =
                derivative([&ctx](double t) { return ctx.phi_general(t); }, x, 1, 1e-3);
            const double family = ctx.family_potential(flat, x);
            values.push_back(-dpg + pg * pg - family);
            scale.push_back(std::abs(family));
        }
        add("phi_general_solves_partner", residual_norm(values, scale), 1e-6);
    }
}

void Suite::check_sequences() {
    const auto& g = golden();
    const double pt = g.phi_tilde;
    {
        const ShiftTable t = shift_table(Parity::odd, {2.0, 3.0, 4.0}, 4, w_norm);
        double worst = 0.0;
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 3; ++c) {
                worst = std::max(worst, std::abs(t.shifts[r][c] - kOddTable[r][c]));
            }
        }
        add("published_odd_table_match", worst, 1e-3);
    }
    {
        const ShiftTable t = shift_table(Parity::even, {2.0, 3.0, 4.0}, 5, w_norm);
        double worst = 0.0;
        int worst_row = 0;
        int worst_col = 0;
        for (int r = 0; r < 5; ++r) {
            for (int c = 0; c < 3; ++c) {
                const double diff = std::abs(t.shifts[r][c] - kEvenTable[r][c]);
                if (diff > worst) {
                    worst = diff;
                    worst_row = r;
                    worst_col = c;
                }
            }
        }
        add("published_even_table_match", worst, 1e-3);
        if (worst > 1e-3) {
            report.notes.push_back(fmt(
                "published_even_table_match: the largest gap sits at position x=%.0f, "
                "gamma=%.0f", 2.0 * worst_row, 2.0 + worst_col));
            report.notes.push_back(fmt(
                "that cell computes to %.10f while the published table prints %.5f "
                "(difference %.2e); the other fourteen cells agree within 5e-5, so the "
                "printed value looks like a transcription slip",
                t.shifts[worst_row][worst_col], kEvenTable[worst_row][worst_col], worst));
        }
        double f0_worst = 0.0;
        for (int c = 0; c < 3; ++c) {
            f0_worst = std::max(f0_worst,
                                std::abs(t.shifts[0][c] - shift_even_at_zero(2.0 + c)));
        }
        add("even_table_zero_row_limit", f0_worst, 1e-9);
    }
    {
        double worst = 0.0;
        for (double gamma : gammas()) {
            worst = std::max(worst,
                             std::abs(darboux_shift(Parity::even, gamma, w_norm, 1e-7)
                                      - shift_even_at_zero(gamma, w_norm)));
        }
        add("even_shift_limit_continuity", worst, 1e-5);
    }
    {
        std::vector<double> values;
        std::vector<double> scale;
        for (Parity p : {Parity::even, Parity::odd}) {
            for (double gamma : gammas()) {
                const ScalarField pot = deformed_potential_field(p, gamma);
                for (const ScalarField& y :
                     {deformed_F_field(p, gamma), deformed_G_field(p, gamma, w_norm)}) {
                    for (double x : make_grid(0.2, 8.0, step())) {
                        const double d2 =
                            derivative([&y](double t) { return y.derivative(t); }, x, 1);
                        const double v = y(x);
                        values.push_back(d2 - pot(x) * v);
                        scale.push_back(std::abs(v));
                    }
                }
            }
        }
        add("deformed_ode_residual", residual_norm(values, scale), 1e-6);
    }
    {
        double rel_worst = 0.0;
        double mag_worst = 0.0;
        double min_abs = 1e300;
        for (Parity p : {Parity::even, Parity::odd}) {
            for (double gamma : gammas()) {
                const ScalarField fa = deformed_F_field(p, gamma);
                const ScalarField fb = deformed_G_field(p, gamma, w_norm);
                const double ref = wronskian(fa, fb, 1.0);
                for (double x : make_grid(0.5, 7.0, step())) {
                    const double w = wronskian(fa, fb, x);
                    rel_worst = std::max(rel_worst, std::abs(w - ref) / std::abs(ref));
                    mag_worst = std::max(
                        mag_worst,
                        std::abs(std::abs(w) - std::abs(w_norm)) / std::abs(w_norm));
                    min_abs = std::min(min_abs, std::abs(w));
                }
            }
        }
        add("wronskian_constant_relative", rel_worst, 1e-8);
        add("wronskian_magnitude_matches_w_norm", mag_worst, 1e-8);
        add_lower_bound("wronskian_independence_floor", min_abs, 1e-10);
    }
    {
        double literal = 0.0;
        double settled = 0.0;
        const double b_inf = g.sqrt5 * std::abs(w_norm) / (8.0 * pt * pt);
        for (Parity p : {Parity::even, Parity::odd}) {
            for (double gamma : gammas()) {
                literal = std::max(literal,
                                   std::abs(darboux_shift(p, gamma, w_norm, 15.0))
                                       / fib_parity(p, 15.0));
                settled = std::max(settled,
                                   std::abs(factor_B(p, gamma, w_norm, 15.0) - b_inf));
            }
        }
        add("deformation_fade_relative_shift", literal, 1e-2);
        if (literal > 1e-2) {
            report.notes.push_back(fmt(
                "deformation_fade_relative_shift: the relative shift at x=15 settles "
                "near %.4f because the second factor tends to %.6f rather than 1; the "
                "shift approaches a constant multiple of the base sequence instead of "
                "vanishing", literal, b_inf));
        }
        add("deformation_fade_settled_factor", settled, 1e-2);
    }
    {
        std::vector<double> values;
        std::vector<double> scale;
        const double norm = 2.0 / g.sqrt5;
        for (Parity p : {Parity::even, Parity::odd}) {
            for (double gamma : gammas()) {
                for (double x : make_grid(0.5, 6.0, step())) {
                    const double q = deformed_solution_quadrature(
                        fib_parity_field(p), gamma_quadrature(p, gamma, x0), x, x0, 1e-12);
                    const double closed = deformed_F(p, gamma, x).value;
                    values.push_back(norm * q - closed);
                    scale.push_back(std::abs(closed));
                }
            }
        }
        add("cross_engine_deformed_solution", residual_norm(values, scale), 1e-8);
        report.notes.push_back(
            "cross_engine_deformed_solution: the quadrature route runs on the "
            "normalized parity component, so its output is rescaled by 2/sqrt5 "
            "before comparison with the closed form; with the bare cosh input and "
            "the unscaled family constant the two routes coincide identically");
    }
}

void Suite::check_ermakov() {
    const auto& g = golden();
    const double pt = g.phi_tilde;
    const double w_sep = -4.0 * pt / 5.0;
    const double span_step = (level == VerifyLevel::full) ? 0.03 : 0.4;
    {
        std::vector<double> values;
        std::vector<double> scale;
        for (double k : {-1.0, -0.5}) {
            PinneyInputs in{fib_parity_field(Parity::even), fib_parity_field(Parity::odd),
                            k, w_sep};
            for (double x : make_grid(-3.0, 3.0, span_step)) {
                const double a = pinney_solution(in, x);
                const double b = v_sep(k, x);
                values.push_back(a - b);
                scale.push_back(std::abs(b));
            }
        }
        add("pinney_matches_separation_form", residual_norm(values, scale), 1e-12);
    }
    {
        const double pt2 = pt * pt;
        const ScalarField v([](double x) { return v_sep(-1.0, x); });
        const ScalarField omega([pt2](double) { return -pt2; }, [](double) { return 0.0; });
        std::vector<double> values;
        std::vector<double> scale;
        for (double x : make_grid(-3.0, 3.0, span_step)) {
            values.push_back(ep_residual(v, omega, -1.0, x));
            scale.push_back(std::abs(v(x)));
        }
        add("sep_oscillator_residual", residual_norm(values, scale), 1e-6);
    }
    {
        double worst = 0.0;
        for (const auto& mn : {std::pair{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}}) {
            for (double k : {-1.0, -0.5}) {
                PinneyInputs in{fib_parity_field(Parity::even),
                                fib_parity_field(Parity::odd), k, w_sep};
                const auto r =
                    invariant_profile(in, mn.first, mn.second, make_grid(-3.0, 3.0, span_step));
                const double denom = std::max(1.0, std::abs(r.mean));
                worst = std::max(worst, r.max_abs_deviation / denom);
                worst = std::max(worst, std::abs(r.mean - r.closed_form) / denom);
            }
        }
        add("invariant_flat_separation", worst, 1e-8);
        report.notes.push_back(
            "invariant checks use the bracket -k (u/v)^2 + (u'v - uv')^2 with no "
            "one-half prefactor; the closed form n^2 W^2 - m^2 k matches only under "
            "that convention, a halved bracket would halve it");
    }
    {
        double worst = 0.0;
        double gamma_spread = 0.0;
        const std::vector<double> gs = (level == VerifyLevel::full)
                                           ? std::vector<double>{2.0, 3.0, 4.0}
                                           : std::vector<double>{2.0, 4.0};
        for (Parity p : {Parity::even, Parity::odd}) {
            std::vector<double> means;
            double closed = 0.0;
            for (double gamma : gs) {
                PinneyInputs in{deformed_F_field(p, gamma),
                                deformed_G_field(p, gamma, w_norm), -1.0,
                                std::abs(w_norm)};
                const auto r = invariant_profile(in, 1.0, 1.0, make_grid(0.5, 6.0, step()));
                worst = std::max(worst,
                                 r.max_abs_deviation / (1.0 + std::abs(r.closed_form)));
                means.push_back(r.mean);
                closed = r.closed_form;
            }
            for (std::size_t i = 0; i + 1 < means.size(); ++i) {
                gamma_spread = std::max(gamma_spread,
                                        std::abs(means[i] - means[i + 1])
                                            / (1.0 + std::abs(closed)));
            }
        }
        add("invariant_flat_deformed", worst, 1e-8);
        add("invariant_gamma_independent", gamma_spread, 1e-8);
    }
    {
        double r_minus = 0.0;
        for (Parity p : {Parity::even, Parity::odd}) {
            const ScalarField v([p](double x) { return v_deformed(p, 2.0, -1.0, x); });
            const ScalarField omega(
                [p](double x) { return -deformed_potential_closed(p, 2.0, x); });
            std::vector<double> values;
            std::vector<double> scale;
            for (double x : make_grid(0.5, 6.0, step())) {
                values.push_back(ep_residual(v, omega, -1.0, x));
                scale.push_back(std::abs(v(x)));
            }
            r_minus = std::max(r_minus, residual_norm(values, scale));
        }
        const ScalarField v_odd(
            [](double x) { return v_deformed(Parity::odd, 2.0, -1.0, x); });
        const ScalarField omega_plus(
            [](double x) { return deformed_potential_closed(Parity::odd, 2.0, x); });
        std::vector<double> plus_values;
        std::vector<double> plus_scale;
        for (double x : make_grid(0.5, 6.0, step())) {
            plus_values.push_back(ep_residual(v_odd, omega_plus, -1.0, x));
            plus_scale.push_back(std::abs(v_odd(x)));
        }
        const double r_plus = residual_norm(plus_values, plus_scale);
        add_with_flag("nonlinear_oscillator_sign", r_minus <= 1e-6 && r_plus > 1e-6,
                      r_minus, 1e-6);
        report.notes.push_back(fmt(
            "nonlinear_oscillator_sign: v'' - omega_gamma^2 v + k v^-3 = 0 holds with "
            "residual %.2e; flipping the middle sign leaves residual %.2e, so the "
            "minus convention is the one the deformed solutions satisfy",
            r_minus, r_plus));
    }
    {
        const double limit = 2.0 / pt;  // gamma sqrt(-k) / pt at gamma=2, k=-1
        add("deformed_pinney_even_limit",
            std::abs(v_deformed(Parity::even, 2.0, -1.0, 1e-6) - limit), 1e-5);
    }
    {
        std::vector<double> values;
        std::vector<double> scale;
        for (Parity p : {Parity::even, Parity::odd}) {
            for (double x : make_grid(0.5, 6.0, step())) {
                const double a = v_deformed(p, 2.0, 0.0, x);
                const double b = std::abs(deformed_F(p, 2.0, x).value);
                values.push_back(a - b);
                scale.push_back(b);
            }
        }
        add("deformed_pinney_reduces_at_k_zero", residual_norm(values, scale), 1e-12);
    }
    report.notes.push_back(
        "even-branch engine checks anchor at x0=1 with the matching reparameterized "
        "constant, since the even logarithmic derivative diverges at the origin");
}

void Suite::run() {
    check_fibcore();
    check_numerics();
    check_darboux();
    check_sequences();
    check_ermakov();
    report.overall = true;
    for (const auto& c : report.checks) {
        report.overall = report.overall && c.passed;
    }
}

}  // namespace

VerifyReport run_verification(VerifyLevel level, double w_norm, double x0) {
    Suite suite{level, w_norm, x0, {}};
    suite.run();
    return suite.report;
}

VerifyReport run_verification(VerifyLevel level) {
    return run_verification(level, golden().w_canonical, 0.0);
}

std::string format_report(const VerifyReport& r) {
    std::string out;
    int passed = 0;
    for (const auto& c : r.checks) {
        char line[256];
        std::snprintf(line, sizeof(line), "[%s] %-40s measured=%.6e tolerance=%.6e\n",
                      c.passed ? "PASS" : "FAIL", c.name.c_str(), c.measured, c.tolerance);
        out += line;
        if (c.passed) {
            ++passed;
        }
    }
    for (const auto& n : r.notes) {
        out += "note: " + n + "\n";
    }
    char tail[128];
    std::snprintf(tail, sizeof(tail), "overall: %s (%d/%zu checks passed)\n",
                  r.overall ? "PASS" : "FAIL", passed, r.checks.size());
    out += tail;
    return out;
}

std::string to_json(const VerifyReport& r) {
    nlohmann::json j;
    auto& checks = j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json row;
        row["name"] = c.name;
        row["passed"] = c.passed;
        row["measured"] = c.measured;
        row["tolerance"] = c.tolerance;
        checks.push_back(std::move(row));
    }
    j["notes"] = r.notes;
    j["overall"] = r.overall;
    return j.dump(2) + "\n";
}

}  // namespace dfib
