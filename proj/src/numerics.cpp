#include "dfib/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace dfib {

namespace {

constexpr std::int64_t kEvalCap = 1000000;

double checked_eval(const std::function<double(double)>& f, double x) {
    const double v = f(x);
    if (!std::isfinite(v)) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "non-finite value at x = %.17g", x);
        throw EvaluationFailure(buf);
    }
    return v;
}

struct SimpsonState {
    const std::function<double(double)>* f = nullptr;
    std::int64_t evaluations = 0;
    double rel_floor = 0.0;

    double eval(double x) {
        if (++evaluations > kEvalCap) {
            throw QuadratureFailure("adaptive Simpson exceeded the evaluation cap");
        }
        return checked_eval(*f, x);
    }
};

// Classic recursion: sa/sb are the half-interval Simpson sums, whole the
// parent sum; (sa + sb - whole)/15 estimates the error of the refined value.
double adaptive_step(SimpsonState& st, double a, double b, double fa, double fm, double fb,
                     double whole, double tol, int depth, double* err_acc) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.eval(lm);
    const double frm = st.eval(rm);
    const double h6 = (b - a) / 12.0;
    const double sa = h6 * (fa + 4.0 * flm + fm);
    const double sb = h6 * (fm + 4.0 * frm + fb);
    const double err = (sa + sb - whole) / 15.0;
    const double budget = std::max(tol, st.rel_floor);
    if (depth <= 0 || std::abs(err) <= budget) {
        if (depth <= 0 && std::abs(err) > budget) {
            throw QuadratureFailure("adaptive Simpson hit maximum depth before converging");
        }
        *err_acc += std::abs(err);
        return sa + sb + err;
    }
    const double left = adaptive_step(st, a, m, fa, flm, fm, sa, tol / 2.0, depth - 1, err_acc);
    const double right = adaptive_step(st, m, b, fm, frm, fb, sb, tol / 2.0, depth - 1, err_acc);
    return left + right;
}

}  // namespace

Grid Grid::uniform(double start, double stop, int count) {
    if (count < 2) {
        throw OutOfRange("Grid::uniform needs at least two points");
    }
    Grid g;
    g.start = start;
    g.stop = stop;
    g.points.resize(static_cast<std::size_t>(count));
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i) {
        g.points[static_cast<std::size_t>(i)] = start + step * static_cast<double>(i);
    }
    g.points.back() = stop;
    return g;
}

double derivative(const std::function<double(double)>& f, double x, int order) {
    const double scale = std::max(1.0, std::abs(x));
    if (order == 1) {
        return derivative(f, x, 1, 1e-5 * scale);
    }
    if (order == 2) {
        return derivative(f, x, 2, 1e-4 * scale);
    }
    throw OutOfRange("derivative order must be 1 or 2");
}

double derivative(const std::function<double(double)>& f, double x, int order, double step) {
    if (!(step > 0.0)) {
        throw DomainError("derivative step must be positive");
    }
    const double h = step;
    if (order == 1) {
        const double v = (checked_eval(f, x - 2.0 * h) - 8.0 * checked_eval(f, x - h)
                          + 8.0 * checked_eval(f, x + h) - checked_eval(f, x + 2.0 * h))
                         / (12.0 * h);
        return v;
    }
    if (order == 2) {
        const double v = (-checked_eval(f, x - 2.0 * h) + 16.0 * checked_eval(f, x - h)
                          - 30.0 * checked_eval(f, x) + 16.0 * checked_eval(f, x + h)
                          - checked_eval(f, x + 2.0 * h))
                         / (12.0 * h * h);
        return v;
    }
    throw OutOfRange("derivative order must be 1 or 2");
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol) {
    if (!(tol > 0.0)) {
        throw DomainError("integration tolerance must be positive");
    }
    QuadratureResult res;
    if (a == b) {
        return res;
    }
    SimpsonState st;
    st.f = &f;
    const double fa = st.eval(a);
    const double m = 0.5 * (a + b);
    const double fm = st.eval(m);
    const double fb = st.eval(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    st.rel_floor = 1e-14 * std::abs(whole);
    double err_acc = 0.0;
    res.value = adaptive_step(st, a, b, fa, fm, fb, whole, tol, 48, &err_acc);
    res.abs_error_estimate = err_acc;
    res.evaluations = st.evaluations;
    return res;
}

double residual_norm(std::span<const double> values, std::span<const double> scale) {
    if (values.size() != scale.size()) {
        throw LengthMismatch("residual_norm: values and scale differ in length");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        worst = std::max(worst, std::abs(values[i]) / (1.0 + scale[i]));
    }
    return worst;
}

}  // namespace dfib
