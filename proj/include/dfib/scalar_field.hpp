#pragma once

#include <functional>
#include <limits>
#include <utility>

#include "dfib/errors.hpp"

namespace dfib {

// A real function on an interval, with an optional analytic derivative.
// When no derivative is attached, derivative() falls back to fourth-order
// central differences (see numerics.hpp for the stencil).
class ScalarField {
public:
    using Fn = std::function<double(double)>;

    ScalarField() = default;

    explicit ScalarField(Fn eval,
                         double domain_min = -std::numeric_limits<double>::infinity(),
                         double domain_max = std::numeric_limits<double>::infinity())
        : eval_(std::move(eval)), lo_(domain_min), hi_(domain_max) {}

    ScalarField(Fn eval, Fn derivative,
                double domain_min = -std::numeric_limits<double>::infinity(),
                double domain_max = std::numeric_limits<double>::infinity())
        : eval_(std::move(eval)), deriv_(std::move(derivative)), lo_(domain_min), hi_(domain_max) {}

    double domain_min() const { return lo_; }
    double domain_max() const { return hi_; }
    bool contains(double x) const { return x >= lo_ && x <= hi_; }
    bool has_analytic_derivative() const { return static_cast<bool>(deriv_); }

    // Evaluates the field; DomainError outside [domain_min, domain_max],
    // EvaluationFailure on a non-finite result.
    double operator()(double x) const;

    // Analytic derivative when attached, otherwise central differences.
    double derivative(double x) const;

private:
    Fn eval_;
    Fn deriv_;
    double lo_ = -std::numeric_limits<double>::infinity();
    double hi_ = std::numeric_limits<double>::infinity();
};

// u1*u2' - u1'*u2 at x.
double wronskian(const ScalarField& u1, const ScalarField& u2, double x);

}  // namespace dfib
