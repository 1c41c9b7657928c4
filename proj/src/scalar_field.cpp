#include "dfib/scalar_field.hpp"

#include <cmath>
#include <cstdio>

#include "dfib/numerics.hpp"

namespace dfib {

double ScalarField::operator()(double x) const {
    if (!eval_) {
        throw EvaluationFailure("ScalarField has no evaluator");
    }
    if (!contains(x)) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "x = %.17g outside field domain [%.17g, %.17g]", x,
                      lo_, hi_);
        throw DomainError(buf);
    }
    const double v = eval_(x);
    if (!std::isfinite(v)) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "field evaluated non-finite at x = %.17g", x);
        throw EvaluationFailure(buf);
    }
    return v;
}

double ScalarField::derivative(double x) const {
    if (deriv_) {
        if (!contains(x)) {
            throw DomainError("derivative requested outside field domain");
        }
        const double v = deriv_(x);
        if (!std::isfinite(v)) {
            throw EvaluationFailure("field derivative evaluated non-finite");
        }
        return v;
    }
    return dfib::derivative([this](double t) { return (*this)(t); }, x, 1);
}

double wronskian(const ScalarField& u1, const ScalarField& u2, double x) {
    return u1(x) * u2.derivative(x) - u1.derivative(x) * u2(x);
}

}  // namespace dfib
