#include "dfib/darboux.hpp"

#include <cmath>
#include <vector>

#include "dfib/numerics.hpp"

namespace dfib {

DeformationParams::DeformationParams() : w_norm(golden().w_canonical) {}

void DeformationParams::validate() const {
    if (!std::isfinite(gamma) || !std::isfinite(w_norm) || !std::isfinite(k)
        || !std::isfinite(m_weight) || !std::isfinite(n_weight)) {
        throw DomainError("DeformationParams: non-finite member");
    }
    if (w_norm == 0.0) {
        throw DomainError("DeformationParams: w_norm must be nonzero");
    }
}

double riccati_residual(const ScalarField& phi, const ScalarField& f, double x,
                        RiccatiSide side) {
    const double p = phi(x);
    const double dp = phi.derivative(x);
    const double signed_dp = (side == RiccatiSide::forward) ? -dp : dp;
    return signed_dp + p * p - f(x);
}

// The engine integrates exp(-2 int phi) twice: once inside the exponent,
// once for the denominator. Both run over checkpoint lattices anchored at
// x0 so that grid sweeps pay one short quadrature increment per query
// instead of a full integral. Checkpoint values depend only on the lattice,
// never on query order, which keeps results bitwise reproducible.
struct BernoulliContext::Impl {
    ScalarField phi;
    double gamma;
    double x0;
    double tol_exp;    // per-increment tolerance for int phi
    double tol_outer;  // per-increment tolerance for int E

    static constexpr double kSpacing = 0.25;

    // exponent_pos[i] = int_{x0}^{x0 + i*kSpacing} phi, exponent_neg mirrors it.
    std::vector<double> exponent_pos{0.0};
    std::vector<double> exponent_neg{0.0};
    std::vector<double> outer_pos{0.0};
    std::vector<double> outer_neg{0.0};

    Impl(ScalarField phi_in, double gamma_in, double x0_in, double tol)
        : phi(std::move(phi_in)), gamma(gamma_in), x0(x0_in),
          tol_exp(std::max(tol * 1e-3, 1e-15)), tol_outer(std::max(tol * 1e-2, 1e-14)) {}

    double lattice_x(long i) const { return x0 + kSpacing * static_cast<double>(i); }

    double exponent_lattice(long i) {
        auto& v = (i >= 0) ? exponent_pos : exponent_neg;
        const long n = (i >= 0) ? i : -i;
        const double dir = (i >= 0) ? 1.0 : -1.0;
        while (static_cast<long>(v.size()) <= n) {
            const long j = static_cast<long>(v.size());
            const double a = x0 + dir * kSpacing * static_cast<double>(j - 1);
            const double b = x0 + dir * kSpacing * static_cast<double>(j);
            const double inc = integrate([this](double t) { return phi(t); }, a, b, tol_exp).value;
            v.push_back(v.back() + inc);
        }
        return v[static_cast<std::size_t>(n)];
    }

    double exponent_at(double s) {
        const double raw = (s - x0) / kSpacing;
        const long i = static_cast<long>(std::llround(raw));
        const double anchor = lattice_x(i);
        double val = exponent_lattice(i);
        if (s != anchor) {
            val += integrate([this](double t) { return phi(t); }, anchor, s, tol_exp).value;
        }
        return val;
    }

    double E(double s) { return std::exp(-2.0 * exponent_at(s)); }

    double outer_lattice(long i) {
        auto& v = (i >= 0) ? outer_pos : outer_neg;
        const long n = (i >= 0) ? i : -i;
        const double dir = (i >= 0) ? 1.0 : -1.0;
        while (static_cast<long>(v.size()) <= n) {
            const long j = static_cast<long>(v.size());
            const double a = x0 + dir * kSpacing * static_cast<double>(j - 1);
            const double b = x0 + dir * kSpacing * static_cast<double>(j);
            const double inc = integrate([this](double t) { return E(t); }, a, b, tol_outer).value;
            v.push_back(v.back() + inc);
        }
        return v[static_cast<std::size_t>(n)];
    }

    // gamma + int_{x0}^{x} E, anchored at the lattice point nearest x.
    double denominator(double x) {
        const double raw = (x - x0) / kSpacing;
        const long i = static_cast<long>(std::llround(raw));
        const double anchor = lattice_x(i);
        double integral = outer_lattice(i);
        if (x != anchor) {
            integral += integrate([this](double t) { return E(t); }, anchor, x, tol_outer).value;
        }
        return gamma + integral;
    }

    double bernoulli(double x) {
        const double q = denominator(x);
        // E > 0 makes the denominator monotone between x0 and x, so a sign
        // change against gamma means it crossed zero on the way.
        if (std::abs(q) <= 1e-12 || q * gamma < 0.0 || gamma == 0.0) {
            throw PoleEncountered("bernoulli denominator crossed zero between x0 and x");
        }
        return E(x) / q;
    }
};

BernoulliContext::BernoulliContext(ScalarField phi, double gamma, double x0, double tol)
    : impl_(std::make_unique<Impl>(std::move(phi), gamma, x0, tol)) {}

BernoulliContext::~BernoulliContext() = default;
BernoulliContext::BernoulliContext(BernoulliContext&&) noexcept = default;
BernoulliContext& BernoulliContext::operator=(BernoulliContext&&) noexcept = default;

double BernoulliContext::bernoulli(double x) { return impl_->bernoulli(x); }

double BernoulliContext::phi_general(double x) { return impl_->phi(x) + impl_->bernoulli(x); }

double BernoulliContext::family_potential(const ScalarField& f, double x) {
    const double inv_u = impl_->bernoulli(x);
    return f(x) + 4.0 * impl_->phi(x) * inv_u + 2.0 * inv_u * inv_u;
}

double bernoulli_term(const ScalarField& phi, double gamma, double x, double x0, double tol) {
    BernoulliContext ctx(phi, gamma, x0, tol);
    return ctx.bernoulli(x);
}

double phi_general(const ScalarField& phi, double gamma, double x, double x0, double tol) {
    return phi(x) + bernoulli_term(phi, gamma, x, x0, tol);
}

double family_potential(const ScalarField& phi, const ScalarField& f, double gamma, double x,
                        double x0, double tol) {
    const double inv_u = bernoulli_term(phi, gamma, x, x0, tol);
    return f(x) + 4.0 * phi(x) * inv_u + 2.0 * inv_u * inv_u;
}

double deformed_solution_quadrature(const ScalarField& F, double gamma_int, double x, double x0,
                                    double tol) {
    const double integral = integrate([&F](double s) {
                                const double v = F(s);
                                return v * v;
                            }, x0, x, tol).value;
    const double q = gamma_int + integral;
    if (std::abs(q) <= 1e-12 || q * gamma_int < 0.0 || gamma_int == 0.0) {
        throw PoleEncountered("deformed-solution denominator crossed zero between x0 and x");
    }
    return F(x) / q;
}

}  // namespace dfib
