#pragma once

#include <memory>

#include "dfib/constants.hpp"
#include "dfib/scalar_field.hpp"

namespace dfib {

// Parameter bundle for one deformation family member.
// gamma indexes the family, w_norm scales the second solution, k is the
// nonlinear coupling, m_weight/n_weight combine the two linear solutions.
struct DeformationParams {
    double gamma = 2.0;
    double w_norm;      // defaults to golden().w_canonical
    double k = -1.0;
    double m_weight = 1.0;
    double n_weight = 0.0;

    DeformationParams();
    void validate() const;  // DomainError on non-finite members or w_norm == 0
};

enum class RiccatiSide { forward, partner };

// forward:  -phi' + phi^2 - f   (zero when phi = -F'/F and F'' = f F)
// partner:  +phi' + phi^2 - f   (zero when f is the partner potential)
double riccati_residual(const ScalarField& phi, const ScalarField& f, double x,
                        RiccatiSide side);

// The Bernoulli correction 1/u with E(s) = exp(-2 int_{x0}^{s} phi):
//   1/u = E(x) / (gamma + int_{x0}^{x} E)
// which equals d/dx log(gamma + int_{x0}^{x} E). PoleEncountered when the
// denominator reaches zero on the path from x0 to x.
double bernoulli_term(const ScalarField& phi, double gamma, double x, double x0,
                      double tol = 1e-10);

// General Riccati solution phi + 1/u.
double phi_general(const ScalarField& phi, double gamma, double x, double x0,
                   double tol = 1e-10);

// One-parameter family potential f + 4 phi/u + 2/u^2, algebraically equal
// to -phi_g' + phi_g^2.
double family_potential(const ScalarField& phi, const ScalarField& f, double gamma,
                        double x, double x0, double tol = 1e-10);

// Deformed solution by direct quadrature: F(x) / (gamma_int + int_{x0}^{x} F^2).
double deformed_solution_quadrature(const ScalarField& F, double gamma_int, double x,
                                    double x0, double tol = 1e-10);

// Shared-state evaluator for sweeping one (phi, gamma, x0) triple over a
// grid. Checkpoints both the inner exponent integral and the outer
// denominator integral, so repeated nearby evaluations cost a short
// quadrature increment instead of a fresh integral from x0.
class BernoulliContext {
public:
    BernoulliContext(ScalarField phi, double gamma, double x0, double tol = 1e-10);
    ~BernoulliContext();
    BernoulliContext(BernoulliContext&&) noexcept;
    BernoulliContext& operator=(BernoulliContext&&) noexcept;

    double bernoulli(double x);
    double phi_general(double x);
    double family_potential(const ScalarField& f, double x);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace dfib
