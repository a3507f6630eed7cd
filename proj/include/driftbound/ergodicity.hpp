#pragma once

#include <utility>

#include "driftbound/drift_model.hpp"

namespace driftbound {

// Which operator class the chain is certified for. Reversible chains admit
// tighter constants than the general case, and reversible chains whose
// operator is positive semidefinite tighter still.
enum class ChainClass { General, Reversible, ReversiblePositive };

// A V-uniform ergodicity certificate: the V-norm distance between the n-step
// kernel and the stationary distribution is at most m_const * gamma^n.
// rho is the best rate the parameters support; gamma is the caller's choice
// in (rho, 1), traded off against m_const, which blows up as gamma
// approaches rho.
struct ErgodicityCertificate {
  double rho = 0.0;
  double gamma = 0.0;
  double m_const = 0.0;
  ChainClass chain_class = ChainClass::General;
  DriftParams params;
};

// Exponents (alpha1, alpha2) entering the nonatomic-case constants.
// alpha2 depends on what is known about nu (see NuOnC). Atomic parameter
// sets have no exponents; passing one is a DomainError.
std::pair<double, double> alpha_exponents(const DriftParams& params);

// Outer limit R0 = min{1/lambda, (1 - beta_tilde)^(-1/alpha1)} of the radius
// domain in the nonatomic case.
double r0_bound(const DriftParams& params);

// L(R) = beta_tilde * R^alpha2 / (1 - (1 - beta_tilde) * R^alpha1) for
// R in (1, R0]. Returns +infinity when the denominator is nonpositive,
// which can only happen at R = R0.
double l_of_r(const DriftParams& params, double R);

// The unique r in (1, R) with (r-1) / (r * log(R/r)^2) = e^2 * beta * (R-1)
// / (8 * (L-1)), located by bisection. The left side increases from 0 to
// +infinity across (1, R), so the root exists and the bracket never fails.
double solve_r1(double beta, double R, double L);

// K1(r, beta, R, L), finite and positive for 1 < r < R1(beta, R, L). The
// bracketed denominator term crosses zero exactly at r = R1; a nonpositive
// value is reported as a DomainError naming r as too large.
double k1(double r, double beta, double R, double L);

// Best certified geometric rate for the given parameters and chain class.
double rho(const DriftParams& params, ChainClass chain_class);

// The constant M(gamma) that pairs with a chosen rate gamma in (rho, 1).
// Evaluated term by term in the same order as the defining formulas, with
// no algebraic rearrangement, so each factor can be audited in place.
double big_m(const DriftParams& params, double gamma, ChainClass chain_class);

// Bundles rho and big_m for the given gamma.
ErgodicityCertificate certificate(const DriftParams& params, double gamma,
                                  ChainClass chain_class);

}  // namespace driftbound
