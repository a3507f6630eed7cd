#pragma once

namespace driftbound {

// What is known about the minorization measure nu on the small set C. This
// selects the second exponent used by the convergence-constant machinery:
// the concentrated case gives the smallest exponent, the V-integral case an
// intermediate one, and Unknown the conservative fallback.
enum class NuOnC {
  ConcentratedOnC,  // nu(C) = 1
  VIntegralBound,   // nu(C) + integral of V over the complement of C is <= k_tilde
  Unknown,
};

// Certified drift-condition parameters for a Markov kernel P with drift
// function V >= 1 and small set C:
//
//   P(x, .) >= beta_tilde * nu(.)   for x in C,
//   PV(x)  <= lambda * V(x)         for x outside C,
//   PV(x)  <= k_const               for x in C,
//   beta_tilde * nu(C) >= beta.
//
// beta_tilde = 1 is the atomic case (the whole small set behaves as a single
// regeneration point); beta_tilde < 1 is the nonatomic case. Callers certify
// these values themselves; nothing here verifies them against a kernel.
struct DriftParams {
  double beta_tilde = 0.0;
  double lambda = 0.0;
  double k_const = 0.0;
  double beta = 0.0;
  NuOnC nu_on_c = NuOnC::Unknown;
  double k_tilde = 1.0;  // only meaningful when nu_on_c == VIntegralBound

  bool atomic() const { return beta_tilde == 1.0; }
};

// Norm information about the target function f and the drift function V.
// All entries are upper bounds except b_v, which is the infimum of V.
struct FunctionNorms {
  double f_p_norm = 1.0;    // || |f|^p ||_V
  double p = 2.0;           // moment order, >= 2 for the error bounds
  double fc_norm_2p = 1.0;  // upper bound on || |f - pi(f)|^p ||_V^(2/p)
  double pi_v = 1.0;        // upper bound on the stationary expectation of V
  double b_v = 1.0;         // inf of V, >= 1
  double pi_c = 1.0;        // upper bound on the stationary mass of C
};

// How the chain is started. min_bound is min{pi0 V, || pi0 - pi ||_V} for an
// arbitrary initial distribution pi0; v_at_x is V at a deterministic start.
struct StartSpec {
  enum class Kind { Stationary, Deterministic, GeneralInit };

  Kind kind = Kind::Stationary;
  double v_at_x = 1.0;
  double min_bound = 0.0;

  static StartSpec stationary() { return {Kind::Stationary, 1.0, 0.0}; }
  static StartSpec deterministic(double v_at_x) {
    return {Kind::Deterministic, v_at_x, 0.0};
  }
  static StartSpec general_init(double min_bound) {
    return {Kind::GeneralInit, 1.0, min_bound};
  }
};

// Throws DomainError naming the violated inequality; returns silently when
// params is a valid parameter set.
void validate(const DriftParams& params);

// The drift condition for V implies one for V^(1/r) with the same beta_tilde
// and beta and with lambda, K raised to 1/r. r = 1 returns the input
// unchanged; r < 1 is a DomainError.
DriftParams transform_r(const DriftParams& params, double r);

// Upper bound pi_c * (K - lambda) / (1 - lambda) on the stationary
// expectation of V, from integrating the drift inequality. pi_c is an upper
// bound on the stationary mass of the small set (1 when unknown).
double pi_v_bound(const DriftParams& params, double pi_c = 1.0);

// Upper bound on || |f - pi(f)|^p ||_V^(2/p) given f_p_norm = || |f|^p ||_V.
// The two-argument form is the loose bound (f_p_norm^(1/p) + K_pl)^2 with
// K_pl = (K^(1/p) - lambda^(1/p)) / (1 - lambda^(1/p)); supplying b_v and
// pi_c tightens K_pl by the factor pi_c / b_v^(1/p).
double fc_norm_bound(double f_p_norm, double p, const DriftParams& params);
double fc_norm_bound(double f_p_norm, double p, const DriftParams& params,
                     double b_v, double pi_c);

}  // namespace driftbound
