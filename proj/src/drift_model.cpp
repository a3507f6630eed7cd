#include "driftbound/drift_model.hpp"

#include <cmath>

#include "driftbound/errors.hpp"

namespace driftbound {

void validate(const DriftParams& params) {
  if (!(params.beta > 0.0)) {
    throw DomainError("beta must satisfy beta > 0");
  }
  if (!(params.beta <= params.beta_tilde)) {
    throw DomainError("beta must satisfy beta <= beta_tilde");
  }
  if (!(params.beta_tilde <= 1.0)) {
    throw DomainError("beta_tilde must satisfy beta_tilde <= 1");
  }
  if (!(params.lambda > 0.0 && params.lambda < 1.0)) {
    throw DomainError("lambda must satisfy 0 < lambda < 1");
  }
  if (!(params.k_const >= 1.0)) {
    throw DomainError("k_const must satisfy k_const >= 1");
  }
  if (!(params.k_const > params.lambda)) {
    throw DomainError("k_const must satisfy k_const > lambda");
  }
  if (params.nu_on_c == NuOnC::VIntegralBound && !(params.k_tilde >= 1.0)) {
    throw DomainError("k_tilde must satisfy k_tilde >= 1");
  }
}

DriftParams transform_r(const DriftParams& params, double r) {
  validate(params);
  if (!(r >= 1.0)) {
    throw DomainError("transform exponent must satisfy r >= 1");
  }
  if (r == 1.0) {
    return params;
  }
  DriftParams out = params;
  out.lambda = std::pow(params.lambda, 1.0 / r);
  out.k_const = std::pow(params.k_const, 1.0 / r);
  return out;
}

double pi_v_bound(const DriftParams& params, double pi_c) {
  validate(params);
  if (!(pi_c > 0.0 && pi_c <= 1.0)) {
    throw DomainError("pi_c must lie in (0, 1]");
  }
  return pi_c * (params.k_const - params.lambda) / (1.0 - params.lambda);
}

namespace {

double k_p_lambda(const DriftParams& params, double p) {
  const double lam_p = std::pow(params.lambda, 1.0 / p);
  if (lam_p == 1.0) {
    throw DomainError("lambda^(1/p) rounds to 1; the norm bound is undefined");
  }
  return (std::pow(params.k_const, 1.0 / p) - lam_p) / (1.0 - lam_p);
}

}  // namespace

double fc_norm_bound(double f_p_norm, double p, const DriftParams& params) {
  return fc_norm_bound(f_p_norm, p, params, 1.0, 1.0);
}

double fc_norm_bound(double f_p_norm, double p, const DriftParams& params,
                     double b_v, double pi_c) {
  validate(params);
  if (!(f_p_norm >= 0.0)) {
    throw DomainError("f_p_norm must be nonnegative");
  }
  if (!(p >= 1.0)) {
    throw DomainError("p must satisfy p >= 1");
  }
  if (!(b_v >= 1.0)) {
    throw DomainError("b_v must satisfy b_v >= 1");
  }
  if (!(pi_c > 0.0 && pi_c <= 1.0)) {
    throw DomainError("pi_c must lie in (0, 1]");
  }
  const double root = std::pow(f_p_norm, 1.0 / p);
  const double kpl = k_p_lambda(params, p);
  const double sum = root + pi_c * kpl / std::pow(b_v, 1.0 / p);
  return sum * sum;
}

}  // namespace driftbound
