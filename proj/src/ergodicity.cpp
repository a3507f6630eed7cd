#include "driftbound/ergodicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "driftbound/errors.hpp"

namespace driftbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Golden-section maximizer on [a, b]. Endpoints are never evaluated.
template <typename F>
double golden_max(F f, double a, double b, double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

struct RadiusChoice {
  double radius;
  double l_value;
  double inner_root;  // R1 at this radius
};

// Radius maximizing the inner root R1(beta, R, L(R)) over (1, R0). L blows
// up at R0 and the inner root degenerates toward 1 there, so the search is
// capped just inside R0. Unimodality is not assumed: a coarse scan localizes
// the maximum before golden-section refinement.
RadiusChoice best_radius(const DriftParams& params) {
  const double r0 = r0_bound(params);
  const double cap = r0 * (1.0 - 1e-9);
  if (!(cap > 1.0)) {
    throw DomainError("radius domain is empty: R0 is too close to 1");
  }
  auto inner_root = [&params](double radius) {
    return solve_r1(params.beta, radius, l_of_r(params, radius));
  };
  constexpr int kCoarse = 64;
  const double step = (cap - 1.0) / (kCoarse + 1);
  double best_r = 0.0;
  double best_v = -kInf;
  for (int i = 1; i <= kCoarse; ++i) {
    const double radius = 1.0 + step * i;
    const double v = inner_root(radius);
    if (v > best_v) {
      best_v = v;
      best_r = radius;
    }
  }
  const double lo = std::max(1.0, best_r - step);
  const double hi = std::min(cap, best_r + step);
  const double radius = golden_max(inner_root, lo, hi, 1e-9);
  return {radius, l_of_r(params, radius), inner_root(radius)};
}

// Unique r > 1 solving 1 + 2*beta*r = r^(1 + log(K)/log(1/lambda)), used by
// the reversible atomic radius. The exponent exceeds 1 whenever K > 1, and
// for K = 1 the condition K > lambda + 2*beta already guarantees a root.
double reversible_atomic_crossing(const DriftParams& params) {
  const double q = 1.0 + std::log(params.k_const) / std::log(1.0 / params.lambda);
  auto g = [&params, q](double r) {
    return std::pow(r, q) - 2.0 * params.beta * r - 1.0;
  };
  double lo = 1.0;
  double hi = 2.0;
  int doublings = 0;
  while (g(hi) <= 0.0) {
    hi *= 2.0;
    if (++doublings > 200) {
      throw ConvergenceError("no sign change found for the reversible atomic radius");
    }
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      return mid;
    }
    const double gm = g(mid);
    if (std::abs(gm) <= 1e-12 * (1.0 + 2.0 * params.beta * mid)) {
      return mid;
    }
    (gm > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

// The radius R2 behind the reversible-case rate.
double reversible_radius(const DriftParams& params) {
  if (params.atomic()) {
    const double inv_lambda = 1.0 / params.lambda;
    if (!(params.k_const > params.lambda + 2.0 * params.beta)) {
      return inv_lambda;
    }
    return std::min(inv_lambda, reversible_atomic_crossing(params));
  }
  const double r0 = r0_bound(params);
  if (!(l_of_r(params, r0) > 1.0 + 2.0 * params.beta * r0)) {
    return r0;
  }
  // unique r in (1, R0) with 1 + 2*beta*r = L(r); L - (1 + 2*beta*r) goes
  // from negative near 1 to positive at R0
  auto h = [&params](double r) {
    return l_of_r(params, r) - 2.0 * params.beta * r - 1.0;
  };
  double lo = 1.0;
  double hi = r0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      return mid;
    }
    const double hm = h(mid);
    if (std::isfinite(hm) &&
        std::abs(hm) <= 1e-12 * (1.0 + 2.0 * params.beta * mid)) {
      return mid;
    }
    (hm > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::pair<double, double> alpha_exponents(const DriftParams& params) {
  validate(params);
  if (params.atomic()) {
    throw DomainError("alpha exponents are defined only for beta_tilde < 1");
  }
  const double log_inv_lambda = std::log(1.0 / params.lambda);
  const double alpha1 =
      1.0 + std::log((params.k_const - params.beta_tilde) / (1.0 - params.beta)) /
                log_inv_lambda;
  double alpha2 = 0.0;
  switch (params.nu_on_c) {
    case NuOnC::ConcentratedOnC:
      alpha2 = 1.0;
      break;
    case NuOnC::VIntegralBound:
      alpha2 = 1.0 + std::log(params.k_tilde) / log_inv_lambda;
      break;
    case NuOnC::Unknown:
      alpha2 = 1.0 + std::log(params.k_const / params.beta_tilde) / log_inv_lambda;
      break;
  }
  return {alpha1, alpha2};
}

double r0_bound(const DriftParams& params) {
  const auto [alpha1, alpha2] = alpha_exponents(params);
  (void)alpha2;
  return std::min(1.0 / params.lambda,
                  std::pow(1.0 - params.beta_tilde, -1.0 / alpha1));
}

double l_of_r(const DriftParams& params, double R) {
  const auto [alpha1, alpha2] = alpha_exponents(params);
  const double r0 = r0_bound(params);
  if (!(R > 1.0 && R <= r0)) {
    throw DomainError("R must lie in (1, R0]");
  }
  const double denom = 1.0 - (1.0 - params.beta_tilde) * std::pow(R, alpha1);
  if (!(denom > 0.0)) {
    return kInf;
  }
  return params.beta_tilde * std::pow(R, alpha2) / denom;
}

double solve_r1(double beta, double R, double L) {
  if (!(beta > 0.0)) {
    throw DomainError("beta must be positive");
  }
  if (!(R > 1.0) || !std::isfinite(R)) {
    throw DomainError("R must be finite and exceed 1");
  }
  if (!(L > 1.0) || !std::isfinite(L)) {
    throw DomainError("L must be finite and exceed 1");
  }
  const double rhs = std::exp(2.0) * beta * (R - 1.0) / (8.0 * (L - 1.0));
  auto lhs = [R](double r) {
    const double lg = std::log(R / r);
    return (r - 1.0) / (r * lg * lg);
  };
  double lo = 1.0;
  double hi = R;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      // the bracket cannot shrink further in double precision; the root is
      // pinned to the last ulp even when the residual target is unreachable
      return mid;
    }
    const double fm = lhs(mid) - rhs;
    if (std::abs(fm) <= 1e-12 * rhs) {
      return mid;
    }
    (fm > 0.0 ? hi : lo) = mid;
  }
  throw ConvergenceError("radius equation residual did not reach tolerance");
}

double k1(double r, double beta, double R, double L) {
  if (!(beta > 0.0)) {
    throw DomainError("beta must be positive");
  }
  if (!(R > 1.0) || !std::isfinite(R)) {
    throw DomainError("R must be finite and exceed 1");
  }
  if (!(L > 1.0) || !std::isfinite(L)) {
    throw DomainError("L must be finite and exceed 1");
  }
  if (!(r > 1.0 && r < R)) {
    throw DomainError("r must lie in (1, R)");
  }
  const double n_ratio = (L - 1.0) / (R - 1.0);
  const double lg = std::log(R / r);
  const double tail = 8.0 * n_ratio * std::exp(-2.0) * (r - 1.0) / (r * lg * lg);
  const double denom = beta - tail;
  if (!(denom > 0.0)) {
    throw DomainError(
        "r is at or beyond the critical radius: the denominator term is nonpositive");
  }
  return (2.0 * beta + 2.0 * std::log(n_ratio) / lg - tail) / ((r - 1.0) * denom);
}

double rho(const DriftParams& params, ChainClass chain_class) {
  validate(params);
  switch (chain_class) {
    case ChainClass::General:
      if (params.atomic()) {
        return 1.0 / solve_r1(params.beta, 1.0 / params.lambda,
                              params.k_const / params.lambda);
      }
      return 1.0 / best_radius(params).inner_root;
    case ChainClass::Reversible:
      return 1.0 / reversible_radius(params);
    case ChainClass::ReversiblePositive:
      return params.atomic() ? params.lambda : 1.0 / r0_bound(params);
  }
  throw DomainError("unknown chain class");
}

double big_m(const DriftParams& params, double gamma, ChainClass chain_class) {
  validate(params);
  const double rho_val = rho(params, chain_class);
  if (!(gamma > rho_val)) {
    throw DomainError("gamma must exceed rho");
  }
  if (!(gamma < 1.0)) {
    throw DomainError("gamma must be below 1");
  }
  const double lam = params.lambda;
  const double kc = params.k_const;

  if (params.atomic()) {
    double k_sub;
    if (chain_class == ChainClass::General) {
      k_sub = k1(1.0 / gamma, params.beta, 1.0 / lam, kc / lam);
    } else {
      k_sub = 1.0 + 1.0 / (gamma - rho_val);
    }
    return std::max(lam, kc - lam / gamma) / (gamma - lam) +
           kc * (kc - lam / gamma) / (gamma * (gamma - lam)) * k_sub +
           (kc - lam / gamma) * std::max(lam, kc - lam) /
               ((gamma - lam) * (1.0 - lam)) +
           lam * (kc - 1.0) / ((gamma - lam) * (1.0 - lam));
  }

  double k_sub;
  if (chain_class == ChainClass::General) {
    const RadiusChoice rc = best_radius(params);
    k_sub = k1(1.0 / gamma, params.beta, rc.radius, rc.l_value);
  } else {
    k_sub = 1.0 + std::sqrt(params.beta_tilde) / (gamma - rho_val);
  }
  const auto [alpha1, alpha2] = alpha_exponents(params);
  const double bt = params.beta_tilde;
  const double dg = 1.0 - (1.0 - bt) * std::pow(gamma, -alpha1);
  const double t1 = std::pow(gamma, -alpha2 - 1.0) * (kc * gamma - lam) /
                    ((gamma - lam) * dg * dg) *
                    (bt * std::max(lam, kc - lam) / (1.0 - lam) +
                     (1.0 - bt) * (std::pow(gamma, -alpha1) - 1.0) /
                         (1.0 / gamma - 1.0));
  const double t2 = std::max(lam, kc - lam / gamma) / (gamma - lam);
  const double t3 = bt * std::pow(gamma, -alpha2 - 2.0) * kc *
                    (kc * gamma - lam) / ((gamma - lam) * dg * dg) * k_sub;
  const double t4 = std::pow(gamma, -alpha2) * lam * (kc - 1.0) /
                    ((1.0 - lam) * (gamma - lam) * dg);
  const double t5 = kc * (kc * gamma - lam - bt * (gamma - lam)) /
                    (gamma * gamma * (gamma - lam) * dg);
  const double t6 = (kc - lam - bt * (1.0 - lam)) /
                    ((1.0 - lam) * (1.0 - gamma)) *
                    ((std::pow(gamma, -alpha2) - 1.0) +
                     (1.0 - bt) * (std::pow(gamma, -alpha1) - 1.0) / bt);
  return t1 + t2 + t3 + t4 + t5 + t6;
}

ErgodicityCertificate certificate(const DriftParams& params, double gamma,
                                  ChainClass chain_class) {
  ErgodicityCertificate cert;
  cert.rho = rho(params, chain_class);
  cert.gamma = gamma;
  cert.m_const = big_m(params, gamma, chain_class);
  cert.chain_class = chain_class;
  cert.params = params;
  return cert;
}

}  // namespace driftbound
