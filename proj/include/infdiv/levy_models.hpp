#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "infdiv/scalar.hpp"
#include "infdiv/special_functions.hpp"

namespace infdiv {

struct LaplaceExponentModel;

// Sum of independent chi-squared(1) variables with positive weights:
// phi(lambda) = sum_i log(1 + 2 c_i lambda)/2.
struct ChiSquaredSum {
  std::vector<double> weights;
};

// phi(lambda) = sqrt(lambda); the density is the one-sided 1/2-stable law.
struct InverseGaussian {};

// Right-skewed stable subordinator scaled by c: phi(lambda) = (c lambda)^alpha.
struct AlphaStable {
  double alpha = 0.5;
  double c = 1.0;
};

// Discrete mixture of stable exponents: phi(lambda) = sum_j d_j lambda^(alpha_j).
struct StableMixtureDiscrete {
  std::vector<double> alphas;
  std::vector<double> weights;
};

// Continuous uniform mixture over the stability index:
// phi(lambda) = (lambda - 1)/log(lambda), equal to 1 at lambda = 1.
struct UniformStableMix {};

// Poisson integral of exp(-s/eta) over Lebesgue measure: phi(lambda) = eta Ein(lambda).
struct OUPoisson {
  double eta = 1.0;
};

// Gamma-process integral of exp(-s/eta): phi(lambda) = eta kappa L2(1 + lambda theta).
struct OUGamma {
  double eta = 1.0;
  double kappa = 1.0;
  double theta = 1.0;
};

// The law of c * X for an inner model X: phi(lambda) = phi_inner(c lambda).
struct Scaled {
  double c = 1.0;
  std::shared_ptr<const LaplaceExponentModel> inner;
};

// Independent sum: exponents add.
struct SumModel {
  std::vector<LaplaceExponentModel> members;
};

struct QuadratureConfig {
  double relative_tolerance = 1e-8;  // must lie in (0, 1e-4]
  int max_subdivisions = 512;        // >= 16; adaptive levels = log2 of this
  double tail_split = 1.0;           // split point of (0, inf) for the two integrators
};

// User-supplied Levy density u -> Pi'(u); all exponent derivatives obtained by
// adaptive quadrature in double precision.
struct CustomLevyDensity {
  std::function<double(double)> density;
  QuadratureConfig quadrature;
};

struct LaplaceExponentModel {
  using Variant = std::variant<ChiSquaredSum, InverseGaussian, AlphaStable, StableMixtureDiscrete,
                               UniformStableMix, OUPoisson, OUGamma, Scaled, SumModel,
                               CustomLevyDensity>;
  Variant v;
};

inline bool operator==(const LaplaceExponentModel& a, const LaplaceExponentModel& b);

inline bool operator==(const ChiSquaredSum& a, const ChiSquaredSum& b) {
  return a.weights == b.weights;
}
inline bool operator==(const InverseGaussian&, const InverseGaussian&) { return true; }
inline bool operator==(const AlphaStable& a, const AlphaStable& b) {
  return a.alpha == b.alpha && a.c == b.c;
}
inline bool operator==(const StableMixtureDiscrete& a, const StableMixtureDiscrete& b) {
  return a.alphas == b.alphas && a.weights == b.weights;
}
inline bool operator==(const UniformStableMix&, const UniformStableMix&) { return true; }
inline bool operator==(const OUPoisson& a, const OUPoisson& b) { return a.eta == b.eta; }
inline bool operator==(const OUGamma& a, const OUGamma& b) {
  return a.eta == b.eta && a.kappa == b.kappa && a.theta == b.theta;
}
inline bool operator==(const Scaled& a, const Scaled& b) {
  return a.c == b.c && a.inner && b.inner && *a.inner == *b.inner;
}
inline bool operator==(const SumModel& a, const SumModel& b) { return a.members == b.members; }
inline bool operator==(const CustomLevyDensity&, const CustomLevyDensity&) { return false; }

inline bool operator==(const LaplaceExponentModel& a, const LaplaceExponentModel& b) {
  return a.v == b.v;
}

// Raised when adaptive quadrature cannot reach the requested tolerance;
// carries the best available estimate.
struct IntegrationError : std::runtime_error {
  IntegrationError(const std::string& msg, double partial)
      : std::runtime_error(msg), partial_estimate(partial) {}
  double partial_estimate;
};

namespace detail {

inline double quad_split_integrate(const std::function<double(double)>& f,
                                   const QuadratureConfig& cfg, const char* what) {
  if (!(cfg.relative_tolerance > 0 && cfg.relative_tolerance <= 1e-4))
    throw std::invalid_argument("QuadratureConfig: relative_tolerance must be in (0, 1e-4]");
  if (cfg.max_subdivisions < 16)
    throw std::invalid_argument("QuadratureConfig: max_subdivisions must be >= 16");
  size_t levels = 4;
  while ((size_t{1} << levels) < static_cast<size_t>(cfg.max_subdivisions)) ++levels;
  double tol = cfg.relative_tolerance;
  double total = 0, err_head = 0, err_tail = 0, l1 = 0;
  try {
    boost::math::quadrature::tanh_sinh<double> head(levels);
    total += head.integrate(f, 0.0, cfg.tail_split, tol, &err_head, &l1);
    boost::math::quadrature::exp_sinh<double> tail(levels);
    auto shifted = [&](double v) { return f(cfg.tail_split + v); };
    total += tail.integrate(shifted, tol, &err_tail, &l1);
  } catch (const std::exception& e) {
    throw IntegrationError(std::string(what) + ": quadrature failed: " + e.what(), total);
  }
  double err = err_head + err_tail;
  if (!(total == total) || (std::fabs(total) > 0 && err > 10 * tol * std::fabs(total) &&
                            err > std::numeric_limits<double>::min()))
    throw IntegrationError(std::string(what) + ": quadrature did not reach tolerance", total);
  return total;
}

}  // namespace detail

// Parameter checks plus normalization (nested Scaled collapsed into one).
inline LaplaceExponentModel validate(const LaplaceExponentModel& model) {
  return std::visit(
      [&](const auto& m) -> LaplaceExponentModel {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ChiSquaredSum>) {
          if (m.weights.empty()) throw std::invalid_argument("chi2: weights must be non-empty");
          for (double w : m.weights)
            if (!(w > 0)) throw std::invalid_argument("chi2: weights must be positive");
          return LaplaceExponentModel{m};
        } else if constexpr (std::is_same_v<T, AlphaStable>) {
          if (!(m.alpha > 0 && m.alpha < 1))
            throw std::invalid_argument("alpha-stable: index outside (0,1)");
          if (!(m.c > 0)) throw std::invalid_argument("alpha-stable: scale c must be positive");
          return LaplaceExponentModel{m};
        } else if constexpr (std::is_same_v<T, StableMixtureDiscrete>) {
          if (m.alphas.empty() || m.alphas.size() != m.weights.size())
            throw std::invalid_argument("stable-mix: alphas and weights must match and be non-empty");
          double total = 0;
          for (size_t j = 0; j < m.alphas.size(); ++j) {
            if (!(m.alphas[j] > 0 && m.alphas[j] < 1))
              throw std::invalid_argument("stable-mix: index outside (0,1)");
            if (!(m.weights[j] >= 0))
              throw std::invalid_argument("stable-mix: weights must be non-negative");
            total += m.weights[j];
          }
          if (std::fabs(total - 1.0) > 1e-12)
            throw std::invalid_argument("stable-mix: weights must sum to 1");
          return LaplaceExponentModel{m};
        } else if constexpr (std::is_same_v<T, OUPoisson>) {
          if (!(m.eta > 0)) throw std::invalid_argument("ou-poisson: eta must be positive");
          return LaplaceExponentModel{m};
        } else if constexpr (std::is_same_v<T, OUGamma>) {
          if (!(m.eta > 0)) throw std::invalid_argument("ou-gamma: eta must be positive");
          if (!(m.kappa > 0)) throw std::invalid_argument("ou-gamma: kappa must be positive");
          if (!(m.theta > 0)) throw std::invalid_argument("ou-gamma: theta must be positive");
          return LaplaceExponentModel{m};
        } else if constexpr (std::is_same_v<T, Scaled>) {
          if (!(m.c > 0)) throw std::invalid_argument("scaled: factor must be positive");
          if (!m.inner) throw std::invalid_argument("scaled: missing inner model");
          LaplaceExponentModel inner = validate(*m.inner);
          if (auto* nested = std::get_if<Scaled>(&inner.v)) {
            Scaled collapsed{m.c * nested->c, nested->inner};
            return LaplaceExponentModel{collapsed};
          }
          return LaplaceExponentModel{
              Scaled{m.c, std::make_shared<const LaplaceExponentModel>(std::move(inner))}};
        } else if constexpr (std::is_same_v<T, SumModel>) {
          if (m.members.empty()) throw std::invalid_argument("sum: needs at least one member");
          SumModel out;
          out.members.reserve(m.members.size());
          for (const auto& member : m.members) out.members.push_back(validate(member));
          return LaplaceExponentModel{std::move(out)};
        } else if constexpr (std::is_same_v<T, CustomLevyDensity>) {
          if (!m.density) throw std::invalid_argument("custom: missing density");
          // Integrability spot check: u * density near 0, density in the tail.
          double head = detail::quad_split_integrate(
              [&](double u) { return u < m.quadrature.tail_split ? u * m.density(u) : 0.0; },
              m.quadrature, "custom integrability (head)");
          double tail = detail::quad_split_integrate(
              [&](double u) { return u >= m.quadrature.tail_split ? m.density(u) : 0.0; },
              m.quadrature, "custom integrability (tail)");
          if (!(head >= 0) || !(tail >= 0) || !std::isfinite(head) || !std::isfinite(tail))
            throw std::invalid_argument("custom: density fails the (1 ^ u) integrability check");
          return LaplaceExponentModel{m};
        } else {
          return LaplaceExponentModel{m};
        }
      },
      model.v);
}

template <typename Real>
Real phi(const LaplaceExponentModel& model, const Real& lambda);

// Scaled exponent derivatives t_n = lambda^n phi^(n)(lambda) / n! for n = 1..n_max.
// Every catalog form below is evaluated by a cancellation-free recursion whose
// magnitudes stay O(phi), so the pipeline never needs raw phi^(n) values.
template <typename Real>
std::vector<Real> scaled_phi_derivatives(const LaplaceExponentModel& model, const Real& lambda,
                                         int n_max);

namespace detail {

template <typename Real>
Real phi_uniform_mix(const Real& lambda) {
  Real d = lambda - Real(1);
  if (d == Real(0)) return Real(1);
  return d / r_log1p(d);
}

// c_m(lambda) = integral_0^1 beta^m lambda^beta dbeta for m = 0..n_max, by
// positive-term series on both sides of lambda = 1:
//   log(lambda) >= 0:  sum_j L^j / (j! (m+j+1))
//   log(lambda) <  0:  lambda * sum_j |L|^j m! / (m+1+j)!
template <typename Real>
std::vector<Real> uniform_mix_coefficients_all(const Real& lambda, int n_max) {
  const Real eps = real_epsilon<Real>();
  Real L = r_log(lambda);
  std::vector<Real> c(n_max + 1);
  for (int m = 0; m <= n_max; ++m) {
    if (L >= Real(0)) {
      Real sum = Real(1) / Real(m + 1), term = sum;
      for (int j = 1; j < 100000; ++j) {
        term *= L / Real(j) * Real(m + j) / Real(m + j + 1);
        sum += term;
        if (term < sum * eps) break;
      }
      c[m] = sum;
    } else {
      Real A = -L;
      Real sum = Real(1) / Real(m + 1), term = sum;
      for (int j = 1; j < 100000; ++j) {
        term *= A / Real(m + 1 + j);
        sum += term;
        if (term < sum * eps) break;
      }
      c[m] = lambda * sum;
    }
  }
  return c;
}

// Scaled derivatives of the uniform stable mixture: t_n = sum_m S_n^(m) c_m / n!,
// with the 1/n! folded into the triangle so row magnitudes stay bounded.
template <typename Real>
std::vector<Real> uniform_mix_scaled_derivs(const Real& lambda, int n_max) {
  std::vector<Real> c = uniform_mix_coefficients_all(lambda, n_max);
  std::vector<Real> t(n_max);
  std::vector<Real> prev(n_max + 1, Real(0)), cur(n_max + 1, Real(0));
  prev[0] = Real(1);  // T_0^(0) = 1, T_n^(m) = S_n^(m)/n!
  for (int n = 1; n <= n_max; ++n) {
    cur[0] = Real(0);
    Real acc(0);
    for (int m = 1; m <= n; ++m) {
      cur[m] = (prev[m - 1] - Real(n - 1) * prev[m]) / Real(n);
      acc += cur[m] * c[m];
    }
    t[n - 1] = acc;
    std::swap(prev, cur);
  }
  return t;
}

// OU-Gamma bracket B_n = sum_{m>=n} y^m/m with y = lambda theta/(1+lambda theta).
// For y <= 0.9 the top order is summed directly and lower orders recovered by
// adding positive terms; for y > 0.9 the downward recursion from -log(1-y) is
// stable because B_n stays comparable to B_1.
template <typename Real>
std::vector<Real> ou_gamma_brackets(const Real& y, int n_max) {
  const Real eps = real_epsilon<Real>();
  std::vector<Real> b(n_max + 1, Real(0));
  if (y <= Real(9) / Real(10)) {
    Real term = r_pow(y, Real(n_max)) / Real(n_max);
    Real sum = term;
    for (int m = n_max + 1; m < 10000000; ++m) {
      term *= y * Real(m - 1) / Real(m);
      sum += term;
      if (term < sum * eps) break;
    }
    b[n_max] = sum;
    Real ypow = r_pow(y, Real(n_max - 1));
    for (int n = n_max - 1; n >= 1; --n) {
      b[n] = b[n + 1] + ypow / Real(n);
      ypow /= y;
    }
  } else {
    b[1] = -r_log1p(-y);
    Real ypow = y;
    for (int n = 2; n <= n_max; ++n) {
      b[n] = b[n - 1] - ypow / Real(n - 1);
      ypow *= y;
    }
  }
  return b;
}

// Poisson-kernel quadrature for user densities:
// t_n = (-1)^(n+1) integral (lambda u)^n e^(-lambda u)/n! density(u) du.
// The kernel is bounded by 1, so the integral never over/underflows.
inline std::vector<double> custom_scaled_derivs(const CustomLevyDensity& m, double lambda,
                                                int n_max) {
  std::vector<double> t(n_max);
  for (int n = 1; n <= n_max; ++n) {
    double lg = std::lgamma(double(n) + 1);
    auto integrand = [&](double u) {
      double z = lambda * u;
      if (z <= 0) return 0.0;
      double d = m.density(u);
      if (d == 0) return 0.0;
      return std::exp(double(n) * std::log(z) - z - lg) * d;
    };
    double v = quad_split_integrate(integrand, m.quadrature, "custom scaled derivatives");
    t[n - 1] = (n % 2 == 1 ? v : -v);
  }
  return t;
}

}  // namespace detail

template <typename Real>
Real phi(const LaplaceExponentModel& model, const Real& lambda) {
  if (!(lambda > Real(0))) throw std::domain_error("phi: lambda must be positive");
  return std::visit(
      [&](const auto& m) -> Real {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ChiSquaredSum>) {
          Real acc(0);
          for (double w : m.weights) acc += r_log1p(Real(2) * Real(w) * lambda) / Real(2);
          return acc;
        } else if constexpr (std::is_same_v<T, InverseGaussian>) {
          return r_sqrt(lambda);
        } else if constexpr (std::is_same_v<T, AlphaStable>) {
          return r_pow(Real(m.c) * lambda, Real(m.alpha));
        } else if constexpr (std::is_same_v<T, StableMixtureDiscrete>) {
          Real acc(0);
          for (size_t j = 0; j < m.alphas.size(); ++j)
            acc += Real(m.weights[j]) * r_pow(lambda, Real(m.alphas[j]));
          return acc;
        } else if constexpr (std::is_same_v<T, UniformStableMix>) {
          return detail::phi_uniform_mix(lambda);
        } else if constexpr (std::is_same_v<T, OUPoisson>) {
          return Real(m.eta) * ein(lambda);
        } else if constexpr (std::is_same_v<T, OUGamma>) {
          return Real(m.eta) * Real(m.kappa) * dilog_L2(Real(1) + lambda * Real(m.theta));
        } else if constexpr (std::is_same_v<T, Scaled>) {
          return phi(*m.inner, Real(m.c) * lambda);
        } else if constexpr (std::is_same_v<T, SumModel>) {
          Real acc(0);
          for (const auto& member : m.members) acc += phi(member, lambda);
          return acc;
        } else {
          static_assert(std::is_same_v<T, CustomLevyDensity>);
          auto integrand = [&](double u) {
            double z = to_double(lambda) * u;
            double d = m.density(u);
            if (d == 0) return 0.0;
            return -std::expm1(-z) * d;
          };
          return Real(detail::quad_split_integrate(integrand, m.quadrature, "custom phi"));
        }
      },
      model.v);
}

template <typename Real>
std::vector<Real> scaled_phi_derivatives(const LaplaceExponentModel& model, const Real& lambda,
                                         int n_max) {
  if (!(lambda > Real(0)))
    throw std::domain_error("scaled_phi_derivatives: lambda must be positive");
  if (n_max < 0) throw std::invalid_argument("scaled_phi_derivatives: n_max must be >= 0");
  std::vector<Real> t(n_max, Real(0));
  if (n_max == 0) return t;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ChiSquaredSum>) {
          // t_n = (-1)^(n+1)/(2n) * sum_i r_i^n with r_i = c_i lambda/(1/2 + c_i lambda).
          std::vector<Real> rpow(m.weights.size());
          for (size_t i = 0; i < m.weights.size(); ++i) {
            Real cl = Real(m.weights[i]) * lambda;
            rpow[i] = cl / (Real(1) / Real(2) + cl);
          }
          std::vector<Real> r = rpow;
          for (int n = 1; n <= n_max; ++n) {
            Real acc(0);
            for (size_t i = 0; i < r.size(); ++i) {
              if (n > 1) rpow[i] *= r[i];
              acc += rpow[i];
            }
            acc /= Real(2 * n);
            t[n - 1] = (n % 2 == 1) ? acc : -acc;
          }
        } else if constexpr (std::is_same_v<T, InverseGaussian>) {
          // t_1 = sqrt(lambda)/2, t_{m+1} = -t_m (m - 1/2)/(m + 1).
          t[0] = r_sqrt(lambda) / Real(2);
          for (int n = 1; n < n_max; ++n)
            t[n] = -t[n - 1] * (Real(n) - Real(1) / Real(2)) / Real(n + 1);
        } else if constexpr (std::is_same_v<T, AlphaStable>) {
          // t_1 = alpha (c lambda)^alpha, t_{m+1} = t_m (alpha - m)/(m + 1).
          Real a(m.alpha);
          t[0] = a * r_pow(Real(m.c) * lambda, a);
          for (int n = 1; n < n_max; ++n) t[n] = t[n - 1] * (a - Real(n)) / Real(n + 1);
        } else if constexpr (std::is_same_v<T, StableMixtureDiscrete>) {
          for (size_t j = 0; j < m.alphas.size(); ++j) {
            Real a(m.alphas[j]);
            Real tj = Real(m.weights[j]) * a * r_pow(lambda, a);
            t[0] += tj;
            for (int n = 1; n < n_max; ++n) {
              tj *= (a - Real(n)) / Real(n + 1);
              t[n] += tj;
            }
          }
        } else if constexpr (std::is_same_v<T, UniformStableMix>) {
          t = detail::uniform_mix_scaled_derivs(lambda, n_max);
        } else if constexpr (std::is_same_v<T, OUPoisson>) {
          // t_n = (-1)^(n+1) eta P(n, lambda)/n, with P accumulated through the
          // Poisson tail while lambda >= n+1 and by ascending series after.
          Real q(0);  // Q(n) = 1 - P(n) = sum_{m<n} pois(m; lambda)
          Real log_lambda = r_log(lambda);
          bool tail_mode = true;
          for (int n = 1; n <= n_max; ++n) {
            Real p;
            if (tail_mode && lambda >= Real(n + 1)) {
              q += r_exp(Real(n - 1) * log_lambda - lambda - r_lgamma(Real(n)));
              p = Real(1) - q;
            } else {
              tail_mode = false;
              p = regularized_lower_gamma_int(n, lambda);
            }
            Real v = Real(m.eta) * p / Real(n);
            t[n - 1] = (n % 2 == 1) ? v : -v;
          }
        } else if constexpr (std::is_same_v<T, OUGamma>) {
          // t_n = (-1)^(n+1) eta kappa B_n / n.
          Real lt = lambda * Real(m.theta);
          Real y = lt / (Real(1) + lt);
          std::vector<Real> b = detail::ou_gamma_brackets(y, n_max);
          for (int n = 1; n <= n_max; ++n) {
            Real v = Real(m.eta) * Real(m.kappa) * b[n] / Real(n);
            t[n - 1] = (n % 2 == 1) ? v : -v;
          }
        } else if constexpr (std::is_same_v<T, Scaled>) {
          t = scaled_phi_derivatives(*m.inner, Real(m.c) * lambda, n_max);
        } else if constexpr (std::is_same_v<T, SumModel>) {
          for (const auto& member : m.members) {
            std::vector<Real> part = scaled_phi_derivatives(member, lambda, n_max);
            for (int n = 0; n < n_max; ++n) t[n] += part[n];
          }
        } else {
          static_assert(std::is_same_v<T, CustomLevyDensity>);
          std::vector<double> td = detail::custom_scaled_derivs(m, to_double(lambda), n_max);
          for (int n = 0; n < n_max; ++n) t[n] = Real(td[n]);
        }
      },
      model.v);
  return t;
}

// Plain derivatives phi^(1..n_max)(lambda) = t_n n!/lambda^n; magnitudes are the
// caller's concern (use scaled_phi_derivatives inside inversion pipelines).
template <typename Real>
std::vector<Real> phi_derivatives(const LaplaceExponentModel& model, const Real& lambda,
                                  int n_max) {
  std::vector<Real> t = scaled_phi_derivatives(model, lambda, n_max);
  Real factor(1);
  for (int n = 1; n <= n_max; ++n) {
    factor *= Real(n) / lambda;
    t[n - 1] *= factor;
  }
  return t;
}

// Exponent derivatives for a user density by direct quadrature:
// phi^(n) = (-1)^(n+1) integral u^n e^(-lambda u) density(u) du, n >= 1.
template <typename Real>
std::vector<Real> phi_derivatives_quadrature(const std::function<double(double)>& density,
                                             const QuadratureConfig& cfg, const Real& lambda,
                                             int n_max) {
  if (!(lambda > Real(0)))
    throw std::domain_error("phi_derivatives_quadrature: lambda must be positive");
  double lam = to_double(lambda);
  std::vector<Real> out(n_max);
  for (int n = 1; n <= n_max; ++n) {
    auto integrand = [&](double u) {
      double d = density(u);
      if (d == 0) return 0.0;
      return std::pow(u, double(n)) * std::exp(-lam * u) * d;
    };
    double v = detail::quad_split_integrate(integrand, cfg, "phi derivatives quadrature");
    out[n - 1] = Real((n % 2 == 1) ? v : -v);
  }
  return out;
}

// c_m(lambda) for m = 1..n_max (stable positive-term series on both branches).
template <typename Real>
std::vector<Real> uniform_mix_coefficients(const Real& lambda, int n_max) {
  if (!(lambda > Real(0)))
    throw std::domain_error("uniform_mix_coefficients: lambda must be positive");
  std::vector<Real> all = detail::uniform_mix_coefficients_all(lambda, n_max);
  return std::vector<Real>(all.begin() + 1, all.end());
}

// Truncated-series variant (18 terms), valid for |log lambda| < 1.
template <typename Real>
std::vector<Real> uniform_mix_coefficients_truncated_series(const Real& lambda, int n_max) {
  Real L = r_log(lambda);
  std::vector<Real> c(n_max);
  for (int m = 1; m <= n_max; ++m) {
    Real sum(0), lpow(1), fact(1);
    for (int j = 0; j < 18; ++j) {
      if (j > 0) {
        lpow *= L;
        fact *= Real(j);
      }
      sum += lpow / (Real(m + j + 1) * fact);
    }
    c[m - 1] = sum;
  }
  return c;
}

// Integration-by-parts recurrence c_m = (lambda - m c_{m-1})/log lambda.  Each
// step multiplies the inherited error by m/|log lambda|, so it is only sound
// for small m or |log lambda| well above 1.
template <typename Real>
std::vector<Real> uniform_mix_coefficients_recurrence(const Real& lambda, int n_max) {
  Real L = r_log(lambda);
  if (L == Real(0)) throw std::domain_error("uniform_mix_coefficients_recurrence: lambda = 1");
  std::vector<Real> c(n_max);
  Real prev = (lambda - Real(1)) / L;
  for (int m = 1; m <= n_max; ++m) {
    prev = (lambda - Real(m) * prev) / L;
    c[m - 1] = prev;
  }
  return c;
}

enum class ReferenceDistribution { ChiSquared1df, InverseGaussianRef, LevyHalfStable };

// Closed-form oracles used for validation.
template <typename Real>
Real reference_pdf(ReferenceDistribution which, const Real& x) {
  if (!(x > Real(0))) throw std::domain_error("reference_pdf: x must be positive");
  switch (which) {
    case ReferenceDistribution::ChiSquared1df:
      return r_exp(-x / Real(2)) / r_sqrt(Real(2) * pi_const<Real>() * x);
    case ReferenceDistribution::InverseGaussianRef:
    case ReferenceDistribution::LevyHalfStable:
      return r_exp(Real(-1) / (Real(4) * x)) / r_sqrt(Real(4) * pi_const<Real>() * x * x * x);
  }
  throw std::logic_error("reference_pdf: unknown distribution");
}

template <typename Real>
Real reference_cdf(ReferenceDistribution which, const Real& x) {
  if (!(x > Real(0))) throw std::domain_error("reference_cdf: x must be positive");
  switch (which) {
    case ReferenceDistribution::ChiSquared1df:
      return r_erf(r_sqrt(x / Real(2)));
    case ReferenceDistribution::InverseGaussianRef:
    case ReferenceDistribution::LevyHalfStable:
      return erf_complement(Real(1) / (Real(2) * r_sqrt(x)));
  }
  throw std::logic_error("reference_cdf: unknown distribution");
}

}  // namespace infdiv
