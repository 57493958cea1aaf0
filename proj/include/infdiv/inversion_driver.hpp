#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "infdiv/extrapolation.hpp"
#include "infdiv/levy_models.hpp"
#include "infdiv/post_widder.hpp"
#include "infdiv/scalar.hpp"

namespace infdiv {

template <typename Real>
struct InversionConfig {
  std::vector<int> k_schedule;  // empty -> 10, 20, ..., 10*max_points
  int max_points = is_extended_v<Real> ? 20 : 8;
  Real tolerance = Real(1e-6);
  ExtrapolationMethod method = ExtrapolationMethod::Polynomial;
  InversionTarget target = InversionTarget::Pdf;
  int derivative_order = 0;  // q for PdfDerivative
  Real tiny_threshold = Real(1e-300);
  AlphaVariant alpha_variant = AlphaVariant::RatioMinusOne;
  int extended_k_cap = 250;  // schedule extension ceiling (extended backend only)
};

template <typename Real>
InversionConfig<Real> default_inversion_config() {
  InversionConfig<Real> cfg;
  cfg.k_schedule.resize(cfg.max_points);
  for (int j = 0; j < cfg.max_points; ++j) cfg.k_schedule[j] = 10 * (j + 1);
  return cfg;
}

enum class MethodUsed { Polynomial, Rational, RationalFallbackPolynomial };

template <typename Real>
struct InversionResult {
  Real x{};
  Real value{};
  Real abs_error_estimate{};
  Real rel_error_estimate{};
  int points_used = 0;
  bool converged = false;
  bool clamped = false;
  MethodUsed method_used = MethodUsed::Polynomial;
};

namespace detail {

template <typename Real>
std::vector<int> effective_schedule(const InversionConfig<Real>& cfg) {
  std::vector<int> ks = cfg.k_schedule;
  if (ks.empty()) {
    ks.resize(cfg.max_points > 0 ? cfg.max_points : 0);
    for (size_t j = 0; j < ks.size(); ++j) ks[j] = 10 * static_cast<int>(j + 1);
  } else if (static_cast<int>(ks.size()) > cfg.max_points) {
    ks.resize(cfg.max_points);
  }
  if (!(cfg.tolerance > Real(0)))
    throw std::invalid_argument("InversionConfig: tolerance must be positive");
  if (ks.size() < 2) throw std::invalid_argument("InversionConfig: need at least two points");
  if (ks.front() < 1) throw std::invalid_argument("InversionConfig: k must be >= 1");
  for (size_t j = 0; j + 1 < ks.size(); ++j)
    if (ks[j] >= ks[j + 1])
      throw std::invalid_argument("InversionConfig: schedule must be strictly increasing");
  if (!is_extended_v<Real> && ks.back() > 100)
    throw std::invalid_argument(
        "InversionConfig: k above 100 requires the extended-precision backend");
  return ks;
}

template <typename Real>
Real pw_approximant(const PsiDerivativeTable<Real>& table, int k, const Real& x,
                    InversionTarget target, int q) {
  switch (target) {
    case InversionTarget::Pdf:
      return pw_pdf_approximant(table, k, x);
    case InversionTarget::Cdf:
      return pw_cdf_approximant(table, k, x);
    case InversionTarget::PdfDerivative:
      return pw_pdf_derivative_approximant(table, k, x, q);
  }
  throw std::logic_error("evaluate: unknown target");
}

}  // namespace detail

// Full inversion at one point: PW approximants at each k_j, incremental
// extrapolation, a-posteriori stop rule, near-zero clamping.  Non-convergence
// is reported, not thrown; the best estimate is always returned.
template <typename Real>
InversionResult<Real> evaluate(const LaplaceExponentModel& model, const Real& x,
                               const InversionConfig<Real>& cfg) {
  if (!(x > Real(0))) throw std::domain_error("evaluate: x must be positive");
  std::vector<int> schedule = detail::effective_schedule(cfg);

  std::vector<int> ks;
  std::vector<Real> pw;
  ks.reserve(schedule.size());
  pw.reserve(schedule.size());

  bool rational = cfg.method == ExtrapolationMethod::Rational;
  bool fell_back = false;
  Real current(0), previous(0);
  ErrorEstimate<Real> est;
  bool have_estimate = false;
  bool converged = false;

  for (size_t j = 0; j < schedule.size(); ++j) {
    int k = schedule[j];
    Real lambda = Real(k) / x;
    std::vector<Real> t = scaled_phi_derivatives(model, lambda, k - 1);
    Real phi_value = phi(model, lambda);
    auto table = PsiDerivativeTable<Real>::from_scaled(lambda, phi_value, t, k - 1);
    ks.push_back(k);
    pw.push_back(detail::pw_approximant(table, k, x, cfg.target, cfg.derivative_order));

    previous = current;
    if (j == 0) {
      current = pw.back();
    } else if (rational && !fell_back) {
      try {
        current = rational_extrapolate(ks, pw);
      } catch (const RationalInstabilityError&) {
        fell_back = true;
        current = polynomial_extrapolate(ks, pw);
        if (j >= 1) {
          std::vector<int> prev_ks(ks.begin(), ks.end() - 1);
          std::vector<Real> prev_pw(pw.begin(), pw.end() - 1);
          previous = prev_ks.size() == 1 ? prev_pw[0] : polynomial_extrapolate(prev_ks, prev_pw);
        }
      }
    } else {
      current = polynomial_extrapolate(ks, pw);
    }

    if (j >= 1) {
      est = error_estimate(ks.front(), ks.back(), current, previous, cfg.alpha_variant,
                           cfg.tiny_threshold);
      have_estimate = true;
      Real measure = est.relative_mode ? est.rel_estimate : est.abs_estimate;
      if (measure <= cfg.tolerance) {
        converged = true;
        break;
      }
    }

    if (j + 1 == schedule.size() && is_extended_v<Real> &&
        schedule.back() + 10 <= cfg.extended_k_cap)
      schedule.push_back(schedule.back() + 10);
  }

  InversionResult<Real> result;
  result.x = x;
  result.value = current;
  result.points_used = static_cast<int>(ks.size());
  result.converged = converged;
  result.method_used = !rational            ? MethodUsed::Polynomial
                       : fell_back          ? MethodUsed::RationalFallbackPolynomial
                                            : MethodUsed::Rational;
  if (have_estimate) {
    result.abs_error_estimate = est.abs_estimate;
    result.rel_error_estimate = est.rel_estimate;
  } else {
    result.abs_error_estimate = Real(std::numeric_limits<double>::infinity());
    result.rel_error_estimate = Real(std::numeric_limits<double>::infinity());
  }

  // Near-zero clamping: tiny sign violations inside the error bracket are
  // numerical noise; larger ones additionally void the convergence claim.
  auto clamp_to = [&](const Real& bound) {
    if (r_abs(result.value - bound) > result.abs_error_estimate) result.converged = false;
    result.value = bound;
    result.clamped = true;
  };
  if (cfg.target == InversionTarget::Pdf && result.value < Real(0)) clamp_to(Real(0));
  if (cfg.target == InversionTarget::Cdf && result.value < Real(0)) clamp_to(Real(0));
  if (cfg.target == InversionTarget::Cdf && result.value > Real(1)) clamp_to(Real(1));
  return result;
}

template <typename Real>
struct GridPoint {
  std::optional<InversionResult<Real>> result;
  std::string error;  // non-empty when this point failed
};

// Elementwise evaluate; per-point failures are captured, not fail-fast.
template <typename Real>
std::vector<GridPoint<Real>> evaluate_grid(const LaplaceExponentModel& model,
                                           const std::vector<Real>& xs,
                                           const InversionConfig<Real>& cfg) {
  std::vector<GridPoint<Real>> out(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    try {
      out[i].result = evaluate(model, xs[i], cfg);
    } catch (const std::exception& e) {
      out[i].error = e.what();
    }
  }
  return out;
}

}  // namespace infdiv
