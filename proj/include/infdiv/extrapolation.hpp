#pragma once

#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "infdiv/scalar.hpp"

namespace infdiv {

enum class ExtrapolationMethod { Polynomial, Rational };

// The a-posteriori constant alpha has two published forms differing in the
// denominator: 1 + 2/(k_N/k_1 - 1) (the derivation) and 1 + 2/(k_N/k_1 + 1)
// (the algorithm listing).  RatioMinusOne is the default; both are available.
enum class AlphaVariant { RatioMinusOne, RatioPlusOne };

// Signals a Bulirsch-Stoer tableau denominator too close to zero; callers fall
// back to polynomial extrapolation.
struct RationalInstabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lagrange-at-zero weights in h = 1/k: c_i = (-1)^(N-1) k_i^(N-1)/prod_{j!=i}(k_j-k_i).
// Cached per k-schedule; the weights always sum to 1.
template <typename Real>
std::shared_ptr<const std::vector<Real>> polynomial_weights(const std::vector<int>& ks) {
  static std::mutex mutex;
  static std::map<std::vector<int>, std::shared_ptr<const std::vector<Real>>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(ks);
    if (it != cache.end()) return it->second;
  }
  const int n = static_cast<int>(ks.size());
  if (n < 1) throw std::invalid_argument("polynomial_weights: need at least one index");
  for (int i = 0; i < n; ++i) {
    if (ks[i] < 1) throw std::invalid_argument("polynomial_weights: indices must be >= 1");
    for (int j = i + 1; j < n; ++j)
      if (ks[i] == ks[j]) throw std::invalid_argument("polynomial_weights: duplicate index");
  }
  auto weights = std::make_shared<std::vector<Real>>(n);
  Real sum(0);
  for (int i = 0; i < n; ++i) {
    Real c = (n - 1) % 2 == 0 ? Real(1) : Real(-1);
    c *= r_pow(Real(ks[i]), Real(n - 1));
    for (int j = 0; j < n; ++j)
      if (j != i) c /= Real(ks[j] - ks[i]);
    (*weights)[i] = c;
    sum += c;
  }
  if (r_abs(sum - Real(1)) > Real(1e-10))
    throw std::runtime_error("polynomial_weights: weight sum deviates from 1");
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.emplace(ks, std::move(weights));
  (void)inserted;
  return it->second;
}

// P_N(0): value of the degree-(N-1) interpolant through (1/k_i, v_i) at h = 0.
template <typename Real>
Real polynomial_extrapolate(const std::vector<int>& ks, const std::vector<Real>& values) {
  if (ks.size() != values.size())
    throw std::invalid_argument("polynomial_extrapolate: size mismatch");
  auto weights = polynomial_weights<Real>(ks);
  Real acc(0);
  for (size_t i = 0; i < values.size(); ++i) acc += (*weights)[i] * values[i];
  return acc;
}

// R_N(0): Bulirsch-Stoer rational extrapolation to h = 0 with h_i = 1/k_i.
// Tableau: T^i_0 = v_i and
//   T^i_m = T^{i+1}_{m-1} + (T^{i+1}_{m-1} - T^i_{m-1}) / D,
//   D = (h_i/h_{i+m}) [1 - (T^{i+1}_{m-1} - T^i_{m-1})/(T^{i+1}_{m-1} - T^{i+1}_{m-2})] - 1,
// with T^i_{-1} = 0.  Denominators are guarded.
template <typename Real>
Real rational_extrapolate(const std::vector<int>& ks, const std::vector<Real>& values) {
  const int n = static_cast<int>(ks.size());
  if (static_cast<size_t>(n) != values.size())
    throw std::invalid_argument("rational_extrapolate: size mismatch");
  if (n < 2) throw std::invalid_argument("rational_extrapolate: need at least two points");
  for (int i = 0; i + 1 < n; ++i)
    if (ks[i] >= ks[i + 1])
      throw std::invalid_argument("rational_extrapolate: indices must increase");
  const Real eps = real_epsilon<Real>();
  std::vector<std::vector<Real>> t(n);
  t[0] = values;
  for (int m = 1; m < n; ++m) {
    t[m].resize(n - m);
    for (int i = 0; i + m < n; ++i) {
      const Real& upper = t[m - 1][i + 1];
      Real num = upper - t[m - 1][i];
      Real inner = m == 1 ? upper : upper - t[m - 2][i + 1];
      if (inner == Real(0)) {
        if (num == Real(0)) {
          t[m][i] = upper;
          continue;
        }
        throw RationalInstabilityError("rational_extrapolate: zero inner denominator");
      }
      Real ratio = Real(ks[i + m]) / Real(ks[i]);  // h_i / h_{i+m}
      Real d = ratio * (Real(1) - num / inner) - Real(1);
      Real scale = ratio * (Real(1) + r_abs(num / inner)) + Real(1);
      if (r_abs(d) <= eps * scale)
        throw RationalInstabilityError("rational_extrapolate: vanishing tableau denominator");
      t[m][i] = upper + num / d;
    }
  }
  return t[n - 1][0];
}

template <typename Real>
struct ErrorEstimate {
  Real alpha{};
  Real abs_estimate{};
  Real rel_estimate{};
  bool relative_mode = true;  // false when |current| fell below the tiny threshold
};

// A-posteriori estimate from two consecutive extrapolations: the companion
// P~ = (1+alpha) current - alpha previous approaches the limit from the other
// side, so |previous - P~| = (1+alpha)|current - previous| brackets the error.
template <typename Real>
ErrorEstimate<Real> error_estimate(int k_first, int k_newest, const Real& current,
                                   const Real& previous,
                                   AlphaVariant variant = AlphaVariant::RatioMinusOne,
                                   const Real& tiny_threshold = Real(1e-300)) {
  if (k_first < 1 || k_newest <= k_first)
    throw std::invalid_argument("error_estimate: need k_newest > k_first >= 1");
  Real ratio = Real(k_newest) / Real(k_first);
  Real alpha = variant == AlphaVariant::RatioMinusOne ? Real(1) + Real(2) / (ratio - Real(1))
                                                      : Real(1) + Real(2) / (ratio + Real(1));
  ErrorEstimate<Real> est;
  est.alpha = alpha;
  est.abs_estimate = (Real(1) + alpha) * r_abs(current - previous);
  if (r_abs(current) > tiny_threshold) {
    est.rel_estimate = est.abs_estimate / r_abs(current);
    est.relative_mode = true;
  } else {
    est.rel_estimate = Real(std::numeric_limits<double>::infinity());
    est.relative_mode = false;
  }
  return est;
}

template <typename Real>
struct ExtrapolationOutcome {
  Real value{};               // (P_N + P~_N)/2
  Real primary_estimate{};    // P_N
  Real companion{};           // P~_N
  Real alpha{};
  Real abs_error_estimate{};  // |P_N - P~_N|
  Real rel_error_estimate{};
  int points_used = 0;        // N; the outcome consumes N+1 raw approximants
};

// Builds the refined estimate from N+1 approximants: P_N over the first N,
// P_{N+1} over all, companion and bracket from the pair.
template <typename Real>
ExtrapolationOutcome<Real> refine_with_companion(
    const std::vector<int>& ks, const std::vector<Real>& values,
    ExtrapolationMethod method = ExtrapolationMethod::Polynomial,
    AlphaVariant variant = AlphaVariant::RatioMinusOne) {
  if (ks.size() != values.size())
    throw std::invalid_argument("refine_with_companion: size mismatch");
  if (ks.size() < 2)
    throw std::invalid_argument("refine_with_companion: need at least two approximants");
  auto extrap = [&](size_t count) -> Real {
    std::vector<int> ks_head(ks.begin(), ks.begin() + count);
    std::vector<Real> v_head(values.begin(), values.begin() + count);
    if (count == 1) return v_head[0];
    return method == ExtrapolationMethod::Polynomial ? polynomial_extrapolate(ks_head, v_head)
                                                     : rational_extrapolate(ks_head, v_head);
  };
  Real primary = extrap(ks.size() - 1);
  Real current = extrap(ks.size());
  ErrorEstimate<Real> est = error_estimate(ks.front(), ks.back(), current, primary, variant);
  ExtrapolationOutcome<Real> out;
  out.alpha = est.alpha;
  out.primary_estimate = primary;
  out.companion = (Real(1) + est.alpha) * current - est.alpha * primary;
  out.value = (primary + out.companion) / Real(2);
  out.abs_error_estimate = r_abs(primary - out.companion);
  out.rel_error_estimate = primary == Real(0)
                               ? Real(std::numeric_limits<double>::infinity())
                               : out.abs_error_estimate / r_abs(primary);
  out.points_used = static_cast<int>(ks.size()) - 1;
  return out;
}

}  // namespace infdiv
