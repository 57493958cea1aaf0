#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "infdiv/scalar.hpp"

namespace infdiv {

// Thrown when a table cannot represent the requested order exactly.
struct CapacityError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// Stirling numbers of the first kind S_n^(m), exact 64-bit integers.
// S_n^(m) are the coefficients of prod_{m=0..n-1}(beta - m) = sum_m S_n^(m) beta^m,
// built by S_n^(m) = S_{n-1}^(m-1) - (n-1) S_{n-1}^(m).
class StirlingTriangle {
 public:
  explicit StirlingTriangle(int max_order) : max_order_(max_order) {
    if (max_order < 0) throw std::invalid_argument("StirlingTriangle: max_order must be >= 0");
    rows_.assign(max_order + 1, std::vector<std::int64_t>(max_order + 1, 0));
    rows_[0][0] = 1;
    for (int n = 1; n <= max_order; ++n) {
      for (int m = 1; m <= n; ++m) {
        std::int64_t scaled = 0;
        if (__builtin_mul_overflow(static_cast<std::int64_t>(n - 1), rows_[n - 1][m], &scaled) ||
            __builtin_sub_overflow(rows_[n - 1][m - 1], scaled, &rows_[n][m])) {
          throw CapacityError("StirlingTriangle: 64-bit overflow at order " + std::to_string(n));
        }
      }
    }
  }

  int max_order() const { return max_order_; }

  std::int64_t get(int n, int m) const {
    if (n < 0 || n > max_order_ || m < 0 || m > max_order_)
      throw std::out_of_range("StirlingTriangle: index out of range");
    return m > n ? 0 : rows_[n][m];
  }

 private:
  int max_order_;
  std::vector<std::vector<std::int64_t>> rows_;
};

// Stirling first kind in the working scalar, for orders beyond the exact
// 64-bit range.  The recursion adds same-sign terms, so relative error stays
// at a few ulps per level.
template <typename Real>
class StirlingTriangleReal {
 public:
  explicit StirlingTriangleReal(int max_order) : max_order_(max_order) {
    if (max_order < 0) throw std::invalid_argument("StirlingTriangleReal: max_order must be >= 0");
    rows_.resize(max_order + 1);
    rows_[0].assign(max_order + 1, Real(0));
    rows_[0][0] = Real(1);
    for (int n = 1; n <= max_order; ++n) {
      rows_[n].assign(max_order + 1, Real(0));
      for (int m = 1; m <= n; ++m)
        rows_[n][m] = rows_[n - 1][m - 1] - Real(n - 1) * rows_[n - 1][m];
    }
  }

  int max_order() const { return max_order_; }
  const Real& get(int n, int m) const { return rows_.at(n).at(m); }

 private:
  int max_order_;
  std::vector<std::vector<Real>> rows_;
};

// Rows of Pascal's triangle in the working scalar.
template <typename Real>
class PascalTriangle {
 public:
  explicit PascalTriangle(int max_order) : max_order_(max_order) {
    if (max_order < 0) throw std::invalid_argument("PascalTriangle: max_order must be >= 0");
    rows_.resize(max_order + 1);
    for (int n = 0; n <= max_order; ++n) {
      rows_[n].assign(n + 1, Real(1));
      for (int j = 1; j < n; ++j) rows_[n][j] = rows_[n - 1][j - 1] + rows_[n - 1][j];
    }
  }

  int max_order() const { return max_order_; }
  const Real& choose(int n, int j) const { return rows_.at(n).at(j); }
  const std::vector<Real>& row(int n) const { return rows_.at(n); }

 private:
  int max_order_;
  std::vector<std::vector<Real>> rows_;
};

// Regularized lower incomplete gamma P(n,b) = gamma(n,b)/(n-1)! for integer n >= 1.
// Two cancellation-free branches: an ascending series of positive terms for
// b < n+1, and one minus the (exact) Poisson tail sum for b >= n+1, with all
// magnitudes assembled in log space.
template <typename Real>
Real regularized_lower_gamma_int(int n, const Real& b) {
  if (n < 1) throw std::domain_error("regularized_lower_gamma_int: n must be >= 1");
  if (b < Real(0)) throw std::domain_error("regularized_lower_gamma_int: b must be >= 0");
  if (b == Real(0)) return Real(0);
  const Real eps = real_epsilon<Real>();
  if (b < Real(n + 1)) {
    Real sum(1), term(1);
    for (int j = 1; j < 100000; ++j) {
      term *= b / Real(n + j);
      sum += term;
      if (term < sum * eps) break;
    }
    return r_exp(Real(n) * r_log(b) - b - r_lgamma(Real(n + 1))) * sum;
  }
  Real q(0);
  for (int m = 0; m < n; ++m) q += r_exp(Real(m) * r_log(b) - b - r_lgamma(Real(m + 1)));
  return Real(1) - q;
}

// Lower incomplete gamma gamma(n,b) = integral_0^b z^(n-1) e^(-z) dz, integer n >= 1.
template <typename Real>
Real lower_incomplete_gamma_int(int n, const Real& b) {
  return regularized_lower_gamma_int(n, b) * r_tgamma(Real(n));
}

// Entire exponential integral Ein(a) = integral_0^a (1 - e^(-z))/z dz.
// Alternating power series for |a| <= 4; for larger positive a the identity
// Ein(a) = euler_gamma + log(a) + E1(a) with E1 evaluated by a modified-Lentz
// continued fraction.
template <typename Real>
Real ein(const Real& a) {
  if (a == Real(0)) return Real(0);
  const Real eps = real_epsilon<Real>();
  if (r_abs(a) <= Real(4)) {
    Real sum = a, term = a;
    for (int m = 2; m < 10000; ++m) {
      term *= -a * Real(m - 1) / Real(m) / Real(m);
      sum += term;
      if (r_abs(term) < r_abs(sum) * eps) break;
    }
    return sum;
  }
  if (a < Real(0)) throw std::domain_error("ein: arguments below -4 are not supported");
  // E1(a) by continued fraction: e^(-a) / (a + 1 - 1^2/(a + 3 - 2^2/(a + 5 - ...))).
  const Real tiny = std::numeric_limits<Real>::min() / eps;
  Real b = a + Real(1), c = Real(1) / tiny, d = Real(1) / b, h = d;
  for (int i = 1; i < 10000; ++i) {
    Real an = -Real(i) * Real(i);
    b += Real(2);
    d = an * d + b;
    if (r_abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (r_abs(c) < tiny) c = tiny;
    d = Real(1) / d;
    Real delta = d * c;
    h *= delta;
    if (r_abs(delta - Real(1)) < eps) break;
  }
  Real e1 = r_exp(-a) * h;
  return euler_const<Real>() + r_log(a) + e1;
}

namespace detail {

// Li2(z) = sum_{k>=1} z^k / k^2 for z in [0, 1/2].
template <typename Real>
Real dilog_series(const Real& z) {
  const Real eps = real_epsilon<Real>();
  Real sum(0), zk(1);
  for (int k = 1; k < 100000; ++k) {
    zk *= z;
    Real term = zk / (Real(k) * Real(k));
    sum += term;
    if (term < sum * eps) break;
  }
  return sum;
}

}  // namespace detail

// L2(a) = integral_1^a log(z)/(z-1) dz for a >= 1.  Equals -Li2(1-a); evaluated
// through Landen/inversion identities so every series argument stays in [0, 1/2].
template <typename Real>
Real dilog_L2(const Real& a) {
  if (a < Real(1)) throw std::domain_error("dilog_L2: argument must be >= 1");
  Real y = a - Real(1);
  if (y <= Real(1)) {
    Real log1y = r_log1p(y);
    return detail::dilog_series(y / (Real(1) + y)) + log1y * log1y / Real(2);
  }
  Real logy = r_log(y);
  Real log_ratio = r_log1p(Real(1) / y);
  return pi_const<Real>() * pi_const<Real>() / Real(6) + logy * logy / Real(2) -
         detail::dilog_series(Real(1) / (Real(1) + y)) - log_ratio * log_ratio / Real(2);
}

// Complementary error function.
template <typename Real>
Real erf_complement(const Real& z) {
  return r_erfc(z);
}

}  // namespace infdiv
