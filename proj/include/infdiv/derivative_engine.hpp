#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "infdiv/scalar.hpp"
#include "infdiv/special_functions.hpp"

namespace infdiv {

// Derivatives of psi(lambda) = e^(-phi(lambda)) up to a requested order at one
// lambda.  Storage is the scaled sequence s_j = psi^(j)(lambda) lambda^j / j!,
// which stays bounded (|s_j| <= 1 termwise in the PW pipeline) where the raw
// derivatives would over/underflow; plain values are reconstructed on demand
// through log magnitude + sign.
template <typename Real>
class PsiDerivativeTable {
 public:
  // scaled_phi holds t_1..t_n with t_n = lambda^n phi^(n)(lambda)/n!.
  static PsiDerivativeTable from_scaled(const Real& lambda, const Real& phi_value,
                                        const std::vector<Real>& scaled_phi, int order) {
    if (!(lambda > Real(0)))
      throw std::domain_error("PsiDerivativeTable: lambda must be positive");
    if (order < 0) throw std::invalid_argument("PsiDerivativeTable: order must be >= 0");
    if (static_cast<int>(scaled_phi.size()) < order)
      throw std::invalid_argument("PsiDerivativeTable: need phi derivatives up to the order");
    PsiDerivativeTable table;
    table.lambda_ = lambda;
    table.phi_ = phi_value;
    table.log_lambda_ = r_log(lambda);
    table.s_.resize(order + 1);
    table.s_[0] = r_exp(-phi_value);
    for (int j = 0; j + 1 <= order; ++j) {
      Real acc(0);
      for (int i = 0; i <= j; ++i) acc += Real(j + 1 - i) * table.s_[i] * scaled_phi[j - i];
      table.s_[j + 1] = -acc / Real(j + 1);
    }
    return table;
  }

  int order() const { return static_cast<int>(s_.size()) - 1; }
  const Real& lambda() const { return lambda_; }
  const Real& phi_value() const { return phi_; }

  // s_j = psi^(j) lambda^j / j!
  const Real& scaled(int j) const {
    check(j);
    return s_[j];
  }

  int sign(int j) const {
    check(j);
    if (s_[j] > Real(0)) return 1;
    if (s_[j] < Real(0)) return -1;
    return 0;
  }

  // log |psi^(j)(lambda)|; -inf when the derivative is exactly zero.
  Real log_abs(int j) const {
    check(j);
    if (s_[j] == Real(0)) return Real(-std::numeric_limits<double>::infinity());
    return r_log(r_abs(s_[j])) + r_lgamma(Real(j + 1)) - Real(j) * log_lambda_;
  }

  // Plain psi^(j)(lambda); may over/underflow the backend for extreme j.
  Real value(int j) const {
    check(j);
    if (j == 0) return s_[0];
    if (s_[j] == Real(0)) return Real(0);
    Real v = r_exp(log_abs(j));
    return sign(j) < 0 ? -v : v;
  }

  std::vector<Real> values() const {
    std::vector<Real> out(s_.size());
    for (int j = 0; j <= order(); ++j) out[j] = value(j);
    return out;
  }

 private:
  void check(int j) const {
    if (j < 0 || j > order())
      throw std::out_of_range("PsiDerivativeTable: derivative order out of range");
  }
  Real lambda_{};
  Real phi_{};
  Real log_lambda_{};
  std::vector<Real> s_;
};

// Builds the table from plain derivatives phi^(1..k)(lambda) via the Leibnitz
// recursion psi^(j+1) = -sum_i C(j,i) psi^(i) phi^(j+1-i), carried out in the
// equivalent scaled variables.
template <typename Real>
PsiDerivativeTable<Real> psi_derivatives_recursive(const std::vector<Real>& phi_derivs,
                                                   const Real& phi_value, const Real& lambda,
                                                   int k) {
  if (k < 0) throw std::invalid_argument("psi_derivatives_recursive: k must be >= 0");
  if (static_cast<int>(phi_derivs.size()) < k)
    throw std::invalid_argument("psi_derivatives_recursive: phi_derivs shorter than k");
  std::vector<Real> t(k);
  Real factor(1);
  for (int n = 1; n <= k; ++n) {
    factor *= lambda / Real(n);
    t[n - 1] = phi_derivs[n - 1] * factor;
  }
  return PsiDerivativeTable<Real>::from_scaled(lambda, phi_value, t, k);
}

// psi^(k) = e^(-phi) B_k(-phi', ..., -phi^(k)) by the complete Bell polynomial
// recurrence B_k = sum_i C(k-1,i) B_{k-1-i} x_{i+1}.
template <typename Real>
Real psi_derivative_bell(const std::vector<Real>& phi_derivs, const Real& phi_value, int k) {
  if (k < 1) throw std::invalid_argument("psi_derivative_bell: k must be >= 1");
  if (static_cast<int>(phi_derivs.size()) < k)
    throw std::invalid_argument("psi_derivative_bell: phi_derivs shorter than k");
  PascalTriangle<Real> pascal(k);
  std::vector<Real> bell(k + 1);
  bell[0] = Real(1);
  for (int n = 1; n <= k; ++n) {
    Real acc(0);
    for (int i = 0; i <= n - 1; ++i) acc += pascal.choose(n - 1, i) * bell[n - 1 - i] * -phi_derivs[i];
    bell[n] = acc;
  }
  return r_exp(-phi_value) * bell[k];
}

// Same quantity through the k x k determinant representation of B_k
// (diagonal x_1, subdiagonal -1, band C(k-i, j-i) x_{j-i+1} above); LU via
// Eigen.  Cross-check path only.
template <typename Real>
Real psi_derivative_bell_determinant(const std::vector<Real>& phi_derivs, const Real& phi_value,
                                     int k) {
  if (k < 1) throw std::invalid_argument("psi_derivative_bell_determinant: k must be >= 1");
  if (static_cast<int>(phi_derivs.size()) < k)
    throw std::invalid_argument("psi_derivative_bell_determinant: phi_derivs shorter than k");
  PascalTriangle<Real> pascal(k);
  using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix m = Matrix::Zero(k, k);
  for (int i = 1; i <= k; ++i) {
    m(i - 1, i - 1) = -phi_derivs[0];
    if (i + 1 <= k) m(i, i - 1) = Real(-1);
    for (int j = i + 1; j <= k; ++j)
      m(i - 1, j - 1) = pascal.choose(k - i, j - i) * -phi_derivs[j - i];
  }
  return r_exp(-phi_value) * m.determinant();
}

// Plain k-th derivative of lambda^q psi(lambda):
// sum_{j=0..q^k} C(k,j) q!/(q-j)! lambda^(q-j) psi^(k-j).
template <typename Real>
Real scaled_transform_derivatives(const PsiDerivativeTable<Real>& table, int q, int k) {
  if (q < 0) throw std::invalid_argument("scaled_transform_derivatives: q must be >= 0");
  if (k < 0 || table.order() < k)
    throw std::invalid_argument("scaled_transform_derivatives: table order below k");
  PascalTriangle<Real> pascal(k);
  const Real& lambda = table.lambda();
  int j_max = q < k ? q : k;
  Real acc(0);
  Real falling(1);                        // q!/(q-j)!
  Real lambda_pow = r_pow(lambda, Real(q));  // lambda^(q-j)
  for (int j = 0; j <= j_max; ++j) {
    if (j > 0) {
      falling *= Real(q - j + 1);
      lambda_pow /= lambda;
    }
    acc += pascal.choose(k, j) * falling * lambda_pow * table.value(k - j);
  }
  return acc;
}

}  // namespace infdiv
