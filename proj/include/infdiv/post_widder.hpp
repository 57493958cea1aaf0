#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "infdiv/derivative_engine.hpp"
#include "infdiv/scalar.hpp"

namespace infdiv {

enum class InversionTarget { Pdf, Cdf, PdfDerivative };

template <typename Real>
struct PWSequence {
  Real x{};
  std::vector<int> indices;  // strictly increasing, k_1 >= 1
  InversionTarget target = InversionTarget::Pdf;
  int derivative_order = 0;  // q, for PdfDerivative
  std::vector<Real> approximants;
};

namespace detail {

template <typename Real>
void check_pw_inputs(const PsiDerivativeTable<Real>& table, int k, const Real& x) {
  if (k < 1) throw std::invalid_argument("post_widder: k must be >= 1");
  if (!(x > Real(0))) throw std::domain_error("post_widder: x must be positive");
  if (table.order() < k - 1)
    throw std::invalid_argument("post_widder: table order below k-1");
  Real expected = Real(k) / x;
  if (r_abs(table.lambda() - expected) > Real(1e-9) * expected)
    throw std::invalid_argument("post_widder: table was built at a different lambda than k/x");
}

}  // namespace detail

// k-th PW approximant of the PDF.  In scaled variables the textbook form
// (-1)^(k-1)/(k-1)! (k/x)^k psi^(k-1)(k/x) collapses to lambda (-1)^(k-1) s_{k-1},
// which never over/underflows since |s_{k-1}| <= 1.
template <typename Real>
Real pw_pdf_approximant(const PsiDerivativeTable<Real>& table, int k, const Real& x) {
  detail::check_pw_inputs(table, k, x);
  Real s = table.scaled(k - 1);
  return table.lambda() * (k % 2 == 1 ? s : -s);
}

// k-th PW approximant of the CDF: F_k(x) = sum_{m=0}^{k-1} (-1)^m s_m.  Every
// term is non-negative for a completely monotone psi; accumulation runs in
// increasing magnitude to limit rounding for k near 100.
template <typename Real>
Real pw_cdf_approximant(const PsiDerivativeTable<Real>& table, int k, const Real& x) {
  detail::check_pw_inputs(table, k, x);
  std::vector<Real> terms(k);
  for (int m = 0; m < k; ++m) {
    const Real& s = table.scaled(m);
    terms[m] = m % 2 == 0 ? s : -s;
  }
  std::sort(terms.begin(), terms.end(),
            [](const Real& a, const Real& b) { return r_abs(a) < r_abs(b); });
  Real acc(0);
  for (const Real& t : terms) acc += t;
  return acc;
}

// k-th PW approximant of the q-th PDF derivative, from the transform of
// lambda^q psi: (-1)^(k-1) lambda^(q+1) sum_{j=0..q^(k-1)} C(q,j) s_{k-1-j}.
template <typename Real>
Real pw_pdf_derivative_approximant(const PsiDerivativeTable<Real>& table, int k, const Real& x,
                                   int q) {
  detail::check_pw_inputs(table, k, x);
  if (q < 0) throw std::invalid_argument("post_widder: derivative order must be >= 0");
  PascalTriangle<Real> pascal(q);
  int j_max = std::min(q, k - 1);
  Real acc(0);
  for (int j = 0; j <= j_max; ++j) acc += pascal.choose(q, j) * table.scaled(k - 1 - j);
  if (k % 2 == 0) acc = -acc;
  Real lam_pow = r_pow(table.lambda(), Real(q + 1));
  return lam_pow * acc;
}

}  // namespace infdiv
