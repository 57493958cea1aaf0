#pragma once

#include <cmath>
#include <limits>
#include <type_traits>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace infdiv {

// Software extended-precision backend, ~50 significant decimal digits.
using Extended = boost::multiprecision::cpp_bin_float_50;

enum class Precision { Double, ExtendedPrec };

template <typename Real>
inline constexpr bool is_extended_v = std::numeric_limits<Real>::digits10 > 20;

template <typename Real>
constexpr Precision precision_of() {
  return is_extended_v<Real> ? Precision::ExtendedPrec : Precision::Double;
}

template <typename Real>
double to_double(const Real& x) {
  return static_cast<double>(x);
}

// Elementary functions, resolved for both double and multiprecision backends.
template <typename Real>
Real r_exp(const Real& x) {
  using std::exp;
  return exp(x);
}

template <typename Real>
Real r_log(const Real& x) {
  using std::log;
  return log(x);
}

template <typename Real>
Real r_log1p(const Real& x) {
  using std::log1p;
  return log1p(x);
}

template <typename Real>
Real r_expm1(const Real& x) {
  using std::expm1;
  return expm1(x);
}

template <typename Real>
Real r_sqrt(const Real& x) {
  using std::sqrt;
  return sqrt(x);
}

template <typename Real>
Real r_pow(const Real& base, const Real& exponent) {
  using std::pow;
  return pow(base, exponent);
}

template <typename Real>
Real r_abs(const Real& x) {
  using std::fabs;
  return fabs(x);
}

template <typename Real>
Real r_lgamma(const Real& x) {
  if constexpr (std::is_floating_point_v<Real>) {
    return std::lgamma(x);
  } else {
    return boost::math::lgamma(x);
  }
}

template <typename Real>
Real r_tgamma(const Real& x) {
  if constexpr (std::is_floating_point_v<Real>) {
    return std::tgamma(x);
  } else {
    return boost::math::tgamma(x);
  }
}

template <typename Real>
Real r_erf(const Real& x) {
  if constexpr (std::is_floating_point_v<Real>) {
    return std::erf(x);
  } else {
    return boost::math::erf(x);
  }
}

template <typename Real>
Real r_erfc(const Real& x) {
  if constexpr (std::is_floating_point_v<Real>) {
    return std::erfc(x);
  } else {
    return boost::math::erfc(x);
  }
}

template <typename Real>
Real pi_const() {
  return boost::math::constants::pi<Real>();
}

template <typename Real>
Real euler_const() {
  return boost::math::constants::euler<Real>();
}

template <typename Real>
Real real_epsilon() {
  return std::numeric_limits<Real>::epsilon();
}

}  // namespace infdiv
