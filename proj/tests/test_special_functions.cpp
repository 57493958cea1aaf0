#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "infdiv/scalar.hpp"
#include "infdiv/special_functions.hpp"
#include "test_util.hpp"

using infdiv::Extended;
using test_util::rel_err;

TEST_CASE("stirling triangle exact values") {
  infdiv::StirlingTriangle tri(6);
  CHECK(tri.get(0, 0) == 1);
  CHECK(tri.get(1, 1) == 1);
  CHECK(tri.get(2, 1) == -1);
  CHECK(tri.get(2, 2) == 1);
  CHECK(tri.get(3, 1) == 2);
  CHECK(tri.get(3, 2) == -3);
  CHECK(tri.get(3, 3) == 1);
  CHECK(tri.get(4, 1) == -6);
  CHECK(tri.get(4, 2) == 11);
  CHECK(tri.get(4, 3) == -6);
  for (int n = 1; n <= 6; ++n) {
    CHECK(tri.get(n, n) == 1);
    CHECK(tri.get(n, 0) == 0);
  }
  // entries above the diagonal are zero
  CHECK(tri.get(2, 5) == 0);
}

TEST_CASE("stirling triangle overflows gracefully at high order") {
  // every entry of row 20 is below 20! and fits in 64 bits; row 25 does not
  CHECK_NOTHROW(infdiv::StirlingTriangle(20));
  CHECK_THROWS_AS(infdiv::StirlingTriangle(25), infdiv::CapacityError);
}

TEST_CASE("stirling triangle satisfies falling-factorial identity") {
  infdiv::StirlingTriangle tri(20);
  for (double beta : {0.1, 0.5, 0.9}) {
    for (int n = 1; n <= 20; ++n) {
      double falling = 1.0;
      for (int m = 0; m < n; ++m) falling *= beta - m;
      double sum = 0.0;
      for (int m = n; m >= 1; --m) sum = sum * beta + static_cast<double>(tri.get(n, m));
      sum *= beta;  // lowest power is beta^1
      CHECK(rel_err(sum, falling) < 1e-12);
    }
  }
}

TEST_CASE("real stirling triangle matches integer one") {
  infdiv::StirlingTriangle exact(18);
  infdiv::StirlingTriangleReal<double> real_tri(18);
  for (int n = 1; n <= 18; ++n)
    for (int m = 1; m <= n; ++m)
      CHECK(rel_err(real_tri.get(n, m), static_cast<double>(exact.get(n, m))) < 1e-14);
}

TEST_CASE("pascal triangle binomials") {
  infdiv::PascalTriangle<double> p(12);
  CHECK(p.choose(5, 2) == 10.0);
  CHECK(p.choose(12, 6) == 924.0);
  CHECK(p.choose(7, 0) == 1.0);
  for (int n = 0; n <= 12; ++n) {
    double row_sum = 0.0;
    for (int j = 0; j <= n; ++j) row_sum += p.choose(n, j);
    CHECK(rel_err(row_sum, std::pow(2.0, n)) < 1e-14);
  }
}

TEST_CASE("regularized lower gamma against frozen references") {
  using infdiv::regularized_lower_gamma_int;
  // reference values computed with 60-digit arithmetic
  CHECK(rel_err(regularized_lower_gamma_int(1, 0.5), 0.39346934028736658) < 1e-14);
  CHECK(rel_err(regularized_lower_gamma_int(2, 1.0), 0.26424111765711536) < 1e-14);
  CHECK(rel_err(regularized_lower_gamma_int(5, 2.0), 0.052653017343711157) < 1e-13);
  CHECK(rel_err(regularized_lower_gamma_int(3, 10.0), 0.99723060428448842) < 1e-14);
  CHECK(rel_err(regularized_lower_gamma_int(10, 0.1), 2.5163478067703148e-17) < 1e-13);
  CHECK(regularized_lower_gamma_int(8, 100.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("regularized lower gamma basic identities") {
  using infdiv::regularized_lower_gamma_int;
  for (double b : {0.1, 1.0, 4.0, 10.0})
    CHECK(rel_err(regularized_lower_gamma_int(1, b), -std::expm1(-b)) < 1e-14);
  for (int n = 1; n <= 12; ++n) CHECK(regularized_lower_gamma_int(n, 0.0) == 0.0);
  // monotone in b, bounded by 1
  double prev = 0.0;
  for (double b = 0.5; b <= 16.0; b += 0.5) {
    double cur = regularized_lower_gamma_int(4, b);
    CHECK(cur >= prev);
    CHECK(cur <= 1.0);
    prev = cur;
  }
  CHECK_THROWS_AS(regularized_lower_gamma_int(0, 1.0), std::domain_error);
  CHECK_THROWS_AS(regularized_lower_gamma_int(3, -0.5), std::domain_error);
}

TEST_CASE("regularized lower gamma agrees with boost generic implementation") {
  using infdiv::regularized_lower_gamma_int;
  for (int n = 1; n <= 10; ++n)
    for (double b : {0.05, 0.5, 2.0, 7.0, 30.0, 120.0})
      CHECK(rel_err(regularized_lower_gamma_int(n, b),
                    boost::math::gamma_p(static_cast<double>(n), b)) < 1e-13);
}

TEST_CASE("lower incomplete gamma scales by factorial") {
  CHECK(rel_err(infdiv::lower_incomplete_gamma_int(2, 1.0), 0.26424111765711536) < 1e-14);
  CHECK(rel_err(infdiv::lower_incomplete_gamma_int(4, 2.0),
                boost::math::tgamma_lower(4.0, 2.0)) < 1e-13);
}

TEST_CASE("regularized lower gamma in extended precision") {
  Extended p = infdiv::regularized_lower_gamma_int(10, Extended("0.1"));
  CHECK(rel_err(p, Extended("2.5163478067703148e-17")) < 1e-15);
}

TEST_CASE("entire exponential integral against frozen references") {
  using infdiv::ein;
  CHECK(ein(0.0) == 0.0);
  CHECK(rel_err(ein(0.5), 0.44384207911774836) < 1e-14);
  CHECK(rel_err(ein(1.0), 0.79659959929705313) < 1e-14);
  CHECK(rel_err(ein(4.0), 1.9672893784312724) < 1e-14);
  CHECK(rel_err(ein(4.5), 2.0833664624325215) < 1e-13);
  CHECK(rel_err(ein(10.0), 2.8798049148645082) < 1e-13);
  CHECK(rel_err(ein(100.0), 5.1823858508896242) < 1e-13);
}

TEST_CASE("entire exponential integral is smooth across the series seam") {
  // the implementation switches expansions near a = 4
  double left = infdiv::ein(4.0 - 1e-9);
  double right = infdiv::ein(4.0 + 1e-9);
  CHECK(std::abs(left - right) < 1e-8);
  CHECK_THROWS_AS(infdiv::ein(-8.0), std::domain_error);
}

TEST_CASE("dilogarithm-style bracket sum against frozen references") {
  using infdiv::dilog_L2;
  CHECK(dilog_L2(1.0) == 0.0);
  CHECK(rel_err(dilog_L2(1.5), 0.44841420692364620) < 1e-14);
  // L2(2) = pi^2 / 12
  CHECK(rel_err(dilog_L2(2.0), 0.82246703342411322) < 1e-14);
  CHECK(rel_err(dilog_L2(3.0), 1.4367463668836809) < 1e-14);
  CHECK(rel_err(dilog_L2(10.0), 3.9506637782441577) < 1e-13);
  CHECK(rel_err(dilog_L2(101.0), 12.238755177314939) < 1e-13);
  CHECK(rel_err(dilog_L2(1.0 + 1e-8), 9.9999999750000001e-9) < 1e-7);
  CHECK_THROWS_AS(dilog_L2(0.5), std::domain_error);
}

TEST_CASE("dilogarithm-style bracket sum is increasing and seam-continuous") {
  double prev = 0.0;
  for (double a = 1.0; a <= 30.0; a += 0.25) {
    double cur = infdiv::dilog_L2(a);
    CHECK(cur >= prev);
    prev = cur;
  }
  // branch change where the argument ratio crosses 1 (a = 2)
  CHECK(std::abs(infdiv::dilog_L2(2.0 - 1e-9) - infdiv::dilog_L2(2.0 + 1e-9)) < 1e-8);
}

TEST_CASE("erf complement wrapper") {
  CHECK(infdiv::erf_complement(0.0) == 1.0);
  CHECK(rel_err(infdiv::erf_complement(5.0), 1.5374597944280349e-12) < 1e-13);
  CHECK(infdiv::erf_complement(30.0) >= 0.0);
  CHECK(infdiv::erf_complement(30.0) < 1e-100);
}

TEST_CASE("special functions in extended precision agree with double") {
  CHECK(rel_err(infdiv::to_double(infdiv::ein(Extended(10))), infdiv::ein(10.0)) < 1e-14);
  CHECK(rel_err(infdiv::to_double(infdiv::dilog_L2(Extended(3))), infdiv::dilog_L2(3.0)) < 1e-14);
}
