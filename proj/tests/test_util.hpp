#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "infdiv/levy_models.hpp"
#include "infdiv/scalar.hpp"

namespace test_util {

template <typename Real>
double rel_err(const Real& got, const Real& want) {
  using infdiv::r_abs;
  using infdiv::to_double;
  if (want == Real(0)) return to_double(r_abs(got));
  return to_double(r_abs(got - want) / r_abs(want));
}

// One representative of every catalog family, including combinators.
inline std::vector<std::pair<std::string, infdiv::LaplaceExponentModel>> catalog() {
  using namespace infdiv;
  std::vector<std::pair<std::string, LaplaceExponentModel>> models;
  models.emplace_back("chi2", LaplaceExponentModel{ChiSquaredSum{{1.0}}});
  models.emplace_back("chi2-weighted", LaplaceExponentModel{ChiSquaredSum{{1.0, 0.5}}});
  models.emplace_back("inverse-gaussian", LaplaceExponentModel{InverseGaussian{}});
  models.emplace_back("alpha-stable-0.3", LaplaceExponentModel{AlphaStable{0.3, 1.0}});
  models.emplace_back("alpha-stable-0.7", LaplaceExponentModel{AlphaStable{0.7, 2.0}});
  models.emplace_back("stable-mix",
                      LaplaceExponentModel{StableMixtureDiscrete{{0.4, 0.8}, {0.3, 0.7}}});
  models.emplace_back("uniform-mix", LaplaceExponentModel{UniformStableMix{}});
  models.emplace_back("ou-poisson", LaplaceExponentModel{OUPoisson{1.0}});
  models.emplace_back("ou-gamma", LaplaceExponentModel{OUGamma{1.0, 1.0, 1.0}});
  models.emplace_back(
      "scaled-ig",
      LaplaceExponentModel{Scaled{
          2.0, std::make_shared<const LaplaceExponentModel>(LaplaceExponentModel{InverseGaussian{}})}});
  models.emplace_back(
      "sum", LaplaceExponentModel{SumModel{{LaplaceExponentModel{ChiSquaredSum{{0.5}}},
                                            LaplaceExponentModel{AlphaStable{0.5, 1.0}}}}});
  return models;
}

}  // namespace test_util
