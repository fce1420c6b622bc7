#pragma once

// Seeded generators shared by the unit tests. Built independently of the zoo
// generators so the two can cross-check each other.

#include "curvlab/curvature.hpp"
#include "curvlab/exterior.hpp"
#include "curvlab/linalg.hpp"
#include "curvlab/scalar.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testing_support {

using curvlab::Rational;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin(double p = 0.5) { return uniform() < p; }
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double real(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Small rational with numerator in [-range, range] and denominator in [1, den].
  Rational rational(int range = 5, int den = 3) { return Rational(integer(-range, range), integer(1, den)); }

  template <class S>
  S scalar(int range = 5) {
    if constexpr (curvlab::ScalarTraits<S>::exact)
      return rational(range);
    else
      return real(-range, range);
  }

 private:
  std::mt19937_64 rng_;
};

template <class S>
curvlab::SymmetricTwoTensor<S> random_symmetric(Gen& gen, const curvlab::MetricFrame<S>& mf, double density = 1.0) {
  curvlab::SymmetricTwoTensor<S> t(mf);
  for (unsigned i = 0; i < mf.dim(); ++i)
    for (unsigned j = i; j < mf.dim(); ++j)
      if (gen.coin(density)) t.set(i, j, gen.scalar<S>(3));
  return t;
}

/// Sum of Kulkarni-Nomizu products S_k (x) T_k. Such sums span all algebraic
/// curvature tensors.
template <class S>
curvlab::CurvatureTensor<S> random_curvature(Gen& gen, unsigned d, unsigned terms = 3, double density = 1.0) {
  auto mf = curvlab::MetricFrame<S>::euclidean(d);
  curvlab::CurvatureTensor<S> rm(mf);
  for (unsigned k = 0; k < terms; ++k)
    rm += curvlab::kulkarni_nomizu(random_symmetric(gen, mf, density), random_symmetric(gen, mf, density));
  return rm;
}

/// Rational rotation by the Cayley transform (I - A)(I + A)^{-1}, A skew.
inline curvlab::Matrix<Rational> rational_rotation(Gen& gen, unsigned d) {
  curvlab::Matrix<Rational> a(d, d);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = i + 1; j < d; ++j) {
      a(i, j) = gen.rational(2, 3);
      a(j, i) = -a(i, j);
    }
  auto id = curvlab::Matrix<Rational>::identity(d);
  return (id - a) * curvlab::inverse(id + a);
}

inline curvlab::Matrix<double> rotation(Gen& gen, unsigned d) {
  curvlab::Matrix<double> a(d, d);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = i + 1; j < d; ++j) {
      a(i, j) = gen.real(-1, 1);
      a(j, i) = -a(i, j);
    }
  auto id = curvlab::Matrix<double>::identity(d);
  return (id - a) * curvlab::inverse(id + a);
}

}  // namespace testing_support
