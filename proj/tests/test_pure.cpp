#include "curvlab/pure.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace curvlab;
using testing_support::Gen;

namespace {

using Table = LambdaTable<Rational>;
using PV = PVector<Rational>;

Table random_table(Gen& gen, unsigned d, int range = 4) {
  Table t(d);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = i + 1; j < d; ++j) t.set(i, j, gen.rational(range, 2));
  return t;
}

// Independent matching enumerator: pair the smallest remaining index with each
// later one, product over the pairs, no memo.
Rational matching_sum(const Table& t, std::vector<unsigned> idx) {
  if (idx.empty()) return 1;
  Rational total = 0;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    std::vector<unsigned> rest;
    for (std::size_t m = 1; m < idx.size(); ++m)
      if (m != k) rest.push_back(idx[m]);
    total += t(idx[0], idx[k]) * matching_sum(t, rest);
  }
  return total;
}

std::vector<Rational> from_ints(std::initializer_list<int> v) { return std::vector<Rational>(v.begin(), v.end()); }

std::vector<Rational> grid_point(unsigned code, unsigned len) {
  std::vector<Rational> a(len);
  for (unsigned i = 0; i < len; ++i, code /= 3) a[i] = static_cast<int>(code % 3) - 1;
  return a;
}

bool is_signed_permutation_frame(const Matrix<double>& f) {
  for (std::size_t c = 0; c < f.cols(); ++c) {
    int hits = 0;
    for (std::size_t r = 0; r < f.rows(); ++r) {
      if (std::abs(std::abs(f(r, c)) - 1) < 1e-9) ++hits;
      else if (std::abs(f(r, c)) > 1e-9) return false;
    }
    if (hits != 1) return false;
  }
  return true;
}

std::vector<PV> standard_blades(unsigned d) {
  std::vector<PV> out;
  for (auto m : BladeBasis(d, 2).masks()) out.push_back(PV::blade(d, Blade(m)));
  return out;
}

// e_0 ^ e_i together with v_i ^ v_j, where v_1 = e_1 + e_2, v_2 = e_1 - e_2 and
// v_k = e_k otherwise (unnormalized: the search is scale-invariant).
template <class S>
std::vector<PVector<S>> rotated_pair_blades(unsigned d, S scale) {
  std::vector<std::vector<S>> v(d, std::vector<S>(d, S(0)));
  for (unsigned k = 0; k < d; ++k) v[k][k] = S(1);
  v[1][1] = scale, v[1][2] = scale;
  v[2][1] = scale, v[2][2] = -scale;
  std::vector<PVector<S>> out;
  std::vector<S> e0(d, S(0));
  e0[0] = S(1);
  for (unsigned i = 1; i < d; ++i) {
    std::vector<S> ei(d, S(0));
    ei[i] = S(1);
    out.push_back(wedge(PVector<S>::vector(e0), PVector<S>::vector(ei)));
  }
  for (unsigned i = 1; i < d; ++i)
    for (unsigned j = i + 1; j < d; ++j) out.push_back(wedge(PVector<S>::vector(v[i]), PVector<S>::vector(v[j])));
  return out;
}

CurvatureTensor<Rational> complex_space_form_cp2() {
  // R = (1/4)[g_XZ g_YW - g_XW g_YZ + w_XZ w_YW - w_XW w_YZ + 2 w_XY w_ZW], w(e0,e1) = w(e2,e3) = 1.
  Matrix<Rational> w(4, 4);
  w(0, 1) = 1, w(1, 0) = -1, w(2, 3) = 1, w(3, 2) = -1;
  auto g = [](unsigned a, unsigned b) { return Rational(a == b ? 1 : 0); };
  CurvatureTensor<Rational> rm(MetricFrame<Rational>::euclidean(4));
  for (unsigned x = 0; x < 4; ++x)
    for (unsigned y = x + 1; y < 4; ++y)
      for (unsigned z = 0; z < 4; ++z)
        for (unsigned v = z + 1; v < 4; ++v) {
          Rational r = g(x, z) * g(y, v) - g(x, v) * g(y, z) + w(x, z) * w(y, v) - w(x, v) * w(y, z) + 2 * w(x, y) * w(z, v);
          rm.set(x, y, z, v, r / 4);
        }
  return rm;
}

}  // namespace

TEST(Hafnian, SmallExamples) {
  Table t(4);
  t.set(0, 1, 1), t.set(0, 2, 2), t.set(0, 3, 3), t.set(1, 2, 4), t.set(1, 3, 5), t.set(2, 3, 6);
  EXPECT_EQ(hafnian(t, {0, 1, 2, 3}), 28);
  EXPECT_EQ(hafnian(t, {1, 3}), 5);
  EXPECT_EQ(hafnian(t, {}), 1);
  EXPECT_THROW(hafnian(t, {0, 1, 2}), DimensionError);
  EXPECT_THROW(hafnian(t, {0, 0}), DimensionError);
}

TEST(Hafnian, MatchesEnumerationOracle) {
  Gen gen(1);
  for (int trial = 0; trial < 100; ++trial) {
    auto t = random_table(gen, 6);
    for (unsigned size : {2u, 4u, 6u}) {
      std::vector<unsigned> idx;
      for (unsigned i = 0; i < 6; ++i) idx.push_back(i);
      for (unsigned drop = 6 - size; drop > 0; --drop) idx.erase(idx.begin() + gen.integer(0, static_cast<int>(idx.size()) - 1));
      EXPECT_EQ(hafnian(t, std::span<const unsigned>(idx)), matching_sum(t, idx));
    }
  }
}

TEST(LambdaTable, RejectsBadMatrices) {
  Matrix<Rational> m(3, 3);
  m(0, 1) = 1;
  EXPECT_THROW(Table{m}, InconsistentError);
  m(1, 0) = 1;
  EXPECT_NO_THROW(Table{m});
  m(2, 2) = 1;
  EXPECT_THROW(Table{m}, InconsistentError);
}

TEST(PureCommuteCheck, Dimension4IsThreeEquations) {
  Gen gen(2);
  for (int trial = 0; trial < 200; ++trial) {
    auto t = random_table(gen, 4, 1);
    bool expected = t(0, 1) == t(2, 3) && t(0, 2) == t(1, 3) && t(0, 3) == t(1, 2);
    auto report = pure_commute_check(t);
    EXPECT_EQ(report.pass, expected);
    EXPECT_EQ(report.pairs.size(), 3u);
  }
}

TEST(PureCommuteCheck, SignPatternsPass) {
  for (unsigned bits = 0; bits < 256; ++bits) {
    if (std::popcount(bits) % 2) continue;  // product of the signs must be +1
    Table t(8);
    for (unsigned i = 0; i < 8; ++i)
      for (unsigned j = i + 1; j < 8; ++j) t.set(i, j, ((bits >> i ^ bits >> j) & 1) ? Rational(-3) : Rational(3));
    auto report = pure_commute_check(t);
    EXPECT_TRUE(report.pass) << bits;
    EXPECT_EQ(report.pairs.size(), 35u);
  }
}

TEST(PureCommuteCheck, AdditiveTablesWithOneAndTwoNonzeros) {
  // One nonzero entry: every 4-subset hafnian vanishes, so the check passes.
  auto one = from_ints({1, 0, 0, 0, 0, 0, 0, 0});
  EXPECT_TRUE(pure_commute_check(additive_table(one)).pass);
  EXPECT_TRUE(thorpe_operator(lcf_curvature(one), 4).is_zero());
  auto report = pure_commute_check(additive_table(from_ints({1, 1, 0, 0, 0, 0, 0, 0})));
  EXPECT_FALSE(report.pass);
  ASSERT_TRUE(report.first_failure().has_value());
  EXPECT_EQ(*report.first_failure(), (std::vector<unsigned>{0, 1, 2, 3}));
  EXPECT_EQ(report.pairs.front().value, 2);
  EXPECT_EQ(report.pairs.front().complement_value, 0);
}

TEST(PureCommuteCheck, RequiresMultipleOfFour) {
  EXPECT_THROW(pure_commute_check(Table(6)), DimensionError);
}

TEST(PureCommuteCheck, WorkerCountDoesNotChangeReport) {
  Gen gen(3);
  auto t = random_table(gen, 8);
  auto one = pure_commute_check(t, kDefaultTol, 1), four = pure_commute_check(t, kDefaultTol, 4);
  ASSERT_EQ(one.pairs.size(), four.pairs.size());
  for (std::size_t k = 0; k < one.pairs.size(); ++k) {
    EXPECT_EQ(one.pairs[k].subset, four.pairs[k].subset);
    EXPECT_EQ(one.pairs[k].value, four.pairs[k].value);
  }
}

TEST(Tables, AdditiveAndMultiplicative) {
  EXPECT_EQ(additive_table(from_ints({0, 0, 0, 0})), Table(4));
  auto add = additive_table(from_ints({1, 2, 3, 4}));
  EXPECT_EQ(add(0, 1), 3);
  EXPECT_EQ(add(2, 3), 7);
  EXPECT_FALSE(pure_commute_check(add).pass);
  auto mult = multiplicative_table(from_ints({1, 1, -1, -1}));
  EXPECT_EQ(mult(0, 1), 1);
  EXPECT_EQ(mult(2, 3), 1);
  EXPECT_EQ(mult(0, 2), -1);
  EXPECT_EQ(mult(1, 3), -1);
  EXPECT_EQ(mult(0, 3), -1);
  EXPECT_EQ(mult(1, 2), -1);
  EXPECT_TRUE(pure_commute_check(mult).pass);
}

TEST(LcfCurvature, Identities) {
  auto a = from_ints({3, -1, 4, 1, -5});
  auto rm = lcf_curvature(a);
  auto dec = decompose(rm);
  EXPECT_TRUE(dec.weyl.is_zero());
  EXPECT_EQ(lambda_table(rm), additive_table(a));
  EXPECT_EQ(raise_to_lambda2(rm).matrix, raise_to_lambda2(tensor_from_table(additive_table(a))).matrix);
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = i + 1; j < 5; ++j) EXPECT_EQ(rm(i, j, i, j), -(dec.schouten(i, i) + dec.schouten(j, j)));
  EXPECT_EQ(dec.scal, -2 * Rational(4) * Rational(3 - 1 + 4 + 1 - 5));
  EXPECT_THROW(lcf_curvature(from_ints({1, 2, 3})), DimensionError);
}

TEST(LcfCurvature, ConstantInputIsSpaceForm) {
  Rational c(7, 3);
  auto rm = lcf_curvature(std::vector<Rational>(6, c / 2));
  auto g = SymmetricTwoTensor<Rational>::metric(MetricFrame<Rational>::euclidean(6));
  EXPECT_EQ(rm, (-c / 2) * kulkarni_nomizu(g, g));
  EXPECT_EQ(raise_to_lambda2(rm).matrix, c * Matrix<Rational>::identity(15));
}

TEST(ElementarySymmetric, Examples) {
  EXPECT_EQ(elementary_symmetric<Rational>(1, from_ints({5, 9})), 14);
  EXPECT_EQ(elementary_symmetric<Rational>(3, std::vector<Rational>(6, 1)), 20);
  EXPECT_EQ(elementary_symmetric<Rational>(2, from_ints({1, 2, 3, 4})), 35);
  EXPECT_EQ(elementary_symmetric<Rational>(0, from_ints({1, 2})), 1);
  EXPECT_THROW(elementary_symmetric<Rational>(3, from_ints({1, 2})), DimensionError);
}

TEST(ElementarySymmetric, DegreeThreeOfSixHasTwentyTerms) {
  // Count the monomials a_i a_j a_k, i < j < k, by enumeration.
  unsigned terms = 0;
  for (unsigned i = 0; i < 6; ++i)
    for (unsigned j = i + 1; j < 6; ++j)
      for (unsigned k = j + 1; k < 6; ++k) ++terms;
  EXPECT_EQ(terms, 20u);
  EXPECT_EQ(binomial(6, 3), terms);
}

TEST(ElementarySymmetric, MatchesSubsetEnumeration) {
  Gen gen(4);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> v(gen.integer(1, 7));
    for (auto& x : v) x = gen.rational();
    unsigned k = gen.integer(0, static_cast<int>(v.size()));
    Rational brute = 0;
    for (std::uint64_t m = 0; m < (1ull << v.size()); ++m) {
      if (static_cast<unsigned>(std::popcount(m)) != k) continue;
      Rational prod = 1;
      for (unsigned i = 0; i < v.size(); ++i)
        if (m >> i & 1u) prod *= v[i];
      brute += prod;
    }
    EXPECT_EQ(elementary_symmetric<Rational>(k, v), brute);
  }
}

TEST(LcfPartition, Examples) {
  EXPECT_TRUE(lcf_partition_check(std::vector<Rational>(8, Rational(2, 3))).pass);
  // At n = 1 only constant vectors pass: {0,2} | {1,3} compares 1 + t with -1 - t.
  Gen gen(5);
  for (int trial = 0; trial < 10; ++trial) {
    Rational t = gen.rational(9, 7);
    auto report = lcf_partition_check(std::vector<Rational>{1, -1, t, -t});
    EXPECT_FALSE(report.pass);
    EXPECT_FALSE(report.pairs[1].pass);
  }
  auto fail = lcf_partition_check(from_ints({1, 0, 0, 0}));
  EXPECT_FALSE(fail.pass);
  EXPECT_EQ(fail.pairs[0].subset, (std::vector<unsigned>{0, 1}));
  EXPECT_EQ(fail.pairs[0].value, 1);
  EXPECT_EQ(fail.pairs[0].complement_value, 0);
  EXPECT_THROW(lcf_partition_check(from_ints({1, 2, 3})), DimensionError);
}

TEST(LcfPartition, AgreesWithHafnianCriterionOnAdditiveTables) {
  Gen gen(6);
  int passes = 0;
  for (unsigned n : {1u, 2u}) {
    int trials = n == 1 ? 200 : 50;
    for (int trial = 0; trial < trials; ++trial) {
      std::vector<Rational> a(4 * n);
      int mode = trial % 3;
      for (auto& x : a) x = mode == 0 ? gen.rational() : Rational(gen.integer(-1, 1));
      if (mode == 2) {
        // Balanced construction: pair each value with its negative.
        for (unsigned i = 0; i < 2 * n; ++i) a[2 * n + i] = -a[i];
      }
      bool partition = lcf_partition_check(a).pass;
      EXPECT_EQ(pure_commute_check(additive_table(a)).pass, partition);
      passes += partition;
    }
  }
  EXPECT_GT(passes, 0);
}

TEST(PureCommuteCheck, AgreesWithMatrixCommutation) {
  Gen gen(7);
  for (unsigned d : {4u, 8u}) {
    for (int trial = 0; trial < (d == 4 ? 40 : 6); ++trial) {
      Table t(d);
      int mode = trial % 3;
      if (mode == 0) {
        t = random_table(gen, d, 2);
      } else if (mode == 1) {
        std::vector<Rational> s(d);
        for (auto& x : s) x = gen.coin() ? 1 : -1;
        if (gen.coin()) s[0] = -s[0];
        t = multiplicative_table(s);
      } else {
        std::vector<Rational> a(d);
        for (auto& x : a) x = gen.integer(-1, 1);
        t = additive_table(a);
      }
      auto op = thorpe_operator(tensor_from_table(t), d / 2);
      EXPECT_EQ(pure_commute_check(t).pass, commutes_with_star(op).commutes);
    }
  }
}

TEST(LcfZero, BiconditionalOnSmallGrids) {
  for (unsigned code = 0; code < 81; ++code) {
    auto report = additive_zero_check(grid_point(code, 4));
    EXPECT_TRUE(report.consistent()) << code;
  }
  Gen gen(8);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Rational> a(8, 0);
    unsigned nonzero = gen.integer(0, 3);
    for (unsigned k = 0; k < nonzero; ++k) a[gen.integer(0, 7)] = gen.coin() ? 1 : -1;
    auto report = additive_zero_check(a);
    EXPECT_TRUE(report.consistent());
  }
}

TEST(MultiplicativeZero, Examples) {
  auto three_zeros = multiplicative_zero_check(from_ints({1, 0, 0, 0}));
  EXPECT_EQ(three_zeros.zeros, 3u);
  EXPECT_TRUE(three_zeros.enough_zeros);
  EXPECT_TRUE(three_zeros.operator_vanishes);
  auto two_zeros = multiplicative_zero_check(from_ints({1, 1, 0, 0}));
  EXPECT_FALSE(two_zeros.operator_vanishes);
  EXPECT_FALSE(two_zeros.product_condition);
  auto all_zero = multiplicative_zero_check(from_ints({0, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_TRUE(all_zero.operator_vanishes);
  for (unsigned code = 0; code < 81; ++code)
    EXPECT_TRUE(multiplicative_zero_check(grid_point(code, 4), Rational(3)).consistent()) << code;
}

TEST(Einstein, TwoEigenvalueExamples) {
  auto balanced = einstein_two_eigenvalue<Rational>(3, -3, 4, 4, 1);
  EXPECT_TRUE(balanced.einstein);
  EXPECT_TRUE(balanced.balance);
  ASSERT_TRUE(balanced.commutes.has_value());
  EXPECT_TRUE(*balanced.commutes);
  auto uneven = einstein_two_eigenvalue<Rational>(1, -2, 5, 3, Rational(1, 2));
  EXPECT_TRUE(uneven.einstein);
  EXPECT_TRUE(uneven.balance);
  EXPECT_TRUE(einstein_two_eigenvalue<Rational>(2, 2, 3, 3, 1).einstein);
  auto generic = einstein_two_eigenvalue<Rational>(1, 2, 3, 3, 1);
  EXPECT_FALSE(generic.einstein);
  EXPECT_FALSE(generic.predicted());
}

TEST(Einstein, ComputedMatchesPredictionOnGrid) {
  for (int sp = -2; sp <= 2; ++sp)
    for (int sm = -2; sm <= 2; ++sm)
      for (unsigned pp = 0; pp <= 6; ++pp) {
        auto r = einstein_two_eigenvalue<Rational>(sp, sm, pp, 6 - pp, 1);
        EXPECT_EQ(r.einstein, r.predicted()) << sp << " " << sm << " " << pp;
      }
}

TEST(ProductSpaceForms, ParityRule) {
  EXPECT_TRUE(product_space_form_commute<Rational>(1, 1, 1));
  EXPECT_FALSE(product_space_form_commute<Rational>(1, -1, 1));
  EXPECT_TRUE(product_space_form_commute<Rational>(1, -1, 2));
  for (int c1 : {-2, -1, 1, 2})
    for (int c2 : {-2, -1, 1, 2})
      for (unsigned n : {1u, 2u})
        EXPECT_EQ(product_space_form_commute<Rational>(c1, c2, n), product_space_form_rule<Rational>(c1, c2, n));
}

TEST(StFactorization, SolvesWhenSignsOppose) {
  auto check = [](double c1, double c2) {
    auto sol = st_factorization(c1, c2);
    ASSERT_TRUE(sol.has_value());
    auto [a1, a2, b1, b2] = *sol;
    EXPECT_NEAR(a1 * b1, c1, 1e-12);
    EXPECT_NEAR(a2 * b2, c2, 1e-12);
    EXPECT_NEAR(a1 * b2 + a2 * b1, 0.0, 1e-12);
  };
  check(1, -1);
  check(-3, 0.5);
  check(0, 5);
  check(2, 0);
  check(0, 0);
  auto unit = st_factorization(1, -1);
  EXPECT_EQ(*unit, (std::array<double, 4>{1, 1, 1, -1}));
  EXPECT_EQ((*st_factorization(0, 5))[0], 0.0);
  EXPECT_FALSE(st_factorization(1, 1).has_value());
  EXPECT_FALSE(st_factorization(-2, -7).has_value());
}

TEST(FrameAlignable, StandardBlades) {
  auto frame = frame_alignable(standard_blades(4));
  ASSERT_TRUE(frame.has_value());
  EXPECT_TRUE(is_signed_permutation_frame(frame->cast<double>()));
}

TEST(FrameAlignable, RotatedPairBladesHaveNoCommonFrame) {
  EXPECT_FALSE(frame_alignable(rotated_pair_blades<Rational>(4, Rational(1))).has_value());
  EXPECT_FALSE(frame_alignable(rotated_pair_blades<Rational>(6, Rational(1))).has_value());
  EXPECT_FALSE(frame_alignable(rotated_pair_blades<double>(4, 1 / std::sqrt(2.0))).has_value());
}

TEST(FrameAlignable, RecoversRotation) {
  Gen gen(9);
  for (int trial = 0; trial < 3; ++trial) {
    auto q = testing_support::rational_rotation(gen, 4);
    std::vector<PV> blades;
    for (unsigned i = 0; i < 4; ++i)
      for (unsigned j = i + 1; j < 4; ++j) {
        std::vector<Rational> u(4), v(4);
        for (unsigned r = 0; r < 4; ++r) u[r] = q(r, i), v[r] = q(r, j);
        blades.push_back(wedge(PV::vector(u), PV::vector(v)));
      }
    auto frame = frame_alignable(blades);
    ASSERT_TRUE(frame.has_value());
    // Each recovered direction is parallel to some column of q.
    for (unsigned c = 0; c < 4; ++c) {
      int matches = 0;
      for (unsigned k = 0; k < 4; ++k) {
        bool par = true;
        for (unsigned r = 0; r < 4; ++r)
          for (unsigned s = r + 1; s < 4; ++s) par = par && (*frame)(r, c) * q(s, k) == (*frame)(s, c) * q(r, k);
        matches += par;
      }
      EXPECT_EQ(matches, 1);
    }
  }
}

TEST(FrameAlignable, RejectsBadInput) {
  auto blades = standard_blades(4);
  blades[5] = blades[4];
  EXPECT_THROW(frame_alignable(blades), InconsistentError);
  blades = standard_blades(4);
  blades[0] = PV::blade(4, Blade::from_indices({0, 1})) + PV::blade(4, Blade::from_indices({2, 3}));
  EXPECT_THROW(frame_alignable(blades), InconsistentError);
  blades.pop_back();
  EXPECT_THROW(frame_alignable(blades), DimensionError);
}

TEST(IsPureInFrame, Examples) {
  EXPECT_TRUE(is_pure_in_frame(lcf_curvature(from_ints({1, 2, 3, 4, 5}))));
  auto g = SymmetricTwoTensor<Rational>::metric(MetricFrame<Rational>::euclidean(5));
  EXPECT_TRUE(is_pure_in_frame(Rational(-4) * kulkarni_nomizu(g, g)));
  auto cp2 = complex_space_form_cp2();
  ASSERT_TRUE(validate_bianchi(cp2));
  EXPECT_FALSE(is_pure_in_frame(cp2));
}

TEST(Incidence, SmallMatrixAndRanks) {
  auto a = incidence_matrix(4, 2, 1);
  std::vector<std::vector<int>> displayed{{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}};
  ASSERT_EQ(a.rows(), 6u);
  ASSERT_EQ(a.cols(), 4u);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(a(r, c), displayed[r][c]);
  EXPECT_EQ(rank_rational(a), 4u);
  EXPECT_EQ(rank_rational(incidence_matrix(8, 4, 2)), 28u);
  EXPECT_EQ(rank_rational(incidence_matrix(8, 4, 2).cast<Rational>()), 28u);
  EXPECT_THROW(incidence_matrix(4, 1, 2), DimensionError);
}
