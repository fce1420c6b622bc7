#include "curvlab/thorpe.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>

using namespace curvlab;
using testing_support::Gen;

namespace {

using Tensor = CurvatureTensor<Rational>;
using Sym = SymmetricTwoTensor<Rational>;
using PV = PVector<Rational>;

Tensor space_form_tensor(unsigned d, Rational lambda) {
  auto g = Sym::metric(MetricFrame<Rational>::euclidean(d));
  return (-lambda / 2) * kulkarni_nomizu(g, g);
}

// Curvature c on the first two coordinates, flat elsewhere.
Tensor s2_times_flat(unsigned d, Rational c) {
  auto mf = MetricFrame<Rational>::euclidean(d);
  std::vector<Rational> block(d, 0);
  block[0] = block[1] = 1;
  auto g1 = Sym::diagonal(mf, block);
  return (-c / 2) * kulkarni_nomizu(g1, g1);
}

Tensor pp_wave_tensor(unsigned d, Gen& gen) {
  Matrix<Rational> g = Matrix<Rational>::identity(d);
  g(0, 0) = g(1, 1) = 0;
  g(0, 1) = g(1, 0) = 1;
  Tensor rm{MetricFrame<Rational>(g)};
  for (unsigned i = 2; i < d; ++i)
    for (unsigned j = i; j < d; ++j) {
      Rational v = gen.rational(4, 2);
      rm.set(i, 1, 1, j, v);
      rm.set(j, 1, 1, i, v);
    }
  return rm;
}

Tensor random_weyl(Gen& gen, unsigned d) { return decompose(testing_support::random_curvature<Rational>(gen, d)).weyl; }

Tensor random_einstein4(Gen& gen) { return random_weyl(gen, 4) + space_form_tensor(4, gen.rational()); }

PV blade(unsigned d, std::initializer_list<int> idx) { return PV::blade(d, Blade::from_indices(idx)); }

// Sign of the permutation listing the pairs of a matching in order.
int listing_sign(const PositionMatching& m) {
  std::vector<unsigned> seq;
  for (auto [a, b] : m.pairs) seq.push_back(a), seq.push_back(b);
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) inv += seq[i] > seq[j];
  return inv % 2 ? -1 : 1;
}

// <C_p e_I, e_J> against R_p(e_I, e_J) for every blade pair.
void expect_matches_definition(const Tensor& rm, unsigned p) {
  auto op = thorpe_operator(rm, p);
  BladeBasis basis(rm.dim(), p);
  auto g = gram_matrix(rm.frame(), p);
  Matrix<Rational> paired = g * op.matrix;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto ui = basis[i].indices(), vj = basis[j].indices();
      std::vector<unsigned> u(ui.begin(), ui.end()), v(vj.begin(), vj.end());
      ASSERT_EQ(paired(j, i), thorpe_tensor_basis(rm, p, std::span<const unsigned>(u), std::span<const unsigned>(v)))
          << basis[i].to_string() << " " << basis[j].to_string();
    }
}

}  // namespace

TEST(PerfectMatchings, CountAndSigns) {
  for (unsigned p : {2u, 4u, 6u, 8u}) {
    auto ms = perfect_matchings(p);
    EXPECT_EQ(ms.size(), double_factorial(p - 1));
    for (const auto& m : ms) EXPECT_EQ(m.sign, listing_sign(m));
  }
  EXPECT_THROW(perfect_matchings(3), DimensionError);
}

TEST(ThorpeOperator, DegreeTwoIsCurvatureOperator) {
  Gen gen(1);
  auto rm = testing_support::random_curvature<Rational>(gen, 5);
  EXPECT_EQ(thorpe_operator(rm, 2).matrix, raise_to_lambda2(rm).matrix);
}

TEST(ThorpeOperator, RejectsBadDegrees) {
  Tensor rm{MetricFrame<Rational>::euclidean(4)};
  EXPECT_THROW(thorpe_operator(rm, 3), DimensionError);
  EXPECT_THROW(thorpe_operator(rm, 6), DimensionError);
  EXPECT_THROW(thorpe_operator(rm, 0), DimensionError);
}

TEST(ThorpeOperator, MatchingCollapseEqualsFullPermutationSum) {
  Gen gen(2);
  for (auto [d, p] : std::vector<std::pair<unsigned, unsigned>>{{4, 2}, {4, 4}, {5, 4}, {6, 4}, {6, 6}}) {
    auto rm = testing_support::random_curvature<Rational>(gen, d, 2, 0.6);
    EXPECT_EQ(thorpe_operator(rm, p).matrix, thorpe_operator_full_sum(rm, p).matrix) << d << "," << p;
  }
  auto pp = pp_wave_tensor(6, gen);
  EXPECT_EQ(thorpe_operator(pp, 2).matrix, thorpe_operator_full_sum(pp, 2).matrix);
}

TEST(ThorpeOperator, MatchesDefinitionalSum) {
  Gen gen(3);
  expect_matches_definition(testing_support::random_curvature<Rational>(gen, 4, 2, 0.5), 2);
  expect_matches_definition(testing_support::random_curvature<Rational>(gen, 4, 2, 0.5), 4);
  expect_matches_definition(testing_support::random_curvature<Rational>(gen, 5, 2, 0.5), 4);
}

TEST(ThorpeOperator, WorkerCountDoesNotChangeResult) {
  Gen gen(4);
  auto rm = testing_support::random_curvature<Rational>(gen, 6);
  auto one = thorpe_operator(rm, 4, 1);
  for (unsigned w : {2u, 3u, 7u}) EXPECT_EQ(thorpe_operator(rm, 4, w).matrix, one.matrix);
}

TEST(ThorpeOperator, SpaceFormIsPowerOfIdentity) {
  for (unsigned d : {4u, 6u}) {
    for (Rational lambda : {Rational(1), Rational(-2), Rational(3, 5)}) {
      auto rm = space_form_tensor(d, lambda);
      for (unsigned p = 2; p <= d; p += 2) {
        auto op = thorpe_operator(rm, p);
        EXPECT_EQ(op.matrix, ipow(lambda, p / 2) * Matrix<Rational>::identity(op.matrix.rows()));
      }
    }
  }
}

TEST(ThorpeOperator, SphereTimesTorus) {
  auto rm = s2_times_flat(6, 1);
  EXPECT_FALSE(thorpe_operator(rm, 2).is_zero());
  EXPECT_TRUE(thorpe_operator(rm, 4).is_zero());
}

TEST(ThorpeOperator, SelfAdjointForEveryFrame) {
  Gen gen(5);
  auto rm = testing_support::random_curvature<Rational>(gen, 6, 2, 0.5);
  for (unsigned p : {2u, 4u, 6u}) EXPECT_TRUE(is_self_adjoint(thorpe_operator(rm, p), rm.frame()));
  auto pp = pp_wave_tensor(6, gen);
  for (unsigned p : {2u, 4u}) EXPECT_TRUE(is_self_adjoint(thorpe_operator(pp, p), pp.frame()));
  Matrix<Rational> g = Matrix<Rational>::identity(4);
  g(0, 3) = g(3, 0) = Rational(1, 4);
  MetricFrame<Rational> mf(g);
  auto skew = kulkarni_nomizu(testing_support::random_symmetric(gen, mf), testing_support::random_symmetric(gen, mf));
  EXPECT_TRUE(is_self_adjoint(thorpe_operator(skew, 4), mf));
}

TEST(ThorpeOperator, EquivariantUnderRationalRotation) {
  Gen gen(6);
  for (int trial = 0; trial < 3; ++trial) {
    auto rm = testing_support::random_curvature<Rational>(gen, 4);
    auto q = testing_support::rational_rotation(gen, 4);
    for (unsigned p : {2u, 4u}) {
      auto c = compound(q, p);
      EXPECT_EQ(thorpe_operator(change_frame(rm, q), p).matrix, Matrix<Rational>(c.transpose() * thorpe_operator(rm, p).matrix * c));
    }
  }
}

TEST(ThorpeOperator, EquivariantUnderRotationFloat) {
  Gen gen(7);
  auto rm = testing_support::random_curvature<double>(gen, 8, 2, 0.5);
  auto q = testing_support::rotation(gen, 8);
  auto c = compound(q, 4);
  Matrix<double> expected = c.transpose() * thorpe_operator(rm, 4).matrix * c;
  EXPECT_TRUE(nearly_equal(thorpe_operator(change_frame(rm, q), 4).matrix, expected, 1e-9));
}

TEST(ThorpeTensor, DegreeTwoIsRm) {
  Gen gen(8);
  auto rm = testing_support::random_curvature<Rational>(gen, 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::array<std::vector<Rational>, 2> u, v;
    for (auto* side : {&u, &v})
      for (auto& x : *side) {
        x.resize(5);
        for (auto& c : x) c = gen.rational(2, 2);
      }
    Rational expected = 0;
    for (unsigned i = 0; i < 5; ++i)
      for (unsigned j = 0; j < 5; ++j)
        for (unsigned k = 0; k < 5; ++k)
          for (unsigned l = 0; l < 5; ++l) expected += u[0][i] * u[1][j] * v[0][k] * v[1][l] * rm(i, j, k, l);
    EXPECT_EQ(thorpe_tensor_entry(rm, 2, std::span<const std::vector<Rational>>(u), std::span<const std::vector<Rational>>(v)),
              expected);
  }
}

TEST(ThorpeTensor, DegreeFourMatchesEighteenTermExpansion) {
  Gen gen(9);
  auto rm = testing_support::random_curvature<Rational>(gen, 6);
  auto R = [&](unsigned a, unsigned b, unsigned c, unsigned d) { return rm(a, b, c, d); };
  for (int trial = 0; trial < 30; ++trial) {
    std::array<unsigned, 4> u, v;
    for (auto& x : u) x = gen.integer(0, 5);
    for (auto& x : v) x = gen.integer(0, 5);
    auto [u1, u2, u3, u4] = u;
    auto [v1, v2, v3, v4] = v;
    Rational expected =
        R(u1, u2, v1, v2) * R(u3, u4, v3, v4) - R(u1, u2, v1, v3) * R(u3, u4, v2, v4) +
        R(u1, u2, v1, v4) * R(u3, u4, v2, v3) + R(u1, u2, v2, v3) * R(u3, u4, v1, v4) -
        R(u1, u2, v2, v4) * R(u3, u4, v1, v3) + R(u1, u2, v3, v4) * R(u3, u4, v1, v2) -
        R(u1, u3, v1, v2) * R(u2, u4, v3, v4) + R(u1, u3, v1, v3) * R(u2, u4, v2, v4) -
        R(u1, u3, v1, v4) * R(u2, u4, v2, v3) - R(u1, u3, v2, v3) * R(u2, u4, v1, v4) +
        R(u1, u3, v2, v4) * R(u2, u4, v1, v3) - R(u1, u3, v3, v4) * R(u2, u4, v1, v2) +
        R(u1, u4, v1, v2) * R(u2, u3, v3, v4) - R(u1, u4, v1, v3) * R(u2, u3, v2, v4) +
        R(u1, u4, v1, v4) * R(u2, u3, v2, v3) + R(u1, u4, v2, v3) * R(u2, u3, v1, v4) -
        R(u1, u4, v2, v4) * R(u2, u3, v1, v3) + R(u1, u4, v3, v4) * R(u2, u3, v1, v2);
    expected /= 3;
    EXPECT_EQ(thorpe_tensor_basis(rm, 4, std::span<const unsigned>(u), std::span<const unsigned>(v)), expected);
  }
}

TEST(ThorpeTensor, AlternatingAndSymmetric) {
  Gen gen(10);
  auto rm = testing_support::random_curvature<Rational>(gen, 5);
  std::array<unsigned, 4> u{0, 1, 3, 4}, v{1, 2, 3, 4};
  auto value = thorpe_tensor_basis(rm, 4, std::span<const unsigned>(u), std::span<const unsigned>(v));
  std::array<unsigned, 4> u_swapped{1, 0, 3, 4};
  EXPECT_EQ(thorpe_tensor_basis(rm, 4, std::span<const unsigned>(u_swapped), std::span<const unsigned>(v)), -value);
  EXPECT_EQ(thorpe_tensor_basis(rm, 4, std::span<const unsigned>(v), std::span<const unsigned>(u)), value);
  Tensor flat{MetricFrame<Rational>::euclidean(5)};
  EXPECT_EQ(thorpe_tensor_basis(flat, 4, std::span<const unsigned>(u), std::span<const unsigned>(v)), 0);
  std::array<unsigned, 3> odd{0, 1, 2};
  EXPECT_THROW(thorpe_tensor_basis(rm, 3, std::span<const unsigned>(odd), std::span<const unsigned>(odd)), DimensionError);
}

TEST(WeylOperator, Dimension4TraceFreeCommutes) {
  Gen gen(11);
  for (int trial = 0; trial < 10; ++trial) {
    auto rm = testing_support::random_curvature<Rational>(gen, 4);
    EXPECT_TRUE(commutes_with_star(weyl_operator(rm, 2)).commutes);
  }
}

TEST(WeylOperator, LcfInputVanishes) {
  auto mf = MetricFrame<Rational>::euclidean(6);
  std::vector<Rational> minus_a{-1, 2, Rational(1, 3), 0, -5, 4};
  auto rm = kulkarni_nomizu(Sym::diagonal(mf, minus_a), Sym::metric(mf));
  for (unsigned p : {2u, 4u, 6u}) EXPECT_TRUE(weyl_operator(rm, p).is_zero());
  EXPECT_THROW(weyl_operator(Tensor{MetricFrame<Rational>::euclidean(3)}, 2), UnsupportedError);
}

TEST(SecP, Examples) {
  for (Rational lambda : {Rational(2), Rational(-1, 3)}) {
    auto rm = space_form_tensor(6, lambda);
    EXPECT_EQ(sec_p(rm, 2, blade(6, {1, 4})), lambda);
    EXPECT_EQ(sec_p(rm, 4, blade(6, {0, 2, 3, 5})), lambda * lambda);
    EXPECT_EQ(sec_p(rm, 6, blade(6, {0, 1, 2, 3, 4, 5})), lambda * lambda * lambda);
  }
  EXPECT_EQ(sec_p(Tensor{MetricFrame<Rational>::euclidean(4)}, 2, blade(4, {0, 1})), 0);
  EXPECT_THROW(sec_p(space_form_tensor(4, 1), 2, PV::blade(4, Blade::from_indices({0, 1}), 2)), DimensionError);
}

TEST(SecP, AgreesWithDefinitionOnUnitDecomposables) {
  Gen gen(12);
  auto rm = testing_support::random_curvature<Rational>(gen, 4);
  // (3/5, 4/5) rotations keep the vectors unit and exact.
  std::vector<Rational> u{Rational(3, 5), Rational(4, 5), 0, 0}, v{0, 0, Rational(4, 5), Rational(-3, 5)};
  PV plane = wedge(PV::vector(u), PV::vector(v));
  std::vector<std::vector<Rational>> uv{u, v};
  EXPECT_EQ(sec_p(rm, 2, plane), thorpe_tensor_entry(rm, 2, std::span<const std::vector<Rational>>(uv),
                                                      std::span<const std::vector<Rational>>(uv)));
}

TEST(LipschitzKilling, Examples) {
  EXPECT_EQ(lipschitz_killing(space_form_tensor(4, 3)), 9);
  EXPECT_EQ(lipschitz_killing(space_form_tensor(4, Rational(-1, 2))), Rational(1, 4));
  EXPECT_EQ(lipschitz_killing(Tensor{MetricFrame<Rational>::euclidean(4)}), 0);
  Gen gen(13);
  EXPECT_EQ(lipschitz_killing(pp_wave_tensor(6, gen)), 0);
  EXPECT_THROW(lipschitz_killing(Tensor{MetricFrame<Rational>::euclidean(5)}), DimensionError);
}

TEST(LipschitzKilling, EqualsTopSectionalCurvatureAndIsFrameIndependent) {
  Gen gen(14);
  for (int trial = 0; trial < 3; ++trial) {
    auto rm = testing_support::random_curvature<Rational>(gen, 4);
    Rational k = lipschitz_killing(rm);
    EXPECT_EQ(k, sec_p(rm, 4, blade(4, {0, 1, 2, 3})));
    std::array<unsigned, 4> e{0, 1, 2, 3};
    EXPECT_EQ(k, thorpe_tensor_basis(rm, 4, std::span<const unsigned>(e), std::span<const unsigned>(e)));
    EXPECT_EQ(lipschitz_killing(change_frame(rm, testing_support::rational_rotation(gen, 4))), k);
  }
}

TEST(CommutesWithStar, EinsteinVersusNonEinsteinInDimension4) {
  Gen gen(15);
  for (int trial = 0; trial < 10; ++trial) EXPECT_TRUE(commutes_with_star(thorpe_operator(random_einstein4(gen), 2)).commutes);
  for (int trial = 0; trial < 10; ++trial) {
    auto rm = testing_support::random_curvature<Rational>(gen, 4);
    ASSERT_FALSE(decompose(rm).traceless_ricci.matrix().is_zero());
    auto report = commutes_with_star(thorpe_operator(rm, 2));
    EXPECT_FALSE(report.commutes);
    EXPECT_GT(report.max_violation, 0);
    EXPECT_TRUE(report.witness_input.has_value());
  }
}

TEST(CommutesWithStar, ZeroOperatorAndShapeErrors) {
  OperatorMatrix<Rational> zero{8, 4, Matrix<Rational>(70, 70)};
  EXPECT_TRUE(commutes_with_star(zero).commutes);
  OperatorMatrix<Rational> wrong{6, 2, Matrix<Rational>(15, 15)};
  EXPECT_THROW(commutes_with_star(wrong), DimensionError);
}

TEST(CommutesWithStar, ConstantConformalScalingKeepsVerdict) {
  Gen gen(16);
  for (int trial = 0; trial < 4; ++trial) {
    auto rm = trial % 2 ? random_einstein4(gen) : testing_support::random_curvature<Rational>(gen, 4);
    bool base = commutes_with_star(thorpe_operator(rm, 2)).commutes;
    // Metric e^{2f} g with e^{2f} = 4: components scale by 4 as well.
    for (Rational c : {Rational(4), Rational(1, 9)}) {
      Tensor scaled{MetricFrame<Rational>(c * Matrix<Rational>::identity(4)), c * rm.pair_matrix()};
      auto op = thorpe_operator(scaled, 2);
      EXPECT_EQ(op.matrix, (1 / c) * thorpe_operator(rm, 2).matrix);
      EXPECT_EQ(commutes_with_star(op).commutes, base);
    }
  }
}

TEST(BlockForm, SpaceForm) {
  auto bf = block_form(thorpe_operator(space_form_tensor(4, 3), 2));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_NEAR(bf.a(i, j), i == j ? 3.0 : 0.0, 1e-12);
      EXPECT_NEAR(bf.b(i, j), 0.0, 1e-12);
    }
  EXPECT_EQ(bf.flag, SelfDuality::neither);
}

TEST(BlockForm, SelfDualWeylHasBEqualsA) {
  // Curvature operator 2*w1 w1^T - w2 w2^T - w3 w3^T on self-dual 2-forms,
  // coordinates scaled by 2 to stay rational.
  auto mf = MetricFrame<Rational>::euclidean(4);
  BladeBasis b(4, 2);
  auto idx = [&](int i, int j) { return b.index_of(Blade::from_indices({i, j})); };
  std::vector<std::vector<std::pair<std::size_t, int>>> forms{
      {{idx(0, 1), 1}, {idx(2, 3), 1}}, {{idx(0, 2), 1}, {idx(1, 3), -1}}, {{idx(0, 3), 1}, {idx(1, 2), 1}}};
  std::vector<Rational> mu{2, -1, -1};
  Matrix<Rational> r2(6, 6);
  for (std::size_t k = 0; k < 3; ++k)
    for (auto [r, sr] : forms[k])
      for (auto [c, sc] : forms[k]) r2(r, c) += mu[k] * sr * sc / 2;
  Tensor w{mf, r2};
  ASSERT_TRUE(validate_bianchi(w));
  ASSERT_TRUE(decompose(w).weyl == w);
  auto op = thorpe_operator(w, 2);
  auto bf = block_form(op);
  EXPECT_EQ(bf.flag, SelfDuality::plus);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(bf.a(i, i), bf.b(i, i), 1e-12);
  // Direct projection oracle: Op restricted to Lambda^- vanishes.
  auto star = hodge_matrix<Rational>(4, 2);
  Matrix<Rational> proj_minus = Rational(1, 2) * (Matrix<Rational>::identity(6) - star);
  EXPECT_TRUE(Matrix<Rational>(op.matrix * proj_minus).is_zero());
}

TEST(BlockForm, ZeroOperator) {
  auto bf = block_form(OperatorMatrix<Rational>{4, 2, Matrix<Rational>(6, 6)});
  EXPECT_EQ(bf.flag, SelfDuality::both);
  EXPECT_EQ(bf.a.max_abs(), 0.0);
  EXPECT_EQ(bf.b.max_abs(), 0.0);
}

TEST(BlockForm, ReassemblesRandomEinsteinOperator) {
  Gen gen(17);
  for (int trial = 0; trial < 5; ++trial) {
    auto op = thorpe_operator(random_einstein4(gen), 2);
    auto bf = block_form(op);
    EXPECT_LT(bf.reassembly_error, 1e-10 * std::max(1.0, op.matrix.max_abs()));
    EXPECT_EQ(bf.flag, SelfDuality::neither);
  }
}

TEST(BlockForm, RejectsNonCommutingInput) {
  Gen gen(18);
  EXPECT_THROW(block_form(thorpe_operator(testing_support::random_curvature<Rational>(gen, 4), 2)), InconsistentError);
}

TEST(PConstant, SpaceFormAndSphereTimesTorus) {
  auto sf = p_constant_check(space_form_tensor(6, 3), 4, 100, 1);
  EXPECT_TRUE(sf.constant);
  EXPECT_NEAR(sf.value, 9.0, 1e-9);
  EXPECT_EQ(sf.samples, 100u);
  auto flat4 = p_constant_check(s2_times_flat(6, 1), 4, 100, 2);
  EXPECT_TRUE(flat4.constant);
  EXPECT_NEAR(flat4.value, 0.0, 1e-12);
  EXPECT_FALSE(p_constant_check(s2_times_flat(6, 1), 2, 100, 3).constant);
}

TEST(PConstant, DeterministicGivenSeed) {
  Gen gen(19);
  auto rm = testing_support::random_curvature<Rational>(gen, 5);
  auto a = p_constant_check(rm, 2, 50, 42), b = p_constant_check(rm, 2, 50, 42);
  EXPECT_EQ(a.min, b.min);
  EXPECT_EQ(a.max, b.max);
  EXPECT_EQ(a.value, b.value);
}

TEST(SpaceFormDuality, Examples) {
  EXPECT_TRUE(space_form_duality_check(Rational(1), 8, 2));
  EXPECT_TRUE(space_form_duality_check(Rational(-2), 6, 2));
  for (unsigned d : {4u, 6u})
    for (unsigned p = 2; p <= d; p += 2) {
      EXPECT_TRUE(space_form_duality_check(Rational(0), d, p));
      EXPECT_TRUE(space_form_duality_check(Rational(3, 2), d, p));
    }
  EXPECT_THROW(space_form_duality_check(Rational(1), 5, 2), DimensionError);
}

TEST(Vanishing, ZeroOperatorHasZeroSampledSectionalCurvature) {
  Gen gen(20);
  auto rm = s2_times_flat(6, Rational(7, 3));
  ASSERT_TRUE(thorpe_operator(rm, 4).is_zero());
  auto report = p_constant_check(rm, 4, 200, 9);
  EXPECT_EQ(report.min, 0.0);
  EXPECT_EQ(report.max, 0.0);
}
