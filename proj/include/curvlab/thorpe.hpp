#pragma once

// Thorpe's p-th curvature machinery.
//
// The operator C_p is assembled blade by blade from the wedge-chain formula
//   C_p(e_I) = 1/p! sum_{sigma in S_p} sgn(sigma) C(e_s1^e_s2)^...^C(e_s(p-1)^e_sp).
// Permuting inside a pair or permuting pairs leaves a term unchanged, so the
// sum collapses onto the (p-1)!! perfect matchings of I with weight 1/(p-1)!!.
// The definitional double sum over S_p x S_p is kept as an oracle.

#include "curvlab/curvature.hpp"
#include "curvlab/error.hpp"
#include "curvlab/exterior.hpp"
#include "curvlab/linalg.hpp"
#include "curvlab/scalar.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

namespace curvlab {

/// A perfect matching of the positions {0..p-1}, with the sign of the
/// permutation (a1 b1 a2 b2 ...) that lists its pairs in order.
struct PositionMatching {
  int sign = 1;
  std::vector<std::pair<unsigned, unsigned>> pairs;
};

inline std::vector<PositionMatching> perfect_matchings(unsigned p) {
  if (p % 2 != 0) throw DimensionError("perfect matchings need an even number of points");
  std::vector<PositionMatching> out;
  std::vector<unsigned> rest(p);
  std::iota(rest.begin(), rest.end(), 0u);
  PositionMatching current;
  auto recurse = [&](auto&& self, std::vector<unsigned>& items, int sign) -> void {
    if (items.empty()) {
      out.push_back({sign, current.pairs});
      return;
    }
    unsigned first = items[0];
    for (std::size_t k = 1; k < items.size(); ++k) {
      std::vector<unsigned> remaining;
      remaining.reserve(items.size() - 2);
      for (std::size_t t = 1; t < items.size(); ++t)
        if (t != k) remaining.push_back(items[t]);
      current.pairs.emplace_back(first, items[k]);
      // Moving items[k] next to `first` costs k-1 transpositions.
      self(self, remaining, (k - 1) % 2 ? -sign : sign);
      current.pairs.pop_back();
    }
  };
  recurse(recurse, rest, 1);
  return out;
}

inline std::uint64_t double_factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned k = n; k > 1; k -= 2) r *= k;
  return r;
}

namespace detail {

inline void require_even_degree(unsigned p, unsigned d, const char* what) {
  if (p % 2 != 0 || p < 2 || p > d)
    throw DimensionError(std::string(what) + ": p must be even with 2 <= p <= d (got p=" +
                         std::to_string(p) + ", d=" + std::to_string(d) + ")");
}

template <class S>
using SparseColumn = std::vector<std::pair<std::uint64_t, S>>;

// Column e_a^e_b (a < b) of the Lambda^2 operator, sparse.
template <class S>
std::vector<SparseColumn<S>> lambda2_columns(const OperatorMatrix<S>& c2) {
  BladeBasis b(c2.dim, 2);
  std::vector<SparseColumn<S>> cols(b.size());
  for (std::size_t c = 0; c < b.size(); ++c)
    for (std::size_t r = 0; r < b.size(); ++r)
      if (c2.matrix(r, c) != 0) cols[c].emplace_back(b.masks()[r], c2.matrix(r, c));
  return cols;
}

// Wedge of a running sparse product with one Lambda^2 column.
template <class S>
SparseColumn<S> wedge_step(const SparseColumn<S>& acc, const SparseColumn<S>& col, bool negate) {
  std::unordered_map<std::uint64_t, S> sum;
  sum.reserve(acc.size() * col.size());
  for (const auto& [ma, ca] : acc)
    for (const auto& [mb, cb] : col) {
      int sign = wedge_sign(ma, mb);
      if (sign == 0) continue;
      S prod = ca * cb;
      if ((sign < 0) != negate) prod = -prod;
      auto [it, inserted] = sum.try_emplace(ma | mb, prod);
      if (!inserted) it->second += prod;
    }
  SparseColumn<S> out;
  out.reserve(sum.size());
  for (auto& [m, c] : sum)
    if (c != 0) out.emplace_back(m, std::move(c));
  return out;
}

template <class F>
void parallel_for(std::size_t n, unsigned workers, F&& body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) body(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace detail

/// Operator C_p from a Lambda^2 operator. Columns are independent, so
/// `workers` threads split them; output does not depend on the worker count.
template <class S>
OperatorMatrix<S> thorpe_from_lambda2(const OperatorMatrix<S>& c2, unsigned p, unsigned workers = 1) {
  const unsigned d = c2.dim;
  detail::require_even_degree(p, d, "thorpe_operator");
  if (p == 2) return c2;
  const auto cols = detail::lambda2_columns(c2);
  const auto matchings = perfect_matchings(p);
  BladeBasis basis(d, p);
  OperatorMatrix<S> out{d, p, Matrix<S>(basis.size(), basis.size())};
  const S weight = S(1) / S(double_factorial(p - 1));

  detail::parallel_for(basis.size(), workers, [&](std::size_t j) {
    auto idx = basis[j].indices();
    std::vector<S> column(basis.size(), S(0));
    for (const auto& m : matchings) {
      detail::SparseColumn<S> acc{{0ull, S(m.sign)}};
      for (auto [a, b] : m.pairs) {
        acc = detail::wedge_step(acc, cols[pair_index(idx[a], idx[b], d)], false);
        if (acc.empty()) break;
      }
      for (const auto& [mask, c] : acc) column[basis.index_of(Blade(mask))] += c;
    }
    for (std::size_t r = 0; r < basis.size(); ++r)
      if (column[r] != 0) out.matrix(r, j) = column[r] * weight;
  });
  return out;
}

template <class S>
OperatorMatrix<S> thorpe_operator(const CurvatureTensor<S>& rm, unsigned p, unsigned workers = 1) {
  detail::require_even_degree(p, rm.dim(), "thorpe_operator");
  return thorpe_from_lambda2(raise_to_lambda2(rm), p, workers);
}

/// Same operator from the uncollapsed sum over all of S_p. Quadratically
/// slower; exists to check the matching collapse.
template <class S>
OperatorMatrix<S> thorpe_operator_full_sum(const CurvatureTensor<S>& rm, unsigned p) {
  const unsigned d = rm.dim();
  detail::require_even_degree(p, d, "thorpe_operator_full_sum");
  const auto cols = detail::lambda2_columns(raise_to_lambda2(rm));
  BladeBasis basis(d, p);
  OperatorMatrix<S> out{d, p, Matrix<S>(basis.size(), basis.size())};
  S p_factorial(1);
  for (unsigned k = 2; k <= p; ++k) p_factorial *= S(k);

  std::vector<unsigned> perm(p);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto idx = basis[j].indices();
    std::vector<S> column(basis.size(), S(0));
    std::iota(perm.begin(), perm.end(), 0u);
    do {
      int inversions = 0;
      for (unsigned x = 0; x < p; ++x)
        for (unsigned y = x + 1; y < p; ++y) inversions += perm[x] > perm[y];
      detail::SparseColumn<S> acc{{0ull, S(inversions % 2 ? -1 : 1)}};
      for (unsigned k = 0; k < p; k += 2) {
        unsigned a = idx[perm[k]], b = idx[perm[k + 1]];
        bool negate = a > b;
        acc = detail::wedge_step(acc, cols[pair_index(std::min(a, b), std::max(a, b), d)], negate);
        if (acc.empty()) break;
      }
      for (const auto& [mask, c] : acc) column[basis.index_of(Blade(mask))] += c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t r = 0; r < basis.size(); ++r)
      if (column[r] != 0) out.matrix(r, j) = column[r] / p_factorial;
  }
  return out;
}

/// R_p(e_{u1},...,e_{up}, e_{v1},...,e_{vp}) by the definitional double sum
/// 1/(2^{p/2} p!) sum_{sigma,tau} sgn sgn prod R(u_s, u_s, v_t, v_t).
template <class S>
S thorpe_tensor_basis(const CurvatureTensor<S>& rm, unsigned p, std::span<const unsigned> u,
                      std::span<const unsigned> v) {
  detail::require_even_degree(p, rm.dim(), "thorpe_tensor_entry");
  if (u.size() != p || v.size() != p) throw DimensionError("thorpe_tensor_entry: need p vectors on each side");
  std::vector<std::pair<std::vector<unsigned>, int>> perms;
  std::vector<unsigned> perm(p);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    int inversions = 0;
    for (unsigned x = 0; x < p; ++x)
      for (unsigned y = x + 1; y < p; ++y) inversions += perm[x] > perm[y];
    perms.emplace_back(perm, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));

  S total(0);
  for (const auto& [sigma, s_sign] : perms)
    for (const auto& [tau, t_sign] : perms) {
      S prod(s_sign * t_sign);
      for (unsigned k = 0; k < p && prod != 0; k += 2)
        prod *= rm(u[sigma[k]], u[sigma[k + 1]], v[tau[k]], v[tau[k + 1]]);
      total += prod;
    }
  S norm(1);
  for (unsigned k = 2; k <= p; ++k) norm *= S(k);
  norm *= ipow(S(2), p / 2);
  return total / norm;
}

/// R_p(u_1..u_p, v_1..v_p) for arbitrary coordinate vectors, by multilinear
/// expansion over their supports.
template <class S>
S thorpe_tensor_entry(const CurvatureTensor<S>& rm, unsigned p, std::span<const std::vector<S>> u,
                      std::span<const std::vector<S>> v) {
  detail::require_even_degree(p, rm.dim(), "thorpe_tensor_entry");
  if (u.size() != p || v.size() != p) throw DimensionError("thorpe_tensor_entry: need p vectors on each side");
  std::vector<std::vector<std::pair<unsigned, S>>> supports;
  for (const auto* side : {&u, &v})
    for (const auto& vec : *side) {
      if (vec.size() != rm.dim()) throw DimensionError("thorpe_tensor_entry: vector length mismatch");
      std::vector<std::pair<unsigned, S>> s;
      for (unsigned i = 0; i < vec.size(); ++i)
        if (vec[i] != 0) s.emplace_back(i, vec[i]);
      supports.push_back(std::move(s));
    }
  S total(0);
  std::vector<unsigned> choice(2 * p, 0);
  std::vector<unsigned> iu(p), iv(p);
  auto recurse = [&](auto&& self, unsigned slot, const S& coeff) -> void {
    if (slot == 2 * p) {
      for (unsigned k = 0; k < p; ++k) {
        iu[k] = choice[k];
        iv[k] = choice[p + k];
      }
      total += coeff * thorpe_tensor_basis(rm, p, std::span<const unsigned>(iu), std::span<const unsigned>(iv));
      return;
    }
    for (const auto& [i, c] : supports[slot]) {
      choice[slot] = i;
      self(self, slot + 1, coeff * c);
    }
  };
  recurse(recurse, 0, S(1));
  return total;
}

/// Weyl analogue: the same construction applied to the Weyl part of Rm.
template <class S>
OperatorMatrix<S> weyl_operator(const CurvatureTensor<S>& rm, unsigned p, unsigned workers = 1) {
  if (rm.dim() < 4) throw UnsupportedError("weyl_operator requires d >= 4");
  return thorpe_operator(decompose(rm).weyl, p, workers);
}

/// <Op(P), P> for a unit p-vector P (norm +1 or -1).
template <class S>
S sec_p(const OperatorMatrix<S>& op, const MetricFrame<S>& mf, const PVector<S>& plane, double tol = kDefaultTol) {
  if (plane.degree() != op.degree) throw DimensionError("sec_p: degree mismatch");
  S norm = gram_inner(plane, plane, mf);
  if (!nearly_equal(ScalarTraits<S>::abs(norm), S(1), tol))
    throw DimensionError("sec_p: p-vector is not unit (norm " + ScalarTraits<S>::to_string(norm) + ")");
  return gram_inner(op.apply(plane), plane, mf);
}

template <class S>
S sec_p(const CurvatureTensor<S>& rm, unsigned p, const PVector<S>& plane, double tol = kDefaultTol) {
  return sec_p(thorpe_operator(rm, p), rm.frame(), plane, tol);
}

/// Lipschitz-Killing curvature: the scalar by which C_d acts on the top
/// degree. For an orthonormal frame this is R_d(e_1..e_d, e_1..e_d).
template <class S>
S lipschitz_killing(const CurvatureTensor<S>& rm) {
  if (rm.dim() % 2 != 0) throw DimensionError("lipschitz_killing requires even dimension");
  return thorpe_operator(rm, rm.dim()).matrix(0, 0);
}

template <class S>
struct CommutationReport {
  bool commutes = true;
  double max_violation = 0.0;
  /// First input blade (canonical order) whose image violates commutation,
  /// and the output blade carrying the largest violation in that column.
  std::optional<Blade> witness_input;
  std::optional<Blade> witness_output;
};

/// Tests * Op = Op * in middle degree, entrywise.
template <class S>
CommutationReport<S> commutes_with_star(const OperatorMatrix<S>& op, double tol = kDefaultTol) {
  if (2 * op.degree != op.dim) throw DimensionError("commutes_with_star requires p = d/2");
  Matrix<S> star = hodge_matrix<S>(op.dim, op.degree);
  Matrix<S> comm = star * op.matrix - op.matrix * star;
  const double scale = std::max(1.0, op.matrix.max_abs());
  CommutationReport<S> report;
  report.max_violation = comm.max_abs();
  BladeBasis basis(op.dim, op.degree);
  for (std::size_t c = 0; c < comm.cols() && !report.witness_input; ++c) {
    double best = 0.0;
    std::optional<std::size_t> row;
    for (std::size_t r = 0; r < comm.rows(); ++r) {
      if (is_zero(comm(r, c), tol, scale)) continue;
      double v = std::abs(scalar_cast<double>(comm(r, c)));
      if (!row || v > best) best = v, row = r;
    }
    if (row) {
      report.commutes = false;
      report.witness_input = basis[c];
      report.witness_output = basis[*row];
    }
  }
  return report;
}

enum class SelfDuality { plus, minus, both, neither };

inline const char* to_string(SelfDuality s) {
  switch (s) {
    case SelfDuality::plus: return "B=+A";
    case SelfDuality::minus: return "B=-A";
    case SelfDuality::both: return "A=B=0";
    case SelfDuality::neither: return "neither";
  }
  return "?";
}

/// Normal form [[A, B], [B, A]] in a basis {beta_i, *beta_i}.
struct BlockForm {
  Matrix<double> a;  // diagonal
  Matrix<double> b;  // diagonal
  /// Columns beta_1..beta_m, *beta_1..*beta_m in canonical blade coordinates.
  Matrix<double> basis;
  SelfDuality flag = SelfDuality::neither;
  double reassembly_error = 0.0;
};

/// Requires an operator commuting with * (Euclidean orthonormal frame). The
/// self-duality flag is decided in the input scalar type: B = +A exactly when
/// Op * = Op, B = -A when Op * = -Op.
template <class S>
BlockForm block_form(const OperatorMatrix<S>& op, double tol = kDefaultTol) {
  if (!commutes_with_star(op, tol).commutes)
    throw InconsistentError("block_form: operator does not commute with the Hodge star");
  const unsigned d = op.dim, p = op.degree;
  Matrix<S> star = hodge_matrix<S>(d, p);
  Matrix<S> op_star = op.matrix * star;
  const double scale = std::max(1.0, op.matrix.max_abs());
  bool plus = (op_star - op.matrix).is_zero(tol, scale);
  bool minus = (op_star + op.matrix).is_zero(tol, scale);
  BlockForm out;
  out.flag = plus && minus ? SelfDuality::both : plus ? SelfDuality::plus : minus ? SelfDuality::minus : SelfDuality::neither;

  BladeBasis basis(d, p);
  std::vector<std::size_t> first, second;
  std::vector<int> sign;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::uint64_t m = basis.masks()[k];
    if (!(m & 1ull)) continue;
    first.push_back(k);
    second.push_back(basis.index_of(Blade(m).complement(d)));
    sign.push_back(star_sign(m, d));
  }
  const std::size_t half = first.size();
  // Restriction of Op to Lambda^+ / Lambda^- in the orthonormal bases
  // (e_I +/- s e_{I^c}) / sqrt 2; the factor 1/2 keeps it exact.
  auto restricted = [&](int pm) {
    Matrix<S> m(half, half);
    for (std::size_t k = 0; k < half; ++k)
      for (std::size_t l = 0; l < half; ++l) {
        S v = op.matrix(first[k], first[l]) + S(pm * sign[l]) * op.matrix(first[k], second[l]) +
              S(pm * sign[k]) * op.matrix(second[k], first[l]) +
              S(sign[k] * sign[l]) * op.matrix(second[k], second[l]);
        m(k, l) = v / S(2);
      }
    return m.template cast<double>();
  };
  auto to_eigen = [](const Matrix<double>& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
    return e;
  };
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> plus_solver(to_eigen(restricted(+1)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> minus_solver(to_eigen(restricted(-1)));
  if (plus_solver.info() != Eigen::Success || minus_solver.info() != Eigen::Success)
    throw SingularError("block_form: eigendecomposition did not converge");

  const std::size_t n = basis.size();
  const double r2 = 1.0 / std::sqrt(2.0);
  out.a = Matrix<double>(half, half);
  out.b = Matrix<double>(half, half);
  out.basis = Matrix<double>(n, n);
  for (std::size_t i = 0; i < half; ++i) {
    double ai = plus_solver.eigenvalues()(i), bi = minus_solver.eigenvalues()(i);
    out.a(i, i) = (ai + bi) / 2;
    out.b(i, i) = (ai - bi) / 2;
    for (std::size_t k = 0; k < half; ++k) {
      // xi_i and eta_i in blade coordinates, then beta = (xi+eta)/sqrt2,
      // *beta = (xi-eta)/sqrt2.
      double u = plus_solver.eigenvectors()(k, i) * r2, v = minus_solver.eigenvectors()(k, i) * r2;
      double xi_first = u, xi_second = sign[k] * u;
      double eta_first = v, eta_second = -sign[k] * v;
      out.basis(first[k], i) = (xi_first + eta_first) * r2;
      out.basis(second[k], i) = (xi_second + eta_second) * r2;
      out.basis(first[k], half + i) = (xi_first - eta_first) * r2;
      out.basis(second[k], half + i) = (xi_second - eta_second) * r2;
    }
  }
  Matrix<double> opd = op.matrix.template cast<double>();
  Matrix<double> conj = out.basis.transpose() * opd * out.basis;
  Matrix<double> expected(n, n);
  for (std::size_t i = 0; i < half; ++i) {
    expected(i, i) = expected(half + i, half + i) = out.a(i, i);
    expected(i, half + i) = expected(half + i, i) = out.b(i, i);
  }
  Matrix<double> ortho = out.basis.transpose() * out.basis - Matrix<double>::identity(n);
  out.reassembly_error = std::max((conj - expected).max_abs(), ortho.max_abs() * scale);
  if (out.reassembly_error > 1e-8 * scale)
    throw SingularError("block_form: reassembled normal form deviates by " + std::to_string(out.reassembly_error));
  return out;
}

namespace detail {

// Portable standard normal draws (Box-Muller on raw 64-bit output).
class NormalSource {
 public:
  explicit NormalSource(std::uint64_t seed) : rng_(seed) {}
  double operator()() {
    if (cached_) {
      cached_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    cached_ = true;
    return r * std::cos(2.0 * M_PI * u2);
  }

 private:
  double uniform() { return (static_cast<double>(rng_() >> 11) + 0.5) * 0x1.0p-53; }
  std::mt19937_64 rng_;
  bool cached_ = false;
  double spare_ = 0.0;
};

}  // namespace detail

struct PConstantReport {
  bool constant = false;
  double value = 0.0;  // mean of the samples
  double min = 0.0;
  double max = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Samples sec_p on random unit decomposable p-vectors (Gram-Schmidt of random
/// Gaussian p-frames). A sampling check: it cannot certify constancy.
template <class S>
PConstantReport p_constant_check(const CurvatureTensor<S>& rm, unsigned p, std::size_t samples, std::uint64_t seed,
                                 double tol = kDefaultTol) {
  if (!rm.frame().euclidean_orthonormal())
    throw UnsupportedError("p_constant_check requires a Euclidean orthonormal frame");
  const unsigned d = rm.dim();
  auto op = thorpe_operator(rm.template cast<double>(), p);
  auto mf = MetricFrame<double>::euclidean(d);
  detail::NormalSource normal(seed);
  PConstantReport report;
  report.samples = samples;
  report.seed = seed;
  report.min = std::numeric_limits<double>::infinity();
  report.max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<std::vector<double>> frame;
    while (frame.size() < p) {
      std::vector<double> v(d);
      for (auto& x : v) x = normal();
      for (const auto& f : frame) {
        double dot = std::inner_product(v.begin(), v.end(), f.begin(), 0.0);
        for (unsigned i = 0; i < d; ++i) v[i] -= dot * f[i];
      }
      double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
      if (norm < 1e-6) continue;
      for (auto& x : v) x /= norm;
      frame.push_back(std::move(v));
    }
    PVector<double> plane = PVector<double>::vector(frame[0]);
    for (unsigned k = 1; k < p; ++k) plane = wedge(plane, PVector<double>::vector(frame[k]));
    double value = sec_p(op, mf, plane, 1e-8);
    report.min = std::min(report.min, value);
    report.max = std::max(report.max, value);
    sum += value;
  }
  if (samples > 0) {
    report.value = sum / static_cast<double>(samples);
    report.constant =
        report.max - report.min <= tol * std::max({1.0, std::abs(report.max), std::abs(report.min)});
  }
  return report;
}

/// Checks * C_{d-p} * = lambda^{n-p} C_p (d = 2n) entrywise for the space form
/// whose curvature operator is lambda times the identity. For p > n both sides
/// are multiplied by lambda^{p-n}. C_0 is the identity on Lambda^0.
template <class S>
bool space_form_duality_check(const S& lambda, unsigned d, unsigned p, double tol = kDefaultTol) {
  if (d % 2 != 0 || p % 2 != 0 || p < 2 || p > d)
    throw DimensionError("space_form_duality_check requires even d and even 2 <= p <= d");
  const unsigned n = d / 2, q = d - p;
  auto mf = MetricFrame<S>::euclidean(d);
  auto g = SymmetricTwoTensor<S>::metric(mf);
  CurvatureTensor<S> rm = (-lambda / S(2)) * kulkarni_nomizu(g, g);
  auto cp = thorpe_operator(rm, p);
  Matrix<S> cq = q == 0 ? Matrix<S>::identity(1) : thorpe_operator(rm, q).matrix;
  Matrix<S> lhs = hodge_matrix<S>(d, q) * cq * hodge_matrix<S>(d, p);
  if (p <= n) return nearly_equal(lhs, Matrix<S>(ipow(lambda, n - p) * cp.matrix), tol);
  return nearly_equal(Matrix<S>(ipow(lambda, p - n) * lhs), cp.matrix, tol);
}

}  // namespace curvlab
