#pragma once

// Pure curvature operators, described by their eigenvalue tables.
//
// For a pure tensor (only R_ijij nonzero) the operator C_{2n} is diagonal on
// blades and acts on e_I by haf(I) / (2n-1)!!, where haf is the hafnian of the
// principal submatrix of the table on I. Commuting with * in degree 2n = d/2
// therefore reads haf(I) = haf(I^c) for every 2n-subset I.

#include "curvlab/curvature.hpp"
#include "curvlab/error.hpp"
#include "curvlab/exterior.hpp"
#include "curvlab/linalg.hpp"
#include "curvlab/scalar.hpp"
#include "curvlab/thorpe.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace curvlab {

/// Symmetric d x d table with zero diagonal.
template <class S>
class LambdaTable {
 public:
  explicit LambdaTable(unsigned d) : m_(d, d) {}

  explicit LambdaTable(Matrix<S> m, double tol = kDefaultTol) : m_(std::move(m)) {
    if (!m_.square()) throw DimensionError("lambda table must be square");
    const double scale = std::max(1.0, m_.max_abs());
    for (std::size_t i = 0; i < m_.rows(); ++i) {
      if (!is_zero(m_(i, i), tol, scale))
        throw InconsistentError("lambda table: nonzero diagonal entry at " + std::to_string(i));
      for (std::size_t j = i + 1; j < m_.cols(); ++j)
        if (!nearly_equal(m_(i, j), m_(j, i), tol))
          throw InconsistentError("lambda table: asymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }

  unsigned dim() const { return static_cast<unsigned>(m_.rows()); }
  const Matrix<S>& matrix() const { return m_; }
  const S& operator()(unsigned i, unsigned j) const { return m_(i, j); }

  void set(unsigned i, unsigned j, const S& v) {
    if (i == j) throw InconsistentError("lambda table: diagonal entries are fixed at zero");
    m_(i, j) = v;
    m_(j, i) = v;
  }

  friend bool operator==(const LambdaTable& a, const LambdaTable& b) { return a.m_ == b.m_; }

 private:
  Matrix<S> m_;
};

namespace detail {

inline std::uint64_t subset_mask(std::span<const unsigned> idx) {
  std::uint64_t m = 0;
  for (unsigned i : idx) {
    if (i >= kMaxDim) throw DimensionError("subset index out of range");
    if (m >> i & 1u) throw DimensionError("subset has a repeated index");
    m |= 1ull << i;
  }
  return m;
}

inline std::vector<unsigned> mask_indices(std::uint64_t m) {
  std::vector<unsigned> out;
  for (; m; m &= m - 1) out.push_back(static_cast<unsigned>(std::countr_zero(m)));
  return out;
}

}  // namespace detail

/// Hafnian of principal submatrices, memoized on the index bitmask:
/// haf(I) = sum_{j in I, j > i0} lambda(i0, j) haf(I \ {i0, j}), i0 = min I.
template <class S>
class HafnianEvaluator {
 public:
  explicit HafnianEvaluator(const LambdaTable<S>& table) : table_(table) { memo_.emplace(0ull, S(1)); }

  S operator()(std::uint64_t mask) {
    if (std::popcount(mask) % 2 != 0) throw DimensionError("hafnian needs an even-size index set");
    if (mask >> table_.dim()) throw DimensionError("hafnian index outside the table");
    return eval(mask);
  }

 private:
  S eval(std::uint64_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    unsigned first = static_cast<unsigned>(std::countr_zero(mask));
    std::uint64_t rest = mask & (mask - 1);
    S total(0);
    for (std::uint64_t r = rest; r; r &= r - 1) {
      unsigned j = static_cast<unsigned>(std::countr_zero(r));
      const S& w = table_(first, j);
      if (w == 0) continue;
      total += w * eval(rest & ~(1ull << j));
    }
    memo_.emplace(mask, total);
    return total;
  }

  const LambdaTable<S>& table_;
  std::unordered_map<std::uint64_t, S> memo_;
};

template <class S>
S hafnian(const LambdaTable<S>& table, std::span<const unsigned> subset) {
  return HafnianEvaluator<S>(table)(detail::subset_mask(subset));
}

template <class S>
S hafnian(const LambdaTable<S>& table, std::initializer_list<unsigned> subset) {
  return hafnian(table, std::span<const unsigned>(subset.begin(), subset.size()));
}

/// One line of a complementary-subset criterion.
template <class S>
struct PairCheck {
  std::vector<unsigned> subset;  // I, always containing index 0
  S value;                       // value on I
  S complement_value;            // value on I^c
  bool pass = false;
};

template <class S>
struct CriterionReport {
  bool pass = true;
  std::vector<PairCheck<S>> pairs;

  std::optional<std::vector<unsigned>> first_failure() const {
    for (const auto& p : pairs)
      if (!p.pass) return p.subset;
    return std::nullopt;
  }
};

/// The 2n-subsets of {0..4n-1} containing 0, in lexicographic order; each
/// stands for the pair (I, I^c).
inline std::vector<std::uint64_t> complementary_subsets(unsigned d) {
  if (d % 4 != 0 || d == 0) throw DimensionError("complementary criteria need d = 4n (got " + std::to_string(d) + ")");
  std::vector<std::uint64_t> out;
  for (auto m : BladeBasis(d, d / 2).masks())
    if (m & 1ull) out.push_back(m);
  return out;
}

namespace detail {

template <class S, class F>
CriterionReport<S> complementary_criterion(unsigned d, unsigned workers, double tol, F&& value_of) {
  auto subsets = complementary_subsets(d);
  const std::uint64_t full = full_mask(d);
  CriterionReport<S> report;
  report.pairs.resize(subsets.size());
  parallel_for(subsets.size(), workers, [&](std::size_t k) {
    auto& line = report.pairs[k];
    line.subset = mask_indices(subsets[k]);
    line.value = value_of(subsets[k]);
    line.complement_value = value_of(full & ~subsets[k]);
    line.pass = nearly_equal(line.value, line.complement_value, tol);
  });
  for (const auto& line : report.pairs) report.pass = report.pass && line.pass;
  return report;
}

}  // namespace detail

/// haf(I) = haf(I^c) for every 2n-subset I of {0..4n-1}.
template <class S>
CriterionReport<S> pure_commute_check(const LambdaTable<S>& table, double tol = kDefaultTol, unsigned workers = 1) {
  const unsigned d = table.dim();
  if (d % 4 != 0) throw DimensionError("pure_commute_check requires d = 4n (got " + std::to_string(d) + ")");
  // Each worker needs its own memo table.
  std::vector<HafnianEvaluator<S>> evaluators;
  std::vector<std::uint64_t> subsets = complementary_subsets(d);
  std::vector<S> values(subsets.size()), complements(subsets.size());
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(subsets.size())));
  for (unsigned w = 0; w < workers; ++w) evaluators.emplace_back(table);
  std::vector<std::thread> pool;
  auto run = [&](unsigned w) {
    for (std::size_t k = w; k < subsets.size(); k += workers) {
      values[k] = evaluators[w](subsets[k]);
      complements[k] = evaluators[w](full_mask(d) & ~subsets[k]);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  CriterionReport<S> report;
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    bool ok = nearly_equal(values[k], complements[k], tol);
    report.pairs.push_back({detail::mask_indices(subsets[k]), values[k], complements[k], ok});
    report.pass = report.pass && ok;
  }
  return report;
}

/// lambda_ij = a_i + a_j.
template <class S>
LambdaTable<S> additive_table(const std::vector<S>& a) {
  LambdaTable<S> t(static_cast<unsigned>(a.size()));
  for (unsigned i = 0; i < a.size(); ++i)
    for (unsigned j = i + 1; j < a.size(); ++j) t.set(i, j, a[i] + a[j]);
  return t;
}

/// lambda_ij = a_i a_j.
template <class S>
LambdaTable<S> multiplicative_table(const std::vector<S>& a) {
  LambdaTable<S> t(static_cast<unsigned>(a.size()));
  for (unsigned i = 0; i < a.size(); ++i)
    for (unsigned j = i + 1; j < a.size(); ++j) t.set(i, j, a[i] * a[j]);
  return t;
}

/// The pure tensor with R_ijij = lambda_ij on the Euclidean frame.
template <class S>
CurvatureTensor<S> tensor_from_table(const LambdaTable<S>& table) {
  CurvatureTensor<S> rm(MetricFrame<S>::euclidean(table.dim()));
  for (unsigned i = 0; i < table.dim(); ++i)
    for (unsigned j = i + 1; j < table.dim(); ++j)
      if (table(i, j) != 0) rm.set(i, j, i, j, table(i, j));
  return rm;
}

/// lambda_ij = R_ijij in the given orthonormal frame.
template <class S>
LambdaTable<S> lambda_table(const CurvatureTensor<S>& rm) {
  LambdaTable<S> t(rm.dim());
  for (unsigned i = 0; i < rm.dim(); ++i)
    for (unsigned j = i + 1; j < rm.dim(); ++j) t.set(i, j, rm(i, j, i, j));
  return t;
}

/// Rm = P (x) g with Schouten tensor P = diag(-a); its table is additive in a.
template <class S>
CurvatureTensor<S> lcf_curvature(const std::vector<S>& a) {
  if (a.size() < 4) throw DimensionError("lcf_curvature requires d >= 4");
  auto mf = MetricFrame<S>::euclidean(static_cast<unsigned>(a.size()));
  std::vector<S> minus_a;
  for (const auto& x : a) minus_a.push_back(-x);
  return kulkarni_nomizu(SymmetricTwoTensor<S>::diagonal(mf, minus_a), SymmetricTwoTensor<S>::metric(mf));
}

template <class S>
S elementary_symmetric(unsigned k, const std::vector<S>& values) {
  if (k > values.size())
    throw DimensionError("elementary_symmetric: degree " + std::to_string(k) + " exceeds " +
                         std::to_string(values.size()) + " values");
  std::vector<S> e(k + 1, S(0));
  e[0] = S(1);
  for (const auto& v : values)
    for (unsigned j = k; j >= 1; --j) e[j] += v * e[j - 1];
  return e[k];
}

/// s_n(a_I) = s_n(a_{I^c}) for every 2n-subset I of the 4n values.
template <class S>
CriterionReport<S> lcf_partition_check(const std::vector<S>& a, double tol = kDefaultTol) {
  if (a.size() % 4 != 0 || a.empty()) throw DimensionError("lcf_partition_check needs 4n values");
  const unsigned n = static_cast<unsigned>(a.size() / 4);
  return detail::complementary_criterion<S>(static_cast<unsigned>(a.size()), 1, tol, [&](std::uint64_t m) {
    std::vector<S> sub;
    for (unsigned i : detail::mask_indices(m)) sub.push_back(a[i]);
    return elementary_symmetric<S>(n, sub);
  });
}

/// Rows: r-subsets of {0..N-1}; columns: c-subsets; entry 1 iff column subset
/// is contained in row subset. Both in lexicographic order.
inline Matrix<BigInt> incidence_matrix(unsigned big_n, unsigned r, unsigned c) {
  if (c > r || r > big_n) throw DimensionError("incidence_matrix requires c <= r <= N");
  BladeBasis rows(big_n, r), cols(big_n, c);
  Matrix<BigInt> m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if ((cols.masks()[j] & ~rows.masks()[i]) == 0) m(i, j) = 1;
  return m;
}

inline std::size_t rank_rational(const Matrix<BigInt>& m) { return rank_fraction_free(m); }

inline std::size_t rank_rational(const Matrix<Rational>& m) { return rank(m); }

/// Claims about c S (x) S with S = diag(a), a of length 4n.
template <class S>
struct MultiplicativeZeroReport {
  unsigned zeros = 0;
  bool enough_zeros = false;        // at least 2n+1 zero entries
  bool operator_vanishes = false;   // C_{2n} = 0
  bool product_condition = false;   // prod_I a = prod_{I^c} a for all I
  bool commutes = false;            // * C_{2n} = C_{2n} *
  /// enough_zeros <=> operator_vanishes, and product_condition => commutes.
  bool consistent() const { return enough_zeros == operator_vanishes && (!product_condition || commutes); }
};

template <class S>
MultiplicativeZeroReport<S> multiplicative_zero_check(const std::vector<S>& a, const S& c = S(1), double tol = kDefaultTol) {
  if (a.size() % 4 != 0 || a.empty()) throw DimensionError("multiplicative_zero_check needs 4n values");
  const unsigned d = static_cast<unsigned>(a.size()), n = d / 4;
  auto mf = MetricFrame<S>::euclidean(d);
  auto s = SymmetricTwoTensor<S>::diagonal(mf, a);
  auto op = thorpe_operator(c * kulkarni_nomizu(s, s), 2 * n);
  MultiplicativeZeroReport<S> out;
  for (const auto& x : a) out.zeros += is_zero(x, tol) ? 1u : 0u;
  out.enough_zeros = out.zeros >= 2 * n + 1;
  out.operator_vanishes = op.matrix.is_zero(tol, std::max(1.0, op.matrix.max_abs()));
  auto products = detail::complementary_criterion<S>(d, 1, tol, [&](std::uint64_t m) {
    S prod(1);
    for (unsigned i : detail::mask_indices(m)) prod *= a[i];
    return prod;
  });
  out.product_condition = products.pass;
  out.commutes = commutes_with_star(op, tol).commutes;
  return out;
}

/// Claims about the locally conformally flat tensor with additive table a.
template <class S>
struct AdditiveZeroReport {
  unsigned nonzeros = 0;
  bool few_nonzeros = false;       // at most n-1 nonzero entries
  bool operator_vanishes = false;  // C_{2n} = 0
  bool consistent() const { return few_nonzeros == operator_vanishes; }
};

template <class S>
AdditiveZeroReport<S> additive_zero_check(const std::vector<S>& a, double tol = kDefaultTol) {
  if (a.size() % 4 != 0 || a.empty()) throw DimensionError("additive_zero_check needs 4n values");
  const unsigned d = static_cast<unsigned>(a.size()), n = d / 4;
  auto op = thorpe_operator(lcf_curvature(a), 2 * n);
  AdditiveZeroReport<S> out;
  for (const auto& x : a) out.nonzeros += is_zero(x, tol) ? 0u : 1u;
  out.few_nonzeros = out.nonzeros + 1 <= n;
  out.operator_vanishes = op.matrix.is_zero(tol, std::max(1.0, op.matrix.max_abs()));
  return out;
}

template <class S>
struct EinsteinReport {
  bool einstein = false;  // Ric proportional to g, computed
  bool balance = false;   // (p+ - 1) s+ + (p- - 1) s- = 0
  bool one_block_empty = false;
  bool degenerate = false;  // c = 0 or s+ = s-
  /// Middle-degree commutation, computed when d = 4n.
  std::optional<bool> commutes;
  bool predicted() const { return balance || one_block_empty || degenerate; }
};

/// c S (x) S with S = diag(s+ repeated p+ times, s- repeated p- times).
template <class S>
EinsteinReport<S> einstein_two_eigenvalue(const S& s_plus, const S& s_minus, unsigned p_plus, unsigned p_minus,
                                          const S& c, double tol = kDefaultTol) {
  const unsigned d = p_plus + p_minus;
  if (d < 2) throw DimensionError("einstein_two_eigenvalue needs p+ + p- >= 2");
  auto mf = MetricFrame<S>::euclidean(d);
  std::vector<S> diag(p_plus, s_plus);
  diag.insert(diag.end(), p_minus, s_minus);
  auto s = SymmetricTwoTensor<S>::diagonal(mf, diag);
  auto rm = c * kulkarni_nomizu(s, s);
  EinsteinReport<S> out;
  out.einstein = ricci(rm).proportional_to_metric(tol);
  out.balance = is_zero(S(S(p_plus) - S(1)) * s_plus + S(S(p_minus) - S(1)) * s_minus, tol);
  out.one_block_empty = p_plus == 0 || p_minus == 0;
  out.degenerate = is_zero(c, tol) || nearly_equal(s_plus, s_minus, tol);
  if (d % 4 == 0) out.commutes = commutes_with_star(thorpe_operator(rm, d / 2), tol).commutes;
  return out;
}

/// Table of the product of two 2n-dimensional space forms of curvatures c1, c2
/// in the adapted frame: -c1 on the first block, -c2 on the second, zero on
/// mixed pairs.
template <class S>
LambdaTable<S> product_space_form_table(const S& c1, const S& c2, unsigned n) {
  const unsigned d = 4 * n;
  LambdaTable<S> t(d);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = i + 1; j < d; ++j) {
      bool first = j < 2 * n, second = i >= 2 * n;
      if (first) t.set(i, j, -c1);
      if (second) t.set(i, j, -c2);
    }
  return t;
}

template <class S>
bool product_space_form_commute(const S& c1, const S& c2, unsigned n, double tol = kDefaultTol) {
  if (n == 0) throw DimensionError("product_space_form_commute needs n >= 1");
  return pure_commute_check(product_space_form_table(c1, c2, n), tol).pass;
}

/// The parity rule for nonzero curvatures: c1 = c2 (n odd), c1 = +-c2 (n even).
template <class S>
bool product_space_form_rule(const S& c1, const S& c2, unsigned n) {
  return n % 2 ? c1 == c2 : (c1 == c2 || c1 == -c2);
}

/// Solves a1 b1 = c1, a2 b2 = c2, a1 b2 + a2 b1 = 0; returns (a1, a2, b1, b2).
/// Solvable exactly when c1 c2 <= 0.
inline std::optional<std::array<double, 4>> st_factorization(double c1, double c2) {
  if (c1 == 0) return std::array<double, 4>{0.0, 1.0, 0.0, c2};
  if (c2 == 0) return std::array<double, 4>{1.0, 0.0, c1, 0.0};
  if (c1 * c2 > 0) return std::nullopt;
  double t = std::sqrt(-c2 / c1);
  return std::array<double, 4>{c1, -c2 / t, 1.0, -t};
}

/// Every component off the pattern {i,j} = {k,l} vanishes.
template <class S>
bool is_pure_in_frame(const CurvatureTensor<S>& rm, double tol = kDefaultTol) {
  if (!rm.frame().orthonormal_diagonal()) throw UnsupportedError("is_pure_in_frame requires an orthonormal frame");
  const auto& r2 = rm.pair_matrix();
  const double scale = std::max(1.0, r2.max_abs());
  for (std::size_t a = 0; a < r2.rows(); ++a)
    for (std::size_t b = 0; b < r2.cols(); ++b)
      if (a != b && !is_zero(r2(a, b), tol, scale)) return false;
  return true;
}

namespace detail {

template <class S>
bool vanishes(const S& x, double tol) {
  if constexpr (ScalarTraits<S>::exact)
    return x == 0;
  else
    return std::abs(x) <= tol;
}

template <class S>
bool parallel(const std::vector<S>& x, const std::vector<S>& y, double tol) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (!vanishes(S(x[i] * y[j] - x[j] * y[i]), tol)) return false;
  return true;
}

template <class S>
S dot(const std::vector<S>& x, const std::vector<S>& y) {
  S s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

template <class S>
void normalize(std::vector<S>& v) {
  if constexpr (!ScalarTraits<S>::exact) {
    double n = std::sqrt(dot(v, v));
    for (auto& x : v) x /= n;
  }
}

// The plane {v : v ^ xi = 0} of a decomposable 2-vector, as two spanning vectors.
template <class S>
std::vector<std::vector<S>> plane_of(const PVector<S>& xi, double tol) {
  const unsigned d = xi.dim();
  BladeBasis three(d, 3);
  Matrix<S> m(three.size(), d);
  for (unsigned i = 0; i < d; ++i) {
    auto image = wedge(PVector<S>::blade(d, Blade(1ull << i)), xi);
    for (const auto& [mask, c] : image.terms()) m(three.index_of(Blade(mask)), i) = c;
  }
  return null_space(m, tol);
}

// Direction of span(u) intersect span(w) for two planes, if it is a line.
template <class S>
std::optional<std::vector<S>> meet(const std::vector<std::vector<S>>& u, const std::vector<std::vector<S>>& w,
                                   double tol) {
  const std::size_t d = u[0].size();
  Matrix<S> m(d, 4);
  for (std::size_t i = 0; i < d; ++i) {
    m(i, 0) = u[0][i];
    m(i, 1) = u[1][i];
    m(i, 2) = -w[0][i];
    m(i, 3) = -w[1][i];
  }
  auto ns = null_space(m, tol);
  if (ns.size() != 1) return std::nullopt;
  std::vector<S> line(d);
  for (std::size_t i = 0; i < d; ++i) line[i] = ns[0][0] * u[0][i] + ns[0][1] * u[1][i];
  return line;
}

}  // namespace detail

/// Looks for an orthonormal frame {w_i} of Euclidean R^d in which every given
/// 2-vector is a multiple of some w_i ^ w_j, each pair used once. Lines shared
/// by pairs of planes are the only candidates for frame vectors; mutually
/// orthogonal choices are tried by backtracking. Scale is irrelevant, so the
/// inputs need not be unit. Rational inputs return unnormalized directions.
template <class S>
std::optional<Matrix<S>> frame_alignable(const std::vector<PVector<S>>& blades, double tol = 1e-8) {
  if (blades.empty()) throw DimensionError("frame_alignable: no blades");
  const unsigned d = blades[0].dim();
  const std::size_t count = binomial(d, 2);
  if (blades.size() != count)
    throw DimensionError("frame_alignable: need C(d,2) = " + std::to_string(count) + " blades");
  BladeBasis two(d, 2);
  Matrix<S> coeffs(two.size(), count);
  std::vector<std::vector<std::vector<S>>> planes;
  for (std::size_t k = 0; k < count; ++k) {
    const auto& xi = blades[k];
    if (xi.degree() != 2 || xi.dim() != d) throw DimensionError("frame_alignable: expected 2-vectors in R^d");
    bool square_vanishes = d < 4 || wedge(xi, xi).max_abs() <= (ScalarTraits<S>::exact ? 0.0 : tol);
    planes.push_back(detail::plane_of(xi, tol));
    if (!square_vanishes || planes.back().size() != 2)
      throw InconsistentError("frame_alignable: blade " + std::to_string(k) + " is not decomposable");
    for (const auto& [mask, c] : xi.terms()) coeffs(two.index_of(Blade(mask)), k) = c;
  }
  if (rank(coeffs, tol) != count) throw InconsistentError("frame_alignable: blades are linearly dependent");

  std::vector<std::vector<S>> lines;
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b) {
      auto line = detail::meet(planes[a], planes[b], tol);
      if (!line) continue;
      bool seen = false;
      for (const auto& l : lines) seen = seen || detail::parallel(l, *line, tol);
      if (!seen) {
        detail::normalize(*line);
        lines.push_back(std::move(*line));
      }
    }

  // Which planes contain which candidate lines.
  std::vector<std::vector<bool>> contains(lines.size(), std::vector<bool>(count));
  for (std::size_t l = 0; l < lines.size(); ++l)
    for (std::size_t k = 0; k < count; ++k) {
      auto v = PVector<S>::vector(lines[l]);
      auto w = wedge(v, blades[k]);
      contains[l][k] = w.max_abs() <= (ScalarTraits<S>::exact ? 0.0 : tol * std::max(1.0, blades[k].max_abs()));
    }

  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> search = [&](std::size_t from) -> bool {
    if (chosen.size() == d) {
      // Each blade must contain exactly two chosen lines, every pair used once.
      std::vector<bool> used(d * d, false);
      for (std::size_t k = 0; k < count; ++k) {
        std::vector<std::size_t> in;
        for (std::size_t c = 0; c < d; ++c)
          if (contains[chosen[c]][k]) in.push_back(c);
        if (in.size() != 2 || used[in[0] * d + in[1]]) return false;
        used[in[0] * d + in[1]] = true;
      }
      return true;
    }
    for (std::size_t l = from; l < lines.size(); ++l) {
      bool orthogonal = true;
      for (auto c : chosen) orthogonal = orthogonal && detail::vanishes(detail::dot(lines[c], lines[l]), tol);
      if (!orthogonal) continue;
      chosen.push_back(l);
      if (search(l + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  Matrix<S> frame(d, d);
  for (unsigned c = 0; c < d; ++c)
    for (unsigned i = 0; i < d; ++i) frame(i, c) = lines[chosen[c]][i];
  return frame;
}

}  // namespace curvlab
