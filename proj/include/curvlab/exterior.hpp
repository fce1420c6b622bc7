#pragma once

// Exterior algebra over a d-dimensional real inner-product space.
//
// A blade e_{i1}^...^e_{ip} (i1 < ... < ip) is a bitmask; p-vectors are sparse
// maps from blade masks to coefficients. Bases of Lambda^p are always listed in
// lexicographic order of the index sequence, which is the ordering every
// operator matrix in this library uses.

#include "curvlab/error.hpp"
#include "curvlab/linalg.hpp"
#include "curvlab/scalar.hpp"

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace curvlab {

inline constexpr unsigned kMaxDim = 63;

/// Sign (+1/-1) of the permutation sorting the concatenation (indices of a,
/// indices of b); 0 when a and b share an index.
inline int wedge_sign(std::uint64_t a, std::uint64_t b) {
  if (a & b) return 0;
  int inversions = 0;
  for (std::uint64_t rest = b; rest; rest &= rest - 1) {
    unsigned j = static_cast<unsigned>(std::countr_zero(rest));
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

inline std::uint64_t full_mask(unsigned d) { return d >= 64 ? ~0ull : ((1ull << d) - 1); }

class Blade {
 public:
  constexpr Blade() = default;
  constexpr explicit Blade(std::uint64_t mask) : mask_(mask) {}

  /// Throws unless the indices are strictly increasing and below kMaxDim.
  static Blade from_indices(std::span<const int> indices) {
    std::uint64_t m = 0;
    int prev = -1;
    for (int i : indices) {
      if (i <= prev || i >= static_cast<int>(kMaxDim))
        throw DimensionError("blade indices must be strictly increasing in [0, 63)");
      m |= 1ull << i;
      prev = i;
    }
    return Blade(m);
  }
  static Blade from_indices(std::initializer_list<int> indices) {
    return from_indices(std::span<const int>(indices.begin(), indices.size()));
  }

  constexpr std::uint64_t mask() const { return mask_; }
  unsigned degree() const { return static_cast<unsigned>(std::popcount(mask_)); }
  bool contains(unsigned i) const { return (mask_ >> i) & 1u; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint64_t rest = mask_; rest; rest &= rest - 1)
      out.push_back(std::countr_zero(rest));
    return out;
  }

  Blade complement(unsigned d) const { return Blade(full_mask(d) & ~mask_); }

  std::string to_string() const {
    if (mask_ == 0) return "1";
    std::string s;
    for (int i : indices()) {
      if (!s.empty()) s += "^";
      s += "e" + std::to_string(i);
    }
    return s;
  }

  friend constexpr bool operator==(Blade a, Blade b) { return a.mask_ == b.mask_; }

 private:
  std::uint64_t mask_ = 0;
};

/// Canonical (lexicographic) basis of Lambda^p(R^d).
class BladeBasis {
 public:
  BladeBasis(unsigned d, unsigned p) : dim_(d), degree_(p) {
    if (d > kMaxDim) throw DimensionError("dimension exceeds 63");
    if (p > d) throw DimensionError("degree exceeds dimension");
    std::vector<int> current;
    generate(0, current);
    index_.reserve(masks_.size());
    for (std::size_t i = 0; i < masks_.size(); ++i) index_.emplace(masks_[i], i);
  }

  unsigned dim() const { return dim_; }
  unsigned degree() const { return degree_; }
  std::size_t size() const { return masks_.size(); }
  Blade operator[](std::size_t i) const { return Blade(masks_[i]); }
  const std::vector<std::uint64_t>& masks() const& { return masks_; }
  std::vector<std::uint64_t> masks() && { return std::move(masks_); }

  std::size_t index_of(Blade b) const {
    auto it = index_.find(b.mask());
    if (it == index_.end()) throw DimensionError("blade " + b.to_string() + " not in basis");
    return it->second;
  }

 private:
  void generate(int start, std::vector<int>& current) {
    if (current.size() == degree_) {
      masks_.push_back(Blade::from_indices(current).mask());
      return;
    }
    for (int i = start; i < static_cast<int>(dim_); ++i) {
      current.push_back(i);
      generate(i + 1, current);
      current.pop_back();
    }
  }

  unsigned dim_;
  unsigned degree_;
  std::vector<std::uint64_t> masks_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Homogeneous element of Lambda^p(R^d). Zero coefficients are never stored.
template <class S>
class PVector {
 public:
  using Terms = std::map<std::uint64_t, S>;

  PVector(unsigned dim, unsigned degree) : dim_(dim), degree_(degree) {
    if (degree > dim) throw DimensionError("p-vector degree exceeds dimension");
  }

  static PVector blade(unsigned dim, Blade b, const S& coeff = S(1)) {
    PVector v(dim, b.degree());
    if (b.mask() & ~full_mask(dim)) throw DimensionError("blade index outside dimension");
    v.add_term(b.mask(), coeff);
    return v;
  }

  /// Degree-1 vector from coordinates.
  static PVector vector(std::span<const S> coords) {
    PVector v(static_cast<unsigned>(coords.size()), 1);
    for (std::size_t i = 0; i < coords.size(); ++i) v.add_term(1ull << i, coords[i]);
    return v;
  }

  static PVector from_dense(const BladeBasis& basis, std::span<const S> coeffs) {
    PVector v(basis.dim(), basis.degree());
    for (std::size_t i = 0; i < basis.size(); ++i) v.add_term(basis.masks()[i], coeffs[i]);
    return v;
  }

  unsigned dim() const { return dim_; }
  unsigned degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(Blade b) const {
    auto it = terms_.find(b.mask());
    return it == terms_.end() ? S(0) : it->second;
  }

  void add_term(std::uint64_t mask, const S& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(mask, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::vector<S> to_dense(const BladeBasis& basis) const {
    if (basis.degree() != degree_ || basis.dim() != dim_) throw DimensionError("basis mismatch");
    std::vector<S> out(basis.size(), S(0));
    for (const auto& [m, c] : terms_) out[basis.index_of(Blade(m))] = c;
    return out;
  }

  PVector& operator+=(const PVector& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  PVector& operator-=(const PVector& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  PVector& operator*=(const S& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= k;
    return *this;
  }

  friend PVector operator+(PVector a, const PVector& b) { return a += b; }
  friend PVector operator-(PVector a, const PVector& b) { return a -= b; }
  friend PVector operator*(const S& k, PVector a) { return a *= k; }

  friend bool operator==(const PVector& a, const PVector& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Coefficient-wise comparison within `tol` (exact for rationals).
  bool nearly_equal(const PVector& o, double tol = kDefaultTol) const {
    if (dim_ != o.dim_ || degree_ != o.degree_) return false;
    if constexpr (ScalarTraits<S>::exact) {
      return *this == o;
    } else {
      PVector diff = *this - o;
      double scale = std::max(max_abs(), o.max_abs());
      for (const auto& [m, c] : diff.terms_)
        if (!curvlab::is_zero(c, tol, scale)) return false;
      return true;
    }
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& [k, c] : terms_) m = std::max(m, std::abs(scalar_cast<double>(c)));
    return m;
  }

 private:
  void check_compatible(const PVector& o) const {
    if (o.dim_ != dim_ || o.degree_ != degree_)
      throw DimensionError("p-vector degree/dimension mismatch");
  }

  unsigned dim_;
  unsigned degree_;
  Terms terms_;
};

/// Bilinear, associative, graded-anticommutative product.
template <class S>
PVector<S> wedge(const PVector<S>& a, const PVector<S>& b) {
  if (a.dim() != b.dim()) throw DimensionError("wedge: dimension mismatch");
  if (a.degree() + b.degree() > a.dim())
    throw DimensionError("wedge: degree " + std::to_string(a.degree() + b.degree()) +
                         " exceeds dimension " + std::to_string(a.dim()));
  PVector<S> out(a.dim(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int sign = wedge_sign(ma, mb);
      if (sign == 0) continue;
      S prod = ca * cb;
      out.add_term(ma | mb, sign > 0 ? prod : S(-prod));
    }
  }
  return out;
}

/// Metric and orientation of the underlying vector space, with respect to the
/// coordinate basis e_0..e_{d-1}.
template <class S>
class MetricFrame {
 public:
  static MetricFrame euclidean(unsigned d) { return MetricFrame(Matrix<S>::identity(d), 1); }

  /// Throws unless the metric is symmetric and nondegenerate.
  MetricFrame(Matrix<S> metric, int orientation = 1) : metric_(std::move(metric)), orientation_(orientation) {
    if (!metric_.square() || metric_.rows() == 0 || metric_.rows() > kMaxDim)
      throw DimensionError("metric must be square with 1 <= d <= 63");
    if (orientation != 1 && orientation != -1) throw DimensionError("orientation must be +1 or -1");
    if (!metric_.is_symmetric(0.0)) throw InconsistentError("metric is not symmetric");
    if (is_zero(determinant(metric_), 0.0)) throw SingularError("metric is degenerate");
    orthonormal_diagonal_ = true;
    for (std::size_t i = 0; i < metric_.rows(); ++i)
      for (std::size_t j = 0; j < metric_.cols(); ++j) {
        const S& v = metric_(i, j);
        if (i == j ? (v != 1 && v != -1) : v != 0) orthonormal_diagonal_ = false;
      }
  }

  unsigned dim() const { return static_cast<unsigned>(metric_.rows()); }
  const Matrix<S>& metric() const { return metric_; }
  int orientation() const { return orientation_; }
  bool orthonormal_diagonal() const { return orthonormal_diagonal_; }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < metric_.rows(); ++i)
      for (std::size_t j = 0; j < metric_.cols(); ++j)
        if (i != j && metric_(i, j) != 0) return false;
    return true;
  }

  /// Orthonormal-diagonal with every diagonal entry +1.
  bool euclidean_orthonormal() const {
    if (!orthonormal_diagonal_) return false;
    for (std::size_t i = 0; i < metric_.rows(); ++i)
      if (metric_(i, i) != 1) return false;
    return true;
  }

  void require_oriented_euclidean(const char* what) const {
    if (!euclidean_orthonormal() || orientation_ != 1)
      throw UnsupportedError(std::string(what) +
                             " requires an oriented Euclidean orthonormal frame");
  }

  template <class T>
  MetricFrame<T> cast() const {
    return MetricFrame<T>(metric_.template cast<T>(), orientation_);
  }

  friend bool operator==(const MetricFrame& a, const MetricFrame& b) {
    return a.orientation_ == b.orientation_ && a.metric_ == b.metric_;
  }

 private:
  Matrix<S> metric_;
  int orientation_ = 1;
  bool orthonormal_diagonal_ = false;
};

/// <e_I, e_J> = det[g(e_i, e_j)]_{i in I, j in J}.
template <class S>
S blade_inner(std::uint64_t a, std::uint64_t b, const MetricFrame<S>& mf) {
  const auto& g = mf.metric();
  if (mf.is_diagonal()) {
    if (a != b) return S(0);
    S prod(1);
    for (std::uint64_t rest = a; rest; rest &= rest - 1) {
      auto i = static_cast<std::size_t>(std::countr_zero(rest));
      prod *= g(i, i);
    }
    return prod;
  }
  auto ia = Blade(a).indices();
  auto ib = Blade(b).indices();
  Matrix<S> sub(ia.size(), ib.size());
  for (std::size_t r = 0; r < ia.size(); ++r)
    for (std::size_t c = 0; c < ib.size(); ++c) sub(r, c) = g(ia[r], ib[c]);
  return ia.empty() ? S(1) : determinant(sub);
}

template <class S>
S gram_inner(const PVector<S>& a, const PVector<S>& b, const MetricFrame<S>& mf) {
  if (a.degree() != b.degree()) throw DimensionError("gram_inner: degree mismatch");
  if (a.dim() != mf.dim() || b.dim() != mf.dim()) throw DimensionError("gram_inner: dimension mismatch");
  S sum(0);
  if (mf.is_diagonal()) {
    for (const auto& [m, c] : a.terms()) {
      auto it = b.terms().find(m);
      if (it != b.terms().end()) sum += c * it->second * blade_inner(m, m, mf);
    }
    return sum;
  }
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) sum += ca * cb * blade_inner(ma, mb, mf);
  return sum;
}

/// Gram matrix of the canonical Lambda^p basis.
template <class S>
Matrix<S> gram_matrix(const MetricFrame<S>& mf, unsigned p) {
  BladeBasis basis(mf.dim(), p);
  Matrix<S> g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      g(i, j) = blade_inner(basis.masks()[i], basis.masks()[j], mf);
      g(j, i) = g(i, j);
    }
  return g;
}

/// Sign s with *e_I = s e_{I^c} for the oriented Euclidean frame of R^d.
inline int star_sign(std::uint64_t mask, unsigned d) { return wedge_sign(mask, full_mask(d) & ~mask); }

/// Hodge star, defined by xi ^ *eta = <xi, eta> e_0^...^e_{d-1}.
template <class S>
PVector<S> hodge_star(const PVector<S>& a, const MetricFrame<S>& mf) {
  mf.require_oriented_euclidean("hodge_star");
  if (a.dim() != mf.dim()) throw DimensionError("hodge_star: dimension mismatch");
  const unsigned d = mf.dim();
  PVector<S> out(d, d - a.degree());
  for (const auto& [m, c] : a.terms()) {
    std::uint64_t comp = full_mask(d) & ~m;
    out.add_term(comp, star_sign(m, d) > 0 ? c : S(-c));
  }
  return out;
}

/// Matrix of * : Lambda^p -> Lambda^{d-p} in the canonical bases.
template <class S>
Matrix<S> hodge_matrix(unsigned d, unsigned p) {
  BladeBasis from(d, p), to(d, d - p);
  Matrix<S> m(to.size(), from.size());
  for (std::size_t j = 0; j < from.size(); ++j) {
    std::uint64_t mask = from.masks()[j];
    m(to.index_of(Blade(full_mask(d) & ~mask)), j) = S(star_sign(mask, d));
  }
  return m;
}

/// Middle-degree star in the adapted ordering: position k (a blade containing
/// e_0) pairs with its complement at position k + N/2.
template <class S>
struct StarMatrix {
  std::vector<Blade> ordering;
  Matrix<S> matrix;
};

template <class S>
StarMatrix<S> star_matrix(unsigned d, unsigned p) {
  if (d % 2 != 0 || 2 * p != d) throw DimensionError("star_matrix requires even d and p = d/2");
  BladeBasis basis(d, p);
  StarMatrix<S> out;
  for (auto m : basis.masks())
    if (m & 1ull) out.ordering.push_back(Blade(m));
  const std::size_t half = out.ordering.size();
  for (std::size_t k = 0; k < half; ++k) out.ordering.push_back(out.ordering[k].complement(d));
  out.matrix = Matrix<S>(2 * half, 2 * half);
  for (std::size_t k = 0; k < half; ++k) {
    S s(star_sign(out.ordering[k].mask(), d));
    out.matrix(k + half, k) = s;
    out.matrix(k, k + half) = s;
  }
  return out;
}

/// Self-map of Lambda^p represented in the canonical blade ordering; column j
/// holds the image of basis blade j.
template <class S>
struct OperatorMatrix {
  unsigned dim = 0;
  unsigned degree = 0;
  Matrix<S> matrix;

  BladeBasis basis() const { return BladeBasis(dim, degree); }

  PVector<S> apply(const PVector<S>& v) const {
    if (v.degree() != degree || v.dim() != dim) throw DimensionError("operator/p-vector mismatch");
    BladeBasis b = basis();
    auto x = v.to_dense(b);
    std::vector<S> y(b.size(), S(0));
    for (std::size_t r = 0; r < b.size(); ++r)
      for (std::size_t c = 0; c < b.size(); ++c)
        if (x[c] != 0 && matrix(r, c) != 0) y[r] += matrix(r, c) * x[c];
    return PVector<S>::from_dense(b, y);
  }

  bool is_zero(double tol = kDefaultTol) const { return matrix.is_zero(tol); }

  template <class T>
  OperatorMatrix<T> cast() const {
    return OperatorMatrix<T>{dim, degree, matrix.template cast<T>()};
  }
};

/// M^T G = G M: self-adjointness with respect to the Gram matrix G.
template <class S>
bool is_self_adjoint(const OperatorMatrix<S>& op, const MetricFrame<S>& mf, double tol = kDefaultTol) {
  Matrix<S> g = gram_matrix(mf, op.degree);
  return nearly_equal(Matrix<S>(op.matrix.transpose() * g), Matrix<S>(g * op.matrix), tol);
}

}  // namespace curvlab
