#pragma once

// Algebraic curvature tensors at a point.
//
// Conventions (fixed once for the whole library):
//   (S (x) T)_{ijkl} = S_il T_jk + S_jk T_il - S_ik T_jl - S_jl T_ik
//   <C(e_i^e_j), e_k^e_l> = R_{ijkl},  lambda_ij = R_{ijij},  sec = -lambda
//   Ric_{jk} = -sum_i R_{ijik}
// With these, R = W + (1/(d-2)) Ric0 (x) g + scal/(2d(d-1)) g (x) g and an LCF
// tensor P (x) g with P = diag(-a) has lambda_ij = a_i + a_j.

#include "curvlab/error.hpp"
#include "curvlab/exterior.hpp"
#include "curvlab/linalg.hpp"
#include "curvlab/scalar.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace curvlab {

/// Position of e_i^e_j (i < j) in the lexicographic Lambda^2 basis.
inline std::size_t pair_index(unsigned i, unsigned j, unsigned d) {
  return static_cast<std::size_t>(i) * d - static_cast<std::size_t>(i) * (i + 1) / 2 + (j - i - 1);
}

template <class S>
class SymmetricTwoTensor {
 public:
  explicit SymmetricTwoTensor(MetricFrame<S> mf) : mf_(std::move(mf)), m_(mf_.dim(), mf_.dim()) {}

  SymmetricTwoTensor(MetricFrame<S> mf, Matrix<S> m) : mf_(std::move(mf)), m_(std::move(m)) {
    if (m_.rows() != mf_.dim() || !m_.square()) throw DimensionError("two-tensor shape mismatch");
    if (!m_.is_symmetric(0.0)) throw InconsistentError("two-tensor is not symmetric");
  }

  static SymmetricTwoTensor diagonal(const MetricFrame<S>& mf, std::span<const S> values) {
    if (values.size() != mf.dim()) throw DimensionError("diagonal length mismatch");
    SymmetricTwoTensor t(mf);
    for (std::size_t i = 0; i < values.size(); ++i) t.m_(i, i) = values[i];
    return t;
  }

  /// The metric itself as a two-tensor.
  static SymmetricTwoTensor metric(const MetricFrame<S>& mf) { return SymmetricTwoTensor(mf, mf.metric()); }

  unsigned dim() const { return mf_.dim(); }
  const MetricFrame<S>& frame() const { return mf_; }
  const Matrix<S>& matrix() const { return m_; }
  const S& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  void set(std::size_t i, std::size_t j, const S& v) {
    m_(i, j) = v;
    m_(j, i) = v;
  }

  SymmetricTwoTensor& operator+=(const SymmetricTwoTensor& o) {
    m_ += o.m_;
    return *this;
  }
  SymmetricTwoTensor& operator-=(const SymmetricTwoTensor& o) {
    m_ -= o.m_;
    return *this;
  }
  SymmetricTwoTensor& operator*=(const S& k) {
    m_ *= k;
    return *this;
  }
  friend SymmetricTwoTensor operator+(SymmetricTwoTensor a, const SymmetricTwoTensor& b) { return a += b; }
  friend SymmetricTwoTensor operator-(SymmetricTwoTensor a, const SymmetricTwoTensor& b) { return a -= b; }
  friend SymmetricTwoTensor operator*(const S& k, SymmetricTwoTensor a) { return a *= k; }
  friend bool operator==(const SymmetricTwoTensor& a, const SymmetricTwoTensor& b) { return a.m_ == b.m_; }

  /// True when the tensor is c * g for some scalar c.
  bool proportional_to_metric(double tol = kDefaultTol) const {
    const auto& g = mf_.metric();
    std::optional<S> ratio;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) {
        if (g(i, j) == 0) {
          if (!is_zero(m_(i, j), tol, m_.max_abs())) return false;
          continue;
        }
        S r = m_(i, j) / g(i, j);
        if (!ratio) ratio = r;
        else if (!nearly_equal(*ratio, r, tol)) return false;
      }
    return true;
  }

 private:
  MetricFrame<S> mf_;
  Matrix<S> m_;
};

/// Curvature 4-tensor stored as a symmetric matrix on the Lambda^2 basis, so
/// antisymmetry in each pair and pair symmetry hold by construction.
template <class S>
class CurvatureTensor {
 public:
  explicit CurvatureTensor(MetricFrame<S> mf) : mf_(std::move(mf)), r2_(pairs(), pairs()) {}

  /// From a symmetric matrix R(b1; b2) on the canonical Lambda^2 basis.
  CurvatureTensor(MetricFrame<S> mf, Matrix<S> pair_matrix) : mf_(std::move(mf)), r2_(std::move(pair_matrix)) {
    if (r2_.rows() != pairs() || !r2_.square()) throw DimensionError("pair matrix shape mismatch");
    if (!r2_.is_symmetric(0.0)) throw InconsistentError("pair matrix is not symmetric");
  }

  unsigned dim() const { return mf_.dim(); }
  const MetricFrame<S>& frame() const { return mf_; }
  const Matrix<S>& pair_matrix() const { return r2_; }
  std::size_t pairs() const { return static_cast<std::size_t>(mf_.dim()) * (mf_.dim() - 1) / 2; }

  S operator()(unsigned i, unsigned j, unsigned k, unsigned l) const {
    if (i == j || k == l) return S(0);
    int sign = 1;
    if (i > j) std::swap(i, j), sign = -sign;
    if (k > l) std::swap(k, l), sign = -sign;
    const S& v = r2_(pair_index(i, j, dim()), pair_index(k, l, dim()));
    return sign > 0 ? v : S(-v);
  }

  /// Sets R_{ijkl} and every entry related to it by the pair symmetries.
  void set(unsigned i, unsigned j, unsigned k, unsigned l, const S& value) {
    if (i >= dim() || j >= dim() || k >= dim() || l >= dim()) throw DimensionError("index out of range");
    if (i == j || k == l) {
      if (value != 0) throw InconsistentError("R_{iikl} must vanish");
      return;
    }
    int sign = 1;
    if (i > j) std::swap(i, j), sign = -sign;
    if (k > l) std::swap(k, l), sign = -sign;
    S v = sign > 0 ? value : S(-value);
    auto a = pair_index(i, j, dim()), b = pair_index(k, l, dim());
    r2_(a, b) = v;
    r2_(b, a) = v;
  }

  CurvatureTensor& operator+=(const CurvatureTensor& o) {
    check_frame(o);
    r2_ += o.r2_;
    return *this;
  }
  CurvatureTensor& operator-=(const CurvatureTensor& o) {
    check_frame(o);
    r2_ -= o.r2_;
    return *this;
  }
  CurvatureTensor& operator*=(const S& k) {
    r2_ *= k;
    return *this;
  }
  friend CurvatureTensor operator+(CurvatureTensor a, const CurvatureTensor& b) { return a += b; }
  friend CurvatureTensor operator-(CurvatureTensor a, const CurvatureTensor& b) { return a -= b; }
  friend CurvatureTensor operator*(const S& k, CurvatureTensor a) { return a *= k; }
  friend bool operator==(const CurvatureTensor& a, const CurvatureTensor& b) {
    return a.mf_ == b.mf_ && a.r2_ == b.r2_;
  }

  bool nearly_equal(const CurvatureTensor& o, double tol = kDefaultTol) const {
    return mf_ == o.mf_ && curvlab::nearly_equal(r2_, o.r2_, tol);
  }

  bool is_zero(double tol = kDefaultTol) const { return r2_.is_zero(tol); }
  double max_abs() const { return r2_.max_abs(); }

  template <class T>
  CurvatureTensor<T> cast() const {
    return CurvatureTensor<T>(mf_.template cast<T>(), r2_.template cast<T>());
  }

  /// Canonical components (i<j, k<l, (i,j) <= (k,l)), nonzero only.
  std::vector<std::pair<std::array<unsigned, 4>, S>> components() const {
    std::vector<std::pair<std::array<unsigned, 4>, S>> out;
    BladeBasis b(dim(), 2);
    for (std::size_t a = 0; a < b.size(); ++a)
      for (std::size_t c = a; c < b.size(); ++c) {
        if (r2_(a, c) == 0) continue;
        auto ia = b[a].indices(), ic = b[c].indices();
        out.push_back({{unsigned(ia[0]), unsigned(ia[1]), unsigned(ic[0]), unsigned(ic[1])}, r2_(a, c)});
      }
    return out;
  }

 private:
  void check_frame(const CurvatureTensor& o) const {
    if (!(o.mf_ == mf_)) throw DimensionError("curvature tensors live over different frames");
  }

  MetricFrame<S> mf_;
  Matrix<S> r2_;
};

/// Kulkarni-Nomizu product, symmetrized in (S, T).
template <class S>
CurvatureTensor<S> kulkarni_nomizu(const SymmetricTwoTensor<S>& s, const SymmetricTwoTensor<S>& t) {
  if (!(s.frame() == t.frame())) throw DimensionError("kulkarni_nomizu: frame mismatch");
  const unsigned d = s.dim();
  CurvatureTensor<S> out(s.frame());
  auto kn = [](const SymmetricTwoTensor<S>& a, const SymmetricTwoTensor<S>& b, unsigned i, unsigned j,
               unsigned k, unsigned l) {
    return a(i, l) * b(j, k) + a(j, k) * b(i, l) - a(i, k) * b(j, l) - a(j, l) * b(i, k);
  };
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = i + 1; j < d; ++j)
      for (unsigned k = i; k < d; ++k)
        for (unsigned l = k + 1; l < d; ++l) {
          if (k == i && l < j) continue;
          S v = (kn(s, t, i, j, k, l) + kn(t, s, i, j, k, l)) / S(2);
          out.set(i, j, k, l, v);
        }
  return out;
}

/// Ric_{jk} = -sum_i R_{ijik}; requires an oriented Euclidean orthonormal frame.
template <class S>
SymmetricTwoTensor<S> ricci(const CurvatureTensor<S>& rm) {
  if (!rm.frame().euclidean_orthonormal())
    throw UnsupportedError("ricci requires a Euclidean orthonormal frame");
  const unsigned d = rm.dim();
  SymmetricTwoTensor<S> ric(rm.frame());
  for (unsigned j = 0; j < d; ++j)
    for (unsigned k = j; k < d; ++k) {
      S sum(0);
      for (unsigned i = 0; i < d; ++i) sum -= rm(i, j, i, k);
      ric.set(j, k, sum);
    }
  return ric;
}

template <class S>
S scalar_curvature(const SymmetricTwoTensor<S>& ric) {
  S s(0);
  for (unsigned i = 0; i < ric.dim(); ++i) s += ric(i, i);
  return s;
}

template <class S>
struct Decomposition {
  CurvatureTensor<S> weyl;
  SymmetricTwoTensor<S> ricci;
  S scal;
  SymmetricTwoTensor<S> schouten;
  SymmetricTwoTensor<S> traceless_ricci;
};

/// Splits Rm into Weyl, traceless-Ricci and scalar parts.
template <class S>
Decomposition<S> decompose(const CurvatureTensor<S>& rm) {
  const unsigned d = rm.dim();
  if (d < 4) throw UnsupportedError("decompose requires d >= 4");
  auto ric = ricci(rm);
  S scal = scalar_curvature(ric);
  auto g = SymmetricTwoTensor<S>::metric(rm.frame());
  auto ric0 = ric - (scal / S(d)) * g;
  auto schouten = (S(1) / S(d - 2)) * (ric - (scal / S(2 * (d - 1))) * g);
  auto weyl = rm - kulkarni_nomizu(schouten, g);
  return {std::move(weyl), std::move(ric), scal, std::move(schouten), std::move(ric0)};
}

/// Largest |R_ijkl + R_iklj + R_iljk| over all index quadruples. With the pair
/// symmetries built into storage only 4-subsets can violate it.
template <class S>
S bianchi_violation(const CurvatureTensor<S>& rm) {
  const unsigned d = rm.dim();
  S worst(0);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = i + 1; j < d; ++j)
      for (unsigned k = j + 1; k < d; ++k)
        for (unsigned l = k + 1; l < d; ++l) {
          S v = ScalarTraits<S>::abs(rm(i, j, k, l) + rm(i, k, l, j) + rm(i, l, j, k));
          if (v > worst) worst = v;
        }
  return worst;
}

template <class S>
bool validate_bianchi(const CurvatureTensor<S>& rm, double tol = kDefaultTol) {
  return is_zero(bianchi_violation(rm), tol, rm.max_abs());
}

/// Curvature operator on Lambda^2: <C(b1), b2> = R(b1; b2), i.e. G2 M = R2.
template <class S>
OperatorMatrix<S> raise_to_lambda2(const CurvatureTensor<S>& rm) {
  const auto& mf = rm.frame();
  OperatorMatrix<S> op{rm.dim(), 2, Matrix<S>(rm.pairs(), rm.pairs())};
  if (mf.is_diagonal()) {
    BladeBasis b(rm.dim(), 2);
    for (std::size_t r = 0; r < b.size(); ++r) {
      S gr = blade_inner(b.masks()[r], b.masks()[r], mf);
      for (std::size_t c = 0; c < b.size(); ++c)
        if (rm.pair_matrix()(r, c) != 0) op.matrix(r, c) = rm.pair_matrix()(r, c) / gr;
    }
    return op;
  }
  op.matrix = solve(gram_matrix(mf, 2), rm.pair_matrix());
  return op;
}

/// p-th compound of a square matrix: entry (I, J) is the minor det Q[I, J] over
/// canonical Lambda^p bases. Acts on p-vectors as the induced map of Q.
template <class S>
Matrix<S> compound(const Matrix<S>& q, unsigned p) {
  const unsigned d = static_cast<unsigned>(q.rows());
  BladeBasis b(d, p);
  Matrix<S> out(b.size(), b.size());
  std::vector<std::vector<int>> idx;
  for (auto m : b.masks()) idx.push_back(Blade(m).indices());
  Matrix<S> sub(p, p);
  for (std::size_t r = 0; r < b.size(); ++r)
    for (std::size_t c = 0; c < b.size(); ++c) {
      for (unsigned x = 0; x < p; ++x)
        for (unsigned y = 0; y < p; ++y) sub(x, y) = q(idx[r][x], idx[c][y]);
      out(r, c) = determinant(sub);
    }
  return out;
}

/// Components of Rm with respect to the frame f_a = sum_i Q_ia e_i (the
/// columns of Q); the metric becomes Q^T g Q.
template <class S>
CurvatureTensor<S> change_frame(const CurvatureTensor<S>& rm, const Matrix<S>& q) {
  if (q.rows() != rm.dim() || !q.square()) throw DimensionError("change_frame: shape mismatch");
  Matrix<S> c2 = compound(q, 2);
  Matrix<S> r2 = c2.transpose() * rm.pair_matrix() * c2;
  Matrix<S> g = q.transpose() * rm.frame().metric() * q;
  if constexpr (!ScalarTraits<S>::exact) {
    // Restore exact symmetry lost to rounding, and snap a numerically
    // orthonormal metric back to its exact diagonal form.
    for (std::size_t a = 0; a < r2.rows(); ++a)
      for (std::size_t b = a + 1; b < r2.cols(); ++b) r2(a, b) = r2(b, a) = (r2(a, b) + r2(b, a)) / 2;
    for (std::size_t a = 0; a < g.rows(); ++a)
      for (std::size_t b = 0; b < g.cols(); ++b) {
        double v = g(a, b);
        for (double snap : {-1.0, 0.0, 1.0})
          if (std::abs(v - snap) < 1e-12) v = snap;
        g(a, b) = v;
      }
    for (std::size_t a = 0; a < g.rows(); ++a)
      for (std::size_t b = a + 1; b < g.cols(); ++b) g(a, b) = g(b, a) = (g(a, b) + g(b, a)) / 2;
  }
  int orientation = determinant(q) > 0 ? rm.frame().orientation() : -rm.frame().orientation();
  return CurvatureTensor<S>(MetricFrame<S>(std::move(g), orientation), std::move(r2));
}

}  // namespace curvlab
