#pragma once

// Named point-curvature models with machine-checkable property tags.
//
// Tag vocabulary:
//   bianchi            first Bianchi identity holds
//   flat / C2!=0       curvature operator zero / nonzero
//   pure               off-pattern components vanish in the generating frame
//   Einstein           Ricci proportional to the metric
//   weyl-free          Weyl part vanishes
//   trace-free         Ricci vanishes
//   commutes@p=N       *C_N = C_N*           fails@p=N        the opposite
//   weyl-commutes@p=N  *W_N = W_N*           weyl-fails@p=N   the opposite
//   Cp=0@p=N           C_N vanishes

#include "curvlab/curvature.hpp"
#include "curvlab/error.hpp"
#include "curvlab/pure.hpp"
#include "curvlab/scalar.hpp"
#include "curvlab/thorpe.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace curvlab {

enum class Signature { riemannian, lorentzian };

inline const char* to_string(Signature s) { return s == Signature::riemannian ? "Riemannian" : "Lorentzian"; }

template <class S>
struct ZooEntry {
  std::string name;
  unsigned dim = 0;
  Signature signature = Signature::riemannian;
  std::vector<std::pair<std::string, std::string>> params;
  CurvatureTensor<S> tensor;
  std::vector<std::string> tags;

  bool has_tag(const std::string& t) const { return std::find(tags.begin(), tags.end(), t) != tags.end(); }
};

namespace detail {

inline std::string tag_at(const char* stem, unsigned p) { return std::string(stem) + "@p=" + std::to_string(p); }

template <class S>
std::string param_string(const S& x) {
  return ScalarTraits<S>::to_string(x);
}

template <class S>
ZooEntry<S> make_entry(std::string name, CurvatureTensor<S> rm, std::vector<std::pair<std::string, std::string>> params,
                       Signature sig = Signature::riemannian) {
  ZooEntry<S> e{std::move(name), rm.dim(), sig, std::move(params), std::move(rm), {}};
  e.tags.push_back("bianchi");
  e.tags.push_back(e.tensor.is_zero() ? "flat" : "C2!=0");
  return e;
}

/// Small rationals from a seeded stream; the same seed gives the same values.
class RationalStream {
 public:
  explicit RationalStream(std::uint64_t seed) : rng_(seed) {}
  Rational next(int range = 4, int den = 3) {
    int num = static_cast<int>(rng_() % static_cast<std::uint64_t>(2 * range + 1)) - range;
    int q = 1 + static_cast<int>(rng_() % static_cast<std::uint64_t>(den));
    return Rational(num, q);
  }
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 rng_;
};

inline CurvatureTensor<Rational> random_kn_sum(RationalStream& rs, unsigned d, unsigned terms) {
  auto mf = MetricFrame<Rational>::euclidean(d);
  CurvatureTensor<Rational> rm(mf);
  for (unsigned k = 0; k < terms; ++k) {
    SymmetricTwoTensor<Rational> s(mf), t(mf);
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = i; j < d; ++j) {
        s.set(i, j, rs.next());
        t.set(i, j, rs.next());
      }
    rm += kulkarni_nomizu(s, t);
  }
  return rm;
}

template <class S>
CurvatureTensor<S> space_form_tensor(const MetricFrame<S>& mf, const S& lambda) {
  auto g = SymmetricTwoTensor<S>::metric(mf);
  return S(-lambda / 2) * kulkarni_nomizu(g, g);
}

}  // namespace detail

/// Every 2-blade is a lambda-eigenvector of the curvature operator.
template <class S = Rational>
ZooEntry<S> space_form(unsigned d, const S& lambda) {
  if (d < 2) throw DimensionError("space_form needs d >= 2");
  auto e = detail::make_entry("space_form", detail::space_form_tensor(MetricFrame<S>::euclidean(d), lambda),
                              {{"dim", std::to_string(d)}, {"lambda", detail::param_string(lambda)}});
  e.tags.push_back("pure");
  if (d >= 4) e.tags.push_back("weyl-free");
  e.tags.push_back("Einstein");
  if (d % 4 == 0) e.tags.push_back(detail::tag_at("commutes", d / 2));
  return e;
}

/// Product of space forms of dimensions d1, d2 and sectional curvatures c1, c2,
/// so the table reads -c1 on the first block, -c2 on the second, 0 across.
template <class S = Rational>
ZooEntry<S> product_space_forms(unsigned d1, const S& c1, unsigned d2, const S& c2) {
  if (d1 % 2 || d2 % 2 || d1 == 0 || d2 == 0) throw DimensionError("product_space_forms needs even positive dimensions");
  const unsigned d = d1 + d2;
  auto mf = MetricFrame<S>::euclidean(d);
  std::vector<S> first(d, S(0)), second(d, S(0));
  for (unsigned i = 0; i < d; ++i) (i < d1 ? first : second)[i] = S(1);
  auto g1 = SymmetricTwoTensor<S>::diagonal(mf, first), g2 = SymmetricTwoTensor<S>::diagonal(mf, second);
  auto rm = S(c1 / 2) * kulkarni_nomizu(g1, g1) + S(c2 / 2) * kulkarni_nomizu(g2, g2);
  auto e = detail::make_entry("product_space_forms", std::move(rm),
                              {{"d1", std::to_string(d1)},
                               {"c1", detail::param_string(c1)},
                               {"d2", std::to_string(d2)},
                               {"c2", detail::param_string(c2)}});
  e.tags.push_back("pure");
  if (S(c1 * S(d1 - 1)) == S(c2 * S(d2 - 1))) e.tags.push_back("Einstein");
  if (d1 == d2 && d % 4 == 0 && c1 != 0 && c2 != 0) {
    bool rule = product_space_form_rule(c1, c2, d1 / 2);
    e.tags.push_back(detail::tag_at(rule ? "commutes" : "fails", d / 2));
  }
  unsigned support = (c1 != 0 ? d1 : 0) + (c2 != 0 ? d2 : 0);
  if (c1 == 0 || c2 == 0)
    for (unsigned p = std::max(support + 2, 2u); p <= d; p += 2) e.tags.push_back(detail::tag_at("Cp=0", p));
  return e;
}

/// Holomorphic sectional curvature sign*c on R^{2m} with omega(e_{2k}, e_{2k+1}) = 1:
/// R = (c/4)[g g - g g + w w - w w + 2 w(X,Y) w(Z,W)].
template <class S = Rational>
ZooEntry<S> complex_space_form(unsigned m, const S& c, int sign = 1) {
  if (m == 0) throw DimensionError("complex_space_form needs m >= 1");
  if (sign != 1 && sign != -1) throw DimensionError("complex_space_form sign must be +1 or -1");
  const unsigned d = 2 * m;
  Matrix<S> w(d, d);
  for (unsigned k = 0; k < d; k += 2) w(k, k + 1) = S(1), w(k + 1, k) = S(-1);
  auto g = [](unsigned a, unsigned b) { return S(a == b ? 1 : 0); };
  S scale = S(sign) * c / S(4);
  CurvatureTensor<S> rm(MetricFrame<S>::euclidean(d));
  for (unsigned x = 0; x < d; ++x)
    for (unsigned y = x + 1; y < d; ++y)
      for (unsigned z = 0; z < d; ++z)
        for (unsigned v = z + 1; v < d; ++v) {
          S r = g(x, z) * g(y, v) - g(x, v) * g(y, z) + w(x, z) * w(y, v) - w(x, v) * w(y, z) + S(2) * w(x, y) * w(z, v);
          if (r != 0) rm.set(x, y, z, v, S(scale * r));
        }
  auto e = detail::make_entry("complex_space_form", std::move(rm),
                              {{"m", std::to_string(m)}, {"c", detail::param_string(c)}, {"sign", std::to_string(sign)}});
  e.tags.push_back("Einstein");
  if (d % 4 == 0) {
    e.tags.push_back(detail::tag_at("commutes", m));
    if (d >= 8) e.tags.push_back(detail::tag_at("weyl-commutes", m));
  }
  return e;
}

/// W1 + 0 on R^4 + R^4, where W1 acts on self-dual 2-forms of the first factor
/// by diag(2, -1, -1) and kills anti-self-dual ones.
inline ZooEntry<Rational> weyl_counterexample_r8() {
  const unsigned d = 8;
  BladeBasis b(d, 2);
  auto idx = [&](int i, int j) { return b.index_of(Blade::from_indices({i, j})); };
  std::vector<std::vector<std::pair<std::size_t, int>>> forms{
      {{idx(0, 1), 1}, {idx(2, 3), 1}}, {{idx(0, 2), 1}, {idx(1, 3), -1}}, {{idx(0, 3), 1}, {idx(1, 2), 1}}};
  const Rational mu[3] = {2, -1, -1};
  Matrix<Rational> r2(b.size(), b.size());
  for (std::size_t k = 0; k < 3; ++k)
    for (auto [r, sr] : forms[k])
      for (auto [c, sc] : forms[k]) r2(r, c) += mu[k] * sr * sc / 2;
  auto e = detail::make_entry("weyl_counterexample_r8",
                              CurvatureTensor<Rational>(MetricFrame<Rational>::euclidean(d), std::move(r2)), {});
  e.tags.push_back("trace-free");
  e.tags.push_back(detail::tag_at("weyl-fails", 4));
  return e;
}

/// The first factor of weyl_counterexample_r8 on its own.
inline ZooEntry<Rational> weyl_counterexample_block() {
  auto full = weyl_counterexample_r8().tensor;
  CurvatureTensor<Rational> rm(MetricFrame<Rational>::euclidean(4));
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = i + 1; j < 4; ++j)
      for (unsigned k = 0; k < 4; ++k)
        for (unsigned l = k + 1; l < 4; ++l) rm.set(i, j, k, l, full(i, j, k, l));
  auto e = detail::make_entry("weyl_counterexample_block", std::move(rm), {});
  e.tags.push_back("trace-free");
  e.tags.push_back(detail::tag_at("weyl-commutes", 2));
  return e;
}

template <class S>
struct WarpedProduct {
  ZooEntry<S> entry;
  S f, f1, f2;
  S s1, s2;
  /// Rm = sign * S (x) S for S = diag(s1, s2, ..., s2).
  int sign = -1;
  SymmetricTwoTensor<S> s_tensor;
};

/// S^1 x S^{n-1} with metric dt^2 + f(t)^2 g_round, f = 1 + eps cos t, at the
/// point t. Index 0 is the circle direction.
inline WarpedProduct<double> warped_circle_sphere(unsigned n, double eps, double t) {
  if (n < 3) throw DimensionError("warped_circle_sphere needs n >= 3");
  if (!(eps > 0 && eps < 1)) throw DimensionError("warped_circle_sphere needs 0 < eps < 1");
  double f = 1 + eps * std::cos(t), f1 = -eps * std::sin(t), f2 = -eps * std::cos(t);
  auto mf = MetricFrame<double>::euclidean(n);
  CurvatureTensor<double> rm(mf);
  for (unsigned i = 1; i < n; ++i) {
    rm.set(0, i, 0, i, -f2 / f);
    for (unsigned j = i + 1; j < n; ++j) rm.set(i, j, i, j, (1 - f1 * f1) / (f * f));
  }
  double s1 = -f2 / std::sqrt(2 * (1 - f1 * f1)), s2 = std::sqrt((1 - f1 * f1) / (2 * f * f));
  std::vector<double> diag(n, s2);
  diag[0] = s1;
  auto st = SymmetricTwoTensor<double>::diagonal(mf, diag);
  auto e = detail::make_entry("warped_circle_sphere", std::move(rm),
                              {{"n", std::to_string(n)},
                               {"eps", ScalarTraits<double>::to_string(eps)},
                               {"t", ScalarTraits<double>::to_string(t)}});
  e.tags.push_back("pure");
  return {std::move(e), f, f1, f2, s1, s2, -1, st};
}

/// Point model of ds^2 = dv du + du dv - 2V du^2 + sum dx_i^2 with V frozen to
/// zero at the point and Hessian V_ij = hessian(i-2, j-2). Coordinates
/// (v, u, x_2, ..., x_{d-1}); the only components are R(i,u,u,j) = V_ij.
template <class S = Rational>
ZooEntry<S> pp_wave(unsigned d, const Matrix<S>& hessian) {
  if (d < 4 || d % 2) throw DimensionError("pp_wave needs even d >= 4");
  if (hessian.rows() != d - 2 || !hessian.square()) throw DimensionError("pp_wave Hessian must be (d-2)x(d-2)");
  if (!hessian.is_symmetric(0.0)) throw InconsistentError("pp_wave Hessian is not symmetric");
  Matrix<S> g = Matrix<S>::identity(d);
  g(0, 0) = g(1, 1) = S(0);
  g(0, 1) = g(1, 0) = S(1);
  CurvatureTensor<S> rm{MetricFrame<S>(g)};
  for (unsigned i = 2; i < d; ++i)
    for (unsigned j = i; j < d; ++j) {
      rm.set(i, 1, 1, j, hessian(i - 2, j - 2));
      rm.set(j, 1, 1, i, hessian(i - 2, j - 2));
    }
  auto e = detail::make_entry("pp_wave", std::move(rm), {{"dim", std::to_string(d)}}, Signature::lorentzian);
  for (unsigned p = 4; p <= d; p += 2) e.tags.push_back(detail::tag_at("Cp=0", p));
  return e;
}

inline ZooEntry<Rational> pp_wave_random(unsigned d, std::uint64_t seed) {
  if (d < 4) throw DimensionError("pp_wave needs even d >= 4");
  detail::RationalStream rs(seed);
  Matrix<Rational> v(d - 2, d - 2);
  for (unsigned i = 0; i + 2 < d; ++i)
    for (unsigned j = i; j + 2 < d; ++j) v(i, j) = v(j, i) = rs.next();
  auto e = pp_wave(d, v);
  e.params.push_back({"seed", std::to_string(seed)});
  return e;
}

/// Random Weyl tensor plus a random multiple of g (x) g on R^4.
inline ZooEntry<Rational> random_einstein_4d(std::uint64_t seed) {
  detail::RationalStream rs(seed);
  auto w = decompose(detail::random_kn_sum(rs, 4, 3)).weyl;
  auto rm = w + detail::space_form_tensor(MetricFrame<Rational>::euclidean(4), rs.next());
  auto e = detail::make_entry("random_einstein_4d", std::move(rm), {{"seed", std::to_string(seed)}});
  e.tags.push_back("Einstein");
  e.tags.push_back(detail::tag_at("commutes", 2));
  return e;
}

inline ZooEntry<Rational> random_tracefree_weyl_4d(std::uint64_t seed) {
  detail::RationalStream rs(seed);
  auto e = detail::make_entry("random_tracefree_weyl_4d", decompose(detail::random_kn_sum(rs, 4, 3)).weyl,
                              {{"seed", std::to_string(seed)}});
  e.tags.push_back("trace-free");
  e.tags.push_back("Einstein");
  e.tags.push_back(detail::tag_at("commutes", 2));
  e.tags.push_back(detail::tag_at("weyl-commutes", 2));
  return e;
}

/// Random pair-symmetric matrix, each entry zeroed with probability
/// `sparsity`, then projected onto the kernel of the Bianchi map.
inline ZooEntry<Rational> random_tensor(unsigned d, std::uint64_t seed, double sparsity = 0.0) {
  if (d < 2) throw DimensionError("random_tensor needs d >= 2");
  if (!(sparsity >= 0 && sparsity < 1)) throw DimensionError("random_tensor sparsity must lie in [0, 1)");
  detail::RationalStream rs(seed);
  BladeBasis b(d, 2);
  Matrix<Rational> r2(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j) {
      Rational v = rs.next();
      if (rs.uniform() < sparsity) v = 0;
      r2(i, j) = r2(j, i) = v;
    }
  CurvatureTensor<Rational> raw(MetricFrame<Rational>::euclidean(d), std::move(r2)), rm = raw;
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = i + 1; j < d; ++j)
      for (unsigned k = j + 1; k < d; ++k)
        for (unsigned l = k + 1; l < d; ++l) {
          Rational alt = (raw(i, j, k, l) + raw(i, k, l, j) + raw(i, l, j, k)) / 3;
          rm.set(i, j, k, l, raw(i, j, k, l) - alt);
          rm.set(i, k, l, j, raw(i, k, l, j) - alt);
          rm.set(i, l, j, k, raw(i, l, j, k) - alt);
        }
  std::ostringstream sp;
  sp << sparsity;
  return detail::make_entry("random_tensor", std::move(rm),
                            {{"dim", std::to_string(d)}, {"seed", std::to_string(seed)}, {"sparsity", sp.str()}});
}

/// Locally conformally flat tensor with table a_i + a_j.
template <class S = Rational>
ZooEntry<S> lcf(const std::vector<S>& a) {
  std::string list;
  for (const auto& x : a) list += (list.empty() ? "" : ",") + ScalarTraits<S>::to_string(x);
  auto e = detail::make_entry("lcf", lcf_curvature(a), {{"a", list}});
  e.tags.push_back("pure");
  e.tags.push_back("weyl-free");
  if (a.size() % 4 == 0) {
    unsigned n = static_cast<unsigned>(a.size() / 4);
    auto nonzeros = static_cast<unsigned>(std::count_if(a.begin(), a.end(), [](const S& x) { return x != 0; }));
    if (nonzeros + 1 <= n) e.tags.push_back(detail::tag_at("Cp=0", 2 * n));
  }
  return e;
}

/// c * S (x) S with S = diag(a); table -2c a_i a_j.
template <class S = Rational>
ZooEntry<S> multiplicative(const std::vector<S>& a, const S& c = S(1)) {
  auto mf = MetricFrame<S>::euclidean(static_cast<unsigned>(a.size()));
  auto s = SymmetricTwoTensor<S>::diagonal(mf, a);
  std::string list;
  for (const auto& x : a) list += (list.empty() ? "" : ",") + ScalarTraits<S>::to_string(x);
  auto e = detail::make_entry("multiplicative", c * kulkarni_nomizu(s, s), {{"a", list}, {"c", detail::param_string(c)}});
  e.tags.push_back("pure");
  if (a.size() % 4 == 0) {
    unsigned n = static_cast<unsigned>(a.size() / 4);
    auto zeros = static_cast<unsigned>(std::count(a.begin(), a.end(), S(0)));
    if (c == 0 || zeros >= 2 * n + 1) e.tags.push_back(detail::tag_at("Cp=0", 2 * n));
  }
  return e;
}

/// Pure tensor on R^8 with table lambda * eps_i * eps_j, eps_i = -1 where bit
/// i of `bits` is set. The product of the signs must be +1.
template <class S = Rational>
ZooEntry<S> eps_pattern(unsigned bits, const S& lambda = S(1)) {
  if (bits >= 256 || std::popcount(bits) % 2) throw DimensionError("eps_pattern needs an even number of minus signs among 8");
  LambdaTable<S> t(8);
  for (unsigned i = 0; i < 8; ++i)
    for (unsigned j = i + 1; j < 8; ++j) t.set(i, j, ((bits >> i ^ bits >> j) & 1) ? S(-lambda) : lambda);
  auto e = detail::make_entry("eps_pattern", tensor_from_table(t),
                              {{"bits", std::to_string(bits)}, {"lambda", detail::param_string(lambda)}});
  e.tags.push_back("pure");
  e.tags.push_back(detail::tag_at("commutes", 4));
  unsigned minus = static_cast<unsigned>(std::popcount(bits));
  if (minus == 0 || minus == 4 || minus == 8) e.tags.push_back("Einstein");
  return e;
}

/// Checks one tag against the tensor. Unknown tags throw.
template <class S>
bool check_tag(const ZooEntry<S>& e, const std::string& tag, double tol = kDefaultTol, unsigned workers = 1) {
  const auto& rm = e.tensor;
  auto degree = [&](const std::string& stem) -> std::optional<unsigned> {
    std::string prefix = stem + "@p=";
    if (tag.rfind(prefix, 0) != 0) return std::nullopt;
    return static_cast<unsigned>(std::stoul(tag.substr(prefix.size())));
  };
  if (tag == "bianchi") return validate_bianchi(rm, tol);
  if (tag == "flat") return rm.is_zero(tol);
  if (tag == "C2!=0") return !rm.is_zero(tol);
  if (tag == "pure") return is_pure_in_frame(rm, tol);
  if (tag == "Einstein") return ricci(rm).proportional_to_metric(tol);
  if (tag == "trace-free") return ricci(rm).matrix().is_zero(tol);
  if (tag == "weyl-free") return decompose(rm).weyl.is_zero(tol);
  if (auto p = degree("commutes")) return commutes_with_star(thorpe_operator(rm, *p, workers), tol).commutes;
  if (auto p = degree("fails")) return !commutes_with_star(thorpe_operator(rm, *p, workers), tol).commutes;
  if (auto p = degree("weyl-commutes")) return commutes_with_star(weyl_operator(rm, *p, workers), tol).commutes;
  if (auto p = degree("weyl-fails")) return !commutes_with_star(weyl_operator(rm, *p, workers), tol).commutes;
  if (auto p = degree("Cp=0")) return thorpe_operator(rm, *p, workers).is_zero(tol);
  throw DimensionError("unknown zoo tag '" + tag + "'");
}

/// Tags that fail, in declaration order.
template <class S>
std::vector<std::string> failing_tags(const ZooEntry<S>& e, double tol = kDefaultTol, unsigned workers = 1) {
  std::vector<std::string> out;
  for (const auto& t : e.tags)
    if (!check_tag(e, t, tol, workers)) out.push_back(t);
  return out;
}

// Registry used by the command line.

struct ZooParam {
  std::string name;
  std::string fallback;
  std::string help;
};

struct ZooSpec {
  std::string name;
  std::string summary;
  std::vector<ZooParam> params;
};

using AnyZooEntry = std::variant<ZooEntry<Rational>, ZooEntry<double>>;
using ZooParams = std::map<std::string, std::string>;

inline const std::vector<ZooSpec>& zoo_registry() {
  static const std::vector<ZooSpec> specs{
      {"space_form", "constant curvature, every 2-blade a lambda-eigenvector",
       {{"dim", "4", "dimension"}, {"lambda", "1", "eigenvalue of the curvature operator"}}},
      {"product_space_forms", "product of two space forms with sectional curvatures c1, c2",
       {{"d1", "2", "first dimension"}, {"c1", "1", "first curvature"}, {"d2", "2", "second dimension"},
        {"c2", "1", "second curvature"}}},
      {"complex_space_form", "holomorphic sectional curvature sign*c on C^m",
       {{"m", "2", "complex dimension"}, {"c", "1", "curvature"}, {"sign", "1", "+1 or -1"}}},
      {"weyl_counterexample_r8", "W1 + 0 on R^4 + R^4, fails *W_4 = W_4*", {}},
      {"weyl_counterexample_block", "the R^4 factor W1 alone", {}},
      {"warped_circle_sphere", "S^1 x S^{n-1} warped by 1 + eps cos t, at the point t",
       {{"n", "4", "dimension"}, {"eps", "0.5", "warping amplitude in (0,1)"}, {"t", "1.5707963267948966", "point"}}},
      {"pp_wave", "Lorentzian pp-wave with a random rational Hessian", {{"dim", "4", "even dimension"}, {"seed", "1", "seed"}}},
      {"random_einstein_4d", "random Einstein tensor on R^4", {{"seed", "1", "seed"}}},
      {"random_tracefree_weyl_4d", "random trace-free tensor on R^4", {{"seed", "1", "seed"}}},
      {"random_tensor", "random algebraic curvature tensor",
       {{"dim", "4", "dimension"}, {"seed", "1", "seed"}, {"sparsity", "0", "probability of a zero entry"}}},
      {"lcf", "locally conformally flat, table a_i + a_j", {{"a", "1,2,3,4", "comma-separated values"}}},
      {"multiplicative", "c S (x) S with S = diag(a)", {{"a", "1,1,-1,-1", "comma-separated values"}, {"c", "1", "scale"}}},
      {"eps_pattern", "pure tensor on R^8 with table lambda eps_i eps_j",
       {{"bits", "15", "minus-sign bitmask, even popcount"}, {"lambda", "1", "scale"}}},
  };
  return specs;
}

namespace detail {

inline std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(ScalarTraits<Rational>::parse(item));
  if (out.empty()) throw ParseError("empty list");
  return out;
}

inline unsigned parse_unsigned(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used);
  } catch (const std::exception&) {
    throw ParseError("parameter '" + key + "' expects a non-negative integer, got '" + text + "'");
  }
  if (used != text.size()) throw ParseError("parameter '" + key + "' expects a non-negative integer, got '" + text + "'");
  return static_cast<unsigned>(v);
}

inline int parse_int(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("parameter '" + key + "' expects an integer, got '" + text + "'");
}

}  // namespace detail

/// Builds a registry entry from string parameters; missing ones take their defaults.
inline AnyZooEntry make_zoo_entry(const std::string& name, const ZooParams& given) {
  auto spec = std::find_if(zoo_registry().begin(), zoo_registry().end(), [&](const ZooSpec& s) { return s.name == name; });
  if (spec == zoo_registry().end()) throw ParseError("unknown zoo entry '" + name + "'");
  ZooParams p;
  for (const auto& prm : spec->params) p[prm.name] = prm.fallback;
  for (const auto& [k, v] : given) {
    if (!p.count(k)) throw ParseError("zoo entry '" + name + "' has no parameter '" + k + "'");
    p[k] = v;
  }
  auto q = [&](const std::string& k) { return ScalarTraits<Rational>::parse(p.at(k)); };
  auto u = [&](const std::string& k) { return detail::parse_unsigned(k, p.at(k)); };
  if (name == "space_form") return space_form(u("dim"), q("lambda"));
  if (name == "product_space_forms") return product_space_forms(u("d1"), q("c1"), u("d2"), q("c2"));
  if (name == "complex_space_form") return complex_space_form(u("m"), q("c"), detail::parse_int("sign", p.at("sign")));
  if (name == "weyl_counterexample_r8") return weyl_counterexample_r8();
  if (name == "weyl_counterexample_block") return weyl_counterexample_block();
  if (name == "warped_circle_sphere")
    return warped_circle_sphere(u("n"), ScalarTraits<double>::parse(p.at("eps")), ScalarTraits<double>::parse(p.at("t"))).entry;
  if (name == "pp_wave") return pp_wave_random(u("dim"), u("seed"));
  if (name == "random_einstein_4d") return random_einstein_4d(u("seed"));
  if (name == "random_tracefree_weyl_4d") return random_tracefree_weyl_4d(u("seed"));
  if (name == "random_tensor") return random_tensor(u("dim"), u("seed"), ScalarTraits<double>::parse(p.at("sparsity")));
  if (name == "lcf") return lcf(detail::parse_list(p.at("a")));
  if (name == "multiplicative") return multiplicative(detail::parse_list(p.at("a")), q("c"));
  return eps_pattern(u("bits"), q("lambda"));
}

}  // namespace curvlab
