#pragma once

// The acceptance suite: fourteen exact or tolerance-bounded checks, each with a
// time limit. Report text depends only on the seed, never on the worker count;
// timings go to a separate stream.

#include "curvlab/curvature.hpp"
#include "curvlab/error.hpp"
#include "curvlab/exterior.hpp"
#include "curvlab/linalg.hpp"
#include "curvlab/normalform4.hpp"
#include "curvlab/pure.hpp"
#include "curvlab/scalar.hpp"
#include "curvlab/thorpe.hpp"
#include "curvlab/zoo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace curvlab {

struct VerifyOptions {
  std::string filter;  // empty: everything
  unsigned workers = 1;
  std::uint64_t seed = 1;
};

struct CheckOutcome {
  bool pass = false;
  std::string detail;
};

struct CheckResult {
  unsigned id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

struct AcceptanceCheck {
  unsigned id;
  std::string name;
  std::vector<std::string> tags;
  double limit_seconds;
  std::function<CheckOutcome(const VerifyOptions&)> run;

  bool selected(const std::string& filter) const {
    if (filter.empty() || name.find(filter) != std::string::npos) return true;
    return std::find(tags.begin(), tags.end(), filter) != tags.end();
  }
};

namespace detail {

// Collects failures; the first few are kept for the report.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++cases_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 3) notes_.push_back(what);
  }

  CheckOutcome outcome(const std::string& summary) const {
    std::ostringstream out;
    out << summary << "; " << cases_ - failures_ << "/" << cases_ << " cases";
    for (const auto& n : notes_) out << "; " << n;
    if (failures_ > notes_.size()) out << "; ...";
    return {failures_ == 0 && cases_ > 0, out.str()};
  }

 private:
  std::size_t cases_ = 0, failures_ = 0;
  std::vector<std::string> notes_;
};

inline Matrix<Rational> cayley_rotation(RationalStream& rs, unsigned d) {
  Matrix<Rational> a(d, d);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = i + 1; j < d; ++j) {
      a(i, j) = rs.next(2, 3);
      a(j, i) = -a(i, j);
    }
  auto id = Matrix<Rational>::identity(d);
  return (id - a) * inverse(id + a);
}

// Random d = 4 tensor for which f_2^f_3 and f_0^f_1 are critical in `frame`.
inline CurvatureTensor<Rational> critical_tensor(std::uint64_t seed, const Matrix<Rational>& frame) {
  auto f = random_tensor(4, seed).tensor;
  for (auto [i, j] : {std::pair{2u, 3u}, std::pair{0u, 1u}})
    for (unsigned k = 0; k < 4; ++k) {
      if (k == i || k == j) continue;
      f.set(i, j, k, j, 0);
      f.set(i, j, i, k, 0);
    }
  return change_frame(f, frame.transpose());
}

// Hafnian by listing every perfect matching of the index positions.
inline Rational hafnian_by_matchings(const LambdaTable<Rational>& t, const std::vector<unsigned>& idx) {
  if (idx.empty()) return 1;
  Rational total = 0;
  for (const auto& m : perfect_matchings(static_cast<unsigned>(idx.size()))) {
    Rational prod = 1;
    for (auto [a, b] : m.pairs) prod *= t(idx[a], idx[b]);
    total += prod;
  }
  return total;
}

inline std::string show(const std::vector<Rational>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + ScalarTraits<Rational>::to_string(a[i]);
  return s + ")";
}

inline CheckOutcome check_einstein_4d(const VerifyOptions& o) {
  Tally t;
  for (std::uint64_t k = 0; k < 100; ++k) {
    auto e = random_einstein_4d(o.seed * 1000 + k);
    t.expect(commutes_with_star(thorpe_operator(e.tensor, 2, o.workers)).commutes,
             "Einstein seed " + std::to_string(o.seed * 1000 + k) + " does not commute");
  }
  for (std::uint64_t k = 0; k < 100; ++k) {
    std::uint64_t seed = o.seed * 1000 + 500 + k;
    auto rm = random_tensor(4, seed).tensor;
    bool traceless_ricci_nonzero = !ricci(rm).proportional_to_metric();
    bool commutes = commutes_with_star(thorpe_operator(rm, 2, o.workers)).commutes;
    t.expect(traceless_ricci_nonzero && !commutes, "random seed " + std::to_string(seed) +
                                                       (traceless_ricci_nonzero ? " commutes" : " is Einstein"));
  }
  return t.outcome("100 Einstein commute, 100 non-Einstein fail");
}

inline CheckOutcome check_space_form_duality(const VerifyOptions&) {
  Tally t;
  struct Case {
    unsigned d, p;
    int lambda;
  };
  for (auto c : {Case{4, 2, 1}, Case{4, 2, -1}, Case{6, 2, 2}, Case{8, 2, 1}, Case{8, 4, -1}})
    t.expect(space_form_duality_check(Rational(c.lambda), c.d, c.p, 0.0),
             "(d,p,lambda) = (" + std::to_string(c.d) + "," + std::to_string(c.p) + "," + std::to_string(c.lambda) + ")");
  return t.outcome("*C_{2n-p}* = lambda^{n-p} C_p entrywise");
}

inline CheckOutcome check_s2_t4(const VerifyOptions& o) {
  Tally t;
  auto rm = product_space_forms<Rational>(2, 1, 4, 0).tensor;
  t.expect(thorpe_operator(rm, 4, o.workers).is_zero(0.0), "C_4 != 0");
  t.expect(!thorpe_operator(rm, 2, o.workers).is_zero(0.0), "C_2 = 0");
  auto r = p_constant_check(rm, 4, 200, o.seed);
  std::ostringstream v;
  v << "sec_4 range [" << r.min << ", " << r.max << "]";
  t.expect(r.constant && std::abs(r.min) <= 1e-9 && std::abs(r.max) <= 1e-9, v.str());
  return t.outcome("S^2 x T^4: C_4 = 0, C_2 != 0, sec_4 = 0 on 200 samples");
}

inline CheckOutcome check_parity_rule(const VerifyOptions& o) {
  Tally t;
  const int grid[] = {-2, -1, 1, 2};
  for (unsigned n : {1u, 2u})
    for (int c1 : grid)
      for (int c2 : grid) {
        auto rm = product_space_forms<Rational>(2 * n, Rational(c1), 2 * n, Rational(c2)).tensor;
        bool commutes = commutes_with_star(thorpe_operator(rm, 2 * n, o.workers)).commutes;
        bool rule = product_space_form_rule(Rational(c1), Rational(c2), n);
        bool haf = product_space_form_commute(Rational(c1), Rational(c2), n);
        t.expect(commutes == rule && haf == rule, "n=" + std::to_string(n) + " c1=" + std::to_string(c1) +
                                                      " c2=" + std::to_string(c2));
      }
  return t.outcome("n=1 matches c1=c2, n=2 matches c1=+-c2");
}

inline CheckOutcome check_weyl_counterexample(const VerifyOptions& o) {
  Tally t;
  auto rm = weyl_counterexample_r8().tensor;
  auto w4 = weyl_operator(rm, 4, o.workers);
  auto mf = MetricFrame<Rational>::euclidean(8);
  auto e = PVector<Rational>::blade(8, Blade::from_indices({0, 1, 2, 3}));
  t.expect(w4.apply(hodge_star(e, mf)).max_abs() == 0, "W_4 *(e0^e1^e2^e3) != 0");
  t.expect(hodge_star(w4.apply(e), mf).max_abs() != 0, "*W_4(e0^e1^e2^e3) = 0");
  for (std::uint64_t k = 0; k < 50; ++k) {
    auto w = random_tracefree_weyl_4d(o.seed * 1000 + k).tensor;
    t.expect(ricci(w).matrix().is_zero(0.0) && commutes_with_star(weyl_operator(w, 2, o.workers)).commutes,
             "trace-free seed " + std::to_string(o.seed * 1000 + k));
  }
  return t.outcome("R^8 counterexample fails, 50 trace-free d=4 commute");
}

inline CheckOutcome check_hafnian_criterion(const VerifyOptions& o) {
  Tally t;
  RationalStream rs(o.seed * 7919 + 6);
  unsigned commuting = 0;
  auto run = [&](const LambdaTable<Rational>& table, const std::string& label) {
    const unsigned d = table.dim();
    auto report = pure_commute_check(table, 0.0, o.workers);
    bool matrix_level = commutes_with_star(thorpe_operator(tensor_from_table(table), d / 2, o.workers)).commutes;
    t.expect(report.pass == matrix_level, label + ": criterion and matrix disagree");
    commuting += matrix_level ? 1u : 0u;
    HafnianEvaluator<Rational> haf(table);
    for (const auto& line : report.pairs) {
      std::vector<unsigned> comp;
      for (unsigned i = 0; i < d; ++i)
        if (std::find(line.subset.begin(), line.subset.end(), i) == line.subset.end()) comp.push_back(i);
      bool ok = line.value == hafnian_by_matchings(table, line.subset) &&
                line.complement_value == hafnian_by_matchings(table, comp) &&
                haf(detail::subset_mask(comp)) == line.complement_value;
      if (!ok) {
        t.expect(false, label + ": hafnian differs from matching enumeration");
        return;
      }
    }
  };
  for (int k = 0; k < 50; ++k) {
    LambdaTable<Rational> table(4);
    for (unsigned i = 0; i < 4; ++i)
      for (unsigned j = i + 1; j < 4; ++j) table.set(i, j, rs.next());
    if (k % 2) table.set(2, 3, table(0, 1)), table.set(1, 3, table(0, 2)), table.set(1, 2, table(0, 3));
    run(table, "d=4 table " + std::to_string(k));
  }
  for (int k = 0; k < 10; ++k) {
    LambdaTable<Rational> table(8);
    if (k % 3 == 0) {
      for (unsigned i = 0; i < 8; ++i)
        for (unsigned j = i + 1; j < 8; ++j) table.set(i, j, rs.next());
    } else if (k % 3 == 1) {
      unsigned bits = 0;
      while (true) {
        bits = static_cast<unsigned>(rs.uniform() * 256);
        if (std::popcount(bits) % 2 == 0) break;
      }
      Rational scale = rs.next() + 5;
      table = lambda_table(eps_pattern(bits, scale).tensor);
    } else {
      std::vector<Rational> a(8);
      for (auto& x : a) x = rs.uniform() < 0.5 ? 1 : -1;
      table = multiplicative_table(a);
    }
    run(table, "d=8 table " + std::to_string(k));
  }
  return t.outcome("haf criterion agrees with *C = C* on 50 d=4 and 10 d=8 pure tensors (" + std::to_string(commuting) +
                   " commute)");
}

inline CheckOutcome check_eps_patterns(const VerifyOptions& o) {
  Tally t;
  unsigned count = 0;
  for (unsigned bits = 0; bits < 256; ++bits) {
    if (std::popcount(bits) % 2) continue;
    ++count;
    t.expect(pure_commute_check(lambda_table(eps_pattern<Rational>(bits).tensor), 0.0, o.workers).pass,
             "pattern " + std::to_string(bits) + " fails");
  }
  t.expect(count == 128, "expected 128 admissible patterns, found " + std::to_string(count));
  t.expect(ricci(eps_pattern<Rational>(0x0f).tensor).proportional_to_metric(0.0), "4+4 pattern is not Einstein");
  return t.outcome("all admissible sign patterns satisfy haf(I) = haf(I^c)");
}

inline CheckOutcome check_zero_thresholds(const VerifyOptions& o) {
  Tally t;
  unsigned vanishing[2] = {0, 0};
  auto both = [&](const std::vector<Rational>& a) {
    auto m = multiplicative_zero_check(a, Rational(1), 0.0);
    auto ad = additive_zero_check(a, 0.0);
    vanishing[0] += m.operator_vanishes ? 1u : 0u;
    vanishing[1] += ad.operator_vanishes ? 1u : 0u;
    t.expect(m.consistent(), "multiplicative " + show(a));
    t.expect(ad.consistent(), "additive " + show(a));
  };
  std::vector<Rational> a(4);
  for (int code = 0; code < 81; ++code) {
    int c = code;
    for (auto& x : a) x = c % 3 - 1, c /= 3;
    both(a);
  }
  RationalStream rs(o.seed * 104729 + 8);
  std::vector<Rational> b(8);
  for (int k = 0; k < 500; ++k) {
    unsigned zeros = static_cast<unsigned>(rs.uniform() * 9);
    std::vector<unsigned> order{0, 1, 2, 3, 4, 5, 6, 7};
    for (unsigned i = 7; i > 0; --i) std::swap(order[i], order[static_cast<unsigned>(rs.uniform() * (i + 1))]);
    for (unsigned i = 0; i < 8; ++i) {
      Rational v = 0;
      while (v == 0) v = rs.next(2, 2);
      b[order[i]] = i < zeros ? Rational(0) : v;
    }
    both(b);
  }
  return t.outcome("C_{2n} = 0 iff >= 2n+1 zeros (multiplicative, " + std::to_string(vanishing[0]) +
                   " vanish), <= n-1 nonzeros (additive, " + std::to_string(vanishing[1]) + " vanish)");
}

inline CheckOutcome check_incidence(const VerifyOptions&) {
  Tally t;
  const int displayed[6][4] = {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}};
  auto a = incidence_matrix(4, 2, 1);
  bool same = a.rows() == 6 && a.cols() == 4;
  for (std::size_t r = 0; same && r < 6; ++r)
    for (std::size_t c = 0; c < 4; ++c) same = same && a(r, c) == displayed[r][c];
  t.expect(same, "A^4_{2,1} differs from the displayed matrix");
  t.expect(rank_rational(a) == 4, "rank A^4_{2,1} = " + std::to_string(rank_rational(a)));
  auto big = incidence_matrix(8, 4, 2);
  auto r8 = rank_rational(big);
  t.expect(r8 == 28, "rank A^8_{4,2} = " + std::to_string(r8));
  return t.outcome("A^4_{2,1} as displayed, full ranks 4 and 28");
}

inline CheckOutcome check_pp_waves(const VerifyOptions& o) {
  Tally t;
  for (unsigned d : {4u, 6u})
    for (std::uint64_t k = 0; k < 20; ++k) {
      std::uint64_t seed = o.seed * 1000 + k;
      auto e = pp_wave_random(d, seed);
      std::string label = "d=" + std::to_string(d) + " seed " + std::to_string(seed);
      for (unsigned p = 4; p <= d; p += 2)
        t.expect(thorpe_operator(e.tensor, p, o.workers).is_zero(0.0), label + ": C_" + std::to_string(p) + " != 0");
      bool v_zero = e.tensor.is_zero(0.0);
      if (!v_zero) t.expect(!thorpe_operator(e.tensor, 2, o.workers).is_zero(0.0), label + ": C_2 = 0");
    }
  return t.outcome("C_p = 0 for even p >= 4, C_2 != 0");
}

inline CheckOutcome check_warped(const VerifyOptions&) {
  Tally t;
  const double tol = 1e-10;
  struct Point {
    double eps, t;
  };
  for (unsigned n : {4u, 5u})
    for (auto pt : {Point{0.5, M_PI / 2}, Point{1.0 / 3.0, 1.0}}) {
      auto w = warped_circle_sphere(n, pt.eps, pt.t);
      const auto& rm = w.entry.tensor;
      double f = 1 + pt.eps * std::cos(pt.t), f1 = -pt.eps * std::sin(pt.t), f2 = -pt.eps * std::cos(pt.t);
      std::ostringstream label;
      label << "n=" << n << " eps=" << pt.eps << " t=" << pt.t;
      bool components = true;
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
          for (unsigned k = 0; k < n; ++k)
            for (unsigned l = k + 1; l < n; ++l) {
              double expected = 0;
              if (i == k && j == l) expected = i == 0 ? -f2 / f : (1 - f1 * f1) / (f * f);
              components = components && std::abs(rm(i, j, k, l) - expected) <= tol;
            }
      t.expect(components, label.str() + ": components differ from R_titi, R_ijij");
      double s1 = -f2 / std::sqrt(2 * (1 - f1 * f1)), s2 = std::sqrt((1 - f1 * f1) / (2 * f * f));
      auto mf = MetricFrame<double>::euclidean(n);
      std::vector<double> diag(n, s2);
      diag[0] = s1;
      auto s = SymmetricTwoTensor<double>::diagonal(mf, diag);
      auto kn = kulkarni_nomizu(s, s);
      t.expect(rm.nearly_equal(-1.0 * kn, tol), label.str() + ": Rm != -S (x) S");
    }
  return t.outcome("warped S^1 x S^{n-1}: Rm = -S (x) S within 1e-10");
}

inline CheckOutcome check_normal_form(const VerifyOptions& o) {
  Tally t;
  RationalStream rs(o.seed * 15485863 + 12);
  double worst_g = 0, worst_h = 0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    auto frame = cayley_rotation(rs, 4);
    auto rm = critical_tensor(o.seed * 1000 + k, frame);
    auto back = reconstruct(extract(rm, frame, 0.0), 0.0);
    t.expect(back == rm && validate_bianchi(back, 0.0), "round trip " + std::to_string(k));
    auto f = change_frame(back, frame);
    Rational a = f(2, 0, 1, 3) - f(2, 3, 0, 1), b = f(2, 1, 0, 3) + f(2, 3, 0, 1);
    t.expect(f(2, 1, 3, 0) == -(a + 2 * b) / 3 && f(2, 0, 1, 3) == (2 * a + b) / 3, "a,b inversion " + std::to_string(k));

    // Finite differences on this tensor and on a generic one, where P is not critical.
    for (const auto& sample : {rm, random_tensor(4, o.seed * 1000 + 500 + k).tensor}) {
      auto rd = sample.cast<double>();
      auto fd = frame.cast<double>();
      auto g = sec_gradient_closed(rd, fd);
      auto g_fd = finite_diff_gradient(rd, fd, 1e-4);
      auto h = sec_hessian_closed(rd, fd);
      auto h_fd = finite_diff_hessian(rd, fd, 1e-4);
      for (unsigned i = 0; i < 4; ++i) {
        worst_g = std::max(worst_g, std::abs(g[i] - g_fd[i]));
        for (unsigned j = 0; j < 4; ++j) worst_h = std::max(worst_h, std::abs(h(i, j) - h_fd(i, j)));
      }
    }
  }
  auto split = bianchi_split(Rational(3), Rational(0));
  t.expect(-split.f2103 == -1 && split.f2013 == 2, "a=3, b=0 does not give -1 and 2");
  std::ostringstream fd;
  fd << std::scientific << std::setprecision(1) << "gradient error " << worst_g << ", Hessian error " << worst_h;
  t.expect(worst_g <= 1e-6, fd.str());
  t.expect(worst_h <= 1e-4, fd.str());
  return t.outcome("100 exact reconstructions, closed forms match finite differences");
}

inline CheckOutcome check_complex_space_forms(const VerifyOptions& o) {
  Tally t;
  auto cp2 = complex_space_form<Rational>(2, 1).tensor;
  t.expect(commutes_with_star(thorpe_operator(cp2, 2, o.workers)).commutes, "CP^2: C_2 fails");
  auto cp4 = complex_space_form<Rational>(4, 1).tensor;
  t.expect(commutes_with_star(thorpe_operator(cp4, 4, o.workers)).commutes, "CP^4: C_4 fails");
  t.expect(commutes_with_star(weyl_operator(cp4, 4, o.workers)).commutes, "CP^4: W_4 fails");
  return t.outcome("CP^2 at p=2, CP^4 at p=4 for C_4 and W_4");
}

inline CheckOutcome check_definition(const VerifyOptions& o) {
  Tally t;
  auto unit = [](unsigned d, unsigned i) {
    std::vector<Rational> v(d, Rational(0));
    v[i] = 1;
    return v;
  };
  auto compare = [&](const CurvatureTensor<Rational>& rm, unsigned p, std::size_t i, std::size_t j,
                     const Matrix<Rational>& paired, const BladeBasis& basis) {
    std::vector<std::vector<Rational>> u, v;
    for (unsigned x : basis[i].indices()) u.push_back(unit(rm.dim(), x));
    for (unsigned x : basis[j].indices()) v.push_back(unit(rm.dim(), x));
    Rational entry = thorpe_tensor_entry(rm, p, std::span<const std::vector<Rational>>(u), std::span<const std::vector<Rational>>(v));
    return paired(j, i) == entry;
  };
  struct Case {
    unsigned d, p;
  };
  std::uint64_t seed = o.seed * 1000;
  for (auto c : {Case{4, 2}, Case{4, 4}, Case{6, 4}}) {
    auto rm = random_tensor(c.d, seed++).tensor;
    auto op = thorpe_operator(rm, c.p, o.workers);
    BladeBasis basis(c.d, c.p);
    Matrix<Rational> paired = gram_matrix(rm.frame(), c.p) * op.matrix;
    bool all = true;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) all = all && compare(rm, c.p, i, j, paired, basis);
    t.expect(all, "(d,p) = (" + std::to_string(c.d) + "," + std::to_string(c.p) + ")");
  }
  auto rm = random_tensor(8, seed).tensor;
  auto op = thorpe_operator(rm, 4, o.workers);
  BladeBasis basis(8, 4);
  Matrix<Rational> paired = gram_matrix(rm.frame(), 4) * op.matrix;
  RationalStream rs(seed);
  for (int k = 0; k < 50; ++k) {
    auto i = static_cast<std::size_t>(rs.uniform() * static_cast<double>(basis.size()));
    auto j = static_cast<std::size_t>(rs.uniform() * static_cast<double>(basis.size()));
    t.expect(compare(rm, 4, i, j, paired, basis), "(8,4) pair " + basis[i].to_string() + ", " + basis[j].to_string());
  }
  return t.outcome("<C_p e_I, e_J> = R_p(e_I, e_J)");
}

}  // namespace detail

inline const std::vector<AcceptanceCheck>& acceptance_checks() {
  static const std::vector<AcceptanceCheck> checks{
      {1, "einstein-4d", {"einstein", "d4"}, 5, detail::check_einstein_4d},
      {2, "space-form-duality", {"space-form"}, 30, detail::check_space_form_duality},
      {3, "s2xt4", {"product", "space-form"}, 60, detail::check_s2_t4},
      {4, "parity-rule", {"product", "space-form"}, 60, detail::check_parity_rule},
      {5, "weyl-counterexample", {"weyl"}, 60, detail::check_weyl_counterexample},
      {6, "hafnian-criterion", {"pure", "hafnian"}, 60, detail::check_hafnian_criterion},
      {7, "eps-patterns", {"pure", "hafnian"}, 60, detail::check_eps_patterns},
      {8, "zero-thresholds", {"pure", "lcf"}, 120, detail::check_zero_thresholds},
      {9, "incidence-rank", {"lcf"}, 10, detail::check_incidence},
      {10, "pp-waves", {"pp", "lorentzian"}, 60, detail::check_pp_waves},
      {11, "warped-product", {"warped"}, 10, detail::check_warped},
      {12, "normal-form-4d", {"normalform", "d4"}, 60, detail::check_normal_form},
      {13, "complex-space-forms", {"complex"}, 300, detail::check_complex_space_forms},
      {14, "definition-oracle", {"thorpe"}, 600, detail::check_definition},
  };
  return checks;
}

inline CheckResult run_check(const AcceptanceCheck& check, const VerifyOptions& options) {
  CheckResult r{check.id, check.name, false, "", 0.0, check.limit_seconds};
  auto start = std::chrono::steady_clock::now();
  try {
    auto out = check.run(options);
    r.pass = out.pass;
    r.detail = out.detail;
  } catch (const std::exception& e) {
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.seconds > r.limit_seconds) {
    r.pass = false;
    std::ostringstream s;
    s << "; exceeded time limit of " << r.limit_seconds << " s";
    r.detail += s.str();
  }
  return r;
}

inline std::string result_line(const CheckResult& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << std::left << std::setw(20) << r.name
      << "  " << r.detail;
  return out.str();
}

inline std::string timing_line(const CheckResult& r) {
  std::ostringstream out;
  out << std::setw(2) << r.id << "  " << std::left << std::setw(20) << r.name << std::right << std::fixed
      << std::setprecision(2) << std::setw(8) << r.seconds << " s  (limit " << std::setprecision(0) << r.limit_seconds
      << " s)";
  return out.str();
}

/// Runs the selected checks in order. Each result line goes to `report` as soon
/// as it is known; timings go to `timing`.
inline std::vector<CheckResult> run_acceptance(const VerifyOptions& options, std::ostream& report, std::ostream& timing) {
  std::vector<CheckResult> results;
  for (const auto& check : acceptance_checks()) {
    if (!check.selected(options.filter)) continue;
    results.push_back(run_check(check, options));
    report << result_line(results.back()) << "\n" << std::flush;
    timing << timing_line(results.back()) << "\n" << std::flush;
  }
  std::size_t passed = static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; }));
  report << passed << "/" << results.size() << " checks passed\n";
  return results;
}

}  // namespace curvlab
