#pragma once

// JSON and text formats.
//
// Tensor:        {"dim": d, "metric": [[...]], "orientation": 1,
//                 "components": [[i, j, k, l, "p/q"], ...]}
// Lambda table:  {"dim": d, "lambda": [[...]]}
// Critical data: {"secP": "...", "secStarP": "...", "hessian": [[...]], "frame": [[...]]}
//
// Scalars are written as strings ("3/4", "0.25", "-2") and read from either
// strings or JSON numbers. Unlisted tensor components are zero; each listed
// component is completed by the pair symmetries, and two entries that disagree
// after completion are rejected.

#include "curvlab/curvature.hpp"
#include "curvlab/error.hpp"
#include "curvlab/exterior.hpp"
#include "curvlab/normalform4.hpp"
#include "curvlab/pure.hpp"
#include "curvlab/scalar.hpp"
#include "curvlab/thorpe.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace curvlab {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string where(const std::string& path) { return path.empty() ? "document" : path; }

inline const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParseError(where(path) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where(path) + ": missing field '" + key + "'");
  return *it;
}

inline unsigned read_index(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(path + ": expected a non-negative integer");
  return static_cast<unsigned>(j.get<long long>());
}

template <class S>
S read_scalar(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return ScalarTraits<S>::parse(j.get<std::string>());
    if (j.is_number()) return ScalarTraits<S>::parse(j.dump());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
  throw ParseError(path + ": expected a number or a numeric string");
}

template <class S>
Matrix<S> read_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!j.is_array() || j.size() != rows) throw ParseError(path + ": expected " + std::to_string(rows) + " rows");
  Matrix<S> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    std::string rp = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != cols) throw ParseError(rp + ": expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = read_scalar<S>(row[c], rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

template <class S>
Json write_matrix(const Matrix<S>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(ScalarTraits<S>::to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json index_list(const std::vector<unsigned>& v) {
  Json out = Json::array();
  for (auto i : v) out.push_back(i);
  return out;
}

}  // namespace detail

/// Parses text, reporting the line and column of a syntax error.
inline Json parse_json(const std::string& text, const std::string& source = "input") {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line, col = 1;
      else ++col;
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

inline void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot write file");
  out << j.dump(2) << "\n";
}

template <class S>
Json tensor_to_json(const CurvatureTensor<S>& rm) {
  Json comps = Json::array();
  for (const auto& [idx, v] : rm.components())
    comps.push_back(Json::array({idx[0], idx[1], idx[2], idx[3], ScalarTraits<S>::to_string(v)}));
  return Json{{"dim", rm.dim()},
              {"metric", detail::write_matrix(rm.frame().metric())},
              {"orientation", rm.frame().orientation()},
              {"components", std::move(comps)}};
}

template <class S>
CurvatureTensor<S> tensor_from_json(const Json& j) {
  unsigned d = detail::read_index(detail::field(j, "dim", ""), "dim");
  if (d < 2 || d > kMaxDim) throw ParseError("dim: must lie in [2, 63]");
  Matrix<S> g = j.contains("metric") ? detail::read_matrix<S>(j["metric"], d, d, "metric") : Matrix<S>::identity(d);
  int orientation = 1;
  if (j.contains("orientation")) {
    const auto& o = j["orientation"];
    if (!o.is_number_integer() || (o.get<int>() != 1 && o.get<int>() != -1)) throw ParseError("orientation: expected 1 or -1");
    orientation = o.get<int>();
  }
  std::optional<MetricFrame<S>> mf;
  try {
    mf.emplace(g, orientation);
  } catch (const std::exception& e) {
    throw ParseError(std::string("metric: ") + e.what());
  }
  CurvatureTensor<S> rm(*mf);
  const auto& comps = detail::field(j, "components", "");
  if (!comps.is_array()) throw ParseError("components: expected an array");
  std::map<std::pair<std::size_t, std::size_t>, std::pair<S, std::string>> seen;
  for (std::size_t n = 0; n < comps.size(); ++n) {
    std::string path = "components[" + std::to_string(n) + "]";
    const auto& c = comps[n];
    if (!c.is_array() || c.size() != 5) throw ParseError(path + ": expected [i, j, k, l, value]");
    unsigned idx[4];
    for (unsigned t = 0; t < 4; ++t) {
      idx[t] = detail::read_index(c[t], path + "[" + std::to_string(t) + "]");
      if (idx[t] >= d) throw ParseError(path + "[" + std::to_string(t) + "]: index out of range");
    }
    S v = detail::read_scalar<S>(c[4], path + "[4]");
    unsigned i = idx[0], jj = idx[1], k = idx[2], l = idx[3];
    if (i == jj || k == l) {
      if (v != 0) throw ParseError(path + ": conflicts with antisymmetry (repeated index in a pair)");
      continue;
    }
    if (i > jj) std::swap(i, jj), v = -v;
    if (k > l) std::swap(k, l), v = -v;
    auto a = pair_index(i, jj, d), b = pair_index(k, l, d);
    auto key = std::minmax(a, b);
    auto it = seen.find(key);
    if (it != seen.end() && it->second.first != v)
      throw ParseError(path + ": conflicts under symmetry with " + it->second.second);
    seen[key] = {v, path};
    rm.set(i, jj, k, l, v);
  }
  return rm;
}

template <class S>
Json table_to_json(const LambdaTable<S>& t) {
  return Json{{"dim", t.dim()}, {"lambda", detail::write_matrix(t.matrix())}};
}

template <class S>
LambdaTable<S> table_from_json(const Json& j, double tol = kDefaultTol) {
  unsigned d = detail::read_index(detail::field(j, "dim", ""), "dim");
  auto m = detail::read_matrix<S>(detail::field(j, "lambda", ""), d, d, "lambda");
  try {
    return LambdaTable<S>(m, tol);
  } catch (const std::exception& e) {
    throw ParseError(std::string("lambda: ") + e.what());
  }
}

template <class S>
Json report_to_json(const CriterionReport<S>& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs)
    pairs.push_back(Json{{"I", detail::index_list(p.subset)},
                         {"hafI", ScalarTraits<S>::to_string(p.value)},
                         {"hafIc", ScalarTraits<S>::to_string(p.complement_value)},
                         {"pass", p.pass}});
  auto ff = r.first_failure();
  return Json{{"pass", r.pass}, {"pairs", std::move(pairs)}, {"first_failure", ff ? detail::index_list(*ff) : Json(nullptr)}};
}

template <class S>
Json critical_data_to_json(const CriticalData<S>& c) {
  return Json{{"secP", ScalarTraits<S>::to_string(c.sec_p)},
              {"secStarP", ScalarTraits<S>::to_string(c.sec_star_p)},
              {"hessian", detail::write_matrix(c.hessian)},
              {"frame", detail::write_matrix(c.frame)}};
}

template <class S>
CriticalData<S> critical_data_from_json(const Json& j) {
  CriticalData<S> c;
  c.sec_p = detail::read_scalar<S>(detail::field(j, "secP", ""), "secP");
  c.sec_star_p = detail::read_scalar<S>(detail::field(j, "secStarP", ""), "secStarP");
  c.hessian = detail::read_matrix<S>(detail::field(j, "hessian", ""), 4, 4, "hessian");
  if (j.contains("frame")) c.frame = detail::read_matrix<S>(j["frame"], 4, 4, "frame");
  return c;
}

template <class S>
Json operator_to_json(const OperatorMatrix<S>& op) {
  Json basis = Json::array();
  BladeBasis b = op.basis();
  for (std::size_t i = 0; i < b.size(); ++i) basis.push_back(b[i].to_string());
  return Json{{"dim", op.dim}, {"degree", op.degree}, {"basis", std::move(basis)}, {"matrix", detail::write_matrix(op.matrix)}};
}

template <class S>
Json commutation_to_json(const CommutationReport<S>& r) {
  Json j{{"commutes", r.commutes}, {"max_violation", r.max_violation}};
  j["witness"] = r.witness_input ? Json{{"input", r.witness_input->to_string()}, {"output", r.witness_output->to_string()}}
                                 : Json(nullptr);
  return j;
}

/// Operator as a right-aligned text table, rows and columns labelled by blades.
template <class S>
std::string operator_table(const OperatorMatrix<S>& op) {
  BladeBasis b = op.basis();
  const std::size_t n = b.size();
  std::vector<std::string> labels(n);
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
  std::size_t width = 1, label_width = 1;
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = b[i].to_string();
    label_width = std::max(label_width, labels[i].size());
    for (std::size_t c = 0; c < n; ++c) {
      cells[i][c] = ScalarTraits<S>::to_string(op.matrix(i, c));
      width = std::max(width, cells[i][c].size());
    }
  }
  width = std::max(width, label_width);
  std::ostringstream out;
  out << std::setw(static_cast<int>(label_width)) << "";
  for (std::size_t c = 0; c < n; ++c) out << "  " << std::setw(static_cast<int>(width)) << labels[c];
  out << "\n";
  for (std::size_t r = 0; r < n; ++r) {
    out << std::setw(static_cast<int>(label_width)) << labels[r];
    for (std::size_t c = 0; c < n; ++c) out << "  " << std::setw(static_cast<int>(width)) << cells[r][c];
    out << "\n";
  }
  return out.str();
}

}  // namespace curvlab
