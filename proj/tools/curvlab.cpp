// curvlab: zoo models, commutation and criterion checks, the acceptance suite.
//
// Exit status: 0 pass, 1 fail, 2 usage error or malformed input.

#include "curvlab/curvlab.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace curvlab;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct Globals {
  bool json = false;
  std::string scalar = "rational";
  double tol = 1e-9;
  unsigned workers = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned default_workers() {
  const char* env = std::getenv("CURVLAB_WORKERS");
  if (!env || !*env) return 1;
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(env, &used);
    if (used == std::string(env).size() && v >= 1 && v <= 256) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("CURVLAB_WORKERS must be an integer in [1, 256], got '") + env + "'");
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    save_json_file(out_path, j);
  }
}

std::string join(const std::vector<unsigned>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

template <class S>
Json entry_json(const ZooEntry<S>& e) {
  Json params = Json::object();
  for (const auto& [k, v] : e.params) params[k] = v;
  Json j{{"name", e.name}, {"signature", to_string(e.signature)}, {"params", params}, {"tags", e.tags}};
  Json tensor = tensor_to_json(e.tensor);
  for (auto& [k, v] : tensor.items()) j[k] = v;
  return j;
}

// zoo list / zoo emit

int zoo_list(const Globals& g) {
  Json all = Json::array();
  for (const auto& spec : zoo_registry()) {
    auto any = make_zoo_entry(spec.name, {});
    std::visit(
        [&](const auto& e) {
          Json params = Json::array();
          for (const auto& p : spec.params) params.push_back(Json{{"name", p.name}, {"default", p.fallback}, {"help", p.help}});
          all.push_back(Json{{"name", spec.name},
                             {"dim", e.dim},
                             {"signature", to_string(e.signature)},
                             {"summary", spec.summary},
                             {"params", params},
                             {"tags", e.tags}});
        },
        any);
  }
  if (g.json) {
    std::cout << all.dump(2) << "\n";
    return kPass;
  }
  for (const auto& e : all) {
    std::string tags;
    for (const auto& t : e["tags"]) tags += (tags.empty() ? "" : " ") + t.get<std::string>();
    std::cout << std::left << std::setw(27) << e["name"].get<std::string>() << " d=" << std::setw(3) << e["dim"].get<unsigned>()
              << " " << std::setw(11) << e["signature"].get<std::string>() << " " << tags << "\n";
    std::cout << "    " << e["summary"].get<std::string>();
    if (!e["params"].empty()) {
      std::cout << "  [";
      bool first = true;
      for (const auto& p : e["params"]) {
        std::cout << (first ? "" : " ") << "--" << p["name"].get<std::string>() << " " << p["default"].get<std::string>();
        first = false;
      }
      std::cout << "]";
    }
    std::cout << "\n";
  }
  return kPass;
}

ZooParams parse_zoo_params(const std::vector<std::string>& extras) {
  ZooParams params;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const auto& a = extras[i];
    if (a.rfind("--", 0) != 0 || a.size() < 3) throw UsageError("unexpected argument '" + a + "'");
    auto eq = a.find('=');
    if (eq != std::string::npos) {
      params[a.substr(2, eq - 2)] = a.substr(eq + 1);
    } else {
      if (i + 1 >= extras.size()) throw UsageError("parameter '" + a + "' needs a value");
      params[a.substr(2)] = extras[++i];
    }
  }
  return params;
}

int zoo_emit(const std::string& name, const std::vector<std::string>& extras, const std::string& out) {
  auto any = make_zoo_entry(name, parse_zoo_params(extras));
  std::visit([&](const auto& e) { emit(entry_json(e), out); }, any);
  return kPass;
}

// check commute

template <class S>
int check_commute(const Globals& g, const std::string& in, unsigned p, bool weyl) {
  auto rm = tensor_from_json<S>(load_json_file(in));
  if (2 * p != rm.dim()) throw UsageError("--p must equal d/2 = " + std::to_string(rm.dim() / 2));
  auto op = weyl ? weyl_operator(rm, p, g.workers) : thorpe_operator(rm, p, g.workers);
  auto report = commutes_with_star(op, g.tol);
  if (g.json) {
    Json j{{"operator", weyl ? "W" : "C"}, {"p", p}, {"dim", rm.dim()}};
    Json body = commutation_to_json(report);
    for (auto& [k, v] : body.items()) j[k] = v;
    std::cout << j.dump(2) << "\n";
  } else {
    std::string name = std::string(weyl ? "W_" : "C_") + std::to_string(p);
    std::cout << "*" << name << " = " << name << "*: " << (report.commutes ? "pass" : "fail") << "\n";
    std::cout << "max violation: " << report.max_violation << "\n";
    if (report.witness_input)
      std::cout << "witness: input " << report.witness_input->to_string() << ", output " << report.witness_output->to_string()
                << "\n";
  }
  return report.commutes ? kPass : kFail;
}

// check hafnian / check lcf

template <class S>
void print_pairs(const CriterionReport<S>& r, const char* value_name) {
  for (const auto& line : r.pairs) {
    std::vector<unsigned> comp;
    const unsigned d = static_cast<unsigned>(2 * line.subset.size());
    for (unsigned i = 0; i < d; ++i)
      if (std::find(line.subset.begin(), line.subset.end(), i) == line.subset.end()) comp.push_back(i);
    std::cout << "{" << join(line.subset) << "} | {" << join(comp) << "}  " << value_name << "(I) = "
              << ScalarTraits<S>::to_string(line.value) << "  " << value_name
              << "(I^c) = " << ScalarTraits<S>::to_string(line.complement_value) << "  " << (line.pass ? "ok" : "FAIL")
              << "\n";
  }
  if (auto ff = r.first_failure()) std::cout << "fail: first failing I = {" << join(*ff) << "}\n";
  else std::cout << "pass: " << r.pairs.size() << " pairs\n";
}

template <class S>
int check_hafnian(const Globals& g, const std::string& path) {
  auto j = load_json_file(path);
  LambdaTable<S> table = [&] {
    if (j.is_object() && j.contains("lambda")) return table_from_json<S>(j, g.tol);
    auto rm = tensor_from_json<S>(j);
    if (!rm.frame().euclidean_orthonormal()) throw UsageError(path + ": hafnian check needs a Euclidean orthonormal frame");
    if (!is_pure_in_frame(rm, g.tol)) throw UsageError(path + ": tensor is not pure in its frame");
    return lambda_table(rm);
  }();
  if (table.dim() % 4 != 0) throw UsageError(path + ": hafnian check needs d = 4n, got " + std::to_string(table.dim()));
  auto report = pure_commute_check(table, g.tol, g.workers);
  if (g.json) std::cout << report_to_json(report).dump(2) << "\n";
  else print_pairs(report, "haf");
  return report.pass ? kPass : kFail;
}

template <class S>
int check_lcf(const Globals& g, const std::string& list) {
  std::vector<S> a;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) a.push_back(ScalarTraits<S>::parse(item));
  if (a.empty() || a.size() % 4 != 0) throw UsageError("--a needs 4n comma-separated values");
  auto report = lcf_partition_check(a, g.tol);
  if (g.json) std::cout << report_to_json(report).dump(2) << "\n";
  else print_pairs(report, ("s" + std::to_string(a.size() / 4)).c_str());
  return report.pass ? kPass : kFail;
}

// check normalform

template <class S>
Matrix<S> load_frame(const std::string& path) {
  if (path.empty()) return Matrix<S>::identity(4);
  auto j = load_json_file(path);
  const Json& m = j.is_object() ? detail::field(j, "frame", path) : j;
  return detail::read_matrix<S>(m, 4, 4, "frame");
}

template <class S>
void print_critical(const CriticalData<S>& c) {
  using T = ScalarTraits<S>;
  std::cout << "sec(P)  = " << T::to_string(c.sec_p) << "\nsec(*P) = " << T::to_string(c.sec_star_p) << "\nHessian:\n";
  for (unsigned r = 0; r < 4; ++r) {
    std::cout << " ";
    for (unsigned col = 0; col < 4; ++col) std::cout << " " << std::setw(10) << T::to_string(c.hessian(r, col));
    std::cout << "\n";
  }
}

template <class S>
int check_normalform(const Globals& g, const std::string& in, const std::string& frame_path, const std::string& out) {
  auto j = load_json_file(in);
  if (j.is_object() && j.contains("secP")) {
    auto data = critical_data_from_json<S>(j);
    if (!frame_path.empty()) data.frame = load_frame<S>(frame_path);
    auto rm = reconstruct(data, g.tol);
    emit(tensor_to_json(rm), out);
    return kPass;
  }
  auto rm = tensor_from_json<S>(j);
  if (rm.dim() != 4) throw UsageError(in + ": normal form needs d = 4, got " + std::to_string(rm.dim()));
  auto frame = load_frame<S>(frame_path);
  bool p = critical_check(rm, frame, 2, 3, g.tol), star_p = critical_check(rm, frame, 0, 1, g.tol);
  if (!p || !star_p) {
    if (g.json) {
      std::cout << Json{{"critical_P", p}, {"critical_starP", star_p}, {"pass", false}}.dump(2) << "\n";
    } else {
      std::cout << "P = f2^f3 critical: " << (p ? "yes" : "no") << "\n*P = f0^f1 critical: " << (star_p ? "yes" : "no")
                << "\nfail: normal form needs both planes critical\n";
    }
    return kFail;
  }
  auto data = extract(rm, frame, g.tol);
  auto back = reconstruct(data, g.tol);
  bool same = back.nearly_equal(rm, g.tol);
  if (!out.empty()) save_json_file(out, critical_data_to_json(data));
  if (g.json) {
    Json r = critical_data_to_json(data);
    r["critical_P"] = true;
    r["critical_starP"] = true;
    r["pass"] = same;
    std::cout << r.dump(2) << "\n";
  } else {
    print_critical(data);
    std::cout << (same ? "pass: tensor reconstructs from critical data\n" : "fail: reconstruction differs\n");
  }
  return same ? kPass : kFail;
}

// verify

int verify(const Globals& g, const std::string& filter, std::uint64_t seed) {
  VerifyOptions options{filter, g.workers, seed};
  if (!g.json) {
    auto results = run_acceptance(options, std::cout, std::cerr);
    bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
    return ok && !results.empty() ? kPass : kFail;
  }
  std::ostringstream discard;
  auto results = run_acceptance(options, discard, std::cerr);
  Json checks = Json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    checks.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    passed += r.pass ? 1 : 0;
  }
  std::cout << Json{{"seed", seed}, {"checks", checks}, {"passed", passed}, {"total", results.size()}}.dump(2) << "\n";
  return passed == results.size() && !results.empty() ? kPass : kFail;
}

template <class F>
int with_scalar(const Globals& g, F&& f) {
  if (g.scalar == "rational") return f(Rational{});
  return f(double{});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature operators, Hodge star commutation, and pure-tensor criteria."};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  bool workers_set = false;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--scalar", g.scalar, "scalar backend")->check(CLI::IsMember({"rational", "float"}));
  app.add_option("--tol", g.tol, "relative tolerance for the float backend")->check(CLI::PositiveNumber);
  app.add_option_function<unsigned>(
         "--workers", [&](unsigned w) { g.workers = w, workers_set = true; }, "worker threads (default $CURVLAB_WORKERS or 1)")
      ->check(CLI::Range(1u, 256u));

  auto* zoo = app.add_subcommand("zoo", "named curvature models");
  zoo->require_subcommand(1);
  auto* zoo_list_cmd = zoo->add_subcommand("list", "list models with dimensions and tags");
  auto* zoo_emit_cmd = zoo->add_subcommand("emit", "write a model as tensor JSON; model parameters as --key value");
  std::string zoo_name, zoo_out;
  zoo_emit_cmd->add_option("name", zoo_name, "model name")->required();
  zoo_emit_cmd->add_option("--out", zoo_out, "output file (default stdout)");
  zoo_emit_cmd->allow_extras();
  zoo_emit_cmd->fallthrough(false);

  auto* check = app.add_subcommand("check", "run one check; exit 0 on pass, 1 on fail");
  check->require_subcommand(1);
  std::string in_path, table_path, a_list, frame_path, out_path;
  unsigned p = 0;
  bool weyl = false;
  auto* commute = check->add_subcommand("commute", "test *C_p = C_p* (p = d/2)");
  commute->add_option("--in", in_path, "tensor JSON")->required();
  commute->add_option("--p", p, "degree")->required();
  commute->add_flag("--weyl", weyl, "use the Weyl operator W_p");
  auto* hafnian_cmd = check->add_subcommand("hafnian", "haf(I) = haf(I^c) for every 2n-subset I");
  hafnian_cmd->add_option("--table", table_path, "lambda-table JSON or pure tensor JSON")->required();
  auto* lcf_cmd = check->add_subcommand("lcf", "s_n(a_I) = s_n(a_{I^c}) for the additive table a_i + a_j");
  lcf_cmd->add_option("--a", a_list, "4n comma-separated values")->required();
  auto* nf = check->add_subcommand("normalform", "critical planes and reconstruction at d = 4");
  nf->add_option("--in", in_path, "tensor JSON, or critical data JSON to reconstruct from")->required();
  nf->add_option("--frame", frame_path, "4x4 frame JSON (columns f0..f3; default identity)");
  nf->add_option("--out", out_path, "write critical data (or the reconstructed tensor) here");

  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
  std::string filter;
  std::uint64_t seed = 1;
  verify_cmd->add_option("--filter", filter, "only checks with this tag or name fragment");
  verify_cmd->add_option("--seed", seed, "base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (!workers_set) g.workers = default_workers();
    if (zoo_list_cmd->parsed()) return zoo_list(g);
    if (zoo_emit_cmd->parsed()) return zoo_emit(zoo_name, zoo_emit_cmd->remaining(), zoo_out);
    if (commute->parsed())
      return with_scalar(g, [&](auto s) { return check_commute<decltype(s)>(g, in_path, p, weyl); });
    if (hafnian_cmd->parsed()) return with_scalar(g, [&](auto s) { return check_hafnian<decltype(s)>(g, table_path); });
    if (lcf_cmd->parsed()) return with_scalar(g, [&](auto s) { return check_lcf<decltype(s)>(g, a_list); });
    if (nf->parsed())
      return with_scalar(g, [&](auto s) { return check_normalform<decltype(s)>(g, in_path, frame_path, out_path); });
    if (verify_cmd->parsed()) return verify(g, filter, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
