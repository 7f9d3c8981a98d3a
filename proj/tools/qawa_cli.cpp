// qawa: exact computations in quantum (affine/cyclotomic) wreath algebras.
//
// Subcommands: presets, validate-spec, eval, suite, gram, mackey-dims.
// All input and output is UTF-8 JSON. Exit status: 0 pass, 1 suite/validation
// failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qawa/json_io.hpp"
#include "qawa/presets.hpp"
#include "qawa/suites.hpp"
#include "qawa/symmetries.hpp"

namespace {

using nlohmann::json;
using namespace qawa;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw UsageError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_output(const json& j, const std::string& out_path) {
  std::string text = j.dump(2);
  text += '\n';
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + out_path);
    out << text;
  }
}

AlgebraPtr load_algebra(const std::string& preset, const std::string& spec_path) {
  if (!preset.empty() && !spec_path.empty())
    throw UsageError("give either --preset or --spec, not both");
  if (!preset.empty()) {
    try {
      return presets::by_name(preset);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (!spec_path.empty()) {
    AlgebraData d;
    try {
      d = io::algebra_from_json(read_json_file(spec_path));
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad spec: ") + e.what());
    }
    return Algebra::load(std::move(d), spec_path);
  }
  throw UsageError("one of --preset or --spec is required");
}

Scalar parse_z(const std::string& z) {
  try {
    return Scalar::parse(z);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --z value: ") + e.what());
  }
}

CyclotomicPoly load_poly(const AlgebraPtr& alg, const std::string& path) {
  try {
    return io::cyclotomic_poly_from_json(alg, read_json_file(path));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad -f polynomial: ") + e.what());
  }
}

// Expression trees over the generators:
//   {"T": i} {"Tinv": i} {"X": [i, e]} {"a": [name, slot]}
//   {"prod": [...]} {"sum": [...]} {"scale": ["p/q", node]}
//   {"element": [terms...]}  (re-ingests printed normal forms)
AffineElement eval_expr_affine(const AffineContextPtr& ctx, const json& node) {
  const auto& alg = ctx->algebra();
  if (node.contains("T")) return AffineElement::generator_t(ctx, node.at("T").get<int>());
  if (node.contains("Tinv"))
    return AffineElement::generator_t_inv(ctx, node.at("Tinv").get<int>());
  if (node.contains("X")) {
    auto v = node.at("X");
    return AffineElement::generator_x(ctx, v.at(0).get<int>(), v.at(1).get<int>());
  }
  if (node.contains("a")) {
    auto v = node.at("a");
    std::string name = v.at(0).get<std::string>();
    int slot = v.at(1).get<int>();
    for (int b = 0; b < alg->dim(); ++b)
      if (alg->basis_names()[b] == name)
        return AffineElement::from_tensor(
            ctx, TensorElement::basis_atom(alg, ctx->n(), slot, b));
    throw std::invalid_argument("unknown generator name '" + name + "'");
  }
  if (node.contains("prod")) {
    AffineElement acc = AffineElement::unit(ctx);
    for (const auto& child : node.at("prod")) acc = mul_affine(acc, eval_expr_affine(ctx, child));
    return acc;
  }
  if (node.contains("sum")) {
    AffineElement acc(ctx);
    for (const auto& child : node.at("sum")) acc = acc + eval_expr_affine(ctx, child);
    return acc;
  }
  if (node.contains("scale")) {
    auto v = node.at("scale");
    return io::scalar_from_json(v.at(0)) * eval_expr_affine(ctx, v.at(1));
  }
  if (node.contains("element")) return io::affine_from_json(ctx, node.at("element"));
  throw std::invalid_argument("unrecognized expression node: " + node.dump());
}

CyclotomicElement eval_expr_cyclo(const CyclotomicContextPtr& ctx, const json& node) {
  if (node.contains("X")) {
    auto v = node.at("X");
    int i = v.at(0).get<int>();
    int e = v.at(1).get<int>();
    CyclotomicElement base = e >= 0 ? reduce(ctx, AffineElement::generator_x(ctx->affine(), i, 1))
                                    : invert_x(ctx, i);
    CyclotomicElement acc = CyclotomicElement::unit(ctx);
    for (int k = 0; k < (e >= 0 ? e : -e); ++k) acc = mul_cyclo(acc, base);
    return acc;
  }
  if (node.contains("prod")) {
    CyclotomicElement acc = CyclotomicElement::unit(ctx);
    for (const auto& child : node.at("prod")) acc = mul_cyclo(acc, eval_expr_cyclo(ctx, child));
    return acc;
  }
  if (node.contains("sum")) {
    CyclotomicElement acc = CyclotomicElement::zero(ctx);
    for (const auto& child : node.at("sum")) acc = acc + eval_expr_cyclo(ctx, child);
    return acc;
  }
  if (node.contains("scale")) {
    auto v = node.at("scale");
    return io::scalar_from_json(v.at(0)) * eval_expr_cyclo(ctx, v.at(1));
  }
  // leaves without negative X exponents evaluate in the affine algebra first
  return reduce(ctx, eval_expr_affine(ctx->affine(), node));
}

json suite_report_to_json(const SuiteReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries)
    entries.push_back(json{{"suite", e.suite},
                           {"relation", e.name},
                           {"indices", e.indices},
                           {"status", e.pass ? "pass" : "fail"},
                           {"difference-term-count", e.difference_term_count}});
  return entries;
}

int cmd_presets(const std::string& out_path) {
  json out = json::array();
  for (const auto& name : presets::names()) {
    auto alg = presets::by_name(name);
    out.push_back(json{{"name", name},
                       {"dimension", alg->dim()},
                       {"basis", alg->basis_names()},
                       {"even-center-dimension", alg->center_even().size()}});
  }
  write_output(out, out_path);
  return kExitPass;
}

int cmd_validate(const std::string& spec_path, const std::string& out_path) {
  json j = read_json_file(spec_path);
  AlgebraData d;
  try {
    d = io::algebra_from_json(j);
  } catch (const std::exception& e) {
    write_output(json{{"valid", false}, {"violations", json::array({e.what()})}}, out_path);
    return kExitFail;
  }
  auto violations = Algebra::validate(d);
  json out{{"valid", violations.empty()}, {"violations", violations}};
  if (violations.empty()) {
    auto alg = Algebra::load(d, spec_path);
    json duals = json::array();
    for (int b = 0; b < alg->dim(); ++b) duals.push_back(io::avec_to_json(alg->dual_basis(b)));
    out["dual-basis"] = duals;
    out["even-center-dimension"] = alg->center_even().size();
  }
  write_output(out, out_path);
  return violations.empty() ? kExitPass : kExitFail;
}

int cmd_eval(const AlgebraPtr& alg, int n, const Scalar& z, const std::string& f_path,
             const std::string& expr_path, bool right_form, const std::string& out_path) {
  auto ctx = make_affine_context(alg, n, z);
  json expr = read_json_file(expr_path);
  json out;
  if (!f_path.empty()) {
    auto cctx = CyclotomicContext::make(ctx, load_poly(alg, f_path));
    CyclotomicElement value = eval_expr_cyclo(cctx, expr);
    out["form"] = "cyclotomic";
    out["f"] = io::cyclotomic_poly_to_json(cctx->poly());
    out["terms"] = io::affine_to_json(value.rep());
  } else {
    AffineElement value = eval_expr_affine(ctx, expr);
    out["form"] = "left";
    out["terms"] = io::affine_to_json(value);
    if (right_form) out["right-terms"] = io::right_form_to_json(to_right_normal_form(value));
  }
  write_output(out, out_path);
  return kExitPass;
}

int cmd_suite(const AlgebraPtr& alg, int n, const Scalar& z, const std::string& f_path,
              std::uint64_t seed, int samples, const std::string& out_path) {
  if (n > 3)
    std::cerr << "warning: --n " << n
              << " is above the desk-scale default (n <= 3); expect long runtimes\n";
  if (!f_path.empty()) {
    CyclotomicPoly probe = load_poly(alg, f_path);
    long long dim = 1;
    for (int i = 1; i <= n; ++i) dim *= static_cast<long long>(probe.d) * alg->dim() * i;
    if (dim > 200)
      std::cerr << "warning: quotient dimension " << dim
                << " is above the desk-scale default; expect long runtimes\n";
  }
  SuiteConfig cfg;
  cfg.algebra = alg;
  cfg.n = n;
  cfg.z = z;
  cfg.seed = seed;
  cfg.random_count = samples;
  if (!f_path.empty()) {
    cfg.has_f = true;
    cfg.f = load_poly(alg, f_path);
  }
  SuiteReport report = run_suite(cfg);
  int passed = 0;
  for (const auto& e : report.entries) passed += e.pass;
  json out{{"config",
            {{"algebra", alg->name()},
             {"n", n},
             {"z", z.str()},
             {"seed", seed},
             {"samples", samples},
             {"cyclotomic", !f_path.empty()}}},
           {"entries", suite_report_to_json(report)},
           {"passed", passed},
           {"total", report.entries.size()},
           {"all-pass", report.all_pass()}};
  write_output(out, out_path);
  return report.all_pass() ? kExitPass : kExitFail;
}

int cmd_gram(const AlgebraPtr& alg, int n, const Scalar& z, const std::string& f_path,
             const std::string& out_path) {
  if (f_path.empty()) throw UsageError("gram requires --f");
  auto ctx = CyclotomicContext::make(make_affine_context(alg, n, z), load_poly(alg, f_path));
  GramData g = gram(ctx);
  json basis = json::array();
  for (const auto& k : g.basis)
    basis.push_back(json{{"a", std::vector<int>(k.a.begin(), k.a.end())},
                         {"lambda", k.lam},
                         {"w", io::permutation_to_json(k.w)}});
  auto mat_to_json = [](const Matrix& m) {
    json rows = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (const auto& c : row) r.push_back(c.str());
      rows.push_back(std::move(r));
    }
    return rows;
  };
  json out{{"dimension", g.basis.size()},
           {"basis", basis},
           {"gram", mat_to_json(g.gram)},
           {"dual", mat_to_json(g.dual)}};
  write_output(out, out_path);
  return kExitPass;
}

int cmd_mackey(const AlgebraPtr& alg, int n, const Scalar& z, const std::string& f_path,
               const std::string& out_path) {
  if (f_path.empty()) throw UsageError("mackey-dims requires --f");
  CyclotomicPoly f = load_poly(alg, f_path);
  auto bad = validate_cyclotomic_poly(alg, f);
  if (!bad.empty()) throw UsageError("bad -f polynomial: " + bad.front());
  auto entries = suites::mackey_dimensions(alg, z, f, n);
  json out = json::array();
  bool all = true;
  for (const auto& e : entries) {
    all &= e.pass;
    out.push_back(json{{"n", e.indices.at(0)}, {"status", e.pass ? "pass" : "fail"}});
  }
  write_output(json{{"entries", out}, {"all-pass", all}}, out_path);
  return all ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in quantum affine wreath algebras and their quotients"};
  app.require_subcommand(1);

  std::string preset, spec_path, f_path, out_path, expr_path, z_str = "1";
  int n = 2;
  std::uint64_t seed = 0;
  int samples = 40;
  bool right_form = false;

  auto add_context_flags = [&](CLI::App* cmd, bool with_f) {
    cmd->add_option("--preset", preset, "built-in coefficient algebra name");
    cmd->add_option("--spec", spec_path, "path to a JSON superalgebra spec");
    cmd->add_option("--n", n, "number of strands");
    cmd->add_option("--z", z_str, "deformation parameter, as p or p/q");
    if (with_f) cmd->add_option("--f", f_path, "path to a JSON cyclotomic polynomial");
    cmd->add_option("--out", out_path, "write the JSON report here instead of stdout");
  };

  auto* presets_cmd = app.add_subcommand("presets", "list the built-in coefficient algebras");
  presets_cmd->add_option("--out", out_path, "output path");

  auto* validate_cmd = app.add_subcommand("validate-spec", "validate a superalgebra spec");
  validate_cmd->add_option("--spec", spec_path, "path to a JSON superalgebra spec")->required();
  validate_cmd->add_option("--out", out_path, "output path");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression to normal form");
  add_context_flags(eval_cmd, true);
  eval_cmd->add_option("--expr", expr_path, "path to a JSON expression tree")->required();
  eval_cmd->add_flag("--right-form", right_form, "also print the right-handed normal form");

  auto* suite_cmd = app.add_subcommand("suite", "run the verification suites");
  add_context_flags(suite_cmd, true);
  suite_cmd->add_option("--seed", seed, "random seed (reports are deterministic per seed)");
  suite_cmd->add_option("--samples", samples, "number of random samples per property");

  auto* gram_cmd = app.add_subcommand("gram", "trace-form Gram matrix and dual basis");
  add_context_flags(gram_cmd, true);

  auto* mackey_cmd = app.add_subcommand("mackey-dims", "induction-restriction dimension checks");
  add_context_flags(mackey_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (presets_cmd->parsed()) return cmd_presets(out_path);
    if (validate_cmd->parsed()) return cmd_validate(spec_path, out_path);
    AlgebraPtr alg = load_algebra(preset, spec_path);
    Scalar z = parse_z(z_str);
    if (n < 1) throw UsageError("--n must be at least 1");
    if (eval_cmd->parsed()) return cmd_eval(alg, n, z, f_path, expr_path, right_form, out_path);
    if (suite_cmd->parsed()) return cmd_suite(alg, n, z, f_path, seed, samples, out_path);
    if (gram_cmd->parsed()) return cmd_gram(alg, n, z, f_path, out_path);
    if (mackey_cmd->parsed()) return cmd_mackey(alg, n, z, f_path, out_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
