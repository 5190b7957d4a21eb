#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "skt/analysis.hpp"
#include "skt/catalog.hpp"
#include "skt/exterior.hpp"
#include "skt/model_io.hpp"
#include "skt/report.hpp"
#include "skt/torsion.hpp"
#include "skt/twist.hpp"

namespace {

using namespace skt;

HermitianModel load_model(const std::string& spec) {
  if (std::filesystem::exists(spec)) return parse_model_file(spec).model;
  // Fall back to the catalog: "name" or "name:parameter".
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const int param =
      colon == std::string::npos ? 0 : std::stoi(spec.substr(colon + 1));
  return catalog_get(name, param);
}

double rel_diff(double a, double b) {
  return std::abs(a - b) / (1.0 + std::abs(a) + std::abs(b));
}

void add_validation(Report& rep, const HermitianModel& m) {
  const ValidationReport v = validate_model(m);
  for (const ValidationCheck& c : v.checks)
    rep.check("validate", c.name, c.passed, c.residual);
  rep.info("validate", "unimodular", v.unimodular ? 1.0 : 0.0);
}

Report analyze_report(const HermitianModel& m, double tol) {
  Report rep;
  rep.title = "analyze";
  add_validation(rep, m);

  const TorsionPackage t = torsion_package(m);
  rep.info("torsion", "norm_h_sq", t.norm_h_sq);
  rep.info("torsion", "norm_theta_sq", t.norm_theta_sq);
  rep.info("torsion", "norm_c_sq", t.norm_c_sq);
  rep.info("torsion", "delta_theta", t.delta_theta);
  rep.info("torsion", "lambda_trace", t.lambda_trace);

  const SktClassification cls = skt_classify(m, tol);
  rep.info("classify", "kahler", cls.kahler ? 1.0 : 0.0);
  rep.info("classify", "balanced", cls.balanced ? 1.0 : 0.0);
  rep.info("classify", "lck", cls.lck ? 1.0 : 0.0,
           "residual=" + format_scalar(cls.lck_residual));
  for (const auto& e : cls.lk_table)
    rep.info("classify",
             "strong_k" + std::to_string(e.k) + "_l" + std::to_string(e.l),
             e.holds ? 1.0 : 0.0, "residual=" + format_scalar(e.residual));
  for (int k : cls.gauduchon_k)
    rep.info("classify", "gauduchon_k" + std::to_string(k), 1.0);

  const int n = m.n();
  for (int k = 1; k <= n - 1; ++k) {
    const auto& a = cls.alpha[std::size_t(k - 1)];
    rep.info("alpha", "alpha_" + std::to_string(k) + "_definitional", a[0]);
    if (n >= 3) {
      rep.info("alpha", "alpha_" + std::to_string(k) + "_lambda", a[1]);
      rep.info("alpha", "alpha_" + std::to_string(k) + "_closed", a[2]);
      const double worst =
          std::max(rel_diff(a[0], a[1]), rel_diff(a[0], a[2]));
      rep.check("alpha", "routes_agree_" + std::to_string(k), worst <= 1e-8,
                worst);
    }
  }

  if (n >= 3) {
    for (int k = 1; k <= n - 1; ++k) {
      const VanishingMargin vm = vanishing_margin(m, k, tol);
      const char* verdict = vm.verdict == MarginVerdict::positive ? "positive"
                            : vm.verdict == MarginVerdict::zero  ? "zero"
                                                                 : "negative";
      rep.info("margin", "margin_k" + std::to_string(k), vm.margin, verdict);
      if (vm.k_skt)
        rep.check("margin", "trace_consistency_k" + std::to_string(k),
                  rel_diff(vm.margin, vm.trace_form) <= 1e-8,
                  rel_diff(vm.margin, vm.trace_form));
    }
  }
  return rep;
}

Report identities_report(const HermitianModel& m, int trials,
                         std::uint64_t seed, double tol) {
  Report rep;
  rep.title = "identities";
  add_validation(rep, m);
  const IdentityReport ir = identity_suite(m, trials, seed);
  for (const IdentityResult& r : ir.results) {
    if (!r.applicable)
      rep.add("identity", r.name, "skip");
    else
      rep.check("identity", r.name, r.residual <= tol, r.residual,
                "samples=" + std::to_string(r.samples));
  }
  return rep;
}

AlternatingForm parse_two_form(const std::string& text, int dim) {
  // comma-separated i:j:c terms, 1-based indices
  AlternatingForm out(dim, 2);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto next = text.find(',', pos);
    const std::string term =
        text.substr(pos, next == std::string::npos ? next : next - pos);
    const auto c1 = term.find(':');
    const auto c2 = term.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw TwistError("bad 2-form term (want i:j:c): " + term);
    const int i = std::stoi(term.substr(0, c1)) - 1;
    const int j = std::stoi(term.substr(c1 + 1, c2 - c1 - 1)) - 1;
    const double c = std::stod(term.substr(c2 + 1));
    if (i < 0 || j < 0 || i >= dim || j >= dim || i == j)
      throw TwistError("bad 2-form indices in: " + term);
    const int idx[2] = {i, j};
    AlternatingForm unit(dim, 2);
    (void)idx;
    if (i < j)
      unit.set_component((IndexMask(1) << i) | (IndexMask(1) << j), c);
    else
      unit.set_component((IndexMask(1) << j) | (IndexMask(1) << i), -c);
    out += unit;
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

Report twist_report(const HermitianModel& base, const std::vector<int>& xi,
                    const std::vector<std::string>& f_literals,
                    const std::vector<std::int64_t>& beta, bool check_hw,
                    double tol) {
  Report rep;
  rep.title = "twist";
  std::vector<AlternatingForm> fs;
  for (const std::string& lit : f_literals)
    fs.push_back(parse_two_form(lit, base.dim()));
  if (beta.size() != 4 || xi.size() != 2 || fs.size() != 2)
    throw TwistError("twist needs two xi indices, two F forms, beta p1,p2,q1,q2");
  Eigen::MatrixXd bi(2, 2);
  bi << double(beta[0]), double(beta[2]), double(beta[1]), double(beta[3]);

  std::vector<int> xi0;
  for (int i : xi) xi0.push_back(i - 1);
  const TwistSpec spec =
      TwistSpec::from_frame_indices(base, xi0, std::move(fs), std::move(bi));

  const TwistReport lift = lift_check(spec, tol);
  for (const TwistCheck& c : lift.checks)
    rep.check("lift", c.name, c.passed, c.residual);
  if (!lift.all_passed()) return rep;

  try {
    const HermitianModel w = twist_model(spec, tol);
    rep.check("twist", "construction", true, 0.0);
    const SktClassification cls = skt_classify(w, tol);
    for (const auto& e : cls.lk_table)
      rep.info("classify",
               "strong_k" + std::to_string(e.k) + "_l" + std::to_string(e.l),
               e.holds ? 1.0 : 0.0, "residual=" + format_scalar(e.residual));
    if (check_hw) {
      const TwistReport hw = verify_hw(spec, w, 1e-10);
      for (const TwistCheck& c : hw.checks)
        if (c.name == "curvature_type_11")
          rep.info("torsion", c.name, c.residual);
        else
          rep.check("torsion", c.name, c.passed, c.residual);
    }
  } catch (const TwistError& e) {
    rep.check("twist", "construction", false, 1.0, e.what());
  }
  return rep;
}

Report solve_report(const std::string& condition, int k, int bound,
                    bool null_f1, bool null_f2) {
  Report rep;
  rep.title = "solve";
  const auto cond = dio_condition_from_name(condition);
  const auto solutions = enumerate_beta(cond, k, bound, null_f1, null_f2);
  int idx = 0;
  for (const DiophantineInstance& s : solutions) {
    rep.info("solution", "beta_inv_" + std::to_string(idx++), 0.0,
             "p1=" + std::to_string(s.p1) + " p2=" + std::to_string(s.p2) +
                 " q1=" + std::to_string(s.q1) + " q2=" + std::to_string(s.q2));
  }
  rep.info("solve", "count", double(solutions.size()),
           condition + " k=" + std::to_string(k) +
               " bound=" + std::to_string(bound));
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariant Hermitian torsion geometry toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "records"}));

  std::string model_arg;
  double tol = 1e-9;
  int trials = 0;
  std::uint64_t seed = 0;
  double identity_tol = 1e-8;

  auto* analyze = app.add_subcommand("analyze", "classify a model");
  analyze->add_option("model", model_arg)->required();
  analyze->add_option("--tol", tol);

  auto* identities = app.add_subcommand("identities", "run the identity suite");
  identities->add_option("model", model_arg)->required();
  identities->add_option("--trials", trials);
  identities->add_option("--seed", seed);
  identities->add_option("--tol", identity_tol);

  auto* twist = app.add_subcommand("twist", "twist a model along a torus");
  std::vector<int> xi;
  std::vector<std::string> f_literals;
  std::vector<std::int64_t> beta;
  bool check_hw = false;
  twist->add_option("model", model_arg)->required();
  twist->add_option("--xi", xi, "action frame indices (1-based)")
      ->required()
      ->delimiter(',');
  twist->add_option("--F", f_literals, "curvature 2-form (i:j:c,...)")
      ->required();
  twist->add_option("--beta", beta, "matrix entries p1,p2,q1,q2")
      ->required()
      ->delimiter(',');
  twist->add_flag("--check-hw", check_hw);
  twist->add_option("--tol", tol);

  auto* solve = app.add_subcommand("solve", "enumerate integer solutions");
  std::string condition;
  int k = 2, bound = 1;
  bool null_f1 = false, null_f2 = false;
  solve->add_option("--condition", condition)
      ->required()
      ->check(CLI::IsMember({"eq48", "eq49", "eq410", "eq411"}));
  solve->add_option("--k", k);
  solve->add_option("--bound", bound)->required();
  solve->add_flag("--null-f1", null_f1);
  solve->add_flag("--null-f2", null_f2);

  auto* catalog = app.add_subcommand("catalog", "built-in models");
  std::string catalog_action, catalog_name;
  int catalog_param = 0;
  catalog->add_option("action", catalog_action)
      ->required()
      ->check(CLI::IsMember({"list", "get"}));
  catalog->add_option("name", catalog_name);
  catalog->add_option("param", catalog_param);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Report rep;
    if (analyze->parsed()) {
      rep = analyze_report(load_model(model_arg), tol);
    } else if (identities->parsed()) {
      rep = identities_report(load_model(model_arg), trials, seed, identity_tol);
    } else if (twist->parsed()) {
      rep = twist_report(load_model(model_arg), xi, f_literals, beta, check_hw,
                         tol);
    } else if (solve->parsed()) {
      rep = solve_report(condition, k, bound, null_f1, null_f2);
    } else if (catalog->parsed()) {
      if (catalog_action == "list") {
        rep.title = "catalog";
        for (const CatalogEntry& e : catalog_entries())
          rep.info("entry", e.name, 0.0,
                   e.parameter_doc.empty() ? e.summary
                                           : "<" + e.parameter_doc + "> " +
                                                 e.summary);
      } else {
        if (catalog_name.empty()) {
          std::cerr << "catalog get needs a name\n";
          return 2;
        }
        const HermitianModel m = catalog_get(catalog_name, catalog_param);
        std::cout << serialize_model(ModelDocument{m, {}, {}});
        return 0;
      }
    }
    std::cout << emit_report(
        rep, format == "records" ? ReportFormat::records : ReportFormat::text);
    return rep.passed() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
