#include "skt/twist.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "skt/exterior.hpp"
#include "skt/torsion.hpp"

namespace skt {

AlternatingForm TwistSpec::eta(std::size_t a) const {
  const Eigen::VectorXd lowered = base.space().metric() * xi[a];
  AlternatingForm out(base.dim(), 1);
  for (int i = 0; i < base.dim(); ++i)
    out.set_component(IndexMask(1) << i, lowered[i]);
  return out;
}

AlternatingForm TwistSpec::twisted_curvature(std::size_t a) const {
  AlternatingForm out(base.dim(), 2);
  for (std::size_t b = 0; b < f.size(); ++b) {
    const double c = beta_inverse(Eigen::Index(a), Eigen::Index(b));
    if (c != 0.0) out += c * f[b];
  }
  return out;
}

TwistSpec TwistSpec::from_frame_indices(HermitianModel base,
                                        const std::vector<int>& indices,
                                        std::vector<AlternatingForm> f,
                                        Eigen::MatrixXd beta_inverse) {
  TwistSpec spec{std::move(base), {}, std::move(f), std::move(beta_inverse)};
  for (int i : indices) {
    if (i < 0 || i >= spec.base.dim())
      throw TwistError("twist: action index out of range");
    spec.xi.push_back(Eigen::VectorXd::Unit(spec.base.dim(), i));
  }
  return spec;
}

bool TwistReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const TwistCheck& c) { return c.passed; });
}

const TwistCheck* TwistReport::find(const std::string& name) const {
  for (const TwistCheck& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

void require_consistent(const TwistSpec& spec) {
  const auto p = std::ptrdiff_t(spec.xi.size());
  if (spec.f.size() != spec.xi.size() || spec.beta_inverse.rows() != p ||
      spec.beta_inverse.cols() != p || p == 0)
    throw TwistError("twist: xi, F and matrix sizes disagree");
  for (const AlternatingForm& form : spec.f)
    if (form.dim() != spec.base.dim() || form.degree() != 2)
      throw TwistError("twist: curvature entries must be 2-forms on the base");
}

void push(TwistReport& report, const std::string& name, double residual,
          double tol) {
  report.checks.push_back({name, residual <= tol, residual});
}

}  // namespace

TwistReport lift_check(const TwistSpec& spec, double tol) {
  require_consistent(spec);
  TwistReport report;
  const LieAlgebraModel& alg = spec.base.algebra();
  const int dim = spec.base.dim();
  const Eigen::MatrixXd& g = spec.base.space().metric();
  const Eigen::MatrixXd omega_matrix = g * spec.base.j().matrix;

  const double det = spec.beta_inverse.determinant();
  report.checks.push_back({"invertible_matrix", std::abs(det) > tol, std::abs(det)});

  double commuting = 0.0;
  for (const Eigen::VectorXd& a : spec.xi)
    for (const Eigen::VectorXd& b : spec.xi)
      commuting = std::max(commuting, alg.bracket(a, b).lpNorm<Eigen::Infinity>());
  push(report, "commuting_action", commuting, tol);

  // ad_xi skew with respect to g (Killing) and omega (Hermitian invariance).
  double killing = 0.0;
  double hermitian = 0.0;
  for (const Eigen::VectorXd& x : spec.xi) {
    Eigen::MatrixXd ad(dim, dim);
    for (int i = 0; i < dim; ++i)
      ad.col(i) = alg.bracket(x, Eigen::VectorXd::Unit(dim, i));
    killing = std::max(
        killing, (ad.transpose() * g + g * ad).lpNorm<Eigen::Infinity>());
    hermitian = std::max(hermitian, (ad.transpose() * omega_matrix +
                                     omega_matrix * ad)
                                        .lpNorm<Eigen::Infinity>());
  }
  push(report, "metric_invariance", killing, tol);
  push(report, "hermitian_invariance", hermitian, tol);

  double horizontal = 0.0;
  double invariant = 0.0;
  for (const AlternatingForm& form : spec.f) {
    const AlternatingForm df = ce_differential(alg, form);
    for (const Eigen::VectorXd& x : spec.xi) {
      horizontal = std::max(horizontal, interior_product(x, form).sup_norm());
      // L_xi F = i_xi dF + d i_xi F; the second term repeats the line above.
      invariant = std::max(
          invariant,
          (interior_product(x, df) +
           ce_differential(alg, interior_product(x, form)))
              .sup_norm());
    }
  }
  push(report, "curvature_horizontal", horizontal, tol);
  push(report, "curvature_invariant", invariant, tol);
  return report;
}

HermitianModel twist_model(const TwistSpec& spec, double tol) {
  require_consistent(spec);
  const TwistReport lift = lift_check(spec, tol);
  if (!lift.all_passed()) throw TwistError("twist: lift conditions violated");

  const int dim = spec.base.dim();
  std::vector<Eigen::MatrixXd> structure = spec.base.algebra().structure();
  for (std::size_t a = 0; a < spec.xi.size(); ++a) {
    const AlternatingForm fa = spec.twisted_curvature(a);
    for (int m = 0; m < dim; ++m) {
      const double xm = spec.xi[a][m];
      if (xm == 0.0) continue;
      for (int i = 0; i < dim; ++i)
        for (int l = 0; l < dim; ++l) {
          const int idx[2] = {i, l};
          structure[std::size_t(m)](i, l) += xm * fa.value(idx, 2);
        }
    }
  }

  LieAlgebraModel twisted(spec.base.space(), std::move(structure));
  if (twisted.jacobi_residual() > tol)
    throw TwistError("twist: twisted differential does not square to zero");

  HermitianModel w(twisted, spec.base.j());
  if (w.nijenhuis_residual() > tol)
    throw TwistError(
        "twist: complex structure not integrable on the twisted model "
        "(curvature has a bad (0,2) component)");
  return w;
}

TwistReport verify_hw(const TwistSpec& spec, const HermitianModel& w,
                      double tol) {
  require_consistent(spec);
  TwistReport report;
  const AlternatingForm h_w = torsion_h(w);
  AlternatingForm rhs = torsion_h(spec.base);
  double non_11 = 0.0;
  for (std::size_t a = 0; a < spec.xi.size(); ++a) {
    const AlternatingForm fa = spec.twisted_curvature(a);
    rhs += wedge(slot_j_sum(fa, spec.base.j()),
                 interior_product(spec.xi[a], spec.base.omega()));
    rhs -= wedge(fa, spec.eta(a));
    non_11 = std::max(non_11, slot_j_sum(fa, spec.base.j()).sup_norm());
  }
  const double residual =
      (h_w - rhs).sup_norm() / (1.0 + h_w.sup_norm() + rhs.sup_norm());
  push(report, "hw_formula", residual, tol);
  report.checks.push_back({"curvature_type_11", non_11 <= tol, non_11});
  return report;
}

DioCondition dio_condition_from_name(const std::string& name) {
  if (name == "eq48") return DioCondition::eq48;
  if (name == "eq49") return DioCondition::eq49;
  if (name == "eq410") return DioCondition::eq410;
  if (name == "eq411") return DioCondition::eq411;
  throw TwistError("unknown condition id: " + name);
}

std::string dio_condition_name(DioCondition c) {
  switch (c) {
    case DioCondition::eq48: return "eq48";
    case DioCondition::eq49: return "eq49";
    case DioCondition::eq410: return "eq410";
    case DioCondition::eq411: return "eq411";
  }
  return "?";
}

DioResult diophantine_check(const DiophantineInstance& inst) {
  if (inst.det() == 0)
    throw TwistError("diophantine_check: matrix not invertible (det = 0)");
  if (inst.k < 1) throw TwistError("diophantine_check: k must be >= 1");

  const std::int64_t a = inst.p1 * inst.p1 + inst.p2 * inst.p2;
  const std::int64_t b = inst.p1 * inst.q1 + inst.p2 * inst.q2;
  const std::int64_t c = inst.q1 * inst.q1 + inst.q2 * inst.q2;
  const std::int64_t k = inst.k;

  DioResult out;
  switch (inst.condition) {
    case DioCondition::eq48:
      out.lhs = (inst.null_f1 ? 0 : a) + 2 * b;
      break;
    case DioCondition::eq49:
      out.lhs = (inst.null_f1 ? 0 : (k - 1) * a) + 2 * b;
      break;
    case DioCondition::eq410:
      out.lhs = (k - 1) * a + 2 * b;
      break;
    case DioCondition::eq411:
      out.lhs = (inst.null_f1 ? 0 : k * (k - 1) / 2 * a) + 2 * k * b +
                (inst.null_f2 ? 0 : c);
      break;
  }
  out.satisfied = out.lhs == 0;

  if (inst.condition == DioCondition::eq411 && inst.p1 == 0 && !inst.null_f1 &&
      !inst.null_f2) {
    const std::int64_t shifted = k * inst.p2 + inst.q2;
    const bool rewritten = inst.q1 * inst.q1 + shifted * shifted ==
                           k * (k + 1) / 2 * inst.p2 * inst.p2;
    if (rewritten != out.satisfied)
      throw TwistError("diophantine_check: rewritten form disagrees");
    out.rewritten_checked = true;
  }
  return out;
}

std::vector<DiophantineInstance> enumerate_beta(DioCondition condition, int k,
                                                int bound, bool null_f1,
                                                bool null_f2) {
  std::vector<DiophantineInstance> out;
  if (bound < 0) throw TwistError("enumerate_beta: bound must be >= 0");
  for (int p1 = -bound; p1 <= bound; ++p1)
    for (int p2 = -bound; p2 <= bound; ++p2)
      for (int q1 = -bound; q1 <= bound; ++q1)
        for (int q2 = -bound; q2 <= bound; ++q2) {
          DiophantineInstance inst{condition, k, p1, p2, q1, q2, null_f1,
                                   null_f2};
          if (inst.det() == 0) continue;
          if (diophantine_check(inst).satisfied) out.push_back(inst);
        }
  return out;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw TwistError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(std::abs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

ScytConstants scyt_constants(const DiophantineInstance& inst, ScytCase c) {
  if (inst.det() == 0)
    throw TwistError("scyt_constants: matrix not invertible (det = 0)");
  const std::int64_t a = inst.p1 * inst.p1 + inst.p2 * inst.p2;
  const std::int64_t b = inst.p1 * inst.q1 + inst.p2 * inst.q2;
  const std::int64_t cc = inst.q1 * inst.q1 + inst.q2 * inst.q2;
  const std::int64_t k = inst.k;

  ScytConstants out;
  switch (c) {
    case ScytCase::X2k_X2: {
      out.l1 = make_rational(-k * a - b, 1);
      out.l2 = make_rational(-k * b - cc, 1);
      DiophantineInstance gate = inst;
      gate.condition = DioCondition::eq410;
      if (diophantine_check(gate).satisfied) {
        if (out.l1 != make_rational(-(k + 1) * a, 2))
          throw TwistError("scyt_constants: simplified l1 form disagrees");
        out.simplified_l1_checked = true;
      }
      break;
    }
    case ScytCase::X2k_X4:
      out.l1 = make_rational(-k * a - 2 * b, 1);
      out.l2 = make_rational(-k * b - 2 * cc, 1);
      break;
  }
  return out;
}

}  // namespace skt
