#include "skt/hermitian.hpp"

#include <cmath>

#include "skt/exterior.hpp"

namespace skt {

namespace {

AlternatingForm omega_of(const FrameSpace& space, const ComplexOperator& j) {
  const int dim = space.dim();
  AlternatingForm omega(dim, 2);
  const Eigen::MatrixXd gj = space.metric() * j.matrix;  // omega_ij = g_ik J^k_j
  for (int i = 0; i < dim; ++i)
    for (int k = i + 1; k < dim; ++k)
      omega.set_component((IndexMask(1) << i) | (IndexMask(1) << k),
                          0.5 * (gj(i, k) - gj(k, i)));
  return omega;
}

int omega_orientation(const FrameSpace& space, const AlternatingForm& omega) {
  AlternatingForm top = wedge_power(omega, space.dim() / 2);
  const double c = top[0];
  return c >= 0.0 ? +1 : -1;
}

}  // namespace

HermitianModel::HermitianModel(LieAlgebraModel algebra, ComplexOperator j)
    : algebra_(std::move(algebra)),
      j_(std::move(j)),
      omega_(omega_of(algebra_.space(), j_)) {
  if (j_.matrix.rows() != algebra_.dim())
    throw DimensionError("HermitianModel: J dimension mismatch");
  const int orient = omega_orientation(algebra_.space(), omega_);
  algebra_ = algebra_.with_space(algebra_.space().with_orientation(orient));
}

double HermitianModel::nijenhuis_residual() const {
  const int d = dim();
  const Eigen::MatrixXd& jm = j_.matrix;
  double m = 0.0;
  for (int i = 0; i < d; ++i) {
    const Eigen::VectorXd x = Eigen::VectorXd::Unit(d, i);
    const Eigen::VectorXd jx = jm * x;
    for (int k = i + 1; k < d; ++k) {
      const Eigen::VectorXd y = Eigen::VectorXd::Unit(d, k);
      const Eigen::VectorXd jy = jm * y;
      const Eigen::VectorXd n = algebra_.bracket(jx, jy) - jm * algebra_.bracket(jx, y) -
                                jm * algebra_.bracket(x, jy) - algebra_.bracket(x, y);
      m = std::max(m, n.cwiseAbs().maxCoeff());
    }
  }
  return m;
}

HermitianModel HermitianModel::with_metric(const Eigen::MatrixXd& metric) const {
  FrameSpace space(dim(), metric);
  return HermitianModel(algebra_.with_space(std::move(space)), j_);
}

bool ValidationReport::usable() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ValidationReport validate_model(const HermitianModel& m, double tol) {
  ValidationReport report;
  auto add = [&](const std::string& name, double residual) {
    report.checks.push_back({name, residual <= tol, residual});
  };
  add("bracket_antisymmetry", m.algebra().antisymmetry_residual());
  add("jacobi", m.algebra().jacobi_residual());
  add("j_squares_to_minus_one", m.j().squares_to_minus_one_residual());
  add("metric_compatibility", m.j().compatibility_residual(m.space()));
  add("nijenhuis_integrability", m.nijenhuis_residual());
  // Positive-definiteness is enforced at FrameSpace construction; record it.
  add("metric_positive_definite", 0.0);
  // omega must be pure (1,1), i.e. J-invariant
  add("omega_j_invariant",
      (j_transform(m.j(), m.omega()) - m.omega()).sup_norm());
  report.unimodular = m.algebra().unimodular(1e-10);
  return report;
}

}  // namespace skt
