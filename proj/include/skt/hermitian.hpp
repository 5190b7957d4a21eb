#ifndef SKT_HERMITIAN_HPP
#define SKT_HERMITIAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "skt/complex_operator.hpp"
#include "skt/lie_algebra.hpp"

namespace skt {

struct ValidationCheck {
  std::string name;
  bool passed = false;
  double residual = 0.0;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool unimodular = false;

  /// All structural invariants hold (unimodularity is only a warning).
  bool usable() const;
  const ValidationCheck* find(const std::string& name) const;
};

/// Left-invariant Hermitian structure: Lie algebra + compatible integrable J.
/// omega(X,Y) = g(X, JY); the frame orientation is fixed by declaring
/// omega^n/n! positive.
class HermitianModel {
 public:
  HermitianModel(LieAlgebraModel algebra, ComplexOperator j);

  const LieAlgebraModel& algebra() const { return algebra_; }
  /// Frame space with the orientation induced by omega^n.
  const FrameSpace& space() const { return algebra_.space(); }
  const ComplexOperator& j() const { return j_; }
  const AlternatingForm& omega() const { return omega_; }
  int dim() const { return algebra_.dim(); }
  int n() const { return dim() / 2; }

  double nijenhuis_residual() const;

  /// Same algebra and J with a different compatible metric.
  HermitianModel with_metric(const Eigen::MatrixXd& metric) const;

 private:
  LieAlgebraModel algebra_;
  ComplexOperator j_;
  AlternatingForm omega_;
};

ValidationReport validate_model(const HermitianModel& m, double tol = 1e-9);

}  // namespace skt

#endif
