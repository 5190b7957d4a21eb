#ifndef SKT_LIE_ALGEBRA_HPP
#define SKT_LIE_ALGEBRA_HPP

#include <Eigen/Dense>
#include <vector>

#include "skt/form.hpp"
#include "skt/frame_space.hpp"

namespace skt {

/// Lie algebra with a fixed frame: structure constants c^k_{ij} give
/// [e_i, e_j] = sum_k c^k_{ij} e_k. Together with the frame metric this is
/// the whole left-invariant geometry of the corresponding group.
class LieAlgebraModel {
 public:
  LieAlgebraModel(FrameSpace space, std::vector<Eigen::MatrixXd> structure);

  static LieAlgebraModel abelian(FrameSpace space);

  const FrameSpace& space() const { return space_; }
  int dim() const { return space_.dim(); }

  /// c^k_{ij} tables, one antisymmetric matrix (i,j) per upper index k.
  const std::vector<Eigen::MatrixXd>& structure() const { return structure_; }
  double structure_constant(int k, int i, int j) const { return structure_[k](i, j); }

  Eigen::VectorXd bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  double jacobi_residual() const;
  double antisymmetry_residual() const;
  /// Max |sum_i c^i_{ij}| over j; zero iff unimodular.
  double unimodularity_defect() const;
  bool unimodular(double tol = 1e-12) const { return unimodularity_defect() <= tol; }

  LieAlgebraModel with_space(FrameSpace space) const {
    return LieAlgebraModel(std::move(space), structure_);
  }

 private:
  FrameSpace space_;
  std::vector<Eigen::MatrixXd> structure_;
};

/// Chevalley-Eilenberg differential of an invariant form:
/// dF(X_0..X_p) = sum_{i<j} (-1)^{i+j} F([X_i,X_j], .. X^hat_i .. X^hat_j ..).
AlternatingForm ce_differential(const LieAlgebraModel& m, const AlternatingForm& f);

/// Codifferential -*d* (even dimension).
AlternatingForm codifferential(const LieAlgebraModel& m, const AlternatingForm& f);

}  // namespace skt

#endif
