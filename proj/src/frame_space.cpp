#include "skt/frame_space.hpp"

#include "skt/multiindex.hpp"

namespace skt {

FrameSpace::FrameSpace(int dim, Eigen::MatrixXd metric, int orientation)
    : dim_(dim), metric_(std::move(metric)), orientation_(orientation) {
  if (dim < 4 || dim % 2 != 0 || dim > kMaxDim)
    throw DimensionError("FrameSpace: dimension must be even and >= 4");
  if (metric_.rows() != dim || metric_.cols() != dim)
    throw DimensionError("FrameSpace: metric shape mismatch");
  if ((metric_ - metric_.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw DefinitenessError("FrameSpace: metric not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(metric_);
  if (eig.eigenvalues().minCoeff() <= 1e-12)
    throw DefinitenessError("FrameSpace: metric not positive-definite");
  metric_inverse_ = metric_.inverse();
  sqrt_det_ = std::sqrt(metric_.determinant());
  identity_metric_ =
      (metric_ - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff() == 0.0;
}

}  // namespace skt
