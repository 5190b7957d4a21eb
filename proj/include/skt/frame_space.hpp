#ifndef SKT_FRAME_SPACE_HPP
#define SKT_FRAME_SPACE_HPP

#include <Eigen/Dense>
#include <stdexcept>

namespace skt {

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DefinitenessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Oriented inner-product frame space of even dimension 2n. The metric is
/// given in the fixed frame e_0..e_{2n-1}; the orientation sign is fixed
/// externally (by the active Hermitian structure) and defaults to +1 on the
/// standard frame order.
class FrameSpace {
 public:
  FrameSpace(int dim, Eigen::MatrixXd metric, int orientation = +1);

  static FrameSpace euclidean(int dim) {
    return FrameSpace(dim, Eigen::MatrixXd::Identity(dim, dim));
  }

  int dim() const { return dim_; }
  const Eigen::MatrixXd& metric() const { return metric_; }
  const Eigen::MatrixXd& metric_inverse() const { return metric_inverse_; }
  double sqrt_det_metric() const { return sqrt_det_; }
  int orientation() const { return orientation_; }
  bool metric_is_identity() const { return identity_metric_; }

  FrameSpace with_orientation(int sign) const {
    FrameSpace s(*this);
    s.orientation_ = sign;
    return s;
  }

 private:
  int dim_;
  Eigen::MatrixXd metric_;
  Eigen::MatrixXd metric_inverse_;
  double sqrt_det_;
  int orientation_;
  bool identity_metric_;
};

}  // namespace skt

#endif
