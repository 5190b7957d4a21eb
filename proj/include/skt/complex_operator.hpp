#ifndef SKT_COMPLEX_OPERATOR_HPP
#define SKT_COMPLEX_OPERATOR_HPP

#include <Eigen/Dense>

#include "skt/frame_space.hpp"

namespace skt {

/// Almost-complex operator J on frame vectors, J^2 = -1, compatible with
/// the metric: g(JX, JY) = g(X, Y).
struct ComplexOperator {
  Eigen::MatrixXd matrix;

  explicit ComplexOperator(Eigen::MatrixXd m) : matrix(std::move(m)) {}

  /// Standard pairing J e_{2a} = e_{2a+1}, J e_{2a+1} = -e_{2a}.
  static ComplexOperator standard(int dim);

  double squares_to_minus_one_residual() const;
  double compatibility_residual(const FrameSpace& space) const;
};

}  // namespace skt

#endif
