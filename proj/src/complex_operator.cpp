#include "skt/complex_operator.hpp"

namespace skt {

ComplexOperator ComplexOperator::standard(int dim) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (int a = 0; a + 1 < dim; a += 2) {
    // J e_{2a} = e_{2a+1}: column 2a has a 1 in row 2a+1
    m(a + 1, a) = 1.0;
    m(a, a + 1) = -1.0;
  }
  return ComplexOperator(std::move(m));
}

double ComplexOperator::squares_to_minus_one_residual() const {
  const int d = int(matrix.rows());
  return (matrix * matrix + Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff();
}

double ComplexOperator::compatibility_residual(const FrameSpace& space) const {
  return (matrix.transpose() * space.metric() * matrix - space.metric())
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace skt
