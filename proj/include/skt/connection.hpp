#ifndef SKT_CONNECTION_HPP
#define SKT_CONNECTION_HPP

#include <Eigen/Dense>
#include <vector>

#include "skt/hermitian.hpp"

namespace skt {

/// Invariant connection as full bilinear tables: nabla_{e_i} e_j =
/// sum_k gamma[i](k, j) e_k. Not symmetrized, so torsionful connections fit.
struct ConnectionData {
  std::vector<Eigen::MatrixXd> gamma;

  Eigen::VectorXd covariant(int i, const Eigen::VectorXd& y) const {
    return gamma[std::size_t(i)] * y;
  }

  double metric_compatibility_residual(const LieAlgebraModel& m) const;
  /// Torsion T(X,Y) = nabla_X Y - nabla_Y X - [X,Y], lowered with g.
  AlternatingForm torsion_lowered(const LieAlgebraModel& m) const;
  /// Residual of the full antisymmetry of the lowered torsion 3-tensor.
  double torsion_skewness_residual(const LieAlgebraModel& m) const;
  double parallel_j_residual(const HermitianModel& m) const;
};

struct CurvatureData {
  /// R(e_i, e_j, e_k, e_l) = g(R(e_i,e_j) e_k, e_l).
  std::vector<double> lowered;  // dim^4, index ((i*d+j)*d+k)*d+l
  int dim = 0;

  double at(int i, int j, int k, int l) const {
    return lowered[std::size_t(((i * dim + j) * dim + k) * dim + l)];
  }
};

struct Connections {
  ConnectionData levi_civita;
  ConnectionData bismut;
};

/// Levi-Civita (Koszul on invariant fields) and Bismut
/// (g(bismut_X Y, Z) = g(lc_X Y, Z) + H(X,Y,Z)/2) connections.
Connections connections(const HermitianModel& m, const AlternatingForm& torsion_h);

CurvatureData curvature_tensor(const LieAlgebraModel& m, const ConnectionData& c);

struct BismutRicci {
  AlternatingForm ricci_form;  // rho_hat(X,Y) = R_hat(X, Y, e_i, J e_i)
  double b_hat = 0.0;          // rho_hat(J e_i, e_i)
};

BismutRicci bismut_ricci(const HermitianModel& m, const CurvatureData& bismut_curvature);

}  // namespace skt

#endif
