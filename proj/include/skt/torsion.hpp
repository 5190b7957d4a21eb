#ifndef SKT_TORSION_HPP
#define SKT_TORSION_HPP

#include "skt/hermitian.hpp"

namespace skt {

struct InternalConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Derived torsion bundle of one Hermitian model.
struct TorsionPackage {
  AlternatingForm d_omega;
  AlternatingForm h;            // H = J d omega, type (1,2)+(2,1)
  AlternatingForm dh;
  AlternatingForm theta;        // Lee form
  double delta_theta = 0.0;
  AlternatingForm lambda;       // lambda(X,Y) = dH(X,Y,e_i,Je_i)
  double lambda_trace = 0.0;    // sum_i lambda(e_i, Je_i)
  double norm_h_sq = 0.0;
  double norm_theta_sq = 0.0;
  double norm_c_sq = 0.0;       // Chern torsion norm
};

/// 3-form torsion H(X,Y,Z) = J d omega (X,Y,Z) = -d omega(JX,JY,JZ).
AlternatingForm torsion_h(const HermitianModel& m);

/// Lee form theta(X) = -1/2 H(JX, e_i, J e_i); cross-checked against the
/// codifferential route delta omega o J.
AlternatingForm lee_form(const HermitianModel& m, const AlternatingForm& h);

/// lambda 2-form and its trace.
struct LambdaForm {
  AlternatingForm lambda;
  double trace = 0.0;
};
LambdaForm lambda_form(const HermitianModel& m, const AlternatingForm& dh);

/// Chern-torsion norm ||C||^2 with g(C(X,Y),Z) = H(X,JY,JZ)/2 + H(JX,Y,JZ)/2.
double chern_torsion_norm_sq(const HermitianModel& m, const AlternatingForm& h);

TorsionPackage torsion_package(const HermitianModel& m);

/// Sup norm of the (3,0)+(0,3) part; zero iff H has the type forced by
/// integrability.
double antiholomorphic_part_norm(const HermitianModel& m, const AlternatingForm& h);

}  // namespace skt

#endif
