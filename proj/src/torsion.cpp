#include "skt/torsion.hpp"

#include <cmath>

#include "skt/exterior.hpp"

namespace skt {

AlternatingForm torsion_h(const HermitianModel& m) {
  return j_transform(m.j(), ce_differential(m.algebra(), m.omega()));
}

AlternatingForm lee_form(const HermitianModel& m, const AlternatingForm& h) {
  // theta(X) = -1/2 (sum_i H(JX, e_i, J e_i))
  const AlternatingForm t = ei_jei_trace(h, m.j(), m.space());
  AlternatingForm theta = -0.5 * pullback(m.j().matrix, t);
  // cross-check against theta = delta omega o J
  const AlternatingForm delta_omega = codifferential(m.algebra(), m.omega());
  const AlternatingForm alt = pullback(m.j().matrix, delta_omega);
  const double scale = 1.0 + theta.sup_norm();
  if ((theta - alt).sup_norm() > 1e-8 * scale)
    throw InternalConsistencyError(
        "lee_form: contraction and codifferential routes disagree");
  return theta;
}

LambdaForm lambda_form(const HermitianModel& m, const AlternatingForm& dh) {
  LambdaForm out{ei_jei_trace(dh, m.j(), m.space()), 0.0};
  out.trace = ei_jei_trace(out.lambda, m.j(), m.space())[0];
  return out;
}

double chern_torsion_norm_sq(const HermitianModel& m, const AlternatingForm& h) {
  // computed in a g-orthonormal frame adapted to J
  const int d = m.dim();
  const Eigen::MatrixXd frame = adapted_frame(m.space(), m.j());
  const AlternatingForm hf = pullback(frame, h);
  int idx[3];
  auto hval = [&](int i, int j, int k) {
    idx[0] = i, idx[1] = j, idx[2] = k;
    return hf.value(idx, 3);
  };
  // In the adapted frame J e_a = e_{a+1} for even a, -e_{a-1} for odd a.
  auto jidx = [](int a) { return (a % 2 == 0) ? a + 1 : a - 1; };
  auto jsgn = [](int a) { return (a % 2 == 0) ? 1.0 : -1.0; };
  double sum = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const double c = 0.5 * jsgn(j) * jsgn(k) * hval(i, jidx(j), jidx(k)) +
                         0.5 * jsgn(i) * jsgn(k) * hval(jidx(i), j, jidx(k));
        sum += c * c;
      }
  return sum;
}

double antiholomorphic_part_norm(const HermitianModel& m, const AlternatingForm& h) {
  return bidegree_component(h, m.j(), m.space(), 3, 0).sup_norm();
}

TorsionPackage torsion_package(const HermitianModel& m) {
  const LieAlgebraModel& alg = m.algebra();
  TorsionPackage p{
      ce_differential(alg, m.omega()),
      AlternatingForm(m.dim(), 3),
      AlternatingForm(m.dim(), 4),
      AlternatingForm(m.dim(), 1),
      0.0,
      AlternatingForm(m.dim(), 2),
      0.0,
      0.0,
      0.0,
      0.0};
  p.h = j_transform(m.j(), p.d_omega);
  p.dh = ce_differential(alg, p.h);
  p.theta = lee_form(m, p.h);
  p.delta_theta = codifferential(alg, p.theta)[0];
  LambdaForm lf = lambda_form(m, p.dh);
  p.lambda = lf.lambda;
  p.lambda_trace = lf.trace;
  p.norm_h_sq = contraction_norm_sq(p.h, m.space());
  p.norm_theta_sq = contraction_norm_sq(p.theta, m.space());
  p.norm_c_sq = chern_torsion_norm_sq(m, p.h);
  return p;
}

}  // namespace skt
