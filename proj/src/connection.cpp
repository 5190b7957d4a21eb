#include "skt/connection.hpp"

#include <cmath>

#include "skt/exterior.hpp"

namespace skt {

double ConnectionData::metric_compatibility_residual(const LieAlgebraModel& m) const {
  // invariant fields: nabla g = 0 iff g(nabla_i e_j, e_k) + g(e_j, nabla_i e_k) = 0
  const int d = m.dim();
  const Eigen::MatrixXd& g = m.space().metric();
  double r = 0.0;
  for (int i = 0; i < d; ++i) {
    const Eigen::MatrixXd low = g * gamma[std::size_t(i)];  // g(nabla_i e_j, e_k) at (k,j)
    r = std::max(r, (low + low.transpose()).cwiseAbs().maxCoeff());
  }
  return r;
}

AlternatingForm ConnectionData::torsion_lowered(const LieAlgebraModel& m) const {
  const int d = m.dim();
  const Eigen::MatrixXd& g = m.space().metric();
  AlternatingForm t(d, 3);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const Eigen::VectorXd ei = Eigen::VectorXd::Unit(d, i);
      const Eigen::VectorXd ej = Eigen::VectorXd::Unit(d, j);
      const Eigen::VectorXd tij =
          gamma[std::size_t(i)] * ej - gamma[std::size_t(j)] * ei - m.bracket(ei, ej);
      const Eigen::VectorXd lowered = g * tij;
      for (int k = j + 1; k < d; ++k)
        t.set_component((IndexMask(1) << i) | (IndexMask(1) << j) | (IndexMask(1) << k),
                        lowered[k]);
    }
  return t;
}

double ConnectionData::torsion_skewness_residual(const LieAlgebraModel& m) const {
  const int d = m.dim();
  const Eigen::MatrixXd& g = m.space().metric();
  const AlternatingForm skew = torsion_lowered(m);
  double r = 0.0;
  int idx[3];
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Eigen::VectorXd ei = Eigen::VectorXd::Unit(d, i);
      const Eigen::VectorXd ej = Eigen::VectorXd::Unit(d, j);
      const Eigen::VectorXd lowered =
          g * (gamma[std::size_t(i)] * ej - gamma[std::size_t(j)] * ei -
               m.bracket(ei, ej));
      for (int k = 0; k < d; ++k) {
        idx[0] = i, idx[1] = j, idx[2] = k;
        r = std::max(r, std::abs(lowered[k] - skew.value(idx, 3)));
      }
    }
  return r;
}

double ConnectionData::parallel_j_residual(const HermitianModel& m) const {
  const int d = m.dim();
  const Eigen::MatrixXd& jm = m.j().matrix;
  double r = 0.0;
  for (int i = 0; i < d; ++i) {
    const Eigen::MatrixXd& gi = gamma[std::size_t(i)];
    r = std::max(r, (gi * jm - jm * gi).cwiseAbs().maxCoeff());
  }
  return r;
}

Connections connections(const HermitianModel& m, const AlternatingForm& torsion_h) {
  const int d = m.dim();
  const LieAlgebraModel& alg = m.algebra();
  const Eigen::MatrixXd& g = m.space().metric();
  const Eigen::MatrixXd& ginv = m.space().metric_inverse();
  Connections out;
  out.levi_civita.gamma.resize(std::size_t(d));
  out.bismut.gamma.resize(std::size_t(d));
  int idx[3];
  for (int i = 0; i < d; ++i) {
    Eigen::MatrixXd low_lc(d, d);      // g(nabla_i e_j, e_l) at (l, j)
    Eigen::MatrixXd low_bismut(d, d);
    const Eigen::VectorXd ei = Eigen::VectorXd::Unit(d, i);
    for (int j = 0; j < d; ++j) {
      const Eigen::VectorXd ej = Eigen::VectorXd::Unit(d, j);
      const Eigen::VectorXd bij = alg.bracket(ei, ej);
      for (int l = 0; l < d; ++l) {
        const Eigen::VectorXd el = Eigen::VectorXd::Unit(d, l);
        // Koszul on invariant fields:
        // 2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y)
        const double koszul = el.dot(g * bij) - ei.dot(g * alg.bracket(ej, el)) +
                              ej.dot(g * alg.bracket(el, ei));
        low_lc(l, j) = 0.5 * koszul;
        idx[0] = i, idx[1] = j, idx[2] = l;
        low_bismut(l, j) = low_lc(l, j) + 0.5 * torsion_h.value(idx, 3);
      }
    }
    out.levi_civita.gamma[std::size_t(i)] = ginv * low_lc;
    out.bismut.gamma[std::size_t(i)] = ginv * low_bismut;
  }
  return out;
}

CurvatureData curvature_tensor(const LieAlgebraModel& m, const ConnectionData& c) {
  const int d = m.dim();
  const Eigen::MatrixXd& g = m.space().metric();
  CurvatureData out;
  out.dim = d;
  out.lowered.assign(std::size_t(d) * d * d * d, 0.0);
  for (int i = 0; i < d; ++i) {
    const Eigen::VectorXd ei = Eigen::VectorXd::Unit(d, i);
    for (int j = 0; j < d; ++j) {
      const Eigen::VectorXd ej = Eigen::VectorXd::Unit(d, j);
      const Eigen::VectorXd bij = m.bracket(ei, ej);
      // nabla_{[e_i, e_j]} as a matrix
      Eigen::MatrixXd nabla_bracket = Eigen::MatrixXd::Zero(d, d);
      for (int r = 0; r < d; ++r)
        if (bij[r] != 0.0) nabla_bracket += bij[r] * c.gamma[std::size_t(r)];
      const Eigen::MatrixXd rij = c.gamma[std::size_t(i)] * c.gamma[std::size_t(j)] -
                                  c.gamma[std::size_t(j)] * c.gamma[std::size_t(i)] -
                                  nabla_bracket;
      const Eigen::MatrixXd lowered = g * rij;  // g(R(e_i,e_j) e_k, e_l) at (l, k)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          out.lowered[std::size_t(((i * d + j) * d + k) * d + l)] = lowered(l, k);
    }
  }
  return out;
}

BismutRicci bismut_ricci(const HermitianModel& m, const CurvatureData& r) {
  const int d = m.dim();
  const Eigen::MatrixXd& ginv = m.space().metric_inverse();
  const Eigen::MatrixXd& jm = m.j().matrix;
  BismutRicci out{AlternatingForm(d, 2), 0.0};
  // rho(X,Y) = sum_i R(X,Y,b_i,J b_i) = g^{kl} J^m_l R(X,Y,e_k,e_m)
  Eigen::MatrixXd rho(d, d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      double s = 0.0;
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          if (ginv(k, l) == 0.0) continue;
          for (int mm = 0; mm < d; ++mm)
            if (jm(mm, l) != 0.0) s += ginv(k, l) * jm(mm, l) * r.at(x, y, k, mm);
        }
      rho(x, y) = s;
    }
  for (int x = 0; x < d; ++x)
    for (int y = x + 1; y < d; ++y)
      out.ricci_form.set_component((IndexMask(1) << x) | (IndexMask(1) << y), rho(x, y));
  // b_hat = rho(J b_i, b_i) = g^{kl} J^m_k rho(e_m, e_l)
  double b = 0.0;
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      if (ginv(k, l) == 0.0) continue;
      for (int mm = 0; mm < d; ++mm)
        if (jm(mm, k) != 0.0) b += ginv(k, l) * jm(mm, k) * rho(mm, l);
    }
  out.b_hat = b;
  return out;
}

}  // namespace skt
