#include "skt/lie_algebra.hpp"

#include <cmath>

#include "skt/exterior.hpp"

namespace skt {

LieAlgebraModel::LieAlgebraModel(FrameSpace space, std::vector<Eigen::MatrixXd> structure)
    : space_(std::move(space)), structure_(std::move(structure)) {
  const int d = space_.dim();
  if (int(structure_.size()) != d)
    throw DimensionError("LieAlgebraModel: need one c^k table per frame index");
  for (const auto& ck : structure_)
    if (ck.rows() != d || ck.cols() != d)
      throw DimensionError("LieAlgebraModel: structure table shape mismatch");
}

LieAlgebraModel LieAlgebraModel::abelian(FrameSpace space) {
  const int d = space.dim();
  std::vector<Eigen::MatrixXd> c(d, Eigen::MatrixXd::Zero(d, d));
  return LieAlgebraModel(std::move(space), std::move(c));
}

Eigen::VectorXd LieAlgebraModel::bracket(const Eigen::VectorXd& x,
                                         const Eigen::VectorXd& y) const {
  const int d = dim();
  Eigen::VectorXd r(d);
  for (int k = 0; k < d; ++k) r[k] = x.dot(structure_[k] * y);
  return r;
}

double LieAlgebraModel::antisymmetry_residual() const {
  double m = 0.0;
  for (const auto& ck : structure_)
    m = std::max(m, (ck + ck.transpose()).cwiseAbs().maxCoeff());
  return m;
}

double LieAlgebraModel::jacobi_residual() const {
  const int d = dim();
  double m = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
          double s = 0.0;
          for (int r = 0; r < d; ++r)
            s += structure_[r](i, j) * structure_[l](r, k) +
                 structure_[r](j, k) * structure_[l](r, i) +
                 structure_[r](k, i) * structure_[l](r, j);
          m = std::max(m, std::abs(s));
        }
      }
  return m;
}

double LieAlgebraModel::unimodularity_defect() const {
  const int d = dim();
  double m = 0.0;
  for (int j = 0; j < d; ++j) {
    double tr = 0.0;
    for (int i = 0; i < d; ++i) tr += structure_[i](i, j);
    m = std::max(m, std::abs(tr));
  }
  return m;
}

AlternatingForm ce_differential(const LieAlgebraModel& m, const AlternatingForm& f) {
  const int dim = m.dim();
  const int p = f.degree();
  if (p == dim) return AlternatingForm(dim, dim);  // top degree: zero of clamped degree
  AlternatingForm result(dim, p + 1);
  if (p + 1 > dim) return result;
  const auto& rm = result.masks();
  int idx[kMaxDim];
  int rest_idx[kMaxDim];
  for (std::size_t r = 0; r < rm.size(); ++r) {
    IndexMask mask = rm[r];
    int count = 0;
    {
      IndexMask rest = mask;
      while (rest) {
        idx[count++] = __builtin_ctz(rest);
        rest &= rest - 1;
      }
    }
    double sum = 0.0;
    for (int a = 0; a < count; ++a)
      for (int b = a + 1; b < count; ++b) {
        int rc = 0;
        for (int t = 0; t < count; ++t)
          if (t != a && t != b) rest_idx[rc + 1] = idx[t], ++rc;
        // F([e_a, e_b], rest...) with the bracket expanded on the frame
        const int sgn = ((a + b) % 2) ? -1 : 1;  // (-1)^{a+b} with one slot removed
        for (int k = 0; k < dim; ++k) {
          const double c = m.structure_constant(k, idx[a], idx[b]);
          if (c == 0.0) continue;
          rest_idx[0] = k;
          sum += sgn * c * f.value(rest_idx, p);
        }
      }
    result[r] = sum;
  }
  return result;
}

AlternatingForm codifferential(const LieAlgebraModel& m, const AlternatingForm& f) {
  return -1.0 * hodge_star(ce_differential(m, hodge_star(f, m.space())), m.space());
}

}  // namespace skt
