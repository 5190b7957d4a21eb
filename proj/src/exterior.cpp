#include "skt/exterior.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace skt {

AlternatingForm wedge(const AlternatingForm& f, const AlternatingForm& g) {
  if (f.dim() != g.dim()) throw DimensionError("wedge: frame dimension mismatch");
  const int dim = f.dim();
  if (f.degree() + g.degree() > dim) return AlternatingForm(dim, dim);
  AlternatingForm result(dim, f.degree() + g.degree());
  const auto& fm = f.masks();
  const auto& gm = g.masks();
  const auto& table = MaskTable::get(dim, result.degree());
  for (std::size_t i = 0; i < fm.size(); ++i) {
    const double fc = f[i];
    if (fc == 0.0) continue;
    const IndexMask a = fm[i];
    for (std::size_t k = 0; k < gm.size(); ++k) {
      const IndexMask b = gm[k];
      if (a & b) continue;
      const double gc = g[k];
      if (gc == 0.0) continue;
      result[std::size_t(table.position[a | b])] += merge_sign(a, b) * fc * gc;
    }
  }
  return result;
}

AlternatingForm wedge_power(const AlternatingForm& f, int p) {
  if (p < 0) throw std::invalid_argument("wedge_power: negative power");
  AlternatingForm acc = AlternatingForm::scalar(f.dim(), 1.0);
  for (int i = 0; i < p; ++i) acc = wedge(acc, f);
  return acc;
}

AlternatingForm interior_product(const Eigen::VectorXd& v, const AlternatingForm& f) {
  if (f.degree() == 0) throw DegreeError("interior_product: degree-0 form");
  if (v.size() != f.dim()) throw DimensionError("interior_product: dimension mismatch");
  const int dim = f.dim();
  AlternatingForm result(dim, f.degree() - 1);
  const auto& rm = result.masks();
  for (std::size_t r = 0; r < rm.size(); ++r) {
    const IndexMask jmask = rm[r];
    double sum = 0.0;
    for (int i = 0; i < dim; ++i) {
      const IndexMask bit = IndexMask(1) << i;
      if (jmask & bit) continue;
      const double vi = v[i];
      if (vi == 0.0) continue;
      sum += vi * merge_sign(bit, jmask) * f.component(bit | jmask);
    }
    result[r] = sum;
  }
  return result;
}

AlternatingForm pullback(const Eigen::MatrixXd& a, const AlternatingForm& f) {
  const int dim = f.dim();
  if (a.rows() != dim || a.cols() != dim)
    throw DimensionError("pullback: matrix dimension mismatch");
  if (f.degree() == 0) return f;
  // A^* e^i = sum_j A(i,j) e^j; expand each stored monomial.
  AlternatingForm result(dim, f.degree());
  const auto& fm = f.masks();
  for (std::size_t i = 0; i < fm.size(); ++i) {
    const double c = f[i];
    if (c == 0.0) continue;
    AlternatingForm acc = AlternatingForm::scalar(dim, c);
    IndexMask rest = fm[i];
    while (rest) {
      const int row = __builtin_ctz(rest);
      rest &= rest - 1;
      AlternatingForm cov(dim, 1);
      for (int j = 0; j < dim; ++j) cov[std::size_t(j)] = a(row, j);
      acc = wedge(acc, cov);
    }
    result += acc;
  }
  return result;
}

AlternatingForm j_transform(const ComplexOperator& j, const AlternatingForm& f) {
  AlternatingForm r = pullback(j.matrix, f);
  if (f.degree() % 2 != 0) r *= -1.0;
  return r;
}

AlternatingForm raise_indices(const AlternatingForm& f, const FrameSpace& space) {
  if (space.metric_is_identity()) return f;
  return pullback(space.metric_inverse(), f);
}

double pairing(const AlternatingForm& f, const AlternatingForm& g,
               const FrameSpace& space) {
  if (f.degree() != g.degree() || f.dim() != g.dim())
    throw DimensionError("pairing: shape mismatch");
  const AlternatingForm gr = raise_indices(g, space);
  double sum = 0.0;
  for (std::size_t i = 0; i < f.components().size(); ++i) sum += f[i] * gr[i];
  return sum;
}

double contraction_norm_sq(const AlternatingForm& f, const FrameSpace& space) {
  double factorial = 1.0;
  for (int i = 2; i <= f.degree(); ++i) factorial *= i;
  return factorial * pairing(f, f, space);
}

AlternatingForm volume_form(const FrameSpace& space) {
  const int dim = space.dim();
  const IndexMask full = (IndexMask(1) << dim) - 1;
  return AlternatingForm::basis_monomial(dim, full,
                                         space.orientation() * space.sqrt_det_metric());
}

AlternatingForm hodge_star(const AlternatingForm& f, const FrameSpace& space) {
  const int dim = space.dim();
  const IndexMask full = (IndexMask(1) << dim) - 1;
  const AlternatingForm raised = raise_indices(f, space);
  const double scale = space.orientation() * space.sqrt_det_metric();
  AlternatingForm result(dim, dim - f.degree());
  const auto& fm = f.masks();
  const auto& table = MaskTable::get(dim, result.degree());
  for (std::size_t i = 0; i < fm.size(); ++i) {
    const IndexMask a = fm[i];
    const IndexMask c = full & ~a;
    result[std::size_t(table.position[c])] = scale * merge_sign(a, c) * raised[i];
  }
  return result;
}

AlternatingForm ei_jei_trace(const AlternatingForm& f, const ComplexOperator& j,
                             const FrameSpace& space, int pairs) {
  if (pairs < 1) throw std::invalid_argument("ei_jei_trace: pairs must be >= 1");
  if (f.degree() < 2 * pairs) throw DegreeError("ei_jei_trace: insufficient degree");
  const int dim = f.dim();
  // sum_i F(.., b_i, J b_i) over any g-orthonormal frame equals the
  // contraction with B_{km} = (g^{-1} J^T)_{km}.
  const Eigen::MatrixXd b = space.metric_inverse() * j.matrix.transpose();
  AlternatingForm current = f;
  for (int pass = 0; pass < pairs; ++pass) {
    AlternatingForm next(dim, current.degree() - 2);
    const auto& nm = next.masks();
    for (std::size_t r = 0; r < nm.size(); ++r) {
      const IndexMask rmask = nm[r];
      double sum = 0.0;
      for (int k = 0; k < dim; ++k) {
        if (rmask & (IndexMask(1) << k)) continue;
        for (int m = k + 1; m < dim; ++m) {
          if (rmask & (IndexMask(1) << m)) continue;
          const double coeff = b(k, m) - b(m, k);
          if (coeff == 0.0) continue;
          const IndexMask pair = (IndexMask(1) << k) | (IndexMask(1) << m);
          sum += coeff * merge_sign(rmask, pair) * current.component(rmask | pair);
        }
      }
      next[r] = sum;
    }
    current = std::move(next);
  }
  return current;
}

AlternatingForm slot_j_sum(const AlternatingForm& f, const ComplexOperator& j) {
  const int dim = f.dim();
  const int p = f.degree();
  AlternatingForm result(dim, p);
  const auto& rm = result.masks();
  int idx[kMaxDim];
  for (std::size_t r = 0; r < rm.size(); ++r) {
    IndexMask rest = rm[r];
    int count = 0;
    while (rest) {
      idx[count++] = __builtin_ctz(rest);
      rest &= rest - 1;
    }
    double sum = 0.0;
    for (int s = 0; s < p; ++s) {
      const int orig = idx[s];
      for (int t = 0; t < dim; ++t) {
        const double jc = j.matrix(t, orig);  // J e_orig = sum_t jc e_t
        if (jc == 0.0) continue;
        idx[s] = t;
        sum += jc * f.value(idx, p);
        idx[s] = orig;
      }
    }
    result[r] = sum;
  }
  return result;
}

Eigen::MatrixXd adapted_frame(const FrameSpace& space, const ComplexOperator& j) {
  const int dim = space.dim();
  const Eigen::MatrixXd& g = space.metric();
  Eigen::MatrixXd frame(dim, dim);
  int built = 0;
  for (int cand = 0; cand < dim && built < dim; ++cand) {
    Eigen::VectorXd v = Eigen::VectorXd::Unit(dim, cand);
    for (int c = 0; c < built; ++c) {
      const Eigen::VectorXd u = frame.col(c);
      v -= (u.dot(g * v)) * u;
    }
    const double norm = std::sqrt(v.dot(g * v));
    if (norm < 1e-9) continue;
    v /= norm;
    frame.col(built++) = v;
    frame.col(built++) = j.matrix * v;  // unit and g-orthogonal to the span
  }
  if (built != dim) throw DefinitenessError("adapted_frame: frame construction failed");
  return frame;
}

namespace {

// Complex coefficients of a form over the monomials dz^A ^ dzbar^B of the
// adapted frame, A,B masks over the n factor pairs.
struct ComplexTable {
  int npairs;
  std::vector<std::complex<double>> coeff;  // (A << npairs) | B

  explicit ComplexTable(int n) : npairs(n), coeff(std::size_t(1) << (2 * n)) {}
  std::complex<double>& at(IndexMask a, IndexMask b) {
    return coeff[(std::size_t(a) << npairs) | b];
  }
};

// Expand one real covector u^r into the dz/dzbar basis and recurse over the
// remaining indices of the monomial.
void expand_real_monomial(int npairs, IndexMask remaining, IndexMask mask_a,
                          IndexMask mask_b, std::complex<double> c, ComplexTable& out) {
  if (!remaining) {
    out.at(mask_a, mask_b) += c;
    return;
  }
  const int r = __builtin_ctz(remaining);
  const IndexMask rest = remaining & (remaining - 1);
  const int alpha = r / 2;
  const IndexMask abit = IndexMask(1) << alpha;
  // u^{2a} = (dz^a + dzbar^a)/2, u^{2a+1} = -(i/2)(dz^a - dzbar^a)
  const std::complex<double> half(0.5, 0.0);
  const std::complex<double> mihalf(0.0, -0.5);
  const std::complex<double> wz = (r % 2 == 0) ? half : mihalf;
  const std::complex<double> wzb = (r % 2 == 0) ? half : -mihalf;
  if (!(mask_a & abit)) {
    // sorting the new dz factor into canonical order (all dz first, ascending)
    const int inv = popcount(mask_a & ~(abit - 1)) + popcount(mask_b);
    const double sign = (inv & 1) ? -1.0 : 1.0;
    expand_real_monomial(npairs, rest, mask_a | abit, mask_b, c * wz * sign, out);
  }
  if (!(mask_b & abit)) {
    const int inv = popcount(mask_b & ~(abit - 1));
    const double sign = (inv & 1) ? -1.0 : 1.0;
    expand_real_monomial(npairs, rest, mask_a, mask_b | abit, c * wzb * sign, out);
  }
}

// Inverse expansion: one complex monomial dz^A ^ dzbar^B back to real masks.
void expand_complex_monomial(int dim, IndexMask mask_a, IndexMask mask_b,
                             std::complex<double> c,
                             std::vector<std::complex<double>>& real_out) {
  // Process factors in canonical order, accumulating real monomials with signs.
  struct Term {
    IndexMask mask;
    std::complex<double> coeff;
  };
  std::vector<Term> terms{{0u, c}};
  auto append_factor = [&](int alpha, bool bar) {
    std::vector<Term> next;
    next.reserve(terms.size() * 2);
    const std::complex<double> wi = bar ? std::complex<double>(0.0, -1.0)
                                        : std::complex<double>(0.0, 1.0);
    for (const Term& t : terms) {
      for (int part = 0; part < 2; ++part) {
        const int r = 2 * alpha + part;
        const IndexMask bit = IndexMask(1) << r;
        if (t.mask & bit) continue;  // repeated real covector
        const std::complex<double> w = (part == 0) ? std::complex<double>(1.0, 0.0) : wi;
        const double sign = merge_sign(t.mask, bit);
        next.push_back({t.mask | bit, t.coeff * w * sign});
      }
    }
    terms = std::move(next);
  };
  for (int alpha = 0; alpha < dim / 2; ++alpha)
    if (mask_a & (IndexMask(1) << alpha)) append_factor(alpha, false);
  for (int alpha = 0; alpha < dim / 2; ++alpha)
    if (mask_b & (IndexMask(1) << alpha)) append_factor(alpha, true);
  for (const Term& t : terms) real_out[t.mask] += t.coeff;
}

}  // namespace

AlternatingForm bidegree_component(const AlternatingForm& f, const ComplexOperator& j,
                                   const FrameSpace& space, int a, int b) {
  if (a < b) throw std::invalid_argument("bidegree_component: requires a >= b");
  if (a + b != f.degree())
    throw DegreeError("bidegree_component: bidegree does not sum to the form degree");
  const int dim = f.dim();
  const int npairs = dim / 2;
  const Eigen::MatrixXd frame = adapted_frame(space, j);
  const AlternatingForm in_adapted = pullback(frame, f);

  ComplexTable table(npairs);
  const auto& fm = in_adapted.masks();
  for (std::size_t i = 0; i < fm.size(); ++i) {
    const double c = in_adapted[i];
    if (c == 0.0) continue;
    expand_real_monomial(npairs, fm[i], 0u, 0u, std::complex<double>(c, 0.0), table);
  }

  std::vector<std::complex<double>> real_coeffs(std::size_t(1) << dim);
  for (IndexMask ma = 0; ma < (IndexMask(1) << npairs); ++ma) {
    const int ca = popcount(ma);
    if (ca != a && ca != b) continue;
    for (IndexMask mb = 0; mb < (IndexMask(1) << npairs); ++mb) {
      const int cb = popcount(mb);
      if (!((ca == a && cb == b) || (ca == b && cb == a))) continue;
      const std::complex<double> c = table.at(ma, mb);
      if (c == std::complex<double>(0.0, 0.0)) continue;
      expand_complex_monomial(dim, ma, mb, c, real_coeffs);
    }
  }

  AlternatingForm projected(dim, f.degree());
  const auto& pm = projected.masks();
  for (std::size_t i = 0; i < pm.size(); ++i) projected[i] = real_coeffs[pm[i]].real();
  return pullback(frame.inverse(), projected);
}

std::vector<std::pair<std::pair<int, int>, AlternatingForm>> pq_components(
    const AlternatingForm& f, const ComplexOperator& j, const FrameSpace& space) {
  std::vector<std::pair<std::pair<int, int>, AlternatingForm>> parts;
  const int p = f.degree();
  for (int a = p; 2 * a >= p; --a) {
    const int b = p - a;
    parts.push_back({{a, b}, bidegree_component(f, j, space, a, b)});
  }
  return parts;
}

}  // namespace skt
