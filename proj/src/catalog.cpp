#include "skt/catalog.hpp"

#include "skt/exterior.hpp"
#include "skt/torsion.hpp"

namespace skt {

namespace {

FrameSpace identity_space(int dim) {
  return FrameSpace(dim, Eigen::MatrixXd::Identity(dim, dim));
}

std::vector<Eigen::MatrixXd> zero_structure(int dim) {
  return std::vector<Eigen::MatrixXd>(std::size_t(dim),
                                      Eigen::MatrixXd::Zero(dim, dim));
}

/// [e_i, e_j] += c e_k, antisymmetrized.
void add_bracket(std::vector<Eigen::MatrixXd>& s, int i, int j, int k, double c) {
  s[std::size_t(k)](i, j) += c;
  s[std::size_t(k)](j, i) -= c;
}

/// su(2) block at `off`, `off+1`, `off+2`: [e_a, e_b] = 2 eps_{abc} e_c.
void add_su2(std::vector<Eigen::MatrixXd>& s, int off) {
  add_bracket(s, off, off + 1, off + 2, 2.0);
  add_bracket(s, off + 1, off + 2, off, 2.0);
  add_bracket(s, off + 2, off, off + 1, 2.0);
}

HermitianModel build_flat_torus(int n) {
  if (n < 2 || n > 6)
    throw CatalogError("flat_torus: n must be between 2 and 6");
  const int dim = 2 * n;
  return HermitianModel(LieAlgebraModel::abelian(identity_space(dim)),
                        ComplexOperator::standard(dim));
}

HermitianModel build_hopf() {
  auto s = zero_structure(4);
  add_su2(s, 1);
  return HermitianModel(LieAlgebraModel(identity_space(4), std::move(s)),
                        ComplexOperator::standard(4));
}

HermitianModel build_product_kahler_hopf(int m) {
  if (m < 1 || m > 4)
    throw CatalogError("product_kahler_hopf: m must be between 1 and 4");
  const int dim = 2 * m + 4;
  auto s = zero_structure(dim);
  add_su2(s, 2 * m + 1);
  return HermitianModel(LieAlgebraModel(identity_space(dim), std::move(s)),
                        ComplexOperator::standard(dim));
}

/// Heisenberg algebra h(2n-1) plus a transverse line: [e_{2i}, e_{2i+1}] =
/// e_1 for i = 1..n-1 with e_0 central. The standard Hermitian structure is
/// locally conformally Kaehler with Lee direction e_0 (the classical Vaisman
/// structure); it is strong only when n = 2.
HermitianModel build_heisenberg_lck(int n) {
  if (n < 2 || n > 5)
    throw CatalogError("heisenberg_lck: n must be between 2 and 5");
  const int dim = 2 * n;
  auto s = zero_structure(dim);
  for (int i = 1; i < n; ++i) add_bracket(s, 2 * i, 2 * i + 1, 1, 1.0);
  return HermitianModel(LieAlgebraModel(identity_space(dim), std::move(s)),
                        ComplexOperator::standard(dim));
}

/// Complex affine algebra plus a flat 2-torus: [e0,e2] = e2, [e0,e3] = e3,
/// [e1,e2] = e3, [e1,e3] = -e2. Non-unimodular (tr ad_{e0} = 2), so the Lee
/// form has a nonzero codifferential.
HermitianModel build_solvable_nonunimodular() {
  auto s = zero_structure(6);
  add_bracket(s, 0, 2, 2, 1.0);
  add_bracket(s, 0, 3, 3, 1.0);
  add_bracket(s, 1, 2, 3, 1.0);
  add_bracket(s, 1, 3, 2, -1.0);
  return HermitianModel(LieAlgebraModel(identity_space(6), std::move(s)),
                        ComplexOperator::standard(6));
}

void self_check(const std::string& name, const HermitianModel& m,
                bool expect_kahler, bool expect_strong) {
  const ValidationReport v = validate_model(m);
  if (!v.usable())
    throw CatalogError("catalog entry failed validation: " + name);
  const AlternatingForm d_omega = ce_differential(m.algebra(), m.omega());
  if ((d_omega.sup_norm() <= 1e-12) != expect_kahler)
    throw CatalogError("catalog entry contradicts its Kaehler flag: " + name);
  if (expect_strong) {
    const AlternatingForm dh =
        ce_differential(m.algebra(), torsion_h(m));
    if (dh.sup_norm() > 1e-12)
      throw CatalogError("catalog entry is not strong as documented: " + name);
  }
}

/// Kaehler form of the coordinate pairs [first, first+count): with the
/// standard J and identity metric, omega = -sum e^{2a} ^ e^{2a+1}.
AlternatingForm factor_omega(int dim, int first, int count) {
  AlternatingForm out(dim, 2);
  for (int a = 0; a < count; ++a) {
    const int i = first + 2 * a;
    out.set_component((IndexMask(1) << i) | (IndexMask(1) << (i + 1)), -1.0);
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"flat_torus", "n (half-dimension, 2..6)",
       "abelian Kaehler model on a flat 2n-torus"},
      {"hopf", "",
       "u(1) + su(2) with the standard Hermitian structure: strong (dH = 0), "
       "locally conformally Kaehler, non-Kaehler"},
      {"product_kahler_hopf", "m (Kaehler factor half-dimension, 1..4)",
       "flat T^{2m} times the hopf model; strong of every admissible order"},
      {"heisenberg_lck", "n (half-dimension, 2..5)",
       "Heisenberg nilpotent model; locally conformally Kaehler with nonzero "
       "Lee form, strong only for n = 2"},
      {"solvable_nonunimodular", "",
       "6-dim solvable complex-affine model; delta theta != 0"},
  };
  return entries;
}

HermitianModel catalog_get(const std::string& name, int parameter) {
  if (name == "flat_torus") {
    HermitianModel m = build_flat_torus(parameter == 0 ? 2 : parameter);
    self_check(name, m, true, true);
    return m;
  }
  if (name == "hopf") {
    HermitianModel m = build_hopf();
    self_check(name, m, false, true);
    return m;
  }
  if (name == "product_kahler_hopf") {
    HermitianModel m = build_product_kahler_hopf(parameter == 0 ? 1 : parameter);
    self_check(name, m, false, true);
    return m;
  }
  if (name == "heisenberg_lck") {
    const int n = parameter == 0 ? 2 : parameter;
    HermitianModel m = build_heisenberg_lck(n);
    self_check(name, m, false, n == 2);
    const TorsionPackage t = torsion_package(m);
    if (t.norm_theta_sq < 1e-9)
      throw CatalogError("heisenberg_lck: Lee form unexpectedly 0");
    return m;
  }
  if (name == "solvable_nonunimodular") {
    HermitianModel m = build_solvable_nonunimodular();
    self_check(name, m, false, false);
    const TorsionPackage t = torsion_package(m);
    if (std::abs(t.delta_theta) < 1e-9)
      throw CatalogError("solvable_nonunimodular: delta theta unexpectedly 0");
    return m;
  }
  throw CatalogError("unknown catalog entry: " + name);
}

TwistSpec catalog_twist(const std::string& family, int k,
                        const DiophantineInstance& beta_inv) {
  if (beta_inv.det() == 0)
    throw CatalogError("catalog_twist: matrix entries have det = 0");
  Eigen::MatrixXd bi(2, 2);
  bi << double(beta_inv.p1), double(beta_inv.q1),
        double(beta_inv.p2), double(beta_inv.q2);

  int dim = 0;
  AlternatingForm f1(2, 2), f2(2, 2);
  if (family == "t4_t2") {
    dim = 8;
    f1 = AlternatingForm::basis_monomial(dim, 0b11, 1.0);  // e^0 ^ e^1
    f2 = factor_omega(dim, 4, 1);
  } else if (family == "t2k_t2") {
    if (k < 1 || 2 * k + 4 > kMaxDim)
      throw CatalogError("t2k_t2: k out of range");
    dim = 2 * k + 4;
    f1 = factor_omega(dim, 0, k);
    f2 = factor_omega(dim, 2 * k, 1);
  } else if (family == "t2k_t4") {
    if (k < 1 || 2 * k + 6 > kMaxDim)
      throw CatalogError("t2k_t4: k out of range");
    dim = 2 * k + 6;
    f1 = factor_omega(dim, 0, k);
    f2 = factor_omega(dim, 2 * k, 2);
  } else {
    throw CatalogError("unknown twist family: " + family);
  }

  HermitianModel base(LieAlgebraModel::abelian(identity_space(dim)),
                      ComplexOperator::standard(dim));
  return TwistSpec::from_frame_indices(std::move(base), {dim - 2, dim - 1},
                                       {f1, f2}, std::move(bi));
}

}  // namespace skt
