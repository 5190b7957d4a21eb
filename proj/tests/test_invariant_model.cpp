#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skt/catalog.hpp"
#include "skt/connection.hpp"
#include "skt/exterior.hpp"
#include "skt/hermitian.hpp"
#include "skt/lie_algebra.hpp"
#include "skt/torsion.hpp"

using namespace skt;

namespace {

double frame_covariant_sup(const HermitianModel& m, const ConnectionData& conn,
                           const Eigen::MatrixXd& tensor) {
  // sup over i of |nabla_{e_i} tensor| where tensor is a (1,1) endomorphism
  // contracted with the metric as needed by the caller.
  double worst = 0.0;
  const int dim = m.dim();
  for (int i = 0; i < dim; ++i) {
    Eigen::MatrixXd der = conn.gamma[std::size_t(i)] * tensor -
                          tensor * conn.gamma[std::size_t(i)];
    worst = std::max(worst, der.cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace

TEST_CASE("su(2) structure: de^1 = -2 e^2 ^ e^3 and cyclic") {
  const HermitianModel m = catalog_get("hopf");
  const LieAlgebraModel& g = m.algebra();
  // frame: e1 central, (e2,e3,e4) the su(2) block with [e2,e3] = 2 e4
  AlternatingForm e2(4, 1), e3(4, 1), e4(4, 1);
  e2.set_component(IndexMask(1) << 1, 1.0);
  e3.set_component(IndexMask(1) << 2, 1.0);
  e4.set_component(IndexMask(1) << 3, 1.0);
  CHECK((ce_differential(g, e4) + 2.0 * wedge(e2, e3)).sup_norm() <= 1e-15);
  CHECK((ce_differential(g, e2) + 2.0 * wedge(e3, e4)).sup_norm() <= 1e-15);
  CHECK((ce_differential(g, e3) - 2.0 * wedge(e2, e4)).sup_norm() <= 1e-15);
  AlternatingForm e1(4, 1);
  e1.set_component(IndexMask(1) << 0, 1.0);
  CHECK(ce_differential(g, e1).sup_norm() == 0.0);
}

TEST_CASE("catalog models satisfy all structural invariants") {
  for (const CatalogEntry& entry : catalog_entries()) {
    const HermitianModel m = catalog_get(entry.name, entry.name == "flat_torus" ? 3 : 2);
    const ValidationReport v = validate_model(m);
    for (const ValidationCheck& c : v.checks) {
      INFO(entry.name, ": ", c.name);
      CHECK(c.passed);
    }
    CHECK(m.nijenhuis_residual() <= 1e-12);
  }
}

TEST_CASE("validation flags broken input") {
  // adding [e1, e2] = e2 on top of the su(2) block breaks Jacobi:
  // [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = -2 e4 != 0
  const HermitianModel good = catalog_get("hopf");
  std::vector<Eigen::MatrixXd> structure = good.algebra().structure();
  structure[1](0, 1) = 1.0;
  structure[1](1, 0) = -1.0;
  const LieAlgebraModel broken(good.space(), structure);
  const HermitianModel m(broken, good.j());
  const ValidationReport v = validate_model(m);
  const ValidationCheck* jac = v.find("jacobi");
  REQUIRE(jac != nullptr);
  CHECK_FALSE(jac->passed);
  CHECK_FALSE(v.usable());
}

TEST_CASE("unimodularity detection") {
  CHECK(validate_model(catalog_get("hopf")).unimodular);
  CHECK(validate_model(catalog_get("flat_torus", 2)).unimodular);
  CHECK_FALSE(validate_model(catalog_get("solvable_nonunimodular")).unimodular);
}

TEST_CASE("bismut connection preserves the metric and J and has torsion H") {
  for (const char* name : {"hopf", "solvable_nonunimodular"}) {
    const HermitianModel m = catalog_get(name);
    const int dim = m.dim();
    const AlternatingForm h = torsion_h(m);
    const Connections conn = connections(m, h);

    // metric parallel: Gamma_i^T g + g Gamma_i = 0 for both connections
    const Eigen::MatrixXd& g = m.space().metric();
    for (int i = 0; i < dim; ++i) {
      const Eigen::MatrixXd& lc = conn.levi_civita.gamma[std::size_t(i)];
      const Eigen::MatrixXd& b = conn.bismut.gamma[std::size_t(i)];
      CHECK((lc.transpose() * g + g * lc).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK((b.transpose() * g + g * b).cwiseAbs().maxCoeff() <= 1e-12);
    }

    // J parallel for the bismut connection only
    CHECK(frame_covariant_sup(m, conn.bismut, m.j().matrix) <= 1e-12);

    // torsion of the bismut connection equals H after lowering:
    // g(T(e_i, e_j), e_k) = H(e_i, e_j, e_k)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) {
          const Eigen::VectorXd ti =
              conn.bismut.gamma[std::size_t(i)].col(j) -
              conn.bismut.gamma[std::size_t(j)].col(i) -
              m.algebra().bracket(Eigen::VectorXd::Unit(dim, i),
                                  Eigen::VectorXd::Unit(dim, j));
          const int idx[3] = {i, j, k};
          CHECK(g.row(k).dot(ti) == doctest::Approx(h.value(idx, 3)).epsilon(1e-10));
        }
  }
}

TEST_CASE("levi-civita connection is torsion free") {
  const HermitianModel m = catalog_get("solvable_nonunimodular");
  const int dim = m.dim();
  const Connections conn = connections(m, torsion_h(m));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const Eigen::VectorXd ti =
          conn.levi_civita.gamma[std::size_t(i)].col(j) -
          conn.levi_civita.gamma[std::size_t(j)].col(i) -
          m.algebra().bracket(Eigen::VectorXd::Unit(dim, i),
                              Eigen::VectorXd::Unit(dim, j));
      CHECK(ti.cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("flat torus has vanishing bismut ricci curvature") {
  const HermitianModel m = catalog_get("flat_torus", 3);
  const Connections conn = connections(m, torsion_h(m));
  const auto curv = curvature_tensor(m.algebra(), conn.bismut);
  const BismutRicci ric = bismut_ricci(m, curv);
  CHECK(ric.ricci_form.sup_norm() <= 1e-14);
  CHECK(ric.b_hat == doctest::Approx(0.0));
}

TEST_CASE("torsion package is internally consistent") {
  for (const char* name : {"hopf", "product_kahler_hopf", "solvable_nonunimodular"}) {
    const HermitianModel m = catalog_get(name, 2);
    const TorsionPackage t = torsion_package(m);
    CHECK((t.h - torsion_h(m)).sup_norm() <= 1e-14);
    CHECK((t.dh - ce_differential(m.algebra(), t.h)).sup_norm() <= 1e-14);
    CHECK((t.theta - lee_form(m, t.h)).sup_norm() <= 1e-14);
    CHECK(t.norm_h_sq == doctest::Approx(contraction_norm_sq(t.h, m.space())));
    CHECK(t.norm_theta_sq >= 0.0);
    CHECK(t.norm_c_sq == doctest::Approx(t.norm_h_sq / 3.0).epsilon(1e-12));
  }
}

TEST_CASE("rescaled metric keeps integrability but changes torsion") {
  const HermitianModel base = catalog_get("hopf");
  Eigen::MatrixXd g = base.space().metric();
  g *= 4.0;
  const HermitianModel scaled = base.with_metric(g);
  CHECK(validate_model(scaled).usable());
  const TorsionPackage t0 = torsion_package(base);
  const TorsionPackage t1 = torsion_package(scaled);
  // |H|^2 scales like g^{-1} applied three times against g-degree 3 of H
  CHECK(t1.norm_h_sq == doctest::Approx(t0.norm_h_sq / 4.0).epsilon(1e-12));
}
