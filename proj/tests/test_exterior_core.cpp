#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skt/catalog.hpp"
#include "skt/complex_operator.hpp"
#include "skt/exterior.hpp"
#include "skt/form.hpp"
#include "skt/multiindex.hpp"

using namespace skt;

namespace {

AlternatingForm random_form(std::mt19937_64& rng, int dim, int degree) {
  AlternatingForm f(dim, degree);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (std::size_t i = 0; i < f.masks().size(); ++i)
    f.set_component(f.masks()[i], dist(rng));
  return f;
}

double sup(const AlternatingForm& f) { return f.sup_norm(); }

}  // namespace

TEST_CASE("mask table enumerates ascending bitmasks") {
  const auto& table = MaskTable::get(6, 3);
  CHECK(table.masks.size() == 20);
  for (std::size_t i = 0; i + 1 < table.masks.size(); ++i)
    CHECK(table.masks[i] < table.masks[i + 1]);
  for (IndexMask m : table.masks) CHECK(popcount(m) == 3);
  for (std::size_t i = 0; i < table.masks.size(); ++i)
    CHECK(table.position[table.masks[i]] == int(i));
}

TEST_CASE("merge sign counts inversions") {
  // e1 ^ e0 = -e0 ^ e1
  CHECK(merge_sign(0b01, 0b10) == 1);
  CHECK(merge_sign(0b10, 0b01) == -1);
  // disjoint blocks commute with sign (-1)^{pq}
  CHECK(merge_sign(0b0011, 0b1100) == 1);
  CHECK(merge_sign(0b1100, 0b0011) == 1);
  CHECK(merge_sign(0b0111, 0b1000) == 1);
  CHECK(merge_sign(0b1000, 0b0111) == -1);
}

TEST_CASE("wedge is graded commutative") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> deg(0, 4);
  for (int trial = 0; trial < 500; ++trial) {
    const int dim = 4 + 2 * (trial % 3);
    const int p = deg(rng) % (dim + 1);
    const int q = deg(rng) % (dim + 1 - p);
    const AlternatingForm f = random_form(rng, dim, p);
    const AlternatingForm g = random_form(rng, dim, q);
    const AlternatingForm fg = wedge(f, g);
    const AlternatingForm gf = wedge(g, f);
    const double sign = (p * q) % 2 == 0 ? 1.0 : -1.0;
    CHECK(sup(fg - sign * gf) == doctest::Approx(0.0).epsilon(1e-14));
  }
}

TEST_CASE("wedge is associative") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const AlternatingForm f = random_form(rng, 6, 1);
    const AlternatingForm g = random_form(rng, 6, 2);
    const AlternatingForm h = random_form(rng, 6, 2);
    const AlternatingForm lhs = wedge(wedge(f, g), h);
    const AlternatingForm rhs = wedge(f, wedge(g, h));
    CHECK(sup(lhs - rhs) <= 1e-13);
  }
}

TEST_CASE("interior product is an antiderivation") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 6;
    const int p = 1 + trial % 3;
    Eigen::VectorXd x(dim);
    for (int i = 0; i < dim; ++i) x[i] = dist(rng);
    const AlternatingForm f = random_form(rng, dim, p);
    const AlternatingForm g = random_form(rng, dim, 2);
    const AlternatingForm lhs = interior_product(x, wedge(f, g));
    AlternatingForm rhs = wedge(interior_product(x, f), g);
    const double sign = p % 2 == 0 ? 1.0 : -1.0;
    rhs += sign * wedge(f, interior_product(x, g));
    CHECK(sup(lhs - rhs) <= 1e-13);
  }
}

TEST_CASE("differential squares to zero on catalog models") {
  std::mt19937_64 rng(17);
  for (const char* name : {"hopf", "solvable_nonunimodular"}) {
    const HermitianModel m = catalog_get(name);
    const int dim = m.dim();
    for (int trial = 0; trial < 100; ++trial) {
      const int p = trial % (dim - 1);
      const AlternatingForm f = random_form(rng, dim, p);
      const AlternatingForm ddf =
          ce_differential(m.algebra(), ce_differential(m.algebra(), f));
      CHECK(sup(ddf) <= 1e-12);
    }
  }
}

TEST_CASE("hodge star of omega powers") {
  for (int n = 2; n <= 5; ++n) {
    const HermitianModel m = catalog_get("flat_torus", n);
    const AlternatingForm omega = m.omega();
    double p_fact = 1.0;
    AlternatingForm omega_p = AlternatingForm::scalar(m.dim(), 1.0);
    for (int p = 0; p <= n; ++p) {
      double q_fact = 1.0;
      for (int q = 1; q <= n - p; ++q) q_fact *= q;
      const AlternatingForm lhs = hodge_star(omega_p * (1.0 / p_fact), m.space());
      AlternatingForm rhs = AlternatingForm::scalar(m.dim(), 1.0);
      for (int q = 0; q < n - p; ++q) rhs = wedge(rhs, omega);
      rhs = rhs * (1.0 / q_fact);
      CHECK(sup(lhs - rhs) <= 1e-12);
      omega_p = wedge(omega_p, omega);
      p_fact *= (p + 1);
    }
  }
}

TEST_CASE("volume form is omega^n / n!") {
  const HermitianModel m = catalog_get("flat_torus", 3);
  AlternatingForm top = AlternatingForm::scalar(6, 1.0);
  for (int i = 0; i < 3; ++i) top = wedge(top, m.omega());
  top = top * (1.0 / 6.0);
  CHECK(sup(top - volume_form(m.space())) <= 1e-14);
}

TEST_CASE("paired trace of omega recovers the dimension") {
  for (int n = 2; n <= 4; ++n) {
    const HermitianModel m = catalog_get("flat_torus", n);
    const AlternatingForm tr = ei_jei_trace(m.omega(), m.j(), m.space(), 1);
    CHECK(tr.degree() == 0);
    // trace convention: omega(e_i, Je_i) summed with the metric pairing
    CHECK(tr.component(0) == doctest::Approx(-2.0 * n));
  }
}

TEST_CASE("hodge pairing is symmetric and positive") {
  std::mt19937_64 rng(23);
  const HermitianModel m = catalog_get("flat_torus", 3);
  for (int trial = 0; trial < 100; ++trial) {
    const AlternatingForm f = random_form(rng, 6, 3);
    const AlternatingForm g = random_form(rng, 6, 3);
    CHECK(pairing(f, g, m.space()) ==
          doctest::Approx(pairing(g, f, m.space())).epsilon(1e-12));
    CHECK(pairing(f, f, m.space()) >= 0.0);
  }
}

TEST_CASE("bidegree components sum back to the form") {
  std::mt19937_64 rng(29);
  const HermitianModel m = catalog_get("flat_torus", 3);
  const ComplexOperator j = m.j();
  for (int trial = 0; trial < 100; ++trial) {
    const int p = 1 + trial % 3;
    const AlternatingForm f = random_form(rng, 6, p);
    AlternatingForm sum(6, p);
    for (const auto& [pq, comp] : pq_components(f, j, m.space())) sum += comp;
    CHECK(sup(sum - f) <= 1e-12);
  }
}

TEST_CASE("j transform is an algebra map on forms") {
  std::mt19937_64 rng(31);
  const ComplexOperator j = ComplexOperator::standard(6);
  for (int trial = 0; trial < 100; ++trial) {
    const AlternatingForm f = random_form(rng, 6, 2);
    const AlternatingForm g = random_form(rng, 6, 1);
    const AlternatingForm lhs = j_transform(j, wedge(f, g));
    const AlternatingForm rhs = wedge(j_transform(j, f), j_transform(j, g));
    CHECK(sup(lhs - rhs) <= 1e-13);
    // J^2 acts by (-1)^degree on forms of degree 2 and 1 alike
    const AlternatingForm jjf = j_transform(j, j_transform(j, f));
    CHECK(sup(jjf - f) <= 1e-13);
    const AlternatingForm jjg = j_transform(j, j_transform(j, g));
    CHECK(sup(jjg + g) <= 1e-13);
  }
}

TEST_CASE("hodge star squares to the graded identity") {
  std::mt19937_64 rng(37);
  const HermitianModel m = catalog_get("flat_torus", 3);
  for (int p = 0; p <= 6; ++p) {
    const AlternatingForm f = random_form(rng, 6, p);
    const AlternatingForm ssf =
        hodge_star(hodge_star(f, m.space()), m.space());
    const double sign = (p * (6 - p)) % 2 == 0 ? 1.0 : -1.0;
    CHECK(sup(ssf - sign * f) <= 1e-12);
  }
}
