#include "skt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "skt/exterior.hpp"

namespace skt {

namespace {

double factorial(int m) {
  double r = 1.0;
  for (int i = 2; i <= m; ++i) r *= double(i);
  return r;
}

/// d(omega^{k-1} ^ H) ^ omega^l
AlternatingForm lk_form(const HermitianModel& m, const AlternatingForm& h, int k,
                        int l) {
  const AlternatingForm base = wedge(wedge_power(m.omega(), k - 1), h);
  const AlternatingForm d_base = ce_differential(m.algebra(), base);
  return wedge(d_base, wedge_power(m.omega(), l));
}

/// Relative residual of L = R.
double rel(const AlternatingForm& lhs, const AlternatingForm& rhs) {
  return (lhs - rhs).sup_norm() / (1.0 + lhs.sup_norm() + rhs.sup_norm());
}

double rel(double lhs, double rhs) {
  return std::abs(lhs - rhs) / (1.0 + std::abs(lhs) + std::abs(rhs));
}

Eigen::VectorXd one_form_components(const AlternatingForm& f) {
  Eigen::VectorXd v(f.dim());
  for (int i = 0; i < f.dim(); ++i) v[i] = f.component(IndexMask(1) << i);
  return v;
}

}  // namespace

double alpha_k(const HermitianModel& m, const TorsionPackage& t, int k,
               AlphaRoute route) {
  const int n = m.n();
  if (k < 1 || k > n - 1)
    throw DomainError("alpha_k: k must satisfy 1 <= k <= n-1");
  switch (route) {
    case AlphaRoute::definitional: {
      const AlternatingForm top = lk_form(m, t.h, k, n - k - 1);
      return hodge_star(top, m.space())[0];
    }
    case AlphaRoute::lambda:
      if (n < 3) throw DomainError("alpha_k: lambda route requires n >= 3");
      return factorial(n - 3) / 8.0 *
             ((n - 2) * t.lambda_trace - 8.0 * (k - 1) * t.norm_theta_sq +
              4.0 / 3.0 * (k - 1) * t.norm_h_sq);
    case AlphaRoute::closed:
      if (n < 3) throw DomainError("alpha_k: closed route requires n >= 3");
      return factorial(n - 3) *
             ((n - 2) * t.delta_theta +
              (n - k - 1) * (t.norm_theta_sq - t.norm_h_sq / 6.0));
  }
  throw DomainError("alpha_k: unknown route");
}

double alpha_kl(const HermitianModel& m, const TorsionPackage& t, int k, int l) {
  const int n = m.n();
  if (k < 1 || l < 0 || k + l > n - 1)
    throw DomainError("alpha_kl: need k >= 1, l >= 0, k+l <= n-1");
  const int p = k + l + 1;
  const AlternatingForm g = lk_form(m, t.h, k, l);
  const AlternatingForm omega_p = wedge_power(m.omega(), p);
  return factorial(p) * pairing(g, omega_p, m.space()) /
         pairing(omega_p, omega_p, m.space());
}

LckResult lck_detect(const HermitianModel& m, const TorsionPackage& t, double tol) {
  const int n = m.n();
  LckResult out;
  const AlternatingForm predicted =
      wedge(j_transform(m.j(), t.theta), m.omega()) * (1.0 / double(n - 1));
  out.residual = (t.h - predicted).sup_norm();
  out.is_lck = out.residual <= tol * (1.0 + t.h.sup_norm() + predicted.sup_norm());
  if (out.is_lck && n >= 3) {
    out.gauduchon_alpha.resize(std::size_t(n - 1));
    for (int k = 1; k <= n - 1; ++k)
      out.gauduchon_alpha[std::size_t(k - 1)] =
          factorial(n - 3) * (n - k - 1) * double(n - 2) / double(n - 1) *
          t.norm_theta_sq;
  }
  return out;
}

bool SktClassification::is_k_skt(int k) const { return is_lk_skt(k, 0); }

bool SktClassification::is_lk_skt(int k, int l) const {
  for (const Entry& e : lk_table)
    if (e.k == k && e.l == l) return e.holds;
  return false;
}

SktClassification skt_classify(const HermitianModel& m, double tol) {
  const TorsionPackage t = torsion_package(m);
  const int n = m.n();
  SktClassification out;
  out.n = n;

  const double scale = 1.0 + wedge_power(m.omega(), n).sup_norm();
  out.kahler = t.d_omega.sup_norm() <= tol * (1.0 + m.omega().sup_norm());
  out.balanced = t.theta.sup_norm() <= tol * (1.0 + m.omega().sup_norm());
  const LckResult lck = lck_detect(m, t, tol);
  out.lck = lck.is_lck;
  out.lck_residual = lck.residual;

  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int k = 1; k <= n - 1; ++k) {
    const AlternatingForm d_base =
        ce_differential(m.algebra(), wedge(wedge_power(m.omega(), k - 1), t.h));
    for (int l = 0; l + k <= n - 1; ++l) {
      const AlternatingForm g = wedge(d_base, wedge_power(m.omega(), l));
      SktClassification::Entry e;
      e.k = k;
      e.l = l;
      e.residual = g.sup_norm();
      e.holds = e.residual <= tol * scale;
      out.lk_table.push_back(e);

      const int p = k + l + 1;
      const AlternatingForm omega_p = wedge_power(m.omega(), p);
      SktClassification::Entry a;
      a.k = k;
      a.l = l;
      a.residual = factorial(p) * pairing(g, omega_p, m.space()) /
                   pairing(omega_p, omega_p, m.space());
      a.holds = std::abs(a.residual) <= tol * scale;
      out.alpha_kl_values.push_back(a);
    }

    std::array<double, 3> routes{nan, nan, nan};
    routes[0] = alpha_k(m, t, k, AlphaRoute::definitional);
    if (n >= 3) {
      routes[1] = alpha_k(m, t, k, AlphaRoute::lambda);
      routes[2] = alpha_k(m, t, k, AlphaRoute::closed);
    }
    out.alpha.push_back(routes);
    if (std::abs(routes[0]) <= tol * scale) out.gauduchon_k.push_back(k);
  }
  return out;
}

VanishingMargin vanishing_margin(const HermitianModel& m, int k, double tol) {
  const int n = m.n();
  if (n < 3) throw DomainError("vanishing_margin: requires n >= 3");
  if (k < 1 || k > n - 1)
    throw DomainError("vanishing_margin: k must satisfy 1 <= k <= n-1");

  const TorsionPackage t = torsion_package(m);
  const Connections conns = connections(m, t.h);
  const CurvatureData curv = curvature_tensor(m.algebra(), conns.bismut);
  const BismutRicci ricci = bismut_ricci(m, curv);

  VanishingMargin out;
  out.term_b_hat = ricci.b_hat;
  out.term_h = double(n - k - 1) / (3.0 * (n - 2)) * t.norm_h_sq;
  out.term_theta = 2.0 * (k - 1) / double(n - 2) * t.norm_theta_sq;
  out.margin = out.term_b_hat + out.term_h + out.term_theta;
  out.trace_form = ricci.b_hat + t.norm_c_sq + 0.25 * t.lambda_trace;

  const double scale = 1.0 + wedge_power(m.omega(), n).sup_norm();
  out.k_skt = lk_form(m, t.h, k, 0).sup_norm() <= tol * scale;

  const double eps = tol * (1.0 + std::abs(out.term_b_hat) +
                            std::abs(out.term_h) + std::abs(out.term_theta));
  if (std::abs(out.margin) <= eps)
    out.verdict = MarginVerdict::zero;
  else
    out.verdict = out.margin > 0 ? MarginVerdict::positive : MarginVerdict::negative;
  return out;
}

double IdentityReport::max_residual() const {
  double r = 0.0;
  for (const IdentityResult& x : results)
    if (x.applicable) r = std::max(r, x.residual);
  return r;
}

const IdentityResult* IdentityReport::find(const std::string& name) const {
  for (const IdentityResult& x : results)
    if (x.name == name) return &x;
  return nullptr;
}

namespace {

void record(std::vector<IdentityResult>& acc, const std::string& name,
            bool applicable, double residual) {
  for (IdentityResult& r : acc) {
    if (r.name != name) continue;
    if (applicable) {
      r.residual = std::max(r.residual, residual);
      r.applicable = true;
      r.samples += 1;
    }
    return;
  }
  IdentityResult r;
  r.name = name;
  r.applicable = applicable;
  r.residual = applicable ? residual : 0.0;
  r.samples = applicable ? 1 : 0;
  acc.push_back(r);
}

void evaluate_identities(const HermitianModel& m, std::vector<IdentityResult>& acc,
                         double gate_tol) {
  const int dim = m.dim();
  const int n = m.n();
  const FrameSpace& sp = m.space();
  const ComplexOperator& j = m.j();
  const AlternatingForm& omega = m.omega();
  const Eigen::MatrixXd ginv = sp.metric_inverse();
  const TorsionPackage t = torsion_package(m);

  // H has no (3,0)+(0,3) part on an integrable model.
  record(acc, "torsion_type", true,
         antiholomorphic_part_norm(m, t.h) / (1.0 + t.h.sup_norm()));

  // star(omega^p / p!) = omega^{n-p} / (n-p)!
  {
    double worst = 0.0;
    for (int p = 0; p <= n; ++p) {
      const AlternatingForm lhs =
          hodge_star(wedge_power(omega, p), sp) * (1.0 / factorial(p));
      const AlternatingForm rhs =
          wedge_power(omega, n - p) * (1.0 / factorial(n - p));
      worst = std::max(worst, rel(lhs, rhs));
    }
    record(acc, "hodge_omega_powers", true, worst);
  }

  const AlternatingForm d_omega_h =
      ce_differential(m.algebra(), wedge(omega, t.h));
  const AlternatingForm j_theta = j_transform(j, t.theta);

  // The trailing-trace identities compare forms of degree 2n - 2 and 2n - 4,
  // which degenerate below n = 3.
  if (n < 3) {
    record(acc, "skt_trace4", false, 0.0);
    record(acc, "skt_trace2", false, 0.0);
  }

  // One trailing trace of d(omega ^ H) against the torsion invariants.
  if (n >= 3) {
    const AlternatingForm lhs = ei_jei_trace(d_omega_h, j, sp, 1);
    AlternatingForm rhs = (8.0 - 2.0 * n) * t.dh + wedge(omega, t.lambda) +
                          2.0 * wedge(j_transform(j, t.h), j_theta) +
                          2.0 * wedge(t.h, t.theta);
    std::vector<AlternatingForm> a;
    a.reserve(std::size_t(dim));
    for (int i = 0; i < dim; ++i)
      a.push_back(interior_product(Eigen::VectorXd::Unit(dim, i), t.h));
    for (int i = 0; i < dim; ++i) {
      AlternatingForm raised(dim, 2);
      for (int l = 0; l < dim; ++l)
        if (ginv(i, l) != 0.0) raised += ginv(i, l) * a[std::size_t(l)];
      rhs += 2.0 * wedge(j_transform(j, a[std::size_t(i)]), raised);
    }
    record(acc, "skt_trace4", true, rel(lhs, rhs));
  }

  // Double trailing trace of d(omega ^ H).
  if (n >= 3) {
    const AlternatingForm lhs = ei_jei_trace(d_omega_h, j, sp, 2);
    const Eigen::VectorXd j_theta_sharp = ginv * one_form_components(j_theta);
    const AlternatingForm jt_h = interior_product(j_theta_sharp, t.h);
    AlternatingForm rhs = (12.0 - 4.0 * n) * t.lambda + t.lambda_trace * omega +
                          8.0 * wedge(t.theta, j_theta) - 8.0 * jt_h -
                          8.0 * j_transform(j, jt_h);
    std::vector<AlternatingForm> hij;
    hij.reserve(std::size_t(dim * dim));
    for (int i = 0; i < dim; ++i) {
      const AlternatingForm hi =
          interior_product(Eigen::VectorXd::Unit(dim, i), t.h);
      for (int l = 0; l < dim; ++l)
        hij.push_back(interior_product(Eigen::VectorXd::Unit(dim, l), hi));
    }
    for (int i = 0; i < dim; ++i)
      for (int l = 0; l < dim; ++l) {
        AlternatingForm raised(dim, 1);
        for (int p = 0; p < dim; ++p)
          for (int q = 0; q < dim; ++q) {
            const double c = ginv(i, p) * ginv(l, q);
            if (c != 0.0) raised += c * hij[std::size_t(p * dim + q)];
          }
        rhs += 4.0 * wedge(j_transform(j, hij[std::size_t(i * dim + l)]), raised);
      }
    record(acc, "skt_trace2", true, rel(lhs, rhs));
  }

  // tr lambda = 8 delta theta + 8 ||theta||^2 - 4/3 ||H||^2.
  record(acc, "lambda_trace_theta", true,
         rel(t.lambda_trace,
             8.0 * t.delta_theta + 8.0 * t.norm_theta_sq - 4.0 / 3.0 * t.norm_h_sq));

  // H(Je_k, Je_i, e_j) H(e_k, e_i, e_j) = ||H||^2 / 3 in an orthonormal frame.
  {
    const Eigen::MatrixXd frame = adapted_frame(sp, j);
    const AlternatingForm hf = pullback(frame, t.h);
    const auto jidx = [](int i) { return i ^ 1; };
    const auto jsgn = [](int i) { return (i & 1) ? -1.0 : 1.0; };
    double sum = 0.0;
    for (int k = 0; k < dim; ++k)
      for (int i = 0; i < dim; ++i)
        for (int l = 0; l < dim; ++l) {
          const int a[3] = {jidx(k), jidx(i), l};
          const int b[3] = {k, i, l};
          sum += jsgn(k) * jsgn(i) * hf.value(a, 3) * hf.value(b, 3);
        }
    record(acc, "torsion_j_pairing", true, rel(sum, t.norm_h_sq / 3.0));
  }

  // ||C||^2 = ||H||^2 / 3.
  record(acc, "chern_torsion_norm", true, rel(t.norm_c_sq, t.norm_h_sq / 3.0));

  // The three alpha_k routes agree (n >= 3).
  if (n >= 3) {
    double worst = 0.0;
    for (int k = 1; k <= n - 1; ++k) {
      const double a0 = alpha_k(m, t, k, AlphaRoute::definitional);
      worst = std::max(worst, rel(a0, alpha_k(m, t, k, AlphaRoute::lambda)));
      worst = std::max(worst, rel(a0, alpha_k(m, t, k, AlphaRoute::closed)));
    }
    record(acc, "alpha_routes", true, worst);
  } else {
    record(acc, "alpha_routes", false, 0.0);
  }

  // alpha_k = n!/(k+l+1)! alpha_{k,l} for every admissible (k, l).
  {
    double worst = 0.0;
    for (int k = 1; k <= n - 1; ++k) {
      const double a0 = alpha_k(m, t, k, AlphaRoute::definitional);
      for (int l = 0; l + k <= n - 1; ++l)
        worst = std::max(
            worst, rel(a0, factorial(n) / factorial(k + l + 1) *
                               alpha_kl(m, t, k, l)));
    }
    record(acc, "alpha_projection", true, worst);
  }

  // Gates: which k admit an l with d(omega^{k-1} ^ H) ^ omega^l = 0.
  const double scale = 1.0 + wedge_power(omega, n).sup_norm();
  std::vector<int> skt_k;
  bool strictly_k_skt = false;  // l = 0 for some k < n-1
  for (int k = 1; k <= n - 1; ++k) {
    for (int l = 0; l + k <= n - 1; ++l) {
      if (lk_form(m, t.h, k, l).sup_norm() <= gate_tol * scale) {
        skt_k.push_back(k);
        if (l == 0 && k < n - 1) strictly_k_skt = true;
        break;
      }
    }
  }

  // On (l|k)-strong models: the lambda trace vs delta theta and norm relations.
  {
    double worst_a = 0.0;
    double worst_b = 0.0;
    for (int k : skt_k) {
      worst_a = std::max(
          worst_a, rel((n - k - 1) * t.lambda_trace, -8.0 * (k - 1) * t.delta_theta));
      worst_b = std::max(
          worst_b, rel((n - 2) * t.lambda_trace,
                       8.0 * (k - 1) * t.norm_theta_sq -
                           4.0 / 3.0 * (k - 1) * t.norm_h_sq));
    }
    record(acc, "skt_lambda_delta", !skt_k.empty(), worst_a);
    record(acc, "skt_norm_relation", !skt_k.empty(), worst_b);
  }

  // Unimodular strong models with k < n-1: ||theta||^2 = ||H||^2 / 6.
  if (m.algebra().unimodular() && strictly_k_skt)
    record(acc, "unimodular_skt_norms", true,
           rel(t.norm_theta_sq, t.norm_h_sq / 6.0));
  else
    record(acc, "unimodular_skt_norms", false, 0.0);

  // Margin form of the plurigenera trace on strong models.
  if (n >= 3 && !skt_k.empty()) {
    double worst = 0.0;
    for (int k : skt_k) {
      const VanishingMargin vm = vanishing_margin(m, k, gate_tol);
      worst = std::max(worst, rel(vm.margin, vm.trace_form));
    }
    record(acc, "skt_margin_trace", true, worst);
  } else {
    record(acc, "skt_margin_trace", false, 0.0);
  }

  // Conformally flat family: ||H||^2 = 6/(n-1) ||theta||^2, and with a
  // co-closed Lee form the alpha values are (n-3)!(n-k-1)(n-2)/(n-1) ||theta||^2.
  const LckResult lck = lck_detect(m, t, gate_tol);
  record(acc, "lck_torsion_norm", lck.is_lck,
         lck.is_lck ? rel(t.norm_h_sq, 6.0 / (n - 1) * t.norm_theta_sq) : 0.0);
  const bool lck_gauduchon =
      lck.is_lck && n >= 3 &&
      std::abs(t.delta_theta) <= gate_tol * (1.0 + t.norm_theta_sq);
  if (lck_gauduchon) {
    double worst = 0.0;
    for (int k = 1; k <= n - 1; ++k)
      worst = std::max(worst, rel(alpha_k(m, t, k, AlphaRoute::definitional),
                                  lck.gauduchon_alpha[std::size_t(k - 1)]));
    record(acc, "lck_gauduchon_alpha", true, worst);
  } else {
    record(acc, "lck_gauduchon_alpha", false, 0.0);
  }

  // Balanced models: alpha_k = -(n-3)!(n-k-1)/6 ||H||^2.
  const bool balanced =
      t.theta.sup_norm() <= gate_tol * (1.0 + omega.sup_norm()) && n >= 3;
  if (balanced) {
    double worst = 0.0;
    for (int k = 1; k <= n - 1; ++k)
      worst = std::max(
          worst, rel(alpha_k(m, t, k, AlphaRoute::definitional),
                     -factorial(n - 3) * (n - k - 1) / 6.0 * t.norm_h_sq));
    record(acc, "balanced_alpha", true, worst);
  } else {
    record(acc, "balanced_alpha", false, 0.0);
  }
}

}  // namespace

Eigen::MatrixXd random_compatible_metric(const HermitianModel& m,
                                         std::uint64_t seed) {
  const int dim = m.dim();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int l = 0; l < dim; ++l) a(i, l) += 0.25 * u(rng);
  const Eigen::MatrixXd b =
      a.transpose() * a + 0.1 * Eigen::MatrixXd::Identity(dim, dim);
  const Eigen::MatrixXd& j = m.j().matrix;
  Eigen::MatrixXd g = b + j.transpose() * b * j;
  return 0.5 * (g + g.transpose());
}

IdentityReport identity_suite(const HermitianModel& m, int trials,
                              std::uint64_t seed) {
  IdentityReport out;
  evaluate_identities(m, out.results, 1e-9);
  for (int i = 0; i < trials; ++i) {
    const HermitianModel variant =
        m.with_metric(random_compatible_metric(m, seed + std::uint64_t(i) + 1));
    evaluate_identities(variant, out.results, 1e-9);
  }
  return out;
}

}  // namespace skt
