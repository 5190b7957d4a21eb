#ifndef SKT_ANALYSIS_HPP
#define SKT_ANALYSIS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skt/connection.hpp"
#include "skt/torsion.hpp"

namespace skt {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class AlphaRoute { definitional, lambda, closed };

/// alpha_k by one of three routes:
///   definitional  *(d(omega^{k-1} ^ H) ^ omega^{n-k-1})
///   lambda        (n-3)!/8 [(n-2) tr lambda - 8(k-1)||theta||^2 + 4/3 (k-1)||H||^2]
///   closed        (n-3)! [(n-2) delta theta + (n-k-1)(||theta||^2 - ||H||^2/6)]
/// The lambda and closed routes require n >= 3.
double alpha_k(const HermitianModel& m, const TorsionPackage& t, int k, AlphaRoute route);

/// alpha_{k,l}: coefficient of the orthogonal projection of
/// d(omega^{k-1} ^ H) ^ omega^l onto omega^{k+l+1}/(k+l+1)!.
double alpha_kl(const HermitianModel& m, const TorsionPackage& t, int k, int l);

struct LckResult {
  bool is_lck = false;
  double residual = 0.0;
  /// For LCK Gauduchon (delta theta = 0) with theta != 0: the predicted
  /// alpha_k values (n-3)!(n-k-1)(n-2)/(n-1) ||theta||^2, index k-1.
  std::vector<double> gauduchon_alpha;
};

LckResult lck_detect(const HermitianModel& m, const TorsionPackage& t,
                     double tol = 1e-9);

struct SktClassification {
  struct Entry {
    int k = 0;
    int l = 0;
    bool holds = false;
    double residual = 0.0;
  };
  int n = 0;
  std::vector<Entry> lk_table;         // all 1 <= k+l <= n-1, k >= 1
  std::vector<int> gauduchon_k;        // k where generalized k-Gauduchon holds
  bool kahler = false;
  bool balanced = false;
  bool lck = false;
  double lck_residual = 0.0;
  /// Per k = 1..n-1: routes {definitional, lambda, closed}; the last two are
  /// NaN when n < 3.
  std::vector<std::array<double, 3>> alpha;
  std::vector<Entry> alpha_kl_values;  // residual field holds alpha_{k,l}

  bool is_k_skt(int k) const;          // l = 0 entry
  bool is_lk_skt(int k, int l) const;
};

SktClassification skt_classify(const HermitianModel& m, double tol = 1e-9);

enum class MarginVerdict { positive, zero, negative };

struct VanishingMargin {
  double margin = 0.0;  // b_hat + (n-k-1)/(3(n-2)) ||H||^2 + 2(k-1)/(n-2) ||theta||^2
  MarginVerdict verdict = MarginVerdict::zero;
  double term_b_hat = 0.0;
  double term_h = 0.0;
  double term_theta = 0.0;
  /// b_hat + ||C||^2 + 1/4 tr lambda; equals `margin` on k-SKT models.
  double trace_form = 0.0;
  bool k_skt = false;
};

VanishingMargin vanishing_margin(const HermitianModel& m, int k, double tol = 1e-9);

struct IdentityResult {
  std::string name;
  bool applicable = false;
  double residual = 0.0;
  int samples = 0;
};

struct IdentityReport {
  std::vector<IdentityResult> results;
  double max_residual() const;
  const IdentityResult* find(const std::string& name) const;
};

/// Evaluates the torsion identity suite on the model and on `trials`
/// randomized J-compatible metrics (deterministic in `seed`).
IdentityReport identity_suite(const HermitianModel& m, int trials = 0,
                              std::uint64_t seed = 0);

/// Random J-compatible positive-definite metric (for property tests).
Eigen::MatrixXd random_compatible_metric(const HermitianModel& m, std::uint64_t seed);

}  // namespace skt

#endif
