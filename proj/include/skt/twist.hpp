#ifndef SKT_TWIST_HPP
#define SKT_TWIST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "skt/hermitian.hpp"

namespace skt {

struct TwistError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invariant twist data: a torus of frame directions acting on the base
/// model, per-direction curvature 2-forms, and the (inverse) fibration
/// matrix. The integer data of the construction naturally parametrizes
/// beta^{-1}, so that is what is stored; beta itself is never inverted
/// numerically.
struct TwistSpec {
  HermitianModel base;
  std::vector<Eigen::VectorXd> xi;       // action directions
  std::vector<AlternatingForm> f;        // curvature 2-forms F^A
  Eigen::MatrixXd beta_inverse;          // size xi.size() x xi.size()

  /// eta_A = g(xi_A, .) as a 1-form.
  AlternatingForm eta(std::size_t a) const;
  /// Twisted curvature per direction: script-F^A = sum_B beta_inverse(A,B) F^B.
  AlternatingForm twisted_curvature(std::size_t a) const;

  /// Spec with frame directions `indices` as the action vectors.
  static TwistSpec from_frame_indices(HermitianModel base,
                                      const std::vector<int>& indices,
                                      std::vector<AlternatingForm> f,
                                      Eigen::MatrixXd beta_inverse);
};

struct TwistCheck {
  std::string name;
  bool passed = false;
  double residual = 0.0;
};

struct TwistReport {
  std::vector<TwistCheck> checks;
  bool all_passed() const;
  const TwistCheck* find(const std::string& name) const;
};

/// Conditions for the action to lift to the fibration: commuting
/// directions, metric/Hermitian invariance, i_xi F = 0, L_xi F = 0,
/// invertible matrix.
TwistReport lift_check(const TwistSpec& spec, double tol = 1e-9);

/// The twisted model: same frame, metric and J, with the differential
/// d_W = d - script-F^A ^ i_{xi_A}. Throws TwistError when d_W^2 != 0
/// (lift conditions violated) or when J fails integrability on the
/// twisted algebra.
HermitianModel twist_model(const TwistSpec& spec, double tol = 1e-9);

/// Independent check of the twisted torsion:
/// H_W = H + (i_J script-F^A) ^ i_{xi_A}(omega) - script-F^A ^ eta_A,
/// where the middle term drops for (1,1) curvature.
TwistReport verify_hw(const TwistSpec& spec, const HermitianModel& w,
                      double tol = 1e-9);

enum class DioCondition { eq48, eq49, eq410, eq411 };

DioCondition dio_condition_from_name(const std::string& name);
std::string dio_condition_name(DioCondition c);

/// One integer instance of the fibration conditions: beta^{-1} entries
/// (p1 q1; p2 q2), the degree k, and which curvature self-wedges vanish.
struct DiophantineInstance {
  DioCondition condition = DioCondition::eq48;
  int k = 1;
  std::int64_t p1 = 0, p2 = 0, q1 = 0, q2 = 0;
  bool null_f1 = false;  // F^1 ^ F^1 = 0 as a class
  bool null_f2 = false;  // F^2 ^ F^2 = 0 as a class

  std::int64_t det() const { return p1 * q2 - p2 * q1; }
};

struct DioResult {
  bool satisfied = false;
  std::int64_t lhs = 0;
  /// For eq411 with p1 = 0: the rewritten form
  /// q1^2 + (k p2 + q2)^2 = k(k+1)/2 p2^2 was checked and agreed.
  bool rewritten_checked = false;
};

/// Exact integer evaluation of the named condition. Throws TwistError on
/// det = 0 or out-of-range k.
DioResult diophantine_check(const DiophantineInstance& inst);

/// Exhaustive deterministic scan of (p1,p2,q1,q2) in [-bound,bound]^4 with
/// det != 0 satisfying the condition, lexicographic order.
std::vector<DiophantineInstance> enumerate_beta(DioCondition condition, int k,
                                                int bound, bool null_f1 = false,
                                                bool null_f2 = false);

enum class ScytCase { X2k_X2, X2k_X4 };

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool operator==(const Rational&) const = default;
  double value() const { return double(num) / double(den); }
};

Rational make_rational(std::int64_t num, std::int64_t den);

struct ScytConstants {
  Rational l1;
  Rational l2;
  /// X2k_X2 only: the simplified l1 = -(k+1)/2 (p1^2+p2^2) was compared
  /// with the direct expression (they agree whenever eq410 holds).
  bool simplified_l1_checked = false;
};

/// Exact cosmological constants of the Kaehler-Einstein factors needed for
/// the twisted model to carry vanishing Bismut Ricci form.
ScytConstants scyt_constants(const DiophantineInstance& inst, ScytCase c);

}  // namespace skt

#endif
