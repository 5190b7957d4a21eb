#ifndef SKT_EXTERIOR_HPP
#define SKT_EXTERIOR_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "skt/complex_operator.hpp"
#include "skt/form.hpp"
#include "skt/frame_space.hpp"

namespace skt {

/// Exterior product. If the degrees add beyond dim the result is the zero
/// top-degree form.
AlternatingForm wedge(const AlternatingForm& f, const AlternatingForm& g);

/// f ^ f ^ ... ^ f (p factors); p = 0 gives the constant 1.
AlternatingForm wedge_power(const AlternatingForm& f, int p);

/// i_v F, contraction into the first slot.
AlternatingForm interior_product(const Eigen::VectorXd& v, const AlternatingForm& f);

/// Pullback (A^*F)(X_1..X_p) = F(A X_1, .., A X_p).
AlternatingForm pullback(const Eigen::MatrixXd& a, const AlternatingForm& f);

/// JF(X_1..X_r) = (-1)^r F(JX_1..JX_r).
AlternatingForm j_transform(const ComplexOperator& j, const AlternatingForm& f);

/// All indices raised by the metric inverse.
AlternatingForm raise_indices(const AlternatingForm& f, const FrameSpace& space);

/// Hodge pairing g(F,G) = (1/p!) full contraction.
double pairing(const AlternatingForm& f, const AlternatingForm& g,
               const FrameSpace& space);

/// Full index contraction ||F||^2 = F_{i..k} F^{i..k} (no 1/p! factor).
double contraction_norm_sq(const AlternatingForm& f, const FrameSpace& space);

/// Riemannian volume form carrying the space's orientation sign.
AlternatingForm volume_form(const FrameSpace& space);

/// Hodge star fixed by F ^ (star G) = g(F,G) dvol.
AlternatingForm hodge_star(const AlternatingForm& f, const FrameSpace& space);

/// Trace over trailing slot pairs against an orthonormal frame:
/// result(X_1..) = sum_i F(X_1.., e_i, J e_i), applied `pairs` times.
/// Frame-independent; computed as the metric contraction g^{kl} F(.., e_k, J e_l).
AlternatingForm ei_jei_trace(const AlternatingForm& f, const ComplexOperator& j,
                             const FrameSpace& space, int pairs = 1);

/// Sum over slots of the J substitution: sum_m F(X_1,..,J X_m,..,X_p).
AlternatingForm slot_j_sum(const AlternatingForm& f, const ComplexOperator& j);

/// Real form carrying the bidegree-(a,b) part of F for a >= b: the complex
/// (a,b) component plus its conjugate (b,a) component (for a == b the (a,a)
/// part alone, which is already real).
AlternatingForm bidegree_component(const AlternatingForm& f, const ComplexOperator& j,
                                   const FrameSpace& space, int a, int b);

/// All bidegree parts (a >= b, a+b = degree); they sum to F.
std::vector<std::pair<std::pair<int, int>, AlternatingForm>> pq_components(
    const AlternatingForm& f, const ComplexOperator& j, const FrameSpace& space);

/// g-orthonormal frame adapted to J (columns u_1, J u_1, u_2, J u_2, ..).
Eigen::MatrixXd adapted_frame(const FrameSpace& space, const ComplexOperator& j);

}  // namespace skt

#endif
