#ifndef SKT_FORM_HPP
#define SKT_FORM_HPP

#include <initializer_list>
#include <span>
#include <vector>

#include "skt/multiindex.hpp"

namespace skt {

/// Fully antisymmetric degree-p multilinear form on a fixed dim-dimensional
/// frame. Components are stored densely over strictly increasing index
/// tuples (as bitmasks, ascending) and extended to all tuples by
/// antisymmetry. Degree-0 forms are scalars.
class AlternatingForm {
 public:
  AlternatingForm(int dim, int degree);

  static AlternatingForm scalar(int dim, double value);
  /// Basis covector e^i (0-based index).
  static AlternatingForm basis_covector(int dim, int i);
  /// Basis monomial e^{i_1} ^ ... ^ e^{i_p} for the ascending tuple `mask`.
  static AlternatingForm basis_monomial(int dim, IndexMask mask, double coeff = 1.0);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero(double tol = 0.0) const;
  double sup_norm() const;

  std::span<const double> components() const { return comp_; }
  double operator[](std::size_t i) const { return comp_[i]; }
  double& operator[](std::size_t i) { return comp_[i]; }

  double component(IndexMask ascending_tuple) const;
  void set_component(IndexMask ascending_tuple, double value);
  /// Value on an arbitrary frame tuple (not necessarily ascending).
  double value(std::initializer_list<int> indices) const;
  double value(const int* indices, int count) const;

  const std::vector<IndexMask>& masks() const;

  AlternatingForm& operator+=(const AlternatingForm& other);
  AlternatingForm& operator-=(const AlternatingForm& other);
  AlternatingForm& operator*=(double s);
  friend AlternatingForm operator+(AlternatingForm a, const AlternatingForm& b) {
    return a += b;
  }
  friend AlternatingForm operator-(AlternatingForm a, const AlternatingForm& b) {
    return a -= b;
  }
  friend AlternatingForm operator*(double s, AlternatingForm f) { return f *= s; }
  friend AlternatingForm operator*(AlternatingForm f, double s) { return f *= s; }
  friend AlternatingForm operator-(AlternatingForm f) { return f *= -1.0; }

 private:
  int dim_;
  int degree_;
  std::vector<double> comp_;
};

}  // namespace skt

#endif
