#include "skt/form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace skt {

AlternatingForm::AlternatingForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (degree < 0 || degree > dim)
    throw std::invalid_argument("AlternatingForm: degree out of range");
  comp_.assign(std::size_t(binomial(dim, degree)), 0.0);
}

AlternatingForm AlternatingForm::scalar(int dim, double value) {
  AlternatingForm f(dim, 0);
  f.comp_[0] = value;
  return f;
}

AlternatingForm AlternatingForm::basis_covector(int dim, int i) {
  AlternatingForm f(dim, 1);
  f.set_component(IndexMask(1) << i, 1.0);
  return f;
}

AlternatingForm AlternatingForm::basis_monomial(int dim, IndexMask mask, double coeff) {
  AlternatingForm f(dim, popcount(mask));
  f.set_component(mask, coeff);
  return f;
}

bool AlternatingForm::is_zero(double tol) const { return sup_norm() <= tol; }

double AlternatingForm::sup_norm() const {
  double m = 0.0;
  for (double c : comp_) m = std::max(m, std::abs(c));
  return m;
}

const std::vector<IndexMask>& AlternatingForm::masks() const {
  return MaskTable::get(dim_, degree_).masks;
}

double AlternatingForm::component(IndexMask mask) const {
  const int pos = MaskTable::get(dim_, degree_).position[mask];
  return comp_[std::size_t(pos)];
}

void AlternatingForm::set_component(IndexMask mask, double value) {
  const int pos = MaskTable::get(dim_, degree_).position[mask];
  comp_[std::size_t(pos)] = value;
}

double AlternatingForm::value(std::initializer_list<int> indices) const {
  return value(indices.begin(), int(indices.size()));
}

double AlternatingForm::value(const int* indices, int count) const {
  if (count != degree_) throw std::invalid_argument("value: arity mismatch");
  if (degree_ == 0) return comp_[0];
  int buf[kMaxDim];
  std::copy(indices, indices + count, buf);
  const int sign = sort_sign(buf, count);
  if (sign == 0) return 0.0;
  IndexMask mask = 0;
  for (int i = 0; i < count; ++i) mask |= IndexMask(1) << buf[i];
  return sign * component(mask);
}

AlternatingForm& AlternatingForm::operator+=(const AlternatingForm& other) {
  if (dim_ != other.dim_ || degree_ != other.degree_)
    throw std::invalid_argument("form +=: shape mismatch");
  for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] += other.comp_[i];
  return *this;
}

AlternatingForm& AlternatingForm::operator-=(const AlternatingForm& other) {
  if (dim_ != other.dim_ || degree_ != other.degree_)
    throw std::invalid_argument("form -=: shape mismatch");
  for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] -= other.comp_[i];
  return *this;
}

AlternatingForm& AlternatingForm::operator*=(double s) {
  for (double& c : comp_) c *= s;
  return *this;
}

}  // namespace skt
