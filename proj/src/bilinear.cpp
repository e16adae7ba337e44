#include "malcev/bilinear.hpp"

namespace malcev {

void BilinearMap::set(int a, int b, const Vec& v) {
  if (v.dim() != dim_c()) throw DimensionMismatch();
  if (v.field() != f_) throw FieldMismatch();
  vals_[a * db_ + b] = v;
}

Vec BilinearMap::apply(const Vec& a, const Vec& b) const {
  if (a.dim() != da_ || b.dim() != db_) throw DimensionMismatch();
  Vec out(f_, dim_c());
  for (int i = 0; i < da_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < db_; ++j) {
      const Scalar c = a[i] * b[j];
      if (!c.is_zero()) out.axpy(c, at(i, j));
    }
  }
  return out;
}

bool BilinearMap::is_zero() const {
  for (const auto& v : vals_)
    if (!v.is_zero()) return false;
  return true;
}

bool BilinearMap::operator==(const BilinearMap& o) const {
  return da_ == o.da_ && db_ == o.db_ && vals_ == o.vals_;
}

void SkewBilinearMap::set_pair(int a, int b, const Vec& v) {
  if (a < 0 || b >= da_ || a >= b) throw DimensionMismatch("need 0 <= a < b < dim");
  if (v.dim() != dim_c()) throw DimensionMismatch();
  if (v.field() != f_) throw FieldMismatch();
  vals_[pair_index(a, b)] = v;
}

Vec SkewBilinearMap::at(int a, int b) const {
  if (a == b) return Vec(f_, dim_c());
  if (a < b) return vals_[pair_index(a, b)];
  return -vals_[pair_index(b, a)];
}

Vec SkewBilinearMap::apply(const Vec& a, const Vec& b) const {
  if (a.dim() != da_ || b.dim() != da_) throw DimensionMismatch();
  Vec out(f_, dim_c());
  for (int j = 1; j < da_; ++j)
    for (int i = 0; i < j; ++i) {
      const Scalar c = a[i] * b[j] - a[j] * b[i];
      if (!c.is_zero()) out.axpy(c, vals_[pair_index(i, j)]);
    }
  return out;
}

bool SkewBilinearMap::is_zero() const {
  for (const auto& v : vals_)
    if (!v.is_zero()) return false;
  return true;
}

bool SkewBilinearMap::operator==(const SkewBilinearMap& o) const {
  return da_ == o.da_ && vals_ == o.vals_;
}

}  // namespace malcev
