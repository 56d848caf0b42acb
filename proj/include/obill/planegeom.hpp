#pragma once

#include "obill/exactfield.hpp"

namespace obill {

using PlanePoint = FieldElement;

// z -> a z + b with |a| = 1
class PlaneIsometry {
 public:
  PlaneIsometry(FieldElement a, FieldElement b);

  static PlaneIsometry identity(int n_root);
  static PlaneIsometry translation(const FieldElement& v);
  static PlaneIsometry rotation(const PlanePoint& center, const FieldElement& multiplier);
  static PlaneIsometry central_symmetry(const PlanePoint& p);

  const FieldElement& multiplier() const { return a_; }
  const FieldElement& offset() const { return b_; }
  int n_root() const { return a_.n_root(); }
  bool is_translation() const;

  PlanePoint apply(const PlanePoint& p) const { return a_ * p + b_; }
  PlanePoint operator()(const PlanePoint& p) const { return apply(p); }
  PlaneIsometry inverse() const;

  friend bool operator==(const PlaneIsometry& x, const PlaneIsometry& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const PlaneIsometry& x, const PlaneIsometry& y) { return !(x == y); }

 private:
  FieldElement a_, b_;
};

// z -> a z + b, no constraint on a (similarities, products of anti-affine maps)
struct AffineMap {
  FieldElement a, b;

  PlanePoint apply(const PlanePoint& p) const { return a * p + b; }
  PlanePoint operator()(const PlanePoint& p) const { return apply(p); }
  AffineMap inverse() const;
  static AffineMap from(const PlaneIsometry& m) { return {m.multiplier(), m.offset()}; }

  friend bool operator==(const AffineMap& x, const AffineMap& y) { return x.a == y.a && x.b == y.b; }
};

// z -> c conj(z) + d
struct AntiAffineMap {
  FieldElement c, d;

  PlanePoint apply(const PlanePoint& p) const { return c * conjugate(p) + d; }
  PlanePoint operator()(const PlanePoint& p) const { return apply(p); }

  friend bool operator==(const AntiAffineMap& x, const AntiAffineMap& y) {
    return x.c == y.c && x.d == y.d;
  }
};

PlanePoint apply(const PlaneIsometry& m, const PlanePoint& p);
PlanePoint apply(const AntiAffineMap& m, const PlanePoint& p);

// compose(m2, m1) = m2 o m1
PlaneIsometry compose(const PlaneIsometry& m2, const PlaneIsometry& m1);
AntiAffineMap compose(const AntiAffineMap& m2, const PlaneIsometry& m1);
AntiAffineMap compose(const PlaneIsometry& m2, const AntiAffineMap& m1);
AffineMap compose(const AntiAffineMap& m2, const AntiAffineMap& m1);
AffineMap compose(const AffineMap& m2, const AffineMap& m1);

PlaneIsometry power(const PlaneIsometry& m, int e);

// conjugate by a similarity: s o m o s^-1, still an isometry
PlaneIsometry conjugate_by(const AffineMap& s, const PlaneIsometry& m);

PlanePoint rotation_center(const PlaneIsometry& m);
PlaneIsometry conjugating_translation(const PlaneIsometry& r1, const PlaneIsometry& r2);

// Im(conj(a) b): > 0 when b is counterclockwise from a
int cross_sign(const FieldElement& a, const FieldElement& b);
FieldElement cross_times_2i(const FieldElement& a, const FieldElement& b);

}  // namespace obill
