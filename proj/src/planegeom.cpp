#include "obill/planegeom.hpp"

namespace obill {

PlaneIsometry::PlaneIsometry(FieldElement a, FieldElement b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ * conjugate(a_) != FieldElement::rational(a_.n_root(), 1))
    throw NotAnIsometry("multiplier " + a_.str() + " has modulus != 1");
}

PlaneIsometry PlaneIsometry::identity(int n) {
  return {FieldElement::rational(n, 1), FieldElement(n)};
}

PlaneIsometry PlaneIsometry::translation(const FieldElement& v) {
  return {FieldElement::rational(v.n_root(), 1), v};
}

PlaneIsometry PlaneIsometry::rotation(const PlanePoint& c, const FieldElement& m) {
  return {m, c - m * c};
}

PlaneIsometry PlaneIsometry::central_symmetry(const PlanePoint& p) {
  return {FieldElement::rational(p.n_root(), -1), p + p};
}

bool PlaneIsometry::is_translation() const { return a_ == FieldElement::rational(a_.n_root(), 1); }

PlaneIsometry PlaneIsometry::inverse() const {
  FieldElement ai = conjugate(a_);
  return {ai, -(ai * b_)};
}

AffineMap AffineMap::inverse() const {
  FieldElement ai = a.inverse();
  return {ai, -(ai * b)};
}

PlanePoint apply(const PlaneIsometry& m, const PlanePoint& p) { return m.apply(p); }
PlanePoint apply(const AntiAffineMap& m, const PlanePoint& p) { return m.apply(p); }

PlaneIsometry compose(const PlaneIsometry& m2, const PlaneIsometry& m1) {
  return {m2.multiplier() * m1.multiplier(), m2.multiplier() * m1.offset() + m2.offset()};
}

AntiAffineMap compose(const AntiAffineMap& m2, const PlaneIsometry& m1) {
  return {m2.c * conjugate(m1.multiplier()), m2.c * conjugate(m1.offset()) + m2.d};
}

AntiAffineMap compose(const PlaneIsometry& m2, const AntiAffineMap& m1) {
  return {m2.multiplier() * m1.c, m2.multiplier() * m1.d + m2.offset()};
}

AffineMap compose(const AntiAffineMap& m2, const AntiAffineMap& m1) {
  return {m2.c * conjugate(m1.c), m2.c * conjugate(m1.d) + m2.d};
}

AffineMap compose(const AffineMap& m2, const AffineMap& m1) {
  return {m2.a * m1.a, m2.a * m1.b + m2.b};
}

PlaneIsometry power(const PlaneIsometry& m, int e) {
  PlaneIsometry base = e < 0 ? m.inverse() : m;
  PlaneIsometry r = PlaneIsometry::identity(m.n_root());
  for (int i = 0; i < (e < 0 ? -e : e); ++i) r = compose(base, r);
  return r;
}

PlaneIsometry conjugate_by(const AffineMap& s, const PlaneIsometry& m) {
  AffineMap r = compose(compose(s, AffineMap::from(m)), s.inverse());
  return {r.a, r.b};
}

PlanePoint rotation_center(const PlaneIsometry& m) {
  if (m.is_translation()) throw NotARotation("multiplier is 1");
  return m.offset() / (FieldElement::rational(m.n_root(), 1) - m.multiplier());
}

PlaneIsometry conjugating_translation(const PlaneIsometry& r1, const PlaneIsometry& r2) {
  if (r1.multiplier() != r2.multiplier()) throw AngleMismatch("rotations have different angles");
  if (r1 == r2) return PlaneIsometry::identity(r1.n_root());
  return PlaneIsometry::translation(rotation_center(r1) - rotation_center(r2));
}

FieldElement cross_times_2i(const FieldElement& a, const FieldElement& b) {
  FieldElement w = conjugate(a) * b;
  return w - conjugate(w);
}

int cross_sign(const FieldElement& a, const FieldElement& b) { return sign_im(conjugate(a) * b); }

}  // namespace obill
