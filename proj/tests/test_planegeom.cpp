#include "doctest.h"
#include "obill/planegeom.hpp"

using namespace obill;

TEST_CASE("isometries compose and invert") {
  FieldElement z = FieldElement::zeta(10);
  FieldElement one = FieldElement::rational(10, 1);
  PlaneIsometry r = PlaneIsometry::rotation(one + z, z * z);
  PlaneIsometry t = PlaneIsometry::translation(z);
  CHECK(compose(r, r.inverse()) == PlaneIsometry::identity(10));
  CHECK(r.apply(one + z) == one + z);
  CHECK(rotation_center(r) == one + z);
  CHECK(power(r, 5) == PlaneIsometry::identity(10));
  CHECK(power(r, -2) == compose(r.inverse(), r.inverse()));
  CHECK(compose(t, r).apply(one) == t.apply(r.apply(one)));
  CHECK_THROWS_AS(rotation_center(t), NotARotation);
  CHECK_THROWS_AS(PlaneIsometry(one + one, one), NotAnIsometry);
}

TEST_CASE("conjugating translation between rotations of one angle") {
  FieldElement z = FieldElement::zeta(6);
  FieldElement one = FieldElement::rational(6, 1);
  PlaneIsometry r1 = PlaneIsometry::rotation(one, z), r2 = PlaneIsometry::rotation(z, z);
  PlaneIsometry t = conjugating_translation(r1, r2);
  CHECK(compose(t, r2) == compose(r1, t));
  CHECK(conjugating_translation(r1, r1) == PlaneIsometry::identity(6));
  CHECK_THROWS_AS(conjugating_translation(r1, PlaneIsometry::rotation(one, z * z)), AngleMismatch);
}

TEST_CASE("similarity conjugation and anti-affine maps") {
  FieldElement z = FieldElement::zeta(10);
  FieldElement two = FieldElement::rational(10, 2);
  AffineMap s{two * z, z};
  PlaneIsometry r = PlaneIsometry::rotation(FieldElement(10), z);
  PlaneIsometry c = conjugate_by(s, r);
  CHECK(c.multiplier() == z);
  CHECK(rotation_center(c) == s.apply(FieldElement(10)));
  AntiAffineMap refl{FieldElement::rational(10, 1), FieldElement(10)};
  AffineMap rr = compose(refl, refl);
  CHECK(rr == AffineMap{FieldElement::rational(10, 1), FieldElement(10)});
  CHECK(compose(refl, r).apply(z) == refl.apply(r.apply(z)));
  CHECK(compose(r, refl).apply(z) == r.apply(refl.apply(z)));
}

TEST_CASE("cross signs") {
  FieldElement one = FieldElement::rational(4, 1), i = FieldElement::zeta(4);
  CHECK(cross_sign(one, i) == 1);
  CHECK(cross_sign(i, one) == -1);
  CHECK(cross_sign(one, one + one) == 0);
}
