#include <mpfr.h>

#include <random>

#include "doctest.h"
#include "obill/exactfield.hpp"

using namespace obill;

namespace {

// 700-bit evaluation of Re and Im, independent of the library's interval code
struct Mp {
  mpfr_t re, im;
  Mp() {
    mpfr_init2(re, 700);
    mpfr_init2(im, 700);
  }
  ~Mp() {
    mpfr_clear(re);
    mpfr_clear(im);
  }
};

void eval(const FieldElement& z, Mp& out) {
  mpfr_t pi, ang, c, s, q;
  for (auto* v : {&pi, &ang, &c, &s, &q}) mpfr_init2(*v, 700);
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_set_zero(out.re, 1);
  mpfr_set_zero(out.im, 1);
  auto co = z.coeffs();
  for (std::size_t j = 0; j < co.size(); ++j) {
    mpfr_mul_ui(ang, pi, 2 * j, MPFR_RNDN);
    mpfr_div_ui(ang, ang, z.n_root(), MPFR_RNDN);
    mpfr_sin_cos(s, c, ang, MPFR_RNDN);
    mpfr_set_q(q, co[j].get_mpq_t(), MPFR_RNDN);
    mpfr_mul(c, c, q, MPFR_RNDN);
    mpfr_mul(s, s, q, MPFR_RNDN);
    mpfr_add(out.re, out.re, c, MPFR_RNDN);
    mpfr_add(out.im, out.im, s, MPFR_RNDN);
  }
  for (auto* v : {&pi, &ang, &c, &s, &q}) mpfr_clear(*v);
}

int oracle_sign(mpfr_t x) {
  // anything below 2^-600 is treated as an exact zero by the oracle
  if (mpfr_zero_p(x) || mpfr_get_exp(x) < -600) return 0;
  return mpfr_sgn(x) > 0 ? 1 : -1;
}

FieldElement random_element(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-6, 6);
  std::vector<Rational> c;
  for (int i = 0; i < field_degree(n); ++i) c.emplace_back(d(rng), 1 + (d(rng) + 6) % 5);
  return make_element(n, c);
}

}  // namespace

TEST_CASE("supported fields and degrees") {
  CHECK(field_degree(4) == 2);
  CHECK(field_degree(6) == 2);
  CHECK(field_degree(10) == 4);
  CHECK(field_degree(12) == 4);
  CHECK(field_degree(20) == 8);
  CHECK_FALSE(supported_root(7));
  CHECK_THROWS_AS(FieldElement(7), UnsupportedField);
}

TEST_CASE("cyclotomic relations hold") {
  for (int n : {4, 6, 10, 12, 20}) {
    FieldElement z = FieldElement::zeta(n);
    FieldElement p = FieldElement::rational(n, 1);
    for (int i = 0; i < n; ++i) p *= z;
    CHECK(p == FieldElement::rational(n, 1));
    FieldElement sum(n);
    for (int i = 0; i < n; ++i) sum += FieldElement::zeta(n, i);
    CHECK(sum.is_zero());
    CHECK(FieldElement::zeta(n, -1) * z == FieldElement::rational(n, 1));
  }
}

TEST_CASE("field arithmetic identities on random elements") {
  std::mt19937 rng(7);
  for (int n : {4, 6, 10, 12, 20}) {
    for (int t = 0; t < 20; ++t) {
      FieldElement a = random_element(n, rng), b = random_element(n, rng), c = random_element(n, rng);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == FieldElement::rational(n, 1));
      CHECK(conjugate(conjugate(a)) == a);
      CHECK(conjugate(a * b) == conjugate(a) * conjugate(b));
      CHECK(is_real(a * conjugate(a)));
      CHECK(parse_element(n, a.str()) == a);
    }
  }
}

TEST_CASE("golden ratio and sqrt identities") {
  FieldElement z = FieldElement::zeta(10);
  FieldElement phi = z + FieldElement::zeta(10, -1);
  CHECK(phi * phi == phi + FieldElement::rational(10, 1));
  CHECK(sign_real(phi - FieldElement::rational(10, Rational(1618, 1000))) > 0);
  CHECK(sign_real(phi - FieldElement::rational(10, Rational(1619, 1000))) < 0);
  FieldElement s3 = FieldElement::zeta(12) + FieldElement::zeta(12, -1);  // sqrt 3
  CHECK(s3 * s3 == FieldElement::rational(12, 3));
  CHECK(sign_real(s3) > 0);
  CHECK_THROWS_AS(sign_real(z), NonRealInput);
}

TEST_CASE("signs agree with a high precision oracle") {
  std::mt19937 rng(11);
  for (int n : {4, 6, 10, 12, 20}) {
    for (int t = 0; t < 60; ++t) {
      FieldElement a = random_element(n, rng);
      if (t % 3 == 0) a = a - conjugate(a) * FieldElement::zeta(n, t % n);
      Mp m;
      eval(a, m);
      CHECK(sign_re(a) == oracle_sign(m.re));
      CHECK(sign_im(a) == oracle_sign(m.im));
    }
  }
}

TEST_CASE("near-zero quantities resolve") {
  // phi - 1/phi - 1 vanishes; F60 phi - F61 is about 1e-13
  FieldElement z = FieldElement::zeta(10);
  FieldElement phi = z + FieldElement::zeta(10, -1);
  FieldElement x = phi - phi.inverse() - FieldElement::rational(10, 1);
  CHECK(x.is_zero());
  FieldElement p = FieldElement::rational(10, 1);
  for (int i = 0; i < 60; ++i) p *= phi;
  // phi^60 = F60 phi + F59
  mpz_class f59("956722026041"), f60("1548008755920");
  FieldElement q = phi * Rational(f60) + FieldElement::rational(10, Rational(f59));
  CHECK(p == q);
  FieldElement tiny = phi * Rational(f60) - FieldElement::rational(10, Rational(mpz_class("2504730781961")));
  Mp m;
  eval(tiny, m);
  CHECK(sign_real(tiny) == oracle_sign(m.re));
}

TEST_CASE("approximation intervals contain the value") {
  FieldElement s3 = FieldElement::zeta(12) + FieldElement::zeta(12, -1);
  Rational eps(1, mpz_class(1) << 100);
  auto [re, im] = approximate(s3, eps);
  CHECK(re.width() <= eps);
  CHECK(re.lo * re.lo <= 3);
  CHECK(re.hi * re.hi >= 3);
  CHECK(im.contains(0));
}

TEST_CASE("mixing fields is rejected") {
  CHECK_THROWS_AS(FieldElement::zeta(10) + FieldElement::zeta(6), FieldMismatch);
}
