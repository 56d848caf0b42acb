#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "obill/errors.hpp"

namespace obill {

using Rational = mpq_class;

struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// Element of Q(zeta_N), zeta_N = exp(2 pi i / N), stored as an integer
// polynomial in zeta of degree < phi(N) over one positive denominator.
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(int n_root);

  static FieldElement rational(int n_root, const Rational& q);
  static FieldElement zeta(int n_root, long power = 1);

  int n_root() const { return n_; }
  std::vector<Rational> coeffs() const;
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  // valid only when is_rational()
  Rational rational_value() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement& operator*=(const Rational& q);

  FieldElement inverse() const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator*(FieldElement a, const Rational& q) { return a *= q; }
  friend FieldElement operator*(const Rational& q, FieldElement a) { return a *= q; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.n_ == b.n_ && a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  // "[c0,c1,...]" with rational entries; lossless
  std::string str() const;

 private:
  friend FieldElement reduce_poly(int n, std::vector<mpz_class> p, mpz_class den);
  void normalize();
  void check_same(const FieldElement& o) const;

  int n_ = 0;
  std::vector<mpz_class> num_;
  mpz_class den_ = 1;
};

bool supported_root(int n_root);
int field_degree(int n_root);

FieldElement make_element(int n_root, const std::vector<Rational>& coeffs);
// parse the str() format back
FieldElement parse_element(int n_root, const std::string& text);

FieldElement conjugate(const FieldElement& z);
bool is_real(const FieldElement& z);

int sign_real(const FieldElement& z);
// signs of the real and imaginary parts of any element; zero decided exactly
int sign_re(const FieldElement& z);
int sign_im(const FieldElement& z);

std::pair<RationalInterval, RationalInterval> approximate(const FieldElement& z,
                                                          const Rational& eps);

// display only
std::complex<double> to_complex(const FieldElement& z);

}  // namespace obill
