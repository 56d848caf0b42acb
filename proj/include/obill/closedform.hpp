#pragma once

#include <array>
#include <string>
#include <vector>

#include "obill/exactfield.hpp"
#include "obill/wordcomb.hpp"

namespace obill {

using IntMatrix = std::vector<std::vector<long>>;
using Vec3 = std::array<long, 3>;

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_pow(const IntMatrix& a, int k);
IntMatrix mat_identity(int n);
Vec3 mat_apply(const IntMatrix& m, const Vec3& v);
long row_apply(const IntMatrix& row, const Vec3& v);

struct AbelianMatrix {
  std::string name;
  IntMatrix entries;
};
// A Ahat B Bhat C Chat L Lhat, and M for the x,y,z,t recursion
AbelianMatrix abelian_matrix(const std::string& name);

// (#1, #2, 1), the coordinates of x_n, y_n, z_n, t_n
Vec3 abelianize12(const Word& w);
// (#2, #3, 1), the coordinates the hatted chi, xi, beta and Phi act on
Vec3 abelianize23(const Word& w);

struct XYZT {
  Vec3 X, Y, Z, T;
};
// closed forms with the 1/35 factor; DivisibilityViolation if an entry is not integral
XYZT xyzt_vectors(int n);
// M^n applied to the abelianizations of 1, 1111, 12121, 1111111
XYZT xyzt_by_matrix(int n);

enum class Shape { plain, viaB, viaC };
// the closed forms for Lhat Ahat^k (seed), Lhat Ahat^k Bhat (seed), Lhat Ahat^k Chat (seed), seed = (a,b,1)
long iterated_length(Shape s, long a, long b, int k);
long iterated_length_matrix(Shape s, long a, long b, int k);

// (6^n (a k + b) + c k + d + (-1)^n (e k + f)), all coefficients rational
struct LengthFormula {
  std::string id;
  Kind kind = Kind::strong;
  bool uses_k = false, uses_n = false;
  Rational a, b, c, d, e, f;

  Rational value(int n, int k) const;
  // DivisibilityViolation unless the value is an integer
  mpz_class eval(int n, int k) const;
  std::string str() const;
};

// length of the family word computed by matrix products only
mpz_class family_length(const std::string& id, int k, int n);
// one formula per family, fitted to family_length on n in 0..2, k in 0..1
const std::vector<LengthFormula>& derived_length_formulas();
const LengthFormula& derived_length_formula(const std::string& id);

struct PrintedFormula {
  std::string label;      // "weak 1" .. "weak 10", "strong 1" .. "strong 12"
  std::string family_id;  // the family whose words it is supposed to measure
  LengthFormula formula;
};
const std::vector<PrintedFormula>& printed_length_formulas();

struct BispecialCount {
  long strong = 0, weak = 0;
};
// instances (family, k, n) with length <= N; eps is strong, the neutral word 2 is not counted
BispecialCount count_bispecials_upto(long N);

// the printed series with a geometric tail majorant; width < eps
RationalInterval beta(const Rational& eps);
// the same constant summed from the slopes of the derived length formulas
RationalInterval beta_from_formulas(const Rational& eps);

long p_square(int n);
long p_hexagon(int n);
// (5n^2 + 14n + f(n mod 12)) / 24 with the printed f table
long p_triangle(int n);
const std::array<long, 12>& triangle_f_table();
// p(n) = 30 q(q-1) + (window + 5r) q + base[r], n = 12q + r
long p_triangle_chain(int n, long window, const std::vector<long>& base);
// p_square, p_hexagon or p_triangle by k
long p_formula(int k, int n);

// n, p_formula, p_enumerated, s, b, match
std::string compare_table(int k, const Language& L, char sep = ',');

// p(n_max) / n_max^2, no claim attached
double empirical_quadratic_rate(const Language& L);

}  // namespace obill
