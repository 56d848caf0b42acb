#include "obill/closedform.hpp"

#include <sstream>

#include "obill/substlang.hpp"

namespace obill {

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size()) throw std::invalid_argument("mat_mul: shape mismatch");
  IntMatrix c(a.size(), std::vector<long>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t l = 0; l < b.size(); ++l) c[i][j] += a[i][l] * b[l][j];
  return c;
}

IntMatrix mat_identity(int n) {
  IntMatrix m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix mat_pow(const IntMatrix& a, int k) {
  if (k < 0) throw std::invalid_argument("mat_pow: negative exponent");
  IntMatrix r = mat_identity(static_cast<int>(a.size()));
  for (int i = 0; i < k; ++i) r = mat_mul(r, a);
  return r;
}

Vec3 mat_apply(const IntMatrix& m, const Vec3& v) {
  if (m.size() != 3 || m[0].size() != 3) throw std::invalid_argument("mat_apply needs a 3x3 matrix");
  Vec3 out{0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += m[i][j] * v[j];
  return out;
}

long row_apply(const IntMatrix& row, const Vec3& v) {
  if (row.size() != 1 || row[0].size() != 3) throw std::invalid_argument("row_apply needs a 1x3 row");
  return row[0][0] * v[0] + row[0][1] * v[1] + row[0][2] * v[2];
}

AbelianMatrix abelian_matrix(const std::string& name) {
  if (name == "A") return {name, {{1, 0}, {1, 1}}};
  if (name == "Ahat") return {name, {{1, 0, 0}, {1, 1, 1}, {0, 0, 1}}};
  if (name == "B") return {name, {{3, 1}, {2, 1}}};
  if (name == "Bhat") return {name, {{3, 1, 3}, {2, 1, 2}, {0, 0, 1}}};
  if (name == "C") return {name, {{3, 1}, {1, 0}}};
  if (name == "Chat") return {name, {{3, 1, 3}, {1, 0, 0}, {0, 0, 1}}};
  if (name == "L") return {name, {{1, 2, 0}}};
  if (name == "Lhat") return {name, {{1, 2, 1}}};
  if (name == "M") return {name, {{5, 3, 4}, {2, 0, 0}, {0, 0, 1}}};
  throw std::invalid_argument("no abelianization matrix " + name);
}

namespace {

Vec3 count_pair(const Word& w, char p, char q) {
  Vec3 v{0, 0, 1};
  for (char c : w) {
    if (c == p)
      ++v[0];
    else if (c == q)
      ++v[1];
    else
      throw UnknownLetter(std::string("unexpected letter ") + c + " in " + w);
  }
  return v;
}

}  // namespace

Vec3 abelianize12(const Word& w) { return count_pair(w, '1', '2'); }
Vec3 abelianize23(const Word& w) { return count_pair(w, '2', '3'); }

namespace {

long pow6(int n) {
  long p = 1;
  for (int i = 0; i < n; ++i) p *= 6;
  return p;
}

Vec3 closed(int n, long a6, long am, long b6, long bm) {
  const long p = pow6(n), s = n % 2 ? -1 : 1;
  long u = a6 * p + am * s - 14, v = b6 * p + bm * s - 28;
  if (u % 35 || v % 35)
    throw DivisibilityViolation("closed form not divisible by 35 at n=" + std::to_string(n));
  return {u / 35, v / 35, 1};
}

}  // namespace

XYZT xyzt_vectors(int n) {
  if (n < 0) throw std::invalid_argument("n >= 0");
  return {closed(n, 54, -5, 18, 10), closed(n, 144, 10, 48, -20), closed(n, 144, -25, 48, 50),
          closed(n, 234, 25, 78, -50)};
}

XYZT xyzt_by_matrix(int n) {
  const IntMatrix Mn = mat_pow(abelian_matrix("M").entries, n);
  return {mat_apply(Mn, abelianize12("1")), mat_apply(Mn, abelianize12("1111")), mat_apply(Mn, abelianize12("12121")),
          mat_apply(Mn, abelianize12("1111111"))};
}

long iterated_length(Shape s, long a, long b, int k) {
  switch (s) {
    case Shape::plain: return k * (2 * a + 2) + 2 * b + a + 1;
    case Shape::viaB: return k * (6 * a + 2 * b + 8) + 7 * a + 3 * b + 8;
    case Shape::viaC: return k * (6 * a + 2 * b + 8) + 5 * a + b + 4;
  }
  return 0;
}

long iterated_length_matrix(Shape s, long a, long b, int k) {
  IntMatrix m = mat_pow(abelian_matrix("Ahat").entries, k);
  if (s == Shape::viaB) m = mat_mul(m, abelian_matrix("Bhat").entries);
  if (s == Shape::viaC) m = mat_mul(m, abelian_matrix("Chat").entries);
  return row_apply(abelian_matrix("Lhat").entries, mat_apply(m, {a, b, 1}));
}

// ---- length formulas ----

Rational LengthFormula::value(int n, int k) const {
  mpz_class p6;
  mpz_ui_pow_ui(p6.get_mpz_t(), 6, static_cast<unsigned long>(n));
  const Rational K(k), sgn(n % 2 ? -1 : 1);
  Rational v = Rational(p6) * (a * K + b) + c * K + d + sgn * (e * K + f);
  v.canonicalize();
  return v;
}

mpz_class LengthFormula::eval(int n, int k) const {
  Rational v = value(n, k);
  if (v.get_den() != 1)
    throw DivisibilityViolation(id + " not integral at n=" + std::to_string(n) + ", k=" + std::to_string(k));
  return v.get_num();
}

namespace {

// x k + y, dropping zero terms
std::string linear(const Rational& x, const Rational& y) {
  std::ostringstream os;
  if (x != 0) os << x << "k";
  if (y != 0 || x == 0) os << (x != 0 && y > 0 ? "+" : "") << y;
  return os.str();
}

}  // namespace

std::string LengthFormula::str() const {
  std::string out;
  auto add = [&](const std::string& t) {
    if (!out.empty() && t[0] != '-') out += "+";
    out += t;
  };
  if (a != 0 || b != 0) add("6^n(" + linear(a, b) + ")");
  if (c != 0 || d != 0) add(linear(c, d));
  if (e != 0 || f != 0) add("(-1)^n(" + linear(e, f) + ")");
  return out.empty() ? "0" : out;
}

namespace {

using ZVec = std::array<mpz_class, 3>;

ZVec zapply(const IntMatrix& m, const ZVec& v) {
  ZVec out{0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += m[i][j] * v[j];
  return out;
}

ZVec zvec(const Vec3& v) { return {v[0], v[1], v[2]}; }

ZVec base_vector(char c, int n) {
  static const IntMatrix M = abelian_matrix("M").entries;
  const char* seeds[] = {"1", "1111", "12121", "1111111"};
  const std::string names = "xyzt";
  auto pos = names.find(c);
  if (pos == std::string::npos) throw std::invalid_argument(std::string("no base family ") + c);
  ZVec v = zvec(abelianize12(seeds[pos]));
  for (int i = 0; i < n; ++i) v = zapply(M, v);
  return v;
}

// (x6, x1, xm) with x6 6^n + x1 + xm (-1)^n = g_n for n = 0, 1, 2
std::array<Rational, 3> solve_611(const Rational& g0, const Rational& g1, const Rational& g2) {
  Rational x6 = (g2 - g0) / 35;
  Rational x1 = (g0 + g1 - 7 * x6) / 2;
  Rational xm = (g0 - g1 + 5 * x6) / 2;
  return {x6, x1, xm};
}

}  // namespace

mpz_class family_length(const std::string& id, int k, int n) {
  if (k < 0 || n < 0) throw std::invalid_argument("family_length: k, n >= 0");
  if (id == "eps") return 0;
  if (id == "2") return 1;
  if (id.size() == 1) {
    ZVec v = base_vector(id[0], n);
    return v[0] + v[1];
  }
  static const IntMatrix Ahat = abelian_matrix("Ahat").entries, Bhat = abelian_matrix("Bhat").entries,
                         Chat = abelian_matrix("Chat").entries, Lhat = abelian_matrix("Lhat").entries;
  ZVec v;
  if (id.rfind("chi(", 0) == 0)
    v = zvec(abelianize23(id.substr(4, id.size() - 5)));
  else if (id.rfind("chi.xi(", 0) == 0)
    v = zapply(Chat, base_vector(id[7], n));
  else if (id.rfind("chi.beta(", 0) == 0)
    v = zapply(Bhat, base_vector(id[9], n));
  else
    throw std::invalid_argument("unknown family " + id);
  for (int i = 0; i < k; ++i) v = zapply(Ahat, v);
  return Lhat[0][0] * v[0] + Lhat[0][1] * v[1] + Lhat[0][2] * v[2];
}

const std::vector<LengthFormula>& derived_length_formulas() {
  static const std::vector<LengthFormula> all = [] {
    std::vector<LengthFormula> out;
    for (const auto& fam : family_table()) {
      LengthFormula lf;
      lf.id = fam.id;
      lf.kind = fam.kind;
      lf.uses_k = fam.uses_k;
      lf.uses_n = fam.uses_n;
      Rational g0[3], g1[3];
      for (int n = 0; n < 3; ++n) {
        g0[n] = Rational(family_length(fam.id, 0, n));
        g1[n] = Rational(family_length(fam.id, 1, n)) - g0[n];
      }
      auto c0 = solve_611(g0[0], g0[1], g0[2]);
      auto c1 = solve_611(g1[0], g1[1], g1[2]);
      lf.b = c0[0];
      lf.d = c0[1];
      lf.f = c0[2];
      lf.a = c1[0];
      lf.c = c1[1];
      lf.e = c1[2];
      out.push_back(lf);
    }
    return out;
  }();
  return all;
}

const LengthFormula& derived_length_formula(const std::string& id) {
  for (const auto& f : derived_length_formulas())
    if (f.id == id) return f;
  throw std::invalid_argument("unknown family " + id);
}

namespace {

PrintedFormula printed(const std::string& label, const std::string& fam, long a, long b, long c, long d, long e, long f,
                       long den) {
  LengthFormula lf;
  lf.id = label;
  lf.kind = label[0] == 'w' ? Kind::weak : Kind::strong;
  lf.uses_k = a != 0 || c != 0 || e != 0;
  lf.uses_n = a != 0 || b != 0 || e != 0 || f != 0;
  lf.a = Rational(a, den);
  lf.b = Rational(b, den);
  lf.c = Rational(c, den);
  lf.d = Rational(d, den);
  lf.e = Rational(e, den);
  lf.f = Rational(f, den);
  for (Rational* r : {&lf.a, &lf.b, &lf.c, &lf.d, &lf.e, &lf.f}) r->canonicalize();
  return {label, fam, lf};
}

}  // namespace

// transcribed term by term; 48.6^n(20k+24) is a=48*20, b=48*24 and so on
const std::vector<PrintedFormula>& printed_length_formulas() {
  static const std::vector<PrintedFormula> t = {
      printed("weak 1", "chi(2222)", 0, 0, 10, 5, 0, 0, 1),
      printed("weak 2", "chi(22322)", 0, 0, 10, 7, 0, 0, 1),
      printed("weak 3", "chi(232232)", 0, 0, 10, 9, 0, 0, 1),
      printed("weak 4", "chi(2323232)", 0, 0, 10, 11, 0, 0, 1),
      printed("weak 5", "chi.beta(z)", 960, 1152, 140, 98, -50, -25, 35),
      printed("weak 6", "chi.xi(t)", 1560, 1248, 140, 42, 50, 25, 35),
      printed("weak 7", "chi.xi(z)", 960, 768, 140, 42, -50, -75, 35),
      printed("weak 8", "chi.beta(t)", 1560, 1872, 140, 98, 50, 75, 35),
      printed("weak 9", "z", 0, 192, 0, -42, 0, 25, 35),
      printed("weak 10", "t", 0, 312, 0, -42, 0, -25, 35),
      printed("strong 1", "chi(2)", 0, 0, 4, 2, 0, 0, 1),
      printed("strong 2", "chi(22)", 0, 0, 6, 3, 0, 0, 1),
      printed("strong 3", "chi(222)", 0, 0, 8, 4, 0, 0, 1),
      printed("strong 4", "chi(232)", 0, 0, 6, 5, 0, 0, 1),
      printed("strong 5", "chi(23232)", 0, 0, 8, 8, 0, 0, 1),
      printed("strong 6", "chi(3)", 0, 0, 2, 3, 0, 0, 1),
      printed("strong 7", "chi.beta(x)", 360, 432, 140, 98, -10, -5, 35),
      printed("strong 8", "chi.beta(y)", 960, 1152, 140, 98, 20, 10, 35),
      printed("strong 9", "chi.xi(x)", 360, 288, 140, 42, -10, -15, 35),
      printed("strong 10", "chi.xi(y)", 960, 768, 140, 42, 20, 30, 35),
      printed("strong 11", "x", 0, 72, 0, -42, 0, 5, 35),
      printed("strong 12", "y", 0, 32, 0, -42, 0, 10, 35),
  };
  return t;
}

BispecialCount count_bispecials_upto(long N) {
  if (N < 1) throw std::invalid_argument("N >= 1");
  BispecialCount bc;
  const Rational NN(N);
  for (const auto& lf : derived_length_formulas()) {
    if (lf.kind == Kind::neutral) continue;
    long cnt = 0;
    for (int n = 0; n == 0 || lf.uses_n; ++n) {
      const Rational v = lf.value(n, 0);
      if (v > NN) {
        // v_n grows like 6^n once past the first terms
        if (!lf.uses_n || lf.b * Rational(pow6(n)) - abs(lf.d) - abs(lf.f) > NN) break;
        continue;
      }
      if (!lf.uses_k) {
        ++cnt;
        continue;
      }
      const Rational u = lf.value(n, 1) - v;
      if (u <= 0) throw std::logic_error("non-increasing family " + lf.id);
      Rational q = (NN - v) / u;
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
      cnt += fl.get_si() + 1;
    }
    (lf.kind == Kind::strong ? bc.strong : bc.weak) += cnt;
  }
  return bc;
}

namespace {

Rational term(long c, long e, int n) {
  return Rational(7) / Rational(c * pow6(n) + 14 + (n % 2 ? -e : e));
}

}  // namespace

RationalInterval beta(const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("eps > 0");
  // every denominator is at least c 6^n, so the tail from m is at most (7/c) 6^-m 6/5
  const Rational pos_rate = Rational(7, 96) + Rational(7, 36), neg_rate = Rational(7, 156) + Rational(7, 96);
  Rational s(14, 15), scale(6, 5);
  for (int m = 0; m < 60; ++m) {
    s += term(96, 2, m) + term(36, -1, m) - term(156, 5, m) - term(96, -5, m);
    scale /= 6;
    RationalInterval iv{s - neg_rate * scale, s + pos_rate * scale};
    if (iv.width() < eps) return iv;
  }
  throw std::runtime_error("beta: eps too small");
}

RationalInterval beta_from_formulas(const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("eps > 0");
  for (int m = 1; m < 60; ++m) {
    RationalInterval iv{0, 0};
    bool tail_ok = true;
    for (const auto& lf : derived_length_formulas()) {
      if (!lf.uses_k || lf.kind == Kind::neutral) continue;
      const int sign = lf.kind == Kind::strong ? 1 : -1;
      Rational part = 0, tail = 0;
      if (!lf.uses_n) {
        part = 1 / lf.c;
      } else {
        for (int n = 0; n < m; ++n) part += 1 / (lf.value(n, 1) - lf.value(n, 0));
        // 1/u_n <= 2/(a 6^n) once a 6^n >= 2(|c|+|e|)
        const Rational am = lf.a * Rational(pow6(m));
        if (am < 2 * (abs(lf.c) + abs(lf.e))) tail_ok = false;
        tail = Rational(2) / am * Rational(6, 5);
      }
      iv.lo += sign * part - (sign > 0 ? Rational(0) : tail);
      iv.hi += sign * part + (sign > 0 ? tail : Rational(0));
    }
    if (tail_ok && iv.width() < eps) return iv;
  }
  throw std::runtime_error("beta_from_formulas: eps too small");
}

long p_square(int n) {
  if (n < 0) throw std::invalid_argument("n >= 0");
  const long fl = (static_cast<long>(n) + 2) * (n + 2) / 2;
  if (fl % 2) throw DivisibilityViolation("square formula odd at n=" + std::to_string(n));
  return fl / 2;
}

long p_hexagon(int n) {
  if (n < 0) throw std::invalid_argument("n >= 0");
  const long nn = n;
  return (5 * nn * nn + 16 * nn + 15) / 12;
}

const std::array<long, 12>& triangle_f_table() {
  static const std::array<long, 12> f = {24, 29, 24, 9, 8, 21, 24, 17, 0, -3, 8, 9};
  return f;
}

long p_triangle(int n) {
  if (n < 0) throw std::invalid_argument("n >= 0");
  const long nn = n, num = 5 * nn * nn + 14 * nn + triangle_f_table()[n % 12];
  if (num % 24) throw DivisibilityViolation("triangle formula not divisible by 24 at n=" + std::to_string(n));
  return num / 24;
}

long p_triangle_chain(int n, long window, const std::vector<long>& base) {
  if (n < 0 || base.size() < 12) throw std::invalid_argument("p_triangle_chain needs n >= 0 and p(0..11)");
  const long q = n / 12, r = n % 12;
  return 30 * q * (q - 1) + (window + 5 * r) * q + base[r];
}

long p_formula(int k, int n) {
  switch (k) {
    case 3: return p_triangle(n);
    case 4: return p_square(n);
    case 6: return p_hexagon(n);
  }
  throw UnsupportedPolygon("no closed complexity formula for k=" + std::to_string(k));
}

std::string compare_table(int k, const Language& L, char sep) {
  std::ostringstream os;
  os << "n" << sep << "p_formula" << sep << "p_enumerated" << sep << "s" << sep << "b" << sep << "match\n";
  for (int n = 0; n <= L.n_max(); ++n) {
    const long pf = p_formula(k, n);
    const long pe = static_cast<long>(complexity(L, n));
    os << n << sep << pf << sep << pe << sep;
    if (n + 1 <= L.n_max()) os << s_function(L, n);
    os << sep;
    if (n + 2 <= L.n_max()) os << b_function(L, n);
    os << sep << (pf == pe ? "true" : "false") << '\n';
  }
  return os.str();
}

double empirical_quadratic_rate(const Language& L) {
  const int n = L.n_max();
  if (n < 1) throw InsufficientDepth("need n_max >= 1");
  return static_cast<double>(complexity(L, n)) / (static_cast<double>(n) * n);
}

}  // namespace obill
