#include "obill/exactfield.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace obill {

namespace {

// cyclotomic polynomials, low degree first, all monic
const std::vector<int>& cyclotomic(int n) {
  static const std::map<int, std::vector<int>> table = {
      {4, {1, 0, 1}},
      {6, {1, -1, 1}},
      {10, {1, -1, 1, -1, 1}},
      {12, {1, 0, -1, 0, 1}},
      {20, {1, 0, -1, 0, 1, 0, -1, 0, 1}},
  };
  auto it = table.find(n);
  if (it == table.end()) throw UnsupportedField("no cyclotomic field for N=" + std::to_string(n));
  return it->second;
}

}  // namespace

bool supported_root(int n) { return n == 4 || n == 6 || n == 10 || n == 12 || n == 20; }

int field_degree(int n) { return static_cast<int>(cyclotomic(n).size()) - 1; }

FieldElement reduce_poly(int n, std::vector<mpz_class> p, mpz_class den) {
  const auto& phi = cyclotomic(n);
  const int d = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(p.size()) - 1; i >= d; --i) {
    if (p[i] == 0) continue;
    mpz_class c = p[i];
    for (int j = 0; j < d; ++j)
      if (phi[j] != 0) p[i - d + j] -= c * phi[j];
    p[i] = 0;
  }
  p.resize(d);
  FieldElement r;
  r.n_ = n;
  r.num_ = std::move(p);
  r.den_ = std::move(den);
  r.normalize();
  return r;
}

FieldElement::FieldElement(int n_root) : n_(n_root), num_(field_degree(n_root)), den_(1) {}

FieldElement FieldElement::rational(int n_root, const Rational& q) {
  FieldElement r(n_root);
  r.num_[0] = q.get_num();
  r.den_ = q.get_den();
  return r;
}

FieldElement FieldElement::zeta(int n_root, long power) {
  long e = power % n_root;
  if (e < 0) e += n_root;
  std::vector<mpz_class> p(std::max<long>(e + 1, field_degree(n_root)));
  p[e] = 1;
  return reduce_poly(n_root, std::move(p), 1);
}

void FieldElement::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void FieldElement::check_same(const FieldElement& o) const {
  if (n_ != o.n_)
    throw FieldMismatch("Q(zeta_" + std::to_string(n_) + ") vs Q(zeta_" + std::to_string(o.n_) + ")");
}

std::vector<Rational> FieldElement::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (const auto& c : num_) {
    Rational q(c, den_);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

bool FieldElement::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

Rational FieldElement::rational_value() const {
  Rational q(num_.empty() ? mpz_class(0) : num_[0], den_);
  q.canonicalize();
  return q;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  const std::size_t d = num_.size();
  std::vector<mpz_class> p(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (o.num_[j] != 0) p[i + j] += num_[i] * o.num_[j];
  }
  *this = reduce_poly(n_, std::move(p), den_ * o.den_);
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& q) {
  for (auto& c : num_) c *= q.get_num();
  den_ *= q.get_den();
  normalize();
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

// solve (multiplication-by-this) x = 1 over Q
FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  const int d = static_cast<int>(num_.size());
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  FieldElement col = *this;
  const FieldElement z = zeta(n_, 1);
  for (int j = 0; j < d; ++j) {
    auto cs = col.coeffs();
    for (int i = 0; i < d; ++i) m[i][j] = cs[i];
    col *= z;
  }
  m[0][d] = 1;
  for (int c = 0; c < d; ++c) {
    int piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    for (int r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (int k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> x(d);
  for (int i = 0; i < d; ++i) x[i] = m[i][d] / m[i][i];
  return make_element(n_, x);
}

std::string FieldElement::str() const {
  std::ostringstream os;
  os << '[';
  auto cs = coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) os << ',';
    os << cs[i].get_str();
  }
  os << ']';
  return os.str();
}

FieldElement make_element(int n_root, const std::vector<Rational>& coeffs) {
  const int d = field_degree(n_root);
  mpz_class den = 1;
  for (const auto& q : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> p(std::max<std::size_t>(coeffs.size(), d));
  for (std::size_t i = 0; i < coeffs.size(); ++i) p[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
  return reduce_poly(n_root, std::move(p), den);
}

FieldElement parse_element(int n_root, const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == '[' || c == ']' || c == ' '; }),
          t.end());
  std::vector<Rational> cs;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rational q(item);
    q.canonicalize();
    cs.push_back(q);
  }
  return make_element(n_root, cs);
}

FieldElement conjugate(const FieldElement& z) {
  const int n = z.n_root();
  const auto& num = z.numerators();
  std::vector<mpz_class> p(n);
  p[0] = num[0];
  for (std::size_t i = 1; i < num.size(); ++i) p[n - i] = num[i];
  return reduce_poly(n, std::move(p), z.denominator());
}

bool is_real(const FieldElement& z) { return conjugate(z) == z; }

// ---------------------------------------------------------------------------
// embedding enclosures

namespace {

// fixed point interval [lo, hi] * 2^-prec
struct Fx {
  mpz_class lo, hi;
};

Fx fx_const(long v, unsigned prec) {
  mpz_class x = v;
  x <<= prec;
  return {x, x};
}

Fx fx_add(const Fx& a, const Fx& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Fx fx_neg(const Fx& a) { return {-a.hi, -a.lo}; }

Fx fx_mul(const Fx& a, const Fx& b, unsigned prec) {
  mpz_class c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  mpz_class mn = c[0], mx = c[0];
  for (auto& v : c) {
    if (v < mn) mn = v;
    if (v > mx) mx = v;
  }
  Fx r;
  mpz_fdiv_q_2exp(r.lo.get_mpz_t(), mn.get_mpz_t(), prec);
  mpz_cdiv_q_2exp(r.hi.get_mpz_t(), mx.get_mpz_t(), prec);
  return r;
}

Fx fx_div_int(const Fx& a, long d) {
  Fx r;
  mpz_class dd = d;
  mpz_fdiv_q(r.lo.get_mpz_t(), a.lo.get_mpz_t(), dd.get_mpz_t());
  mpz_cdiv_q(r.hi.get_mpz_t(), a.hi.get_mpz_t(), dd.get_mpz_t());
  return r;
}

// requires a.lo >= 0
Fx fx_sqrt(const Fx& a, unsigned prec) {
  Fx r;
  mpz_class t = a.lo << prec;
  mpz_sqrt(r.lo.get_mpz_t(), t.get_mpz_t());
  t = a.hi << prec;
  mpz_sqrt(r.hi.get_mpz_t(), t.get_mpz_t());
  r.hi += 1;
  return r;
}

struct CFx {
  Fx re, im;
};

CFx cfx_mul(const CFx& a, const CFx& b, unsigned prec) {
  return {fx_add(fx_mul(a.re, b.re, prec), fx_neg(fx_mul(a.im, b.im, prec))),
          fx_add(fx_mul(a.re, b.im, prec), fx_mul(a.im, b.re, prec))};
}

// cos and sin of 2 pi / N by nested radicals
CFx zeta_enclosure(int n, unsigned prec) {
  auto sqrt_int = [&](long v) { return fx_sqrt(fx_const(v, prec), prec); };
  Fx s5 = sqrt_int(5);
  switch (n) {
    case 4:
      return {fx_const(0, prec), fx_const(1, prec)};
    case 6:
      return {fx_div_int(fx_const(1, prec), 2), fx_div_int(sqrt_int(3), 2)};
    case 12:
      return {fx_div_int(sqrt_int(3), 2), fx_div_int(fx_const(1, prec), 2)};
    case 10: {
      Fx c = fx_div_int(fx_add(fx_const(1, prec), s5), 4);
      Fx inner = fx_add(fx_const(10, prec), fx_neg(fx_add(s5, s5)));
      return {c, fx_div_int(fx_sqrt(inner, prec), 4)};
    }
    case 20: {
      Fx inner = fx_add(fx_const(10, prec), fx_add(s5, s5));
      Fx s = fx_div_int(fx_add(s5, fx_neg(fx_const(1, prec))), 4);
      return {fx_div_int(fx_sqrt(inner, prec), 4), s};
    }
  }
  throw UnsupportedField("no enclosure for N=" + std::to_string(n));
}

constexpr unsigned kGuard = 24;

// enclosures of zeta^j for j < degree, at working precision prec
const std::vector<CFx>& powers(int n, unsigned prec) {
  thread_local std::map<std::pair<int, unsigned>, std::vector<CFx>> cache;
  auto key = std::make_pair(n, prec);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const unsigned wp = prec + kGuard;
  const int d = field_degree(n);
  std::vector<CFx> pw;
  CFx z = zeta_enclosure(n, wp);
  CFx cur{fx_const(1, wp), fx_const(0, wp)};
  for (int j = 0; j < d; ++j) {
    pw.push_back(cur);
    cur = cfx_mul(cur, z, wp);
  }
  // drop guard bits outward
  for (auto& c : pw) {
    for (Fx* f : {&c.re, &c.im}) {
      mpz_fdiv_q_2exp(f->lo.get_mpz_t(), f->lo.get_mpz_t(), kGuard);
      mpz_cdiv_q_2exp(f->hi.get_mpz_t(), f->hi.get_mpz_t(), kGuard);
    }
  }
  return cache.emplace(key, std::move(pw)).first->second;
}

// enclosure of numerator polynomial, scaled by 2^prec (denominator not applied)
Fx eval_part(const FieldElement& z, unsigned prec, bool imag) {
  const auto& pw = powers(z.n_root(), prec);
  const auto& num = z.numerators();
  Fx acc{0, 0};
  for (std::size_t j = 0; j < num.size(); ++j) {
    const mpz_class& c = num[j];
    if (c == 0) continue;
    const Fx& f = imag ? pw[j].im : pw[j].re;
    if (c > 0) {
      acc.lo += c * f.lo;
      acc.hi += c * f.hi;
    } else {
      acc.lo += c * f.hi;
      acc.hi += c * f.lo;
    }
  }
  return acc;
}

// caller guarantees the part is nonzero
int refine_sign(const FieldElement& z, bool imag) {
  for (unsigned prec = 64;; prec *= 2) {
    Fx f = eval_part(z, prec, imag);
    if (f.lo > 0) return 1;
    if (f.hi < 0) return -1;
  }
}

RationalInterval to_interval(const Fx& f, unsigned prec, const mpz_class& den) {
  mpz_class scale = 1;
  scale <<= prec;
  RationalInterval r{Rational(f.lo, scale * den), Rational(f.hi, scale * den)};
  r.lo.canonicalize();
  r.hi.canonicalize();
  return r;
}

}  // namespace

int sign_re(const FieldElement& z) {
  if (z.is_rational()) return sgn(z.rational_value());
  if ((z + conjugate(z)).is_zero()) return 0;
  return refine_sign(z, false);
}

int sign_im(const FieldElement& z) {
  if (z.is_rational()) return 0;
  if (conjugate(z) == z) return 0;
  return refine_sign(z, true);
}

int sign_real(const FieldElement& z) {
  if (z.is_rational()) return sgn(z.rational_value());
  if (!is_real(z)) throw NonRealInput("sign_real of non-real element " + z.str());
  if (z.is_zero()) return 0;
  return refine_sign(z, false);
}

std::pair<RationalInterval, RationalInterval> approximate(const FieldElement& z, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("approximate: eps must be positive");
  if (z.is_zero()) return {{0, 0}, {0, 0}};
  for (unsigned prec = 64;; prec *= 2) {
    auto re = to_interval(eval_part(z, prec, false), prec, z.denominator());
    auto im = to_interval(eval_part(z, prec, true), prec, z.denominator());
    if (re.width() < eps && im.width() < eps) return {re, im};
  }
}

std::complex<double> to_complex(const FieldElement& z) {
  auto [re, im] = approximate(z, Rational(1, 1000000000) * Rational(1, 1000000));
  return {Rational((re.lo + re.hi) / 2).get_d(), Rational((im.lo + im.hi) / 2).get_d()};
}

}  // namespace obill
