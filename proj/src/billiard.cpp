#include "obill/billiard.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace obill {

// ---------------------------------------------------------------------------
// convex regions

ConvexRegion ConvexRegion::polygon(const std::vector<PlanePoint>& v) {
  std::vector<HalfPlane> hs;
  for (std::size_t i = 0; i < v.size(); ++i) hs.push_back({v[i], v[(i + 1) % v.size()] - v[i]});
  return ConvexRegion(std::move(hs));
}

bool ConvexRegion::contains(const PlanePoint& z) const {
  for (const auto& h : hs_)
    if (cross_sign(h.dir, z - h.point) <= 0) return false;
  return true;
}

bool ConvexRegion::contains_closed(const PlanePoint& z) const {
  for (const auto& h : hs_)
    if (cross_sign(h.dir, z - h.point) < 0) return false;
  return true;
}

std::vector<PlanePoint> ConvexRegion::vertices() const {
  std::vector<PlanePoint> out;
  for (std::size_t i = 0; i < hs_.size(); ++i) {
    for (std::size_t j = i + 1; j < hs_.size(); ++j) {
      FieldElement den = cross_times_2i(hs_[i].dir, hs_[j].dir);
      if (den.is_zero()) continue;
      FieldElement t = cross_times_2i(hs_[j].point - hs_[i].point, hs_[j].dir) / den;
      PlanePoint x = hs_[i].point + t * hs_[i].dir;
      if (!contains_closed(x)) continue;
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
  }
  return out;
}

std::optional<FieldElement> ConvexRegion::recession_direction() const {
  if (hs_.empty()) return std::nullopt;
  const int n = hs_[0].dir.n_root();
  std::vector<FieldElement> cand;
  for (const auto& a : hs_) {
    cand.push_back(a.dir);
    cand.push_back(-a.dir);
    for (const auto& b : hs_) {
      cand.push_back(a.dir + b.dir);
      cand.push_back(a.dir - b.dir);
    }
    for (int m = 1; m < n; ++m) cand.push_back(a.dir * FieldElement::zeta(n, m));
  }
  for (const auto& r : cand) {
    if (r.is_zero()) continue;
    bool ok = true;
    for (const auto& h : hs_)
      if (cross_sign(h.dir, r) <= 0) {
        ok = false;
        break;
      }
    if (ok) return r;
  }
  return std::nullopt;
}

bool ConvexRegion::bounded() const { return !recession_direction().has_value(); }

ConvexRegion ConvexRegion::intersect(const ConvexRegion& o) const {
  auto hs = hs_;
  hs.insert(hs.end(), o.hs_.begin(), o.hs_.end());
  return ConvexRegion(std::move(hs));
}

ConvexRegion ConvexRegion::image(const PlaneIsometry& m) const { return image(AffineMap::from(m)); }

ConvexRegion ConvexRegion::image(const AffineMap& m) const {
  std::vector<HalfPlane> hs;
  for (const auto& h : hs_) hs.push_back({m.apply(h.point), m.a * h.dir});
  return ConvexRegion(std::move(hs));
}

std::optional<PlanePoint> ConvexRegion::interior_point() const {
  auto vs = vertices();
  if (vs.empty()) return std::nullopt;
  const int n = vs[0].n_root();
  PlanePoint c(n);
  for (const auto& v : vs) c += v;
  c *= Rational(1, static_cast<long>(vs.size()));
  if (contains(c)) return c;
  if (auto r = recession_direction()) {
    PlanePoint x = c + *r;
    if (contains(x)) return x;
  }
  return std::nullopt;
}

bool same_point_set(std::vector<PlanePoint> a, std::vector<PlanePoint> b) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a) {
    auto it = std::find(b.begin(), b.end(), p);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

FieldElement area_2i(const std::vector<PlanePoint>& poly) {
  FieldElement s(poly.at(0).n_root());
  for (std::size_t i = 0; i < poly.size(); ++i) s += cross_times_2i(poly[i], poly[(i + 1) % poly.size()]);
  return s;
}

const HatCell& HatCellSet::by_label(int n) const {
  for (const auto& c : cells)
    if (c.label == n) return c;
  throw OutOfRange("no cell with label " + std::to_string(n));
}

bool all_ok(const std::vector<Check>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const Check& c) { return c.ok; });
}

// ---------------------------------------------------------------------------
// tables

int field_for_polygon(int k) {
  switch (k) {
    case 4: return 4;
    case 3:
    case 6: return 6;
    case 5:
    case 10: return 10;
  }
  throw UnsupportedPolygon("no table for k=" + std::to_string(k));
}

namespace {

void fill_halflines(PolygonTable& P) {
  const int k = static_cast<int>(P.vertices.size());
  P.halflines.clear();
  for (int i = 0; i < k; ++i) {
    const auto& prev = P.vertices[(i - 1 + k) % k];
    const auto& cur = P.vertices[i];
    if (P.tangency == Tangency::right)
      P.halflines.push_back({prev, prev - cur});
    else
      P.halflines.push_back({cur, cur - prev});
  }
}

}  // namespace

PolygonTable build_table(int k, Tangency t) {
  const int n = field_for_polygon(k);
  PolygonTable P;
  P.k = k;
  P.n_root = n;
  P.tangency = t;
  const int step = n / k;
  for (int i = 0; i < k; ++i) P.vertices.push_back(FieldElement::zeta(n, static_cast<long>(i) * step));
  P.R = PlaneIsometry(FieldElement::zeta(n, -step), FieldElement(n));
  fill_halflines(P);
  return P;
}

PolygonTable table_from_vertices(std::vector<PlanePoint> ccw, Tangency t) {
  PolygonTable P;
  P.k = static_cast<int>(ccw.size());
  P.n_root = ccw.at(0).n_root();
  P.vertices = std::move(ccw);
  P.tangency = t;
  P.R = PlaneIsometry::identity(P.n_root);
  fill_halflines(P);
  return P;
}

ConvexRegion PolygonTable::cone(int i) const {
  const int kk = static_cast<int>(vertices.size());
  const auto& p = vertices[((i % kk) + kk) % kk];
  const auto& next = vertices[(((i + 1) % kk) + kk) % kk];
  const auto& prev = vertices[(((i - 1) % kk) + kk) % kk];
  Rational s = tangency == Tangency::right ? 1 : -1;
  return ConvexRegion({{p, (next - p) * s}, {p, (prev - p) * s}});
}

int tangent_vertex(const PolygonTable& P, const PlanePoint& M) {
  const int kk = static_cast<int>(P.vertices.size());
  const int want = P.tangency == Tangency::right ? 1 : -1;
  for (int j = 0; j < kk; ++j) {
    const auto& p = P.vertices[j];
    PlanePoint d = M - p;
    if (cross_sign(P.vertices[(j + 1) % kk] - p, d) != want) continue;
    if (cross_sign(P.vertices[(j - 1 + kk) % kk] - p, d) != want) continue;
    return j;
  }
  bool inside = true;
  for (int i = 0; i < kk && inside; ++i)
    inside = cross_sign(P.vertices[(i + 1) % kk] - P.vertices[i], M - P.vertices[i]) >= 0;
  if (inside) throw InsidePolygon("inside polygon: " + M.str());
  throw OnSingularLine("point on an extended side: " + M.str());
}

PlanePoint step_T(const PolygonTable& P, const PlanePoint& M) {
  const auto& a = P.vertices[tangent_vertex(P, M)];
  return a + a - M;
}

namespace {

HatStep hat_unchecked(const PolygonTable& P, const PlanePoint& x) {
  PlanePoint y = P.vertices[0] + P.vertices[0] - x;
  int n = tangent_vertex(P, y);
  return {power(P.R, n).apply(y), n};
}

}  // namespace

HatStep step_hatT(const PolygonTable& P, const PlanePoint& x) {
  if (tangent_vertex(P, x) != 0) throw NotInSector("point not in V0: " + x.str());
  return hat_unchecked(P, x);
}

std::string OrbitCoding::word() const {
  std::string s;
  for (int l : letters) s += static_cast<char>('0' + l);
  return s;
}

OrbitCoding code_orbit(const PolygonTable& P, const PlanePoint& M, std::size_t length, Flavor f) {
  OrbitCoding oc{M, {}, f};
  PlanePoint x = M;
  if (f == Flavor::eta && tangent_vertex(P, M) != 0) throw NotInSector("eta coding needs a start in V0");
  for (std::size_t i = 0; i < length; ++i) {
    try {
      if (f == Flavor::rho) {
        int c = tangent_vertex(P, x);
        oc.letters.push_back(c);
        x = P.vertices[c] + P.vertices[c] - x;
      } else {
        auto h = hat_unchecked(P, x);
        oc.letters.push_back(h.label);
        x = h.point;
      }
    } catch (const OnSingularLine& e) {
      throw SingularAtStep(i, e.what());
    }
  }
  return oc;
}

std::optional<std::size_t> orbit_period(const PolygonTable& P, const PlanePoint& M, Flavor f,
                                        std::size_t bound) {
  PlanePoint x = M;
  for (std::size_t i = 1; i <= bound; ++i) {
    try {
      x = f == Flavor::rho ? step_T(P, x) : hat_unchecked(P, x).point;
    } catch (const OnSingularLine& e) {
      throw SingularAtStep(i - 1, e.what());
    }
    if (x == M) return i;
  }
  return std::nullopt;
}

ReturnResult first_return(const PolygonTable& P, const ConvexRegion& region, const PlanePoint& x,
                          std::size_t bound) {
  if (!region.contains(x)) throw std::invalid_argument("first_return: start outside region");
  ReturnResult r{x, {}};
  for (std::size_t i = 0; i < bound; ++i) {
    HatStep h;
    try {
      h = hat_unchecked(P, r.point);
    } catch (const OnSingularLine& e) {
      throw SingularAtStep(i, e.what());
    }
    r.point = h.point;
    r.word.push_back(h.label);
    if (region.contains(r.point)) return r;
  }
  throw NoReturnWithinBound("no return within " + std::to_string(bound) + " steps");
}

PlaneIsometry hat_piece(const PolygonTable& P, int label) {
  return compose(power(P.R, label), PlaneIsometry::central_symmetry(P.vertices[0]));
}

HatCellSet hat_cells(const PolygonTable& P) {
  HatCellSet out;
  const ConvexRegion v0 = P.cone(0);
  const PlaneIsometry s = PlaneIsometry::central_symmetry(P.vertices[0]);
  for (int n = 1; n <= P.j(); ++n) {
    ConvexRegion cell = v0.intersect(P.cone(n).image(s));
    out.cells.push_back({cell, n, hat_piece(P, n)});
  }
  return out;
}

PlaneIsometry word_map(const HatCellSet& cells, const std::string& w) {
  PlaneIsometry m = PlaneIsometry::identity(cells.cells.at(0).map.n_root());
  for (char c : w) m = compose(cells.by_label(c - '0').map, m);
  return m;
}

std::vector<OrbitRecord> trace_orbit(const PolygonTable& P, const PlanePoint& M, std::size_t steps) {
  std::vector<OrbitRecord> out;
  PlanePoint x = M;
  for (std::size_t i = 0; i < steps; ++i) {
    int c;
    try {
      c = tangent_vertex(P, x);
    } catch (const OnSingularLine& e) {
      throw SingularAtStep(i, e.what());
    }
    out.push_back({i, x, c});
    x = P.vertices[c] + P.vertices[c] - x;
  }
  return out;
}

std::string format_orbit(const std::vector<OrbitRecord>& recs) {
  std::ostringstream os;
  os << std::setprecision(12);
  for (const auto& r : recs) {
    auto z = to_complex(r.point);
    os << r.step << '\t' << r.cone << '\t' << z.real() << '\t' << z.imag() << '\t' << r.point.str() << '\n';
  }
  return os.str();
}

}  // namespace obill
