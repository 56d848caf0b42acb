#include <algorithm>
#include <functional>

#include "obill/billiard.hpp"

namespace obill {

namespace {

constexpr int N = 10;

FieldElement z10(long p) { return FieldElement::zeta(N, p); }
FieldElement q10(long a, long b = 1) { return FieldElement::rational(N, Rational(a, b)); }
FieldElement phi() { return z10(1) + z10(-1); }

// reorders a triangle to counterclockwise; longer polygons must already be cyclic
ConvexRegion ccw_polygon(std::vector<PlanePoint> v) {
  if (sign_im(area_2i(v)) < 0) std::reverse(v.begin(), v.end());
  return ConvexRegion::polygon(v);
}

void run(std::vector<Check>& out, const std::string& name, const std::function<bool()>& f,
         const std::string& detail = "") {
  try {
    out.push_back({name, f(), detail});
  } catch (const std::exception& e) {
    out.push_back({name, false, std::string("threw: ") + e.what()});
  }
}

bool has_interior(const ConvexRegion& r) { return r.interior_point().has_value(); }

bool region_inside(const std::vector<PlanePoint>& verts, const ConvexRegion& outer) {
  for (const auto& v : verts)
    if (!outer.contains_closed(v)) return false;
  return true;
}

}  // namespace

PentagonFrame pentagon_frame() {
  FieldElement a = (z10(-2) - q10(1)).inverse();
  AffineMap to{a, -a};
  return {to, to.inverse()};
}

PentagonCells pentagon_cells(Tangency t) {
  PentagonCells pc;
  const PolygonTable P = build_table(5, t);
  const PentagonFrame fr = pentagon_frame();
  const HatCellSet raw = hat_cells(P);
  for (const auto& c : raw.cells)
    pc.cells.cells.push_back({c.region.image(fr.to_sector), c.label, conjugate_by(fr.to_sector, c.map)});

  const FieldElement z = z10(1), f = phi(), one = q10(1);
  auto& nm = pc.named;
  nm['A'] = FieldElement(N);
  nm['F'] = one;
  nm['E'] = f;
  nm['B'] = z * z;
  nm['H'] = z;
  nm['C'] = f * z * z;
  nm['I'] = (one + f) * z * z;
  nm['G'] = one + f;
  auto pts = [&](const std::string& s) {
    std::vector<PlanePoint> v;
    for (char c : s) v.push_back(nm.at(c));
    return v;
  };

  auto& ck = pc.checks;
  const HatCellSet& cs = pc.cells;
  auto F = [&](int n) { return cs.by_label(n).map; };
  auto U = [&](int n) { return cs.by_label(n).region; };

  run(ck, "labels are 1,2,3", [&] {
    return cs.cells.size() == 3 && cs.cells[0].label == 1 && cs.cells[1].label == 2 && cs.cells[2].label == 3;
  });
  run(ck, "F(1) = z3 z + 1", [&] { return F(1) == PlaneIsometry(z10(3), one); });
  run(ck, "F(2) rotation about (1+phi)z, multiplier z",
      [&] { return F(2) == PlaneIsometry::rotation((one + f) * z, z); });
  run(ck, "F(3) = z^-1 w + (phi+1)(1-z)", [&] { return F(3) == PlaneIsometry(z10(-1), (f + one) * (one - z)); });
  run(ck, "U1 = AEB", [&] { return U(1).bounded() && same_point_set(U(1).vertices(), pts("AEB")); });
  run(ck, "U2 vertices IBE", [&] { return !U(2).bounded() && same_point_set(U(2).vertices(), pts("IBE")); });
  run(ck, "U3 cone at I", [&] { return !U(3).bounded() && same_point_set(U(3).vertices(), pts("I")); });
  run(ck, "F(1)U1 = ACF", [&] { return same_point_set(U(1).image(F(1)).vertices(), pts("ACF")); });
  run(ck, "F(2)U2 vertices CFG", [&] { return same_point_set(U(2).image(F(2)).vertices(), pts("CFG")); });
  run(ck, "F(3)U3 cone at G", [&] { return same_point_set(U(3).image(F(3)).vertices(), pts("G")); });
  run(ck, "F(2): C->H H->E I->C E->G B->F", [&] {
    const std::string from = "CHIEB", to = "HECGF";
    for (std::size_t i = 0; i < from.size(); ++i)
      if (F(2).apply(nm.at(from[i])) != nm.at(to[i])) return false;
    return true;
  });
  run(ck, "BHC inside U2", [&] { return region_inside(pts("BHC"), U(2)); });

  // Z = AEB u BHC = ACF u HFE = quadrilateral AEHC
  run(ck, "Z areas agree", [&] {
    FieldElement quad = area_2i(pts("AEHC"));
    auto tri = [&](const std::string& s) {
      FieldElement a = area_2i(pts(s));
      return sign_im(a) < 0 ? -a : a;
    };
    if (sign_im(quad) < 0) quad = -quad;
    return tri("AEB") + tri("BHC") == quad && tri("ACF") + tri("HFE") == quad;
  });
  // AEHC is not convex: H sits inside the triangle AEC, the notch EHC is outside Z
  run(ck, "pieces of Z inside AEC, outside EHC", [&] {
    ConvexRegion hull = ccw_polygon(pts("AEC")), notch = ccw_polygon(pts("EHC"));
    for (const char* s : {"AEB", "BHC", "ACF", "HFE"}) {
      if (!region_inside(pts(s), hull)) return false;
      if (has_interior(ccw_polygon(pts(s)).intersect(notch))) return false;
    }
    return true;
  });
  run(ck, "ACF and U3 share no interior", [&] { return !has_interior(ccw_polygon(pts("ACF")).intersect(U(3))); });
  run(ck, "AEB and BHC share no interior",
      [&] { return !has_interior(ccw_polygon(pts("AEB")).intersect(ccw_polygon(pts("BHC")))); });
  run(ck, "ACF and HFE share no interior",
      [&] { return !has_interior(ccw_polygon(pts("ACF")).intersect(ccw_polygon(pts("HFE")))); });

  // Z is invariant and the restriction is Tabachnikov's G^-1
  const FieldElement Z1 = z / f, Z2 = (one + f) * z;
  run(ck, "F(1)^-1 is rotation about Z1 by -3pi/5",
      [&] { return F(1).inverse() == PlaneIsometry::rotation(Z1, z10(-3)); });
  run(ck, "F(2)^-1 is rotation about Z2 by -pi/5",
      [&] { return F(2).inverse() == PlaneIsometry::rotation(Z2, z10(-1)); });
  run(ck, "F(3) rotation center -(1+phi)z", [&] { return rotation_center(F(3)) == -((one + f) * z); });

  const PlaneIsometry tr = PlaneIsometry::translation(q10(2) * (one + f));
  run(ck, "F(223) t = t F(2)", [&] { return compose(word_map(cs, "223"), tr) == compose(tr, F(2)); });
  run(ck, "F(2223223) t = t F(1)", [&] { return compose(word_map(cs, "2223223"), tr) == compose(tr, F(1)); });
  run(ck, "F(223) center (1+phi)(2+z)",
      [&] { return rotation_center(word_map(cs, "223")) == (one + f) * (q10(2) + z); });
  return pc;
}

TabachnikovSystem tabachnikov_system() {
  PentagonCells pc = pentagon_cells();
  const auto& nm = pc.named;
  auto pts = [&](const std::string& s) {
    std::vector<PlanePoint> v;
    for (char c : s) v.push_back(nm.at(c));
    return v;
  };
  const PlaneIsometry a = pc.cells.by_label(1).map.inverse();
  const PlaneIsometry b = pc.cells.by_label(2).map.inverse();
  const PlanePoint O1 = rotation_center(a), O2 = rotation_center(b);

  // contraction by |O1 - A| / |O2 - A| composed with the reflection in the line O1 O2
  const PlanePoint A = nm.at('A');
  const FieldElement u = O2 - O1;
  const FieldElement ratio = (O1 - A) / (O2 - A);
  FieldElement c = ratio * u / conjugate(u);
  AntiAffineMap D{c, A - c * conjugate(A)};

  TabachnikovSystem ts{ccw_polygon(pts("ACF")), ccw_polygon(pts("HFE")), a, b, D, {}};
  auto& ck = ts.checks;
  const FieldElement z = z10(1), f = phi();
  run(ck, "A on line O1 O2", [&] { return cross_sign(O2 - O1, A - O1) == 0; });
  run(ck, "ratio real and in (0,1)", [&] {
    return is_real(ratio) && sign_real(ratio) > 0 && sign_real(ratio - q10(1)) < 0;
  });
  run(ck, "D = z^2 / phi^3 conj", [&] { return D == AntiAffineMap{z * z / (f * f * f), FieldElement(N)}; });
  run(ck, "D(O2) = O1", [&] { return D.apply(O2) == O1; });
  run(ck, "Da = aababaa D", [&] { return compose(D, a) == compose(tabachnikov_word(ts, "aababaa"), D); });
  run(ck, "Db = aaa D", [&] { return compose(D, b) == compose(tabachnikov_word(ts, "aaa"), D); });
  run(ck, "D(AFC) inside AFC", [&] {
    for (const auto& p : pts("ACF"))
      if (!ts.afc.contains_closed(D.apply(p))) return false;
    return true;
  });
  for (const auto& c2 : pc.checks) ck.push_back(c2);
  return ts;
}

// leftmost letter is applied last
PlaneIsometry tabachnikov_word(const TabachnikovSystem& ts, const std::string& w) {
  PlaneIsometry m = PlaneIsometry::identity(N);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it == 'a')
      m = compose(ts.a, m);
    else if (*it == 'b')
      m = compose(ts.b, m);
    else
      throw UnknownLetter(std::string("tabachnikov letter ") + *it);
  }
  return m;
}

DecagonSystem decagon_system() {
  DecagonSystem ds;
  const PolygonTable deca = build_table(10);
  const PolygonTable penta = build_table(5);
  ds.cells = hat_cells(deca);
  ds.penta = hat_cells(penta);
  ds.u3 = ds.penta.by_label(3).region;
  ds.theta = {"322222", "32222", "3222", "322", "32"};

  const PlaneIsometry t32 = word_map(ds.penta, "32");
  const PlaneIsometry t5 = ds.cells.by_label(5).map;
  auto& ck = ds.checks;
  run(ck, "F(32) and decagon F(5) are translations", [&] { return t32.is_translation() && t5.is_translation(); });

  const FieldElement lambda = t32.offset() / t5.offset();
  const PlanePoint I = ds.u3.vertices().at(0);
  ds.s = {lambda, I - lambda};

  run(ck, "s(P0) is the apex of U3", [&] { return ds.s.apply(deca.vertices[0]) == I; });
  run(ck, "s(V0) = U3", [&] {
    ConvexRegion img = deca.cone(0).image(ds.s);
    auto p = img.interior_point(), q = ds.u3.interior_point();
    return same_point_set(img.vertices(), ds.u3.vertices()) && p && q && ds.u3.contains(*p) && img.contains(*q) &&
           !img.bounded();
  });
  for (int n = 1; n <= 5; ++n) {
    const std::string w = ds.theta[n - 1];
    run(ck, "F(" + w + ") s = s Fdeca(" + std::to_string(n) + ")", [&] {
      AffineMap lhs = compose(AffineMap::from(word_map(ds.penta, w)), ds.s);
      AffineMap rhs = compose(ds.s, AffineMap::from(ds.cells.by_label(n).map));
      return lhs == rhs;
    });
    run(ck, "decagon multiplier " + std::to_string(n),
        [&] { return ds.cells.by_label(n).map.multiplier() == z10(5 - n); });
  }
  return ds;
}

}  // namespace obill
