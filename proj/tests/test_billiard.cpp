#include <cmath>
#include <complex>
#include <random>
#include <set>

#include "doctest.h"
#include "obill/billiard.hpp"

using namespace obill;
using cd = std::complex<double>;

namespace {

// plain floating point outer billiard on the same polygon
int float_tangent(const std::vector<cd>& v, cd m) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    bool ok = true;
    for (std::size_t i = 0; i < v.size() && ok; ++i) {
      if (i == j) continue;
      double c = std::imag(std::conj(v[j] - m) * (v[i] - m));
      ok = c > 1e-9;
    }
    if (ok) return static_cast<int>(j);
  }
  return -1;
}

std::vector<PlanePoint> sample(const ConvexRegion& r, int n, int count, std::mt19937& rng, int spread = 5) {
  std::uniform_int_distribution<int> d(-spread * 97, spread * 97);
  std::vector<PlanePoint> out;
  for (int tries = 0; tries < 200000 && static_cast<int>(out.size()) < count; ++tries) {
    std::vector<Rational> c;
    for (int i = 0; i < field_degree(n); ++i) c.emplace_back(d(rng), 97);
    PlanePoint p = make_element(n, c);
    if (r.contains(p)) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("rho coding agrees with a floating point simulation") {
  std::mt19937 rng(3);
  for (int k : {3, 4, 5, 6, 10}) {
    PolygonTable P = build_table(k);
    std::vector<cd> fv;
    for (auto& v : P.vertices) fv.push_back(to_complex(v));
    int n = P.n_root;
    std::uniform_int_distribution<int> d(-400, 400);
    int compared = 0;
    for (int t = 0; t < 20; ++t) {
      std::vector<Rational> c;
      for (int i = 0; i < field_degree(n); ++i) c.emplace_back(d(rng), 61);
      PlanePoint M = make_element(n, c);
      OrbitCoding oc;
      try {
        oc = code_orbit(P, M, 40, Flavor::rho);
      } catch (const InsidePolygon&) {
        continue;
      } catch (const SingularAtStep&) {
        continue;
      }
      cd m = to_complex(M);
      bool same = true;
      for (int l : oc.letters) {
        int f = float_tangent(fv, m);
        if (f < 0) break;  // float too close to a line; the exact answer stands
        same = same && f == l;
        m = 2.0 * fv[f] - m;
      }
      CHECK(same);
      ++compared;
    }
    CHECK(compared > 10);
  }
}

TEST_CASE("table layout") {
  PolygonTable sq = build_table(4);
  CHECK(sq.vertices.size() == 4);
  CHECK(sq.j() == 2);
  CHECK(sq.vertices[1] == FieldElement::zeta(4));
  CHECK(sq.halflines[1].origin == sq.vertices[0]);
  CHECK(sq.halflines[1].direction == sq.vertices[0] - sq.vertices[1]);
  CHECK(build_table(3).n_root == 6);
  CHECK(build_table(5).j() == 3);
  CHECK(build_table(10).j() == 5);
  CHECK_THROWS_AS(build_table(7), UnsupportedPolygon);
  CHECK_THROWS_AS(build_table(8), UnsupportedPolygon);
}

TEST_CASE("tangent vertex errors") {
  PolygonTable sq = build_table(4);
  CHECK_THROWS_AS(tangent_vertex(sq, FieldElement(4)), InsidePolygon);
  // on the extension of the side from 1 to i
  PlanePoint on = FieldElement::rational(4, 2) - FieldElement::zeta(4);
  CHECK_THROWS_AS(tangent_vertex(sq, on), OnSingularLine);
  try {
    PlanePoint m = FieldElement::rational(4, 3) + FieldElement::zeta(4) * Rational(-2);
    code_orbit(sq, m, 10, Flavor::rho);
    CHECK(false);
  } catch (const SingularAtStep& e) {
    CHECK(e.step == 0);
  }
  CHECK_THROWS_AS(step_hatT(sq, FieldElement::rational(4, 3) * FieldElement::zeta(4)), NotInSector);
}

TEST_CASE("V0 opens downward and T is a point reflection") {
  PolygonTable sq = build_table(4);
  PlanePoint M = FieldElement::rational(4, Rational(3, 2)) - FieldElement::zeta(4) * Rational(5);
  CHECK(tangent_vertex(sq, M) == 0);
  CHECK(step_T(sq, M) == FieldElement::rational(4, 2) - M);
  CHECK(sq.cone(0).contains(M));
}

TEST_CASE("hat step is rotation of the reflected point") {
  std::mt19937 rng(5);
  for (int k : {3, 4, 5, 6, 10}) {
    PolygonTable P = build_table(k);
    HatCellSet cs = hat_cells(P);
    CHECK(static_cast<int>(cs.cells.size()) == P.j());
    for (const auto& cell : cs.cells) {
      for (const auto& x : sample(cell.region, P.n_root, 5, rng)) {
        HatStep h = step_hatT(P, x);
        CHECK(h.label == cell.label);
        CHECK(h.point == cell.map.apply(x));
        CHECK(P.cone(0).contains(h.point));
      }
    }
  }
}

TEST_CASE("hat cells") {
  PolygonTable sq = build_table(4);
  HatCellSet c4 = hat_cells(sq);
  FieldElement one = FieldElement::rational(4, 1), i = FieldElement::zeta(4);
  CHECK(same_point_set(c4.by_label(1).region.vertices(), {one, one + one - i}));
  CHECK(same_point_set(c4.by_label(2).region.vertices(), {one + one - i}));

  HatCellSet c6 = hat_cells(build_table(6));
  CHECK(c6.by_label(1).region.bounded());
  CHECK(c6.by_label(1).region.vertices().size() == 3);
  CHECK(c6.by_label(2).region.bounded());
  CHECK(c6.by_label(2).region.vertices().size() == 3);
  FieldElement s3i = FieldElement::zeta(6) * Rational(2) - FieldElement::rational(6, 1);  // sqrt(3) i
  CHECK(same_point_set(c6.by_label(3).region.vertices(), {FieldElement::rational(6, 2) - s3i}));

  HatCellSet c10 = hat_cells(build_table(10));
  std::vector<std::size_t> counts;
  for (const auto& c : c10.cells) counts.push_back(c.region.vertices().size());
  CHECK(counts == std::vector<std::size_t>{3, 4, 4, 3, 1});
  CHECK(c10.by_label(5).map.is_translation());
}

TEST_CASE("first return words") {
  std::mt19937 rng(9);
  auto words = [&](int k, int cell, int samples) {
    PolygonTable P = build_table(k);
    ConvexRegion U = hat_cells(P).by_label(cell).region;
    std::set<std::string> ws;
    for (const auto& x : sample(U, P.n_root, samples, rng, 8)) {
      try {
        auto r = first_return(P, U, x);
        std::string s;
        for (int l : r.word) s += static_cast<char>('0' + l);
        ws.insert(s);
      } catch (const SingularAtStep&) {
      }
    }
    return ws;
  };
  CHECK(words(4, 2, 60) == std::set<std::string>{"2", "21"});
  CHECK(words(6, 3, 60) == std::set<std::string>{"3", "32", "322"});
  CHECK(words(3, 2, 200) == std::set<std::string>{"21", "211", "2111"});
}

TEST_CASE("periods and traces") {
  PolygonTable sq = build_table(4);
  PlanePoint M = FieldElement::rational(4, Rational(3, 2)) - FieldElement::zeta(4) * Rational(1, 3);
  auto p = orbit_period(sq, M, Flavor::rho, 1000);
  REQUIRE(p.has_value());
  auto tr = trace_orbit(sq, M, *p + 1);
  CHECK(tr.back().point == M);
  CHECK(format_orbit(tr).find('\n') != std::string::npos);
  PlanePoint x = FieldElement::rational(4, Rational(3, 2)) - FieldElement::zeta(4) * Rational(2, 3);
  CHECK(orbit_period(sq, x, Flavor::eta, 1000).has_value());
}

TEST_CASE("word maps compose left to right in time") {
  PolygonTable P = build_table(5);
  HatCellSet cs = hat_cells(P);
  CHECK(word_map(cs, "32") == compose(cs.by_label(2).map, cs.by_label(3).map));
  CHECK(word_map(cs, "32").is_translation());
}

TEST_CASE("pentagon cells and named points") {
  PentagonCells pc = pentagon_cells();
  for (const auto& c : pc.checks) {
    INFO(c.name);
    CHECK(c.ok);
  }
  PentagonFrame fr = pentagon_frame();
  CHECK(fr.to_sector.apply(FieldElement::rational(10, 1)).is_zero());
  CHECK(fr.to_sector.apply(FieldElement::zeta(10, -2)) == FieldElement::rational(10, 1));
}

TEST_CASE("left tangency breaks the pentagon structure") {
  PentagonCells pc = pentagon_cells(Tangency::left);
  CHECK_FALSE(all_ok(pc.checks));
}

TEST_CASE("renormalisation of the pentagon to Tabachnikov's system") {
  TabachnikovSystem ts = tabachnikov_system();
  for (const auto& c : ts.checks) {
    INFO(c.name);
    CHECK(c.ok);
  }
  CHECK_THROWS_AS(tabachnikov_word(ts, "ac"), UnknownLetter);
}

TEST_CASE("decagon inside the pentagon") {
  DecagonSystem ds = decagon_system();
  for (const auto& c : ds.checks) {
    INFO(c.name);
    CHECK(c.ok);
  }
}

TEST_CASE("tangent vertex on the axis-parallel square") {
  FieldElement one = FieldElement::rational(4, 1), i = FieldElement::zeta(4);
  PolygonTable P = table_from_vertices({one + i, i - one, -one - i, one - i});
  std::vector<cd> fv;
  for (auto& v : P.vertices) fv.push_back(to_complex(v));
  PlanePoint M = one * Rational(3);
  int a = tangent_vertex(P, M);
  CHECK(a == float_tangent(fv, to_complex(M)));
  CHECK((P.vertices[a] == one - i || P.vertices[a] == one + i));
  PlanePoint near = (one + i) * Rational(2) + i * Rational(1, 1000) * Rational(-7) + one * Rational(1, 999);
  int b = tangent_vertex(P, near);
  CHECK(b == float_tangent(fv, to_complex(near)));
  CHECK((b == 1 || b == 3));
  CHECK_THROWS_AS(tangent_vertex(P, one * Rational(5) + i), OnSingularLine);
}

TEST_CASE("R commutes with T and the coding difference law") {
  std::mt19937 rng(21);
  for (int k : {3, 4, 5, 6, 10}) {
    PolygonTable P = build_table(k);
    int checked = 0;
    for (const auto& x : sample(P.cone(0), P.n_root, 12, rng, 9)) {
      OrbitCoding rho, eta;
      try {
        rho = code_orbit(P, x, 31, Flavor::rho);
        eta = code_orbit(P, x, 30, Flavor::eta);
      } catch (const SingularAtStep&) {
        continue;
      }
      for (int n = 0; n < 30; ++n) CHECK(eta.letters[n] == ((rho.letters[n + 1] - rho.letters[n]) % k + k) % k);
      PlanePoint y = x;
      for (int n = 0; n < 30; ++n) {
        CHECK(step_T(P, P.R.apply(y)) == P.R.apply(step_T(P, y)));
        y = step_T(P, y);
      }
      ++checked;
    }
    CHECK(checked > 3);
  }
}

TEST_CASE("square and hexagon induction is conjugate to the whole map") {
  HatCellSet c4 = hat_cells(build_table(4));
  PlanePoint apex4 = c4.by_label(2).region.vertices().at(0);
  PlaneIsometry t = PlaneIsometry::translation(apex4 - FieldElement::rational(4, 1));
  CHECK(compose(word_map(c4, "2"), t) == compose(t, c4.by_label(2).map));
  CHECK(compose(word_map(c4, "21"), t) == compose(t, c4.by_label(1).map));

  HatCellSet c6 = hat_cells(build_table(6));
  PlanePoint apex6 = c6.by_label(3).region.vertices().at(0);
  PlaneIsometry t6 = PlaneIsometry::translation(apex6 - FieldElement::rational(6, 1));
  const char* w6[] = {"322", "32", "3"};
  for (int n = 1; n <= 3; ++n) CHECK(compose(word_map(c6, w6[n - 1]), t6) == compose(t6, c6.by_label(n).map));
}

TEST_CASE("triangle induction on cell 2 is similar to the hexagon map") {
  HatCellSet c6 = hat_cells(build_table(6));
  HatCellSet c3 = hat_cells(build_table(3));
  const char* w3[] = {"2111", "211", "21"};
  FieldElement lam = c6.by_label(3).map.offset() / word_map(c3, "21").offset();
  PlanePoint mu = rotation_center(c6.by_label(1).map) - lam * rotation_center(word_map(c3, "2111"));
  AffineMap s{lam, mu};
  for (int n = 1; n <= 3; ++n)
    CHECK(compose(AffineMap::from(c6.by_label(n).map), s) == compose(s, AffineMap::from(word_map(c3, w3[n - 1]))));
  // the hexagon has unit circumradius, the triangle's side is sqrt 3 times longer
  CHECK(lam * conjugate(lam) == FieldElement::rational(6, Rational(1, 3)));
}

TEST_CASE("pentagon periodic islands") {
  PentagonCells pc = pentagon_cells();
  PentagonFrame fr = pentagon_frame();
  PolygonTable P = build_table(5);
  auto code = [&](const PlanePoint& s, std::size_t n) {
    return code_orbit(P, fr.from_sector.apply(s), n, Flavor::eta).word();
  };
  CHECK(code(rotation_center(pc.cells.by_label(1).map), 20) == std::string(20, '1'));
  CHECK(code(rotation_center(pc.cells.by_label(2).map), 20) == std::string(20, '2'));
  CHECK(code(rotation_center(word_map(pc.cells, "2223")), 16) == "2223222322232223");
  // U3 is a rotation by -pi/5, not a translation
  CHECK(pc.cells.by_label(3).map.multiplier() == FieldElement::zeta(10, -1));
}

TEST_CASE("pentagon invariant sets") {
  PentagonCells pc = pentagon_cells();
  PentagonFrame fr = pentagon_frame();
  PolygonTable P = build_table(5);
  const auto& nm = pc.named;
  auto tri = [&](char a, char b, char c) {
    std::vector<PlanePoint> v{nm.at(a), nm.at(b), nm.at(c)};
    if (sign_im(area_2i(v)) < 0) std::swap(v[1], v[2]);
    return ConvexRegion::polygon(v);
  };
  ConvexRegion acf = tri('A', 'C', 'F'), hfe = tri('H', 'F', 'E'), bhc = tri('B', 'H', 'C');
  ConvexRegion U2 = pc.cells.by_label(2).region, U3 = pc.cells.by_label(3).region;
  std::mt19937 rng(33);

  int orbits = 0;
  for (const auto& z0 : sample(acf, 10, 3, rng, 2)) {
    PlanePoint x = fr.from_sector.apply(z0);
    bool stayed = true;
    try {
      for (int n = 0; n < 10000 && stayed; ++n) {
        x = step_hatT(P, x).point;
        PlanePoint z = fr.to_sector.apply(x);
        stayed = acf.contains_closed(z) || hfe.contains_closed(z);
      }
    } catch (const OnSingularLine&) {
      continue;
    }
    CHECK(stayed);
    ++orbits;
  }
  CHECK(orbits >= 2);

  auto in_second = [&](const PlanePoint& z) { return (U2.contains(z) && !bhc.contains_closed(z)) || U3.contains(z); };
  orbits = 0;
  for (const auto& z0 : sample(U3, 10, 4, rng, 6)) {
    PlanePoint x = fr.from_sector.apply(z0);
    bool stayed = true;
    try {
      for (int n = 0; n < 300 && stayed; ++n) {
        x = step_hatT(P, x).point;
        stayed = in_second(fr.to_sector.apply(x));
      }
    } catch (const OnSingularLine&) {
      continue;
    }
    CHECK(stayed);
    ++orbits;
  }
  CHECK(orbits >= 2);
}

TEST_CASE("decagon codings expand to pentagon codings") {
  DecagonSystem ds = decagon_system();
  PolygonTable D = build_table(10), P = build_table(5);
  std::mt19937 rng(44);
  int done = 0;
  for (const auto& x : sample(D.cone(0), 10, 10, rng, 6)) {
    try {
      std::string dw = code_orbit(D, x, 12, Flavor::eta).word();
      std::string expanded;
      for (char c : dw) expanded += ds.theta[c - '1'];
      std::string pw = code_orbit(P, ds.s.apply(x), expanded.size(), Flavor::eta).word();
      CHECK(pw == expanded);
      ++done;
    } catch (const SingularAtStep&) {
    }
  }
  CHECK(done >= 5);
}
