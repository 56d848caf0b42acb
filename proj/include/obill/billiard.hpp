#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "obill/planegeom.hpp"

namespace obill {

// which vertex counts as A+ seen from M; right is the working convention,
// left exists so the convention can be shown to matter
enum class Tangency { right, left };

enum class Flavor { rho, eta };

struct HalfLine {
  PlanePoint origin;
  FieldElement direction;
};

// open half-plane left of the directed line through point along dir
struct HalfPlane {
  PlanePoint point;
  FieldElement dir;
};

class ConvexRegion {
 public:
  ConvexRegion() = default;
  explicit ConvexRegion(std::vector<HalfPlane> hs) : hs_(std::move(hs)) {}
  // vertices listed counterclockwise
  static ConvexRegion polygon(const std::vector<PlanePoint>& ccw);

  const std::vector<HalfPlane>& halfplanes() const { return hs_; }
  bool contains(const PlanePoint& z) const;
  bool contains_closed(const PlanePoint& z) const;
  std::vector<PlanePoint> vertices() const;
  bool bounded() const;
  ConvexRegion intersect(const ConvexRegion& o) const;
  ConvexRegion image(const PlaneIsometry& m) const;
  ConvexRegion image(const AffineMap& m) const;
  std::optional<PlanePoint> interior_point() const;

 private:
  std::optional<FieldElement> recession_direction() const;
  std::vector<HalfPlane> hs_;
};

bool same_point_set(std::vector<PlanePoint> a, std::vector<PlanePoint> b);
// twice the signed area times i, for a polygon given in order
FieldElement area_2i(const std::vector<PlanePoint>& poly);

struct HatCell {
  ConvexRegion region;
  int label;
  PlaneIsometry map;
};

struct HatCellSet {
  std::vector<HatCell> cells;
  const HatCell& by_label(int n) const;
};

class PolygonTable {
 public:
  int k = 0;
  int n_root = 0;
  std::vector<PlanePoint> vertices;
  // d_i sits between V_{i-1} and V_i
  std::vector<HalfLine> halflines;
  PlaneIsometry R = PlaneIsometry::identity(4);
  Tangency tangency = Tangency::right;

  int j() const { return (k + 1) / 2; }
  ConvexRegion cone(int i) const;
};

int field_for_polygon(int k);
PolygonTable build_table(int k, Tangency t = Tangency::right);
// arbitrary convex polygon, counterclockwise; R is left as the identity
PolygonTable table_from_vertices(std::vector<PlanePoint> ccw, Tangency t = Tangency::right);

int tangent_vertex(const PolygonTable& P, const PlanePoint& M);
PlanePoint step_T(const PolygonTable& P, const PlanePoint& M);

struct HatStep {
  PlanePoint point;
  int label;
};
HatStep step_hatT(const PolygonTable& P, const PlanePoint& x);

struct OrbitCoding {
  PlanePoint start;
  std::vector<int> letters;
  Flavor flavor;
  std::string word() const;
};
OrbitCoding code_orbit(const PolygonTable& P, const PlanePoint& M, std::size_t length, Flavor f);

// smallest p with T^p M = M (rho) or hatT^p M = M (eta)
std::optional<std::size_t> orbit_period(const PolygonTable& P, const PlanePoint& M, Flavor f,
                                        std::size_t bound);

struct ReturnResult {
  PlanePoint point;
  std::vector<int> word;
};
ReturnResult first_return(const PolygonTable& P, const ConvexRegion& region, const PlanePoint& x,
                          std::size_t bound = 10000);

PlaneIsometry hat_piece(const PolygonTable& P, int label);
HatCellSet hat_cells(const PolygonTable& P);
// F(v) = F(v_{n-1}) o ... o F(v_0); letters are digits
PlaneIsometry word_map(const HatCellSet& cells, const std::string& w);

struct OrbitRecord {
  std::size_t step;
  PlanePoint point;
  int cone;
};
std::vector<OrbitRecord> trace_orbit(const PolygonTable& P, const PlanePoint& M, std::size_t steps);
// step, cone, re, im, exact coefficients; one record per line
std::string format_orbit(const std::vector<OrbitRecord>& recs);

// ---- pentagon, Tabachnikov system, decagon ----

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};
bool all_ok(const std::vector<Check>& cs);

// table coordinates -> coordinates with A = 0, F = 1 and the sector opening
// between arguments 0 and 2pi/5
struct PentagonFrame {
  AffineMap to_sector;
  AffineMap from_sector;
};
PentagonFrame pentagon_frame();

struct PentagonCells {
  HatCellSet cells;  // sector frame
  std::map<char, PlanePoint> named;
  std::vector<Check> checks;
};
PentagonCells pentagon_cells(Tangency t = Tangency::right);

struct TabachnikovSystem {
  ConvexRegion afc, hfe;
  PlaneIsometry a, b;
  AntiAffineMap D;
  std::vector<Check> checks;
};
TabachnikovSystem tabachnikov_system();

PlaneIsometry tabachnikov_word(const TabachnikovSystem& ts, const std::string& w);

struct DecagonSystem {
  HatCellSet cells;      // decagon table frame
  HatCellSet penta;      // pentagon table frame
  ConvexRegion u3;       // pentagon table frame
  AffineMap s;           // decagon frame -> pentagon frame
  std::array<std::string, 5> theta;
  std::vector<Check> checks;
};
DecagonSystem decagon_system();

}  // namespace obill
