#pragma once

#include <string>
#include <vector>

#include "obill/billiard.hpp"

namespace obill {

struct SuiteCheck {
  std::string group;
  std::string name;
  bool ok = false;
  // a printed claim known not to reproduce; reported, but verify does not fail on it
  bool erratum = false;
  std::string detail;
};

struct SuiteOptions {
  Tangency tangency = Tangency::right;
  Rational eps = Rational(1, 100);
  unsigned seed = 1;
};

// square hexagon triangle cassaigne pentagon pentagon-language families beta coding induction abelian,
// in the order of the acceptance criteria
const std::vector<std::string>& suite_groups();
std::vector<SuiteCheck> run_group(const std::string& group, const SuiteOptions& opt = {});

// random exact points of the region, coefficients in (1/97) Z
std::vector<PlanePoint> sample_points(const ConvexRegion& r, int n_root, int count, unsigned seed, int spread);

}  // namespace obill
