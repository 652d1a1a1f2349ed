#ifndef BIRAT_CONE_HPP
#define BIRAT_CONE_HPP

#include <string>
#include <vector>

#include "birat/points.hpp"

namespace birat {

// A polyhedral cone of curve classes: ray generators in some basis of
// Num(S) together with the intersection matrix of that basis.
struct ConeDescription {
  IntMatrix gram;
  std::vector<std::vector<Int>> rays;
  std::vector<std::string> labels;
  bool polyhedral = true;
};

Int pairing(const IntMatrix& gram, const std::vector<Int>& a, const std::vector<Int>& b);

// No ray is a non-negative combination of the others.
bool rays_are_extremal(const ConeDescription& c);

// C is not a non-negative combination of the sample classes that are not
// positive multiples of C.  Requires C^2 < 0.
bool neg_curve_is_extremal(const DivisorClass& c, const std::vector<DivisorClass>& sample);

// Basis (f, e) with f^2 = 0, f.e = 1, e^2 = -n.
ConeDescription hirzebruch_cone(Int n);

struct CollinearCone {
  PointConfig config;          // three points on a line
  ConeDescription cone;        // rays C, E1, E2, E3 in coordinates (d; m1, m2, m3)
  std::vector<DivisorClass> rays;
  Int anticanonical_square = 0;
  bool rays_k_nonpositive = false;  // K.R <= 0 on every ray
  bool c_unique_k_trivial = false;  // C is the only ray with K.C = 0, and C^2 = -2
  Int degree_bound = 0;
  bool no_other_k_trivial = false;  // no solution of 3d = sum m with 0 <= d - sum m <= 1
  bool no_other_minus_one = false;  // none of 3d - sum m = 1 with 0 <= d - sum m <= 1
  bool pencils_decompose = false;   // 3d - sum m = 2 only for d = 1, which is C + E_j + E_k
  bool rays_extremal = false;       // against the sample of curves on the configuration
  bool ok() const;
};

CollinearCone collinear_blowup_cone(Int degree_bound = 60);

// All classes with E^2 = -1, K.E = -1 and non-negative multiplicities (or
// an exceptional class) on n general points, n in 1..8, sorted by degree
// then multiplicities.
std::vector<DivisorClass> enumerate_minus_one_classes(int n);

// Class a f1 + b f2 + c delta on E x E: square 2(ab + ac + bc), degree
// against H = f1 + f2 is a + b + 2c.
Int ee_square(Int a, Int b, Int c);
Int ee_degree(Int a, Int b, Int c);
bool exe_cone_membership(Int a, Int b, Int c);

}  // namespace birat

#endif  // BIRAT_CONE_HPP
