#ifndef BIRAT_CREMONA_HPP
#define BIRAT_CREMONA_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "birat/points.hpp"

namespace birat {

enum class QuadKind { TypeI, TypeII, TypeIII };

const char* to_string(QuadKind k);

// A quadratic map given by its three base points.  The base is stored in
// canonical order: for TypeII base[1] is infinitely near base[0]; for
// TypeIII base[2] > base[1] > base[0].
struct QuadraticMap {
  std::array<int, 3> base{};
  QuadKind kind = QuadKind::TypeI;
  friend bool operator==(const QuadraticMap&, const QuadraticMap&) = default;
};

// Validates the triple against the configuration and orders it.
QuadraticMap make_quadratic(const PointConfig& config, std::array<int, 3> ids);

using Triple = std::array<std::size_t, 3>;

// Action on coordinates (d, m_1..m_n) of the quadratic map based at the
// points with the given indices.
IntMatrix quadratic_action(std::size_t n, Triple idx);
DivisorClass quadratic_transform(const DivisorClass& c, Triple idx);
DivisorClass quadratic_transform(const DivisorClass& c, const PointConfig& config,
                                 const QuadraticMap& q);

// The target side of a quadratic map: the base slots now hold the points
// the three contracted curves go to (keeping their ids), every other point
// keeps its id, and proximity and collinearity are recomputed from the
// recorded curves.  Points may be reordered to keep the configuration
// topologically sorted; `action` includes that reordering.
struct QuadraticImage {
  PointConfig config;
  IntMatrix action;
};

QuadraticImage apply_quadratic(const PointConfig& config, const QuadraticMap& q);

struct HomaloidalNet {
  DivisorClass cls;
  PointConfig config;
};

struct HomaloidalVerdict {
  bool ok = false;
  std::string reason;  // first failed condition, empty when ok
};

HomaloidalVerdict is_homaloidal(const DivisorClass& c, const PointConfig& config);

// L(d; d-1, 1^(2d-2)) with the double point first.
HomaloidalNet de_jonquieres(Int d, const PointConfig& config);

struct ReductionStep {
  Triple base{};
  DivisorClass result;
};

// One degree-lowering quadratic map when the degree-lowering criterion on
// (nu, g, m_1 >= m_2 >= m_3) applies.
std::optional<ReductionStep> degree_reduction_step(const DivisorClass& c);

struct ExceptionalReduction {
  std::size_t n_points = 0;  // lattice size used; larger than the input when padding was needed
  std::vector<Triple> steps;
  DivisorClass result;       // an exceptional class (0; 0..-1..0)
};

ExceptionalReduction reduce_to_exceptional(const DivisorClass& e);

struct OrbitVerdict {
  bool unbounded = false;
  std::optional<Triple> witness;  // raises the degree
  std::optional<DivisorClass> raised;
};

OrbitVerdict orbit_unbounded(const DivisorClass& c);

}  // namespace birat

#endif  // BIRAT_CREMONA_HPP
