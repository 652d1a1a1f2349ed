#ifndef BIRAT_POINTS_HPP
#define BIRAT_POINTS_HPP

#include <optional>
#include <vector>

#include "birat/lattice.hpp"

namespace birat {

struct PointNode {
  int id = 0;
  std::optional<int> parent;      // absent for a proper point
  std::vector<int> proximate_to;  // always contains the parent
  bool generic = false;

  friend bool operator==(const PointNode&, const PointNode&) = default;
};

// Points listed so that every point comes after the points it is proximate
// to.  Multiplicity vectors of classes over the configuration follow this
// order.
//
// Besides proximity, a configuration records the curves that make its
// position special: sets of three or more collinear points, and classes of
// further irreducible curves of degree >= 2 and self-intersection <= -2.
// Anything not recorded is assumed to be in general position.
struct PointConfig {
  std::vector<PointNode> points;
  std::vector<std::vector<int>> collinear;  // sets of point ids, size >= 3
  std::vector<DivisorClass> curves;         // degree >= 2, over this configuration

  static PointConfig general(std::size_t n);

  std::size_t size() const { return points.size(); }
  std::size_t index_of(int id) const;  // throws DomainError for an unknown id
  bool contains(int id) const;
  const PointNode& node(int id) const { return points[index_of(id)]; }
  int next_id() const;

  // Throws DomainError describing the first violated rule.  Also merges
  // collinear sets that share two points and sorts them.
  void validate();

  // Appends a proper generic point; returns its id.
  int add_generic_point();

  bool on_common_line(const std::vector<int>& ids) const;
  int depth(int id) const;  // 0 for a proper point
  // Indices of the points proximate to the point at index i.
  std::vector<std::size_t> proximate_points(std::size_t i) const;

  friend bool operator==(const PointConfig&, const PointConfig&) = default;
};

bool is_satellite(const PointConfig& config, int id);

// m_p >= sum of m_q over the points q proximate to p, for every p.
bool proximity_check(const DivisorClass& c, const PointConfig& config);

// An infinitely near point never has a larger multiplicity than its parent.
bool multiplicities_monotone(const DivisorClass& c, const PointConfig& config);

// Class of the strict transform of the exceptional curve of the point at
// index i: E_i minus the points proximate to it.
DivisorClass exceptional_component(const PointConfig& config, std::size_t i);

// Class of the line through the given point indices (and nothing else).
DivisorClass line_through(const PointConfig& config, const std::vector<std::size_t>& idx);

// Irreducible curves of negative self-intersection that the configuration
// records: every exceptional component, every declared line and curve.
std::vector<DivisorClass> recorded_curves(const PointConfig& config);

}  // namespace birat

#endif  // BIRAT_POINTS_HPP
