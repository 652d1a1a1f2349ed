#ifndef BIRAT_FACTORIZATION_HPP
#define BIRAT_FACTORIZATION_HPP

#include <optional>
#include <vector>

#include "birat/cremona.hpp"

namespace birat {

// (k, h, s) compared lexicographically.  h is -1 for the net of lines,
// which has no point of multiplicity above k/2.
struct Simplicity {
  Int k = 0;
  Int h = 0;
  Int s = 0;
  friend bool operator==(const Simplicity&, const Simplicity&) = default;
  friend auto operator<=>(const Simplicity&, const Simplicity&) = default;
};

std::string to_string(const Simplicity& s);

// Point indices ordered by decreasing multiplicity; ties keep the
// configuration order, so a point never precedes its parent.
std::vector<std::size_t> multiplicity_order(const DivisorClass& c);

Simplicity simplicity(const HomaloidalNet& net);

struct NcStep {
  QuadraticMap map;
  int nc_case = 1;       // 1: conic through p0, pi, pj; 2: satellite chain
  HomaloidalNet before;  // includes the fresh point of case 2, if any
  HomaloidalNet after;
  IntMatrix action;      // on the lattice of `before`
  Simplicity simplicity; // of `after`
};

NcStep nc_step(const HomaloidalNet& net);

enum class Terminal { Linear, Quadratic };

const char* to_string(Terminal t);

struct FactorizationTrace {
  HomaloidalNet input;
  Simplicity initial;
  std::vector<NcStep> steps;
  Terminal terminal = Terminal::Linear;
  // For a quadratic terminal net, the map based at its three points; it
  // takes the net to the lines.
  std::optional<QuadraticMap> closing;
  IntMatrix closing_action;
  HomaloidalNet final_net;  // the net of lines
};

FactorizationTrace factor(const HomaloidalNet& net);

// Product of all step actions (and the closing map), on the lattice of the
// final configuration.  Maps the padded input class to the lines class.
IntMatrix composed_action(const FactorizationTrace& t);

struct QuadraticDecomposition {
  std::vector<QuadraticMap> maps;        // all of type I
  std::vector<PointConfig> sources;      // configuration each map is applied to
  PointConfig extended;                  // input plus the auxiliary points
  PointConfig target;
  IntMatrix action;                      // composed, on the lattice of `extended`
};

// Writes a type II map as two type I maps and a type III map as four,
// introducing general auxiliary points.
QuadraticDecomposition decompose_quadratic(const PointConfig& config, const QuadraticMap& q);

// Inverse of a lattice isometry, J a^T J with J the intersection form.
IntMatrix inverse_isometry(const IntMatrix& a);

// A matrix that fixes the degree coordinate and permutes the points.
bool is_point_permutation(const IntMatrix& a);

}  // namespace birat

#endif  // BIRAT_FACTORIZATION_HPP
