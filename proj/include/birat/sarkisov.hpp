#ifndef BIRAT_SARKISOV_HPP
#define BIRAT_SARKISOV_HPP

#include <optional>
#include <string>
#include <vector>

#include "birat/cremona.hpp"

namespace birat {

enum class MfsKind { PlaneOverPoint, ScrollOverLine, QuadricRulingA, QuadricRulingB };

struct MoriFibreSpace {
  MfsKind kind = MfsKind::PlaneOverPoint;
  Int e = 0;  // F_e for a scroll; 0 on the quadric
  friend bool operator==(const MoriFibreSpace&, const MoriFibreSpace&) = default;
};

std::string to_string(const MoriFibreSpace& m);

struct SarkisovDegree {
  Rational mu;
  Int lambda = 0;
  std::optional<Int> ell;  // absent when lambda = 0
  friend bool operator==(const SarkisovDegree&, const SarkisovDegree&) = default;
};

std::string to_string(const SarkisovDegree& d);

// Strict lexicographic comparison on (mu, lambda, ell), an absent ell
// counting as 0.
bool degree_less(const SarkisovDegree& a, const SarkisovDegree& b);

// A point of the current surface S blown up by X -> S, with the class on X
// of the total transform of its exceptional curve.
struct ContractedPoint {
  int label = 0;
  DivisorClass cls;
  std::optional<int> parent;  // label of the point it is infinitely near to, if still contracted
};

// Every model S is dominated by the fixed surface X, the blow-up of the
// plane at the base points of the net, and is described by the points of S
// that X blows up plus marked classes on X pulled back from S.
struct SarkisovState {
  MoriFibreSpace mfs;
  PointConfig config;  // X
  DivisorClass net;    // the net on X, base point free
  std::vector<ContractedPoint> contracted;
  DivisorClass line;           // pulled back line class, on the plane
  DivisorClass fibre;          // on a scroll or quadric
  DivisorClass section;        // negative section, or the other ruling on the quadric
  DivisorClass section_curve;  // strict transform on X of the negative section
  int next_label = 0;
};

SarkisovState initial_state(const DivisorClass& net, const PointConfig& config);

// Multiplicity of the net on S at a contracted point.
Int point_multiplicity(const SarkisovState& s, const ContractedPoint& p);

SarkisovDegree sarkisov_degree(const SarkisovState& s);

// (K_S + L/mu) against the fibre and the other extremal generator; on the
// plane against the line class.
bool nef_adjoint_check(const SarkisovState& s);

enum class LinkKind { I, II, III, IV };

const char* to_string(LinkKind k);

struct SarkisovLink {
  LinkKind kind = LinkKind::I;
  std::optional<int> center;  // point blown up or transformed; none for III and IV
  MoriFibreSpace result;
  SarkisovDegree degree;       // after the link
};

// True when lambda <= mu and the adjoint is nef.
bool sarkisov_terminal(const SarkisovState& s);

std::pair<SarkisovLink, SarkisovState> untwist_step(const SarkisovState& s);

struct SarkisovTrace {
  SarkisovDegree initial;
  std::vector<SarkisovLink> links;
  SarkisovState final_state;
};

SarkisovTrace run_sarkisov(const DivisorClass& net, const PointConfig& config);

}  // namespace birat

#endif  // BIRAT_SARKISOV_HPP
