#ifndef BIRAT_FIBRATION_HPP
#define BIRAT_FIBRATION_HPP

#include <string>
#include <vector>

#include "birat/exact.hpp"

namespace birat {

// Intersection matrix of the components of a fibre F = sum n_i F_i.
struct FibreMatrix {
  IntMatrix gram;
  std::vector<Int> weights;

  // Square, symmetric, off-diagonal >= 0, weights > 0, gram * weights = 0.
  void validate() const;
};

struct ZariskiVerdict {
  bool semidefinite = false;  // negative semidefinite
  int kernel_dim = 0;
  bool kernel_is_span_of_weights = false;
  int components = 0;  // of the graph with an edge where F_i.F_j > 0
};

ZariskiVerdict zariski_check(const FibreMatrix& m);

Inertia lattice_signature(const IntMatrix& m);

struct EllipticFibration {
  Int base_genus = 0;
  Int chi = 0;
  std::vector<Int> mults;          // multiple fibres, each >= 2
  bool isotrivial_product = false; // (C1 x C2)/G with K^2 = e = 0

  void validate() const;
};

// max{0, n(2g - 2 + chi) + 1 - g + sum floor(n (m_i - 1) / m_i)}, a lower
// bound for P_n.
Int plurigenus_bound(const EllipticFibration& f, Int n);

struct PlurigenusTable {
  std::vector<Int> values;  // P_1 .. P_{n_max}
  bool exact_for_isotrivial = false;
};

PlurigenusTable plurigenus_table(const EllipticFibration& f, Int n_max);

// A G-cover C -> B with the given branching indices over B.
struct BranchData {
  Int group_order = 1;
  Int base_genus = 0;
  std::vector<Int> branch;
};

Int riemann_hurwitz_genus(const BranchData& b);

// l_n = -2n + sum floor(n (1 - 1/r)), over the base P^1.
Int invariant_degree(const BranchData& b, Int n);

// sum (1 - 1/r_i) == 2: the cover is elliptic.
bool elliptic_branch_consistency(const BranchData& b);

enum class BdF { I, II, III, IV, V, VI, VII };

// A bielliptic surface (E x F)/G with G = T x H, T translations of F and H
// acting on F with a fixed point.
struct BdFCase {
  BdF which = BdF::I;

  // T given by the orders of its cyclic factors.  Throws DomainError for a
  // pair that does not occur, including T = F[2] with H of order 2.
  static BdFCase from_group(const std::vector<Int>& translations, Int h_order);

  Int h_order() const;
  std::string group() const;
  BranchData branch() const;  // of F -> F/H = P^1
};

const char* to_string(BdF c);
BdF parse_bdf(const std::string& roman);

// Smallest n with nK trivial: the order of the character of H on the
// 1-form of F.
Int bdf_minimal_power(const BdFCase& c);

struct CanonicalFormulaSummary {
  Int base_bundle_degree = 0;           // 2g - 2 + chi
  std::vector<Rational> fractional_parts;
  Int pullback_power = 1;               // lcm of the m_i
  Rational pullback_degree;             // degree of the bundle on C at that power
};

CanonicalFormulaSummary canonical_formula_summary(const EllipticFibration& f);

}  // namespace birat

#endif  // BIRAT_FIBRATION_HPP
