#ifndef BIRAT_LATTICE_HPP
#define BIRAT_LATTICE_HPP

#include <string>
#include <vector>

#include "birat/exact.hpp"

namespace birat {

// The class d*H - sum m_i E_i on the plane blown up at n points.  The
// exceptional class E_i itself is (0; 0..,-1,..0).
struct DivisorClass {
  Int degree = 0;
  std::vector<Int> mults;

  DivisorClass() = default;
  DivisorClass(Int d, std::vector<Int> m) : degree(d), mults(std::move(m)) {}

  std::size_t size() const { return mults.size(); }

  static DivisorClass zero(std::size_t n) { return {0, std::vector<Int>(n, 0)}; }
  static DivisorClass line(std::size_t n) { return {1, std::vector<Int>(n, 0)}; }
  static DivisorClass exceptional(std::size_t n, std::size_t i);

  // Same class with k more points of multiplicity zero.
  DivisorClass padded(std::size_t n) const;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a);
DivisorClass operator*(Int k, const DivisorClass& a);

// "(d; m1,m2,...)"
std::string to_string(const DivisorClass& c);

struct NumericalRecord {
  Int nu = 0;
  Int genus = 0;
  friend bool operator==(const NumericalRecord&, const NumericalRecord&) = default;
};

// C(k,2) = k(k-1)/2 for every integer k, so C(-1,2) = 1.
Int binom2(Int k);

Int intersect(const DivisorClass& a, const DivisorClass& b);
DivisorClass canonical_class(std::size_t n);
NumericalRecord numerical_record(const DivisorClass& c);
Int self_intersection(const DivisorClass& c);
Int arithmetic_genus(const DivisorClass& c);
Int canonical_degree(const DivisorClass& c);  // K . c

// chi(L) = chi_O + L.(L-K)/2
Int riemann_roch_chi(const DivisorClass& c, Int chi_o);

// Coordinates (d, m_1, ..., m_n) and back.
std::vector<Int> coords(const DivisorClass& c);
DivisorClass from_coords(const std::vector<Int>& v);

// The form diag(1, -1, ..., -1) in coordinates.
IntMatrix intersection_form(std::size_t n);

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> act(const IntMatrix& a, const std::vector<Int>& v);
DivisorClass act(const IntMatrix& a, const DivisorClass& c);

// Embed an action on n points into one on n+k points, acting trivially on
// the new ones.
IntMatrix pad_action(const IntMatrix& a, std::size_t n_points);

}  // namespace birat

#endif  // BIRAT_LATTICE_HPP
