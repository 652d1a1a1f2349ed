#include "birat/fibration.hpp"

#include <numeric>

namespace birat {

void FibreMatrix::validate() const {
  const std::size_t n = gram.size();
  if (n == 0) throw DomainError("empty fibre matrix");
  if (weights.size() != n) throw DomainError("one weight per component expected");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n) throw DomainError("fibre matrix is not square");
    if (weights[i] <= 0) throw DomainError("weights must be positive");
    for (std::size_t j = 0; j < n; ++j) {
      if (gram[i][j] != gram[j][i]) throw DomainError("fibre matrix is not symmetric");
      if (i != j && gram[i][j] < 0) throw DomainError("distinct components meet negatively");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < n; ++j) s = checked::add(s, checked::mul(gram[i][j], weights[j]));
    if (s != 0) throw DomainError("F . F_" + std::to_string(i) + " = " + std::to_string(s) + ", expected 0");
  }
}

ZariskiVerdict zariski_check(const FibreMatrix& m) {
  m.validate();
  const std::size_t n = m.gram.size();
  ZariskiVerdict v;
  const Inertia in = symmetric_inertia(to_rational(m.gram));
  v.semidefinite = in.positive == 0;
  const auto ker = kernel_basis(to_rational(m.gram));
  v.kernel_dim = static_cast<int>(ker.size());
  // weights lie in the kernel by validation, so the kernel is their span
  // exactly when it is a line
  v.kernel_is_span_of_weights = v.kernel_dim == 1;

  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m.gram[i][j] > 0) root[find(i)] = find(j);
  for (std::size_t i = 0; i < n; ++i)
    if (find(i) == i) ++v.components;
  return v;
}

Inertia lattice_signature(const IntMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw DomainError("matrix is not square");
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) throw DomainError("matrix is not symmetric");
  return symmetric_inertia(to_rational(m));
}

void EllipticFibration::validate() const {
  if (base_genus < 0) throw DomainError("base genus must be non-negative");
  if (chi < 0) throw DomainError("chi must be non-negative");
  for (Int m : mults)
    if (m < 2) throw DomainError("multiple fibres have multiplicity >= 2");
}

Int plurigenus_bound(const EllipticFibration& f, Int n) {
  f.validate();
  if (n < 1) throw DomainError("plurigenera are indexed from 1");
  Int v = checked::add(checked::sub(checked::mul(n, checked::add(2 * f.base_genus - 2, f.chi)), f.base_genus), 1);
  for (Int m : f.mults) v = checked::add(v, floor_div(checked::mul(n, m - 1), m));
  return std::max<Int>(0, v);
}

PlurigenusTable plurigenus_table(const EllipticFibration& f, Int n_max) {
  if (n_max < 1) throw DomainError("n_max must be positive");
  PlurigenusTable t;
  for (Int n = 1; n <= n_max; ++n) t.values.push_back(plurigenus_bound(f, n));
  t.exact_for_isotrivial = f.isotrivial_product;
  return t;
}

static void validate_branch(const BranchData& b) {
  if (b.group_order < 1) throw DomainError("group order must be positive");
  if (b.base_genus < 0) throw DomainError("base genus must be non-negative");
  for (Int r : b.branch) {
    if (r < 2) throw DomainError("branching indices are >= 2");
    if (b.group_order % r != 0)
      throw DomainError("branching index " + std::to_string(r) + " does not divide the group order");
  }
}

Int riemann_hurwitz_genus(const BranchData& b) {
  validate_branch(b);
  const Int nu = b.group_order;
  Int rhs = checked::mul(nu, 2 * b.base_genus - 2);
  for (Int r : b.branch) rhs = checked::add(rhs, nu - nu / r);
  if (rhs % 2 != 0) throw DomainError("Riemann-Hurwitz gives an odd 2g - 2 = " + std::to_string(rhs));
  const Int g = (rhs + 2) / 2;
  if (g < 0) throw DomainError("Riemann-Hurwitz gives negative genus " + std::to_string(g));
  return g;
}

Int invariant_degree(const BranchData& b, Int n) {
  for (Int r : b.branch)
    if (r < 2) throw DomainError("branching indices are >= 2");
  if (b.base_genus != 0) throw DomainError("invariant forms are computed over P^1 only");
  if (n < 1) throw DomainError("n must be positive");
  Int l = checked::mul(-2, n);
  for (Int r : b.branch) l = checked::add(l, floor_div(checked::mul(n, r - 1), r));
  return l;
}

bool elliptic_branch_consistency(const BranchData& b) {
  Rational s = 0;
  for (Int r : b.branch) {
    if (r < 2) throw DomainError("branching indices are >= 2");
    s += 1 - Rational(1, r);
  }
  return s == 2;
}

const char* to_string(BdF c) {
  static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi", "vii"};
  return names[static_cast<int>(c)];
}

BdF parse_bdf(const std::string& roman) {
  for (int i = 0; i < 7; ++i)
    if (roman == to_string(static_cast<BdF>(i))) return static_cast<BdF>(i);
  throw DomainError("unknown bielliptic type '" + roman + "'");
}

BdFCase BdFCase::from_group(const std::vector<Int>& translations, Int h_order) {
  std::vector<Int> t;
  for (Int o : translations) {
    if (o < 1) throw DomainError("cyclic factor orders are positive");
    if (o > 1) t.push_back(o);
  }
  // T consists of translations by points fixed by H
  const bool trivial = t.empty();
  const bool single = t.size() == 1;
  switch (h_order) {
    case 2:
      if (trivial) return {BdF::I};
      if (single && t[0] == 2) return {BdF::II};
      if (t.size() == 2 && t[0] == 2 && t[1] == 2)
        throw DomainError("G = F[2] x Z2 is not a group of translations of an elliptic curve");
      break;
    case 4:
      if (trivial) return {BdF::III};
      if (single && t[0] == 2) return {BdF::IV};
      break;
    case 3:
      if (trivial) return {BdF::V};
      if (single && t[0] == 3) return {BdF::VI};
      break;
    case 6:
      if (trivial) return {BdF::VII};
      break;
    default:
      throw DomainError("H must have order 2, 3, 4 or 6");
  }
  throw DomainError("translations do not commute with H of order " + std::to_string(h_order));
}

Int BdFCase::h_order() const {
  switch (which) {
    case BdF::I:
    case BdF::II: return 2;
    case BdF::III:
    case BdF::IV: return 4;
    case BdF::V:
    case BdF::VI: return 3;
    case BdF::VII: return 6;
  }
  return 0;
}

std::string BdFCase::group() const {
  switch (which) {
    case BdF::I: return "Z2";
    case BdF::II: return "Z2xZ2";
    case BdF::III: return "Z4";
    case BdF::IV: return "Z4xZ2";
    case BdF::V: return "Z3";
    case BdF::VI: return "Z3xZ3";
    case BdF::VII: return "Z6";
  }
  return "?";
}

BranchData BdFCase::branch() const {
  switch (h_order()) {
    case 2: return {2, 0, {2, 2, 2, 2}};
    case 4: return {4, 0, {2, 4, 4}};
    case 3: return {3, 0, {3, 3, 3}};
    default: return {6, 0, {2, 3, 6}};
  }
}

Int bdf_minimal_power(const BdFCase& c) {
  // H = <a> acts on dz by a primitive root of unity of order |H|
  return c.h_order();
}

CanonicalFormulaSummary canonical_formula_summary(const EllipticFibration& f) {
  f.validate();
  CanonicalFormulaSummary s;
  s.base_bundle_degree = 2 * f.base_genus - 2 + f.chi;
  for (Int m : f.mults) {
    s.fractional_parts.push_back(Rational(m - 1, m));
    s.pullback_power = std::lcm(s.pullback_power, m);
  }
  s.pullback_degree = Rational(checked::mul(s.pullback_power, s.base_bundle_degree));
  for (const auto& r : s.fractional_parts) s.pullback_degree += s.pullback_power * r;
  return s;
}

}  // namespace birat
