#include "birat/lattice.hpp"

#include <sstream>

namespace birat {

namespace {

void require_same(const DivisorClass& a, const DivisorClass& b) {
  if (a.size() != b.size())
    throw StructuralError("classes live on configurations with " + std::to_string(a.size()) +
                          " and " + std::to_string(b.size()) + " points");
}

}  // namespace

DivisorClass DivisorClass::exceptional(std::size_t n, std::size_t i) {
  if (i >= n) throw DomainError("exceptional index out of range");
  DivisorClass c = zero(n);
  c.mults[i] = -1;
  return c;
}

DivisorClass DivisorClass::padded(std::size_t n) const {
  if (n < size()) throw StructuralError("cannot pad a class to fewer points");
  DivisorClass c = *this;
  c.mults.resize(n, 0);
  return c;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  require_same(a, b);
  DivisorClass c(checked::add(a.degree, b.degree), a.mults);
  for (std::size_t i = 0; i < c.size(); ++i) c.mults[i] = checked::add(a.mults[i], b.mults[i]);
  return c;
}

DivisorClass operator-(const DivisorClass& a) {
  DivisorClass c(checked::sub(0, a.degree), a.mults);
  for (auto& m : c.mults) m = checked::sub(0, m);
  return c;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return a + (-b); }

DivisorClass operator*(Int k, const DivisorClass& a) {
  DivisorClass c(checked::mul(k, a.degree), a.mults);
  for (auto& m : c.mults) m = checked::mul(k, m);
  return c;
}

std::string to_string(const DivisorClass& c) {
  std::ostringstream os;
  os << '(' << c.degree << ';';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c.mults[i];
  os << ')';
  return os.str();
}

Int binom2(Int k) {
  // k(k-1) is always even
  return checked::mul(k, checked::sub(k, 1)) / 2;
}

Int intersect(const DivisorClass& a, const DivisorClass& b) {
  require_same(a, b);
  Int s = checked::mul(a.degree, b.degree);
  for (std::size_t i = 0; i < a.size(); ++i) s = checked::sub(s, checked::mul(a.mults[i], b.mults[i]));
  return s;
}

DivisorClass canonical_class(std::size_t n) { return {-3, std::vector<Int>(n, -1)}; }

Int self_intersection(const DivisorClass& c) { return intersect(c, c); }

Int arithmetic_genus(const DivisorClass& c) {
  Int g = binom2(checked::sub(c.degree, 1));
  for (Int m : c.mults) g = checked::sub(g, binom2(m));
  return g;
}

NumericalRecord numerical_record(const DivisorClass& c) {
  return {self_intersection(c), arithmetic_genus(c)};
}

Int canonical_degree(const DivisorClass& c) { return intersect(canonical_class(c.size()), c); }

Int riemann_roch_chi(const DivisorClass& c, Int chi_o) {
  const Int t = intersect(c, c - canonical_class(c.size()));
  if (t % 2 != 0) throw InternalInvariantError("L.(L-K) is odd for " + to_string(c));
  return checked::add(chi_o, t / 2);
}

std::vector<Int> coords(const DivisorClass& c) {
  std::vector<Int> v;
  v.reserve(c.size() + 1);
  v.push_back(c.degree);
  v.insert(v.end(), c.mults.begin(), c.mults.end());
  return v;
}

DivisorClass from_coords(const std::vector<Int>& v) {
  if (v.empty()) throw DomainError("empty coordinate vector");
  return {v[0], std::vector<Int>(v.begin() + 1, v.end())};
}

IntMatrix intersection_form(std::size_t n) {
  IntMatrix m(n + 1, std::vector<Int>(n + 1, 0));
  m[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i) m[i][i] = -1;
  return m;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size())
    throw StructuralError("matrix shapes do not compose");
  const std::size_t n = a.size(), k = b.size(), m = b[0].size();
  IntMatrix c(n, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        c[i][j] = checked::add(c[i][j], checked::mul(a[i][l], b[l][j]));
    }
  return c;
}

std::vector<Int> act(const IntMatrix& a, const std::vector<Int>& v) {
  if (a.empty() || a[0].size() != v.size()) throw StructuralError("matrix and vector do not match");
  std::vector<Int> out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      out[i] = checked::add(out[i], checked::mul(a[i][j], v[j]));
  return out;
}

DivisorClass act(const IntMatrix& a, const DivisorClass& c) { return from_coords(act(a, coords(c))); }

IntMatrix pad_action(const IntMatrix& a, std::size_t n_points) {
  const std::size_t old = a.size();
  if (old > n_points + 1) throw StructuralError("cannot shrink an action");
  IntMatrix m = identity_matrix(n_points + 1);
  for (std::size_t i = 0; i < old; ++i)
    for (std::size_t j = 0; j < old; ++j) m[i][j] = a[i][j];
  return m;
}

}  // namespace birat
