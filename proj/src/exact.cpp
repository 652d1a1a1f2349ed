#include "birat/exact.hpp"

#include <algorithm>
#include <utility>

namespace birat {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    return Rational(num) / Rational(den);
  } catch (const std::runtime_error&) {
    throw DomainError("not a rational number: '" + text + "'");
  }
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    r[i].reserve(m[i].size());
    for (Int v : m[i]) r[i].emplace_back(v);
  }
  return r;
}

static void require_square_symmetric(const RationalMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw DomainError("matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a[i][j] != a[j][i]) throw DomainError("matrix is not symmetric");
}

Inertia symmetric_inertia(RationalMatrix a) {
  require_square_symmetric(a);
  const std::size_t n = a.size();
  Inertia out;
  std::size_t k = 0;
  while (k < n) {
    std::size_t p = n;
    for (std::size_t i = k; i < n; ++i)
      if (a[i][i] != 0) { p = i; break; }

    if (p == n) {
      // all remaining diagonal entries vanish; use an off-diagonal entry
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) { pi = i; pj = j; break; }
      if (pi == n) {
        out.zero += static_cast<int>(n - k);
        break;
      }
      // e_i -> e_i + e_j makes the (i,i) entry 2 a_ij
      for (std::size_t c = 0; c < n; ++c) a[pi][c] += a[pj][c];
      for (std::size_t r = 0; r < n; ++r) a[r][pi] += a[r][pj];
      p = pi;
    }

    if (p != k) {
      std::swap(a[p], a[k]);
      for (auto& row : a) std::swap(row[p], row[k]);
    }
    const Rational pivot = a[k][k];
    if (pivot > 0) ++out.positive; else ++out.negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (std::size_t i = k + 1; i < n; ++i) a[i][k] = a[k][i] = 0;
    ++k;
  }
  return out;
}

// Reduced row echelon form in place; returns pivot columns.
static std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i][c] != 0) { p = i; break; }
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(RationalMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Rational>> kernel_basis(RationalMatrix m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_cone(const std::vector<std::vector<Rational>>& generators,
             const std::vector<Rational>& target) {
  const std::size_t rows = target.size();
  const std::size_t g = generators.size();
  for (const auto& gen : generators)
    if (gen.size() != rows) throw StructuralError("cone generator has wrong length");
  if (g == 0) {
    return std::all_of(target.begin(), target.end(), [](const Rational& v) { return v == 0; });
  }

  // Phase-I tableau: columns 0..g-1 structural, g..g+rows-1 artificial, last is rhs.
  const std::size_t cols = g + rows + 1;
  RationalMatrix t(rows, std::vector<Rational>(cols, Rational(0)));
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const bool flip = target[r] < 0;
    for (std::size_t j = 0; j < g; ++j) t[r][j] = flip ? -generators[j][r] : generators[j][r];
    t[r][g + r] = 1;
    t[r][cols - 1] = flip ? -target[r] : target[r];
    basis[r] = g + r;
  }
  std::vector<Rational> z(cols, Rational(0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j < g; ++j) z[j] += t[r][j];
  for (std::size_t r = 0; r < rows; ++r) z[cols - 1] += t[r][cols - 1];

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < g; ++j)
      if (z[j] > 0) { enter = j; break; }
    if (enter == cols) break;

    std::size_t leave = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      const Rational ratio = t[r][cols - 1] / t[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction; cannot happen for phase I

    const Rational inv = 1 / t[leave][enter];
    for (auto& v : t[leave]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational f = t[r][enter];
      for (std::size_t j = 0; j < cols; ++j) t[r][j] -= f * t[leave][j];
    }
    const Rational f = z[enter];
    for (std::size_t j = 0; j < cols; ++j) z[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  return z[cols - 1] == 0;
}

}  // namespace birat
