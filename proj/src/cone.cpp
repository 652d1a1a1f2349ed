#include "birat/cone.hpp"

#include <algorithm>

namespace birat {

Int pairing(const IntMatrix& gram, const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.size() != gram.size() || b.size() != gram.size()) throw StructuralError("vector and gram matrix differ in size");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s = checked::add(s, checked::mul(a[i], checked::mul(gram[i][j], b[j])));
  return s;
}

static std::vector<Rational> to_rational(const std::vector<Int>& v) { return {v.begin(), v.end()}; }

bool rays_are_extremal(const ConeDescription& c) {
  for (std::size_t i = 0; i < c.rays.size(); ++i) {
    std::vector<std::vector<Rational>> others;
    for (std::size_t j = 0; j < c.rays.size(); ++j)
      if (j != i) others.push_back(to_rational(c.rays[j]));
    if (in_cone(others, to_rational(c.rays[i]))) return false;
  }
  return true;
}

static bool positive_multiple(const DivisorClass& a, const DivisorClass& c) {
  // a = t c with t > 0
  const auto va = coords(a), vc = coords(c);
  std::size_t k = 0;
  while (k < vc.size() && vc[k] == 0) ++k;
  if (k == vc.size()) return false;
  const Rational t = Rational(va[k]) / vc[k];
  if (t <= 0) return false;
  for (std::size_t i = 0; i < vc.size(); ++i)
    if (Rational(va[i]) != t * vc[i]) return false;
  return true;
}

bool neg_curve_is_extremal(const DivisorClass& c, const std::vector<DivisorClass>& sample) {
  if (self_intersection(c) >= 0) throw DomainError(to_string(c) + " does not have negative square");
  std::vector<std::vector<Rational>> gens;
  for (const auto& s : sample) {
    if (s.size() != c.size()) throw StructuralError("sample class on a different configuration");
    if (!positive_multiple(s, c)) gens.push_back(to_rational(coords(s)));
  }
  return !in_cone(gens, to_rational(coords(c)));
}

ConeDescription hirzebruch_cone(Int n) {
  if (n < 0) throw DomainError("F_n needs n >= 0");
  ConeDescription c;
  c.gram = {{0, 1}, {1, -n}};
  c.rays = {{1, 0}, {0, 1}};
  c.labels = {"f", n == 0 ? "g" : "e"};
  c.polyhedral = true;
  return c;
}

bool CollinearCone::ok() const {
  return anticanonical_square == 6 && rays_k_nonpositive && c_unique_k_trivial && no_other_k_trivial &&
         no_other_minus_one && pencils_decompose && rays_extremal;
}

// calls f(d, m1, m2, m3) for 1 <= d <= bound, 0 <= m_i <= d
template <class F>
static void for_plane_curves(Int bound, F f) {
  for (Int d = 1; d <= bound; ++d)
    for (Int a = 0; a <= d; ++a)
      for (Int b = 0; b <= d; ++b)
        for (Int c = 0; c <= d; ++c) f(d, a, b, c);
}

CollinearCone collinear_blowup_cone(Int degree_bound) {
  CollinearCone out;
  out.config = PointConfig::general(3);
  out.config.collinear = {{0, 1, 2}};
  out.config.validate();
  const DivisorClass C(1, {1, 1, 1});
  out.rays = {C, DivisorClass::exceptional(3, 0), DivisorClass::exceptional(3, 1), DivisorClass::exceptional(3, 2)};
  out.cone.gram = intersection_form(3);
  for (const auto& r : out.rays) out.cone.rays.push_back(coords(r));
  out.cone.labels = {"C", "E1", "E2", "E3"};
  out.cone.polyhedral = true;

  const DivisorClass K = canonical_class(3);
  out.anticanonical_square = self_intersection(K);
  out.rays_k_nonpositive = std::all_of(out.rays.begin(), out.rays.end(), [&](auto& r) { return intersect(K, r) <= 0; });
  int k_trivial = 0;
  for (const auto& r : out.rays) k_trivial += intersect(K, r) == 0;
  out.c_unique_k_trivial = k_trivial == 1 && intersect(K, C) == 0 && self_intersection(C) == -2;

  // C.D = d - sum m for the image of D of degree d
  out.degree_bound = degree_bound;
  out.no_other_k_trivial = out.no_other_minus_one = out.pencils_decompose = true;
  for_plane_curves(degree_bound, [&](Int d, Int a, Int b, Int c) {
    const Int s = a + b + c;
    const bool katz = 0 <= d - s && d - s <= 1;
    if (!katz) return;
    if (3 * d - s == 0) out.no_other_k_trivial = false;
    if (3 * d - s == 1) out.no_other_minus_one = false;
    if (3 * d - s == 2) {
      const DivisorClass D(d, {a, b, c});
      bool split = false;
      for (std::size_t i = 0; i < 3; ++i) {
        DivisorClass sum = C;
        for (std::size_t j = 0; j < 3; ++j)
          if (j != i) sum = sum + DivisorClass::exceptional(3, j);
        split = split || sum == D;
      }
      if (d != 1 || !split || self_intersection(D) != 0) out.pencils_decompose = false;
    }
  });

  // the rays against the other curves of low degree on X: the pencils
  // H - E_i and the lines
  std::vector<DivisorClass> sample = out.rays;
  sample.push_back(DivisorClass::line(3));
  for (std::size_t i = 0; i < 3; ++i) sample.push_back(DivisorClass::line(3) - DivisorClass::exceptional(3, i));
  out.rays_extremal = rays_are_extremal(out.cone) &&
                      std::all_of(out.rays.begin(), out.rays.end(), [&](auto& r) { return neg_curve_is_extremal(r, sample); });
  return out;
}

// Non-negative m with sum m = s and sum m^2 = q, appended to out.
static void solutions(std::vector<Int>& m, std::size_t i, Int s, Int q, Int cap, Int d,
                      std::vector<DivisorClass>& out) {
  const std::size_t n = m.size();
  if (i == n) {
    if (s == 0 && q == 0) out.emplace_back(d, m);
    return;
  }
  const Int rest = static_cast<Int>(n - i);
  // each remaining m is at most cap, so their sum is at most rest * cap,
  // and sum m^2 >= (sum m)^2 / rest
  if (s < 0 || q < 0 || s > rest * cap || s * s > rest * q) return;
  for (Int v = 0; v <= cap && v * v <= q && v <= s; ++v) {
    m[i] = v;
    solutions(m, i + 1, s - v, q - v * v, cap, d, out);
  }
  m[i] = 0;
}

static std::vector<DivisorClass> minus_one_of_degree(int n, Int d) {
  std::vector<DivisorClass> out;
  std::vector<Int> m(n, 0);
  solutions(m, 0, 3 * d - 1, d * d + 1, d, d, out);
  return out;
}

std::vector<DivisorClass> enumerate_minus_one_classes(int n) {
  if (n < 1 || n > 8) throw DomainError("n must be in 1..8");
  std::vector<DivisorClass> out;
  for (int i = 0; i < n; ++i) out.push_back(DivisorClass::exceptional(n, i));
  // a (-1)-curve lies in a member of |-K| (n <= 7) or of |-2K| = L_6(2^8)
  const Int bound = n <= 7 ? 3 : 6;
  for (Int d = 1; d <= bound; ++d) {
    auto v = minus_one_of_degree(n, d);
    out.insert(out.end(), v.begin(), v.end());
  }
  if (n == 8)
    for (Int d = 7; d <= 9; ++d)
      if (!minus_one_of_degree(n, d).empty())
        throw InternalInvariantError("(-1)-class of degree " + std::to_string(d) + " on 8 points");
  std::sort(out.begin(), out.end());
  return out;
}

Int ee_square(Int a, Int b, Int c) {
  return checked::mul(2, checked::add(checked::add(checked::mul(a, b), checked::mul(a, c)), checked::mul(b, c)));
}

Int ee_degree(Int a, Int b, Int c) { return checked::add(checked::add(a, b), checked::mul(2, c)); }

bool exe_cone_membership(Int a, Int b, Int c) {
  if (a == 0 && b == 0 && c == 0) return true;
  return ee_degree(a, b, c) > 0 && ee_square(a, b, c) >= 0;
}

}  // namespace birat
