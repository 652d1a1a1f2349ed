#include "birat/cremona.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace birat {

const char* to_string(QuadKind k) {
  switch (k) {
    case QuadKind::TypeI: return "I";
    case QuadKind::TypeII: return "II";
    case QuadKind::TypeIII: return "III";
  }
  return "?";
}

QuadraticMap make_quadratic(const PointConfig& config, std::array<int, 3> ids) {
  if (ids[0] == ids[1] || ids[0] == ids[2] || ids[1] == ids[2])
    throw DomainError("quadratic base points must be distinct");
  for (int id : ids) config.index_of(id);
  std::vector<int> proper, near;
  for (int id : ids) (config.node(id).parent ? near : proper).push_back(id);
  auto in_base = [&](int id) { return std::find(ids.begin(), ids.end(), id) != ids.end(); };

  QuadraticMap q;
  if (proper.size() == 3) {
    std::sort(proper.begin(), proper.end(),
              [&](int a, int b) { return config.index_of(a) < config.index_of(b); });
    q = {{proper[0], proper[1], proper[2]}, QuadKind::TypeI};
  } else if (proper.size() == 2) {
    const int x = near[0];
    const int p = *config.node(x).parent;
    if (!in_base(p)) throw DomainError("base point " + std::to_string(x) + " is infinitely near a point outside the base");
    const int other = proper[0] == p ? proper[1] : proper[0];
    q = {{p, x, other}, QuadKind::TypeII};
  } else if (proper.size() == 1) {
    const int a = proper[0];
    int b = near[0], c = near[1];
    if (*config.node(b).parent != a) std::swap(b, c);
    if (*config.node(b).parent != a || *config.node(c).parent != b)
      throw DomainError("base points do not form a chain of infinitely near points");
    if (is_satellite(config, c)) throw DomainError("last base point is satellite");
    q = {{a, b, c}, QuadKind::TypeIII};
  } else {
    throw DomainError("a quadratic map needs a proper base point");
  }
  if (config.on_common_line({ids[0], ids[1], ids[2]}))
    throw DomainError("base points are collinear");
  return q;
}

IntMatrix quadratic_action(std::size_t n, Triple idx) {
  for (auto i : idx)
    if (i >= n) throw DomainError("base index out of range");
  if (idx[0] == idx[1] || idx[0] == idx[2] || idx[1] == idx[2])
    throw DomainError("quadratic base indices must be distinct");
  IntMatrix a = identity_matrix(n + 1);
  a[0][0] = 2;
  for (auto i : idx) a[0][i + 1] = -1;
  for (auto i : idx) {
    auto& row = a[i + 1];
    row[i + 1] = 0;
    row[0] = 1;
    for (auto j : idx)
      if (j != i) row[j + 1] = -1;
  }
  return a;
}

DivisorClass quadratic_transform(const DivisorClass& c, Triple idx) {
  for (auto i : idx)
    if (i >= c.size()) throw DomainError("base index out of range");
  DivisorClass out = c;
  const Int s = checked::add(checked::add(c.mults[idx[0]], c.mults[idx[1]]), c.mults[idx[2]]);
  out.degree = checked::sub(checked::mul(2, c.degree), s);
  for (auto i : idx) out.mults[i] = checked::add(checked::sub(c.degree, s), c.mults[i]);
  return out;
}

static Triple indices_of(const PointConfig& config, const QuadraticMap& q) {
  return {config.index_of(q.base[0]), config.index_of(q.base[1]), config.index_of(q.base[2])};
}

DivisorClass quadratic_transform(const DivisorClass& c, const PointConfig& config, const QuadraticMap& q) {
  if (c.size() != config.size()) throw StructuralError("class and configuration sizes differ");
  return quadratic_transform(c, indices_of(config, q));
}

// Lines through two base points that exist as irreducible curves: both
// proper, or the second infinitely near the first (the tangent line).
static std::vector<DivisorClass> base_lines(const PointConfig& config, const QuadraticMap& q) {
  std::vector<DivisorClass> out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      const auto& u = config.node(q.base[a]);
      const auto& v = config.node(q.base[b]);
      if (u.parent) continue;
      const bool both_proper = !v.parent;
      if (both_proper && a > b) continue;
      if (!both_proper && *v.parent != u.id) continue;
      std::vector<std::size_t> idx{config.index_of(u.id), config.index_of(v.id)};
      for (const auto& line : config.collinear) {
        if (std::find(line.begin(), line.end(), u.id) == line.end()) continue;
        if (std::find(line.begin(), line.end(), v.id) == line.end()) continue;
        idx.clear();
        for (int id : line) idx.push_back(config.index_of(id));
      }
      out.push_back(line_through(config, idx));
    }
  return out;
}

QuadraticImage apply_quadratic(const PointConfig& config, const QuadraticMap& q) {
  // re-derive the kind so a stale map cannot slip through
  const QuadraticMap checked_q = make_quadratic(config, q.base);
  const std::size_t n = config.size();
  const Triple idx = indices_of(config, checked_q);
  const IntMatrix a0 = quadratic_action(n, idx);

  std::set<DivisorClass> source;
  for (auto& c : recorded_curves(config)) source.insert(c);
  for (auto& c : base_lines(config, checked_q)) source.insert(c);

  std::vector<std::set<std::size_t>> prox(n);  // prox[i] = slots that slot i is proximate to
  std::vector<int> component_count(n, 0);
  std::vector<std::vector<std::size_t>> lines;
  std::vector<DivisorClass> curves;
  for (const auto& s : source) {
    const DivisorClass t = act(a0, s);
    if (t.degree < 0) throw InternalInvariantError("irreducible curve mapped to negative degree " + to_string(t));
    if (t.degree == 0) {
      std::size_t head = n;
      std::vector<std::size_t> tail;
      for (std::size_t i = 0; i < n; ++i) {
        if (t.mults[i] == -1 && head == n) head = i;
        else if (t.mults[i] == 1) tail.push_back(i);
        else if (t.mults[i] != 0) throw InternalInvariantError("contracted curve " + to_string(t) + " is not an exceptional component");
      }
      if (head == n) throw InternalInvariantError("contracted curve " + to_string(t) + " has no point");
      ++component_count[head];
      for (auto j : tail) prox[j].insert(head);
      continue;
    }
    if (self_intersection(t) > -2) continue;
    if (t.degree == 1) {
      std::vector<std::size_t> on;
      for (std::size_t i = 0; i < n; ++i) {
        if (t.mults[i] == 1) on.push_back(i);
        else if (t.mults[i] != 0) throw InternalInvariantError("line with multiplicity: " + to_string(t));
      }
      lines.push_back(on);
    } else {
      curves.push_back(t);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (component_count[i] != 1)
      throw InternalInvariantError("point " + std::to_string(config.points[i].id) + " has " +
                                   std::to_string(component_count[i]) + " exceptional components");

  // parent of a point: among the points it is proximate to, the one that is
  // itself proximate to the other
  std::vector<std::optional<std::size_t>> parent(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (prox[i].empty()) continue;
    if (prox[i].size() > 2) throw InternalInvariantError("point proximate to more than two points");
    if (prox[i].size() == 1) { parent[i] = *prox[i].begin(); continue; }
    const std::size_t x = *prox[i].begin(), y = *std::next(prox[i].begin());
    if (prox[x].count(y)) parent[i] = x;
    else if (prox[y].count(x)) parent[i] = y;
    else throw InternalInvariantError("satellite point with unrelated proximities");
  }

  // stable topological order
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  while (order.size() < n) {
    bool progress = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (placed[i]) continue;
      bool ready = true;
      for (auto p : prox[i]) ready = ready && placed[p];
      if (!ready) continue;
      placed[i] = true;
      order.push_back(i);
      progress = true;
      break;
    }
    if (!progress) throw InternalInvariantError("proximity relation has a cycle");
  }

  QuadraticImage out;
  for (auto old : order) {
    PointNode node = config.points[old];
    node.parent.reset();
    node.proximate_to.clear();
    if (parent[old]) node.parent = config.points[*parent[old]].id;
    for (auto p : prox[old]) node.proximate_to.push_back(config.points[p].id);
    std::sort(node.proximate_to.begin(), node.proximate_to.end());
    if (std::find(idx.begin(), idx.end(), old) != idx.end()) node.generic = false;
    if (node.parent) node.generic = false;
    out.config.points.push_back(node);
  }
  for (const auto& l : lines) {
    std::vector<int> ids;
    for (auto i : l) ids.push_back(config.points[i].id);
    out.config.collinear.push_back(ids);
  }
  // position of old slot i in the new order
  std::vector<std::size_t> where(n);
  for (std::size_t k = 0; k < n; ++k) where[order[k]] = k;
  IntMatrix perm(n + 1, std::vector<Int>(n + 1, 0));
  perm[0][0] = 1;
  for (std::size_t i = 0; i < n; ++i) perm[where[i] + 1][i + 1] = 1;
  for (const auto& c : curves) out.config.curves.push_back(act(perm, c));
  for (auto& p : out.config.points)
    if (p.generic) {
      for (const auto& l : out.config.collinear)
        if (std::find(l.begin(), l.end(), p.id) != l.end()) p.generic = false;
      for (const auto& c : out.config.curves)
        if (c.mults[out.config.index_of(p.id)] != 0) p.generic = false;
    }
  out.config.validate();
  out.action = multiply(perm, a0);
  return out;
}

HomaloidalVerdict is_homaloidal(const DivisorClass& c, const PointConfig& config) {
  if (c.size() != config.size()) return {false, "class and configuration sizes differ"};
  if (c.degree < 1) return {false, "degree must be positive"};
  for (Int m : c.mults)
    if (m < 0) return {false, "negative multiplicity"};
  if (self_intersection(c) != 1) return {false, "d^2 - sum m_i^2 = " + std::to_string(self_intersection(c)) + ", expected 1"};
  const Int s = std::accumulate(c.mults.begin(), c.mults.end(), Int{0});
  if (s != 3 * (c.degree - 1)) return {false, "sum m_i = " + std::to_string(s) + ", expected 3(d-1)"};
  if (!proximity_check(c, config)) return {false, "proximity inequality fails"};
  if (c.degree >= 2) {
    const Int m0 = *std::max_element(c.mults.begin(), c.mults.end());
    if (3 * m0 <= c.degree) return {false, "3 m_0 <= d"};
  }
  // no recorded curve and no line through two points may split off
  for (const auto& curve : recorded_curves(config))
    if (intersect(c, curve) < 0) return {false, "net contains the curve " + to_string(curve)};
  for (std::size_t i = 0; i < config.size(); ++i) {
    const auto& u = config.points[i];
    if (u.parent) continue;
    for (std::size_t j = 0; j < config.size(); ++j) {
      const auto& v = config.points[j];
      if (j == i || (v.parent ? *v.parent != u.id : j < i)) continue;
      Int on = c.mults[i] + c.mults[j];
      for (const auto& line : config.collinear) {
        if (std::find(line.begin(), line.end(), u.id) == line.end() ||
            std::find(line.begin(), line.end(), v.id) == line.end())
          continue;
        on = 0;
        for (int id : line) on += c.mults[config.index_of(id)];
      }
      if (on > c.degree)
        return {false, "line through points " + std::to_string(u.id) + " and " + std::to_string(v.id) + " splits off"};
    }
  }
  return {true, ""};
}

HomaloidalNet de_jonquieres(Int d, const PointConfig& config) {
  if (d < 2) throw DomainError("De Jonquieres nets need d >= 2");
  if (config.size() != static_cast<std::size_t>(2 * d - 1))
    throw DomainError("De Jonquieres net of degree " + std::to_string(d) + " needs " + std::to_string(2 * d - 1) + " points");
  DivisorClass c(d, std::vector<Int>(config.size(), 1));
  c.mults[0] = d - 1;
  const auto v = is_homaloidal(c, config);
  if (!v.ok) throw DomainError("configuration does not carry a De Jonquieres net: " + v.reason);
  return {c, config};
}

static std::vector<std::size_t> sorted_by_multiplicity(const DivisorClass& c) {
  std::vector<std::size_t> order(c.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return c.mults[a] > c.mults[b]; });
  return order;
}

std::optional<ReductionStep> degree_reduction_step(const DivisorClass& c) {
  if (c.size() < 3) return std::nullopt;
  for (Int m : c.mults)
    if (m < 0) throw DomainError("degree reduction needs non-negative multiplicities");
  const auto order = sorted_by_multiplicity(c);
  const Int m1 = c.mults[order[0]], m3 = c.mults[order[2]];
  if (m3 < 1) return std::nullopt;
  const auto rec = numerical_record(c);
  const Int lhs = checked::mul(m3 - 1, rec.nu);
  const Int rhs = checked::mul(2 * m3, rec.genus - 1);
  bool applies = false;
  if (lhs > rhs) applies = true;
  else if (lhs == rhs) applies = m3 < m1 || c.degree != 3 * m3;
  if (!applies) return std::nullopt;
  const Triple base{order[0], order[1], order[2]};
  DivisorClass t = quadratic_transform(c, base);
  if (t.degree >= c.degree)
    throw InternalInvariantError("degree-lowering map did not lower the degree of " + to_string(c));
  return ReductionStep{base, t};
}

ExceptionalReduction reduce_to_exceptional(const DivisorClass& e) {
  if (self_intersection(e) != -1 || canonical_degree(e) != -1)
    throw DomainError(to_string(e) + " is not a (-1)-class");
  if (e.degree < 0) throw DomainError(to_string(e) + " has negative degree");
  ExceptionalReduction out;
  DivisorClass cur = e;
  if (cur.degree >= 1 && cur.size() < 3) cur = cur.padded(3);
  out.n_points = cur.size();
  const Int start = cur.degree;
  while (cur.degree >= 2) {
    auto step = degree_reduction_step(cur);
    if (!step) throw InternalInvariantError("no degree-lowering map for (-1)-class " + to_string(cur));
    out.steps.push_back(step->base);
    cur = step->result;
  }
  if (cur.degree == 1) {
    // a line through two points
    std::vector<std::size_t> on, off;
    for (std::size_t i = 0; i < cur.size(); ++i) (cur.mults[i] == 1 ? on : off).push_back(i);
    if (on.size() != 2 || off.empty()) throw InternalInvariantError("degree-1 (-1)-class is not a line through two points");
    const Triple base{on[0], on[1], off[0]};
    out.steps.push_back(base);
    cur = quadratic_transform(cur, base);
  }
  if (static_cast<Int>(out.steps.size()) > std::max<Int>(start, 0))
    throw InternalInvariantError("reduction took more steps than the degree");
  int minus = 0;
  for (Int m : cur.mults) {
    if (m == -1) ++minus;
    else if (m != 0) throw InternalInvariantError("reduction ended at a non-exceptional class");
  }
  if (cur.degree != 0 || minus != 1) throw InternalInvariantError("reduction ended at " + to_string(cur));
  out.result = cur;
  return out;
}

OrbitVerdict orbit_unbounded(const DivisorClass& c) {
  if (c.size() < 9) throw DomainError("orbit test needs at least 9 points");
  const auto rec = numerical_record(c);
  if (rec.nu < 2 * rec.genus - 2) throw DomainError("orbit test needs nu >= 2g - 2");
  const bool all_equal = std::all_of(c.mults.begin(), c.mults.end(), [&](Int m) { return m == c.mults[0]; });
  if (c.size() == 9 && all_equal && c.degree == 3 * c.mults[0]) return {};
  auto order = sorted_by_multiplicity(c);
  const std::size_t n = order.size();
  const Triple base{order[n - 1], order[n - 2], order[n - 3]};
  DivisorClass t = quadratic_transform(c, base);
  if (t.degree <= c.degree) throw InternalInvariantError("smallest three multiplicities do not raise the degree");
  return {true, base, t};
}

}  // namespace birat
