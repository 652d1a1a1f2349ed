#include "birat/points.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace birat {

PointConfig PointConfig::general(std::size_t n) {
  PointConfig c;
  for (std::size_t i = 0; i < n; ++i) c.points.push_back({static_cast<int>(i), std::nullopt, {}, false});
  return c;
}

std::size_t PointConfig::index_of(int id) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].id == id) return i;
  throw DomainError("unknown point id " + std::to_string(id));
}

bool PointConfig::contains(int id) const {
  return std::any_of(points.begin(), points.end(), [id](const PointNode& p) { return p.id == id; });
}

int PointConfig::next_id() const {
  int m = -1;
  for (const auto& p : points) m = std::max(m, p.id);
  return m + 1;
}

int PointConfig::add_generic_point() {
  const int id = next_id();
  points.push_back({id, std::nullopt, {}, true});
  for (auto& c : curves) c.mults.push_back(0);
  return id;
}

int PointConfig::depth(int id) const {
  int d = 0;
  const PointNode* p = &node(id);
  while (p->parent) {
    p = &node(*p->parent);
    ++d;
  }
  return d;
}

std::vector<std::size_t> PointConfig::proximate_points(std::size_t i) const {
  std::vector<std::size_t> out;
  const int id = points[i].id;
  for (std::size_t j = i + 1; j < points.size(); ++j) {
    const auto& pr = points[j].proximate_to;
    if (std::find(pr.begin(), pr.end(), id) != pr.end()) out.push_back(j);
  }
  return out;
}

bool PointConfig::on_common_line(const std::vector<int>& ids) const {
  for (const auto& line : collinear) {
    bool all = true;
    for (int id : ids)
      if (std::find(line.begin(), line.end(), id) == line.end()) { all = false; break; }
    if (all) return true;
  }
  return false;
}

static void merge_lines(std::vector<std::vector<int>>& lines) {
  std::vector<std::set<int>> sets;
  for (const auto& l : lines) sets.emplace_back(l.begin(), l.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < sets.size() && !changed; ++a)
      for (std::size_t b = a + 1; b < sets.size() && !changed; ++b) {
        int shared = 0;
        for (int x : sets[b]) shared += static_cast<int>(sets[a].count(x));
        if (shared >= 2) {
          sets[a].insert(sets[b].begin(), sets[b].end());
          sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(b));
          changed = true;
        }
      }
  }
  lines.clear();
  for (const auto& s : sets) lines.emplace_back(s.begin(), s.end());
  std::sort(lines.begin(), lines.end());
}

void PointConfig::validate() {
  std::set<int> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    const std::string who = "point " + std::to_string(p.id);
    if (!seen.insert(p.id).second) throw DomainError("duplicate " + who);
    std::set<int> prox(p.proximate_to.begin(), p.proximate_to.end());
    if (prox.size() != p.proximate_to.size()) throw DomainError(who + " lists a proximity twice");
    if (!p.parent) {
      if (!prox.empty()) throw DomainError(who + " is proper but proximate to another point");
      continue;
    }
    if (!seen.count(*p.parent) || *p.parent == p.id)
      throw DomainError(who + " must come after its parent");
    if (!prox.count(*p.parent)) throw DomainError(who + " is not proximate to its parent");
    if (prox.size() > 2) throw DomainError(who + " is proximate to more than two points");
    if (p.generic) throw DomainError(who + " is flagged generic but is infinitely near");
    const auto& parent = points[index_of(*p.parent)];
    for (int q : prox) {
      if (!seen.count(q) || q == p.id) throw DomainError(who + " must come after the points it is proximate to");
      if (q == *p.parent) continue;
      // a satellite point lies on the strict transform of an earlier
      // exceptional curve, which must pass through its parent
      const auto& pp = parent.proximate_to;
      if (std::find(pp.begin(), pp.end(), q) == pp.end())
        throw DomainError(who + " is proximate to " + std::to_string(q) + " but its parent is not");
    }
  }

  // E_p meets the strict transform of E_q in one point
  std::set<std::pair<int, int>> corners;
  for (const auto& p : points)
    if (p.proximate_to.size() == 2) {
      const int other = p.proximate_to[0] == *p.parent ? p.proximate_to[1] : p.proximate_to[0];
      if (!corners.insert({*p.parent, other}).second)
        throw DomainError("two points are satellite to " + std::to_string(other) + " on the exceptional curve of " +
                          std::to_string(*p.parent));
    }

  for (auto& line : collinear) {
    std::set<int> s(line.begin(), line.end());
    if (s.size() < 3) throw DomainError("a collinear set needs three distinct points");
    line.assign(s.begin(), s.end());
  }
  merge_lines(collinear);
  for (const auto& line : collinear) {
    std::set<int> parents;
    for (int id : line) {
      const auto& p = node(id);
      if (p.generic) throw DomainError("generic point " + std::to_string(id) + " lies on a declared line");
      if (p.proximate_to.size() == 2)
        throw DomainError("satellite point " + std::to_string(id) + " cannot lie on a line");
      if (p.parent) {
        if (std::find(line.begin(), line.end(), *p.parent) == line.end())
          throw DomainError("line through " + std::to_string(id) + " must pass through its parent");
        if (!parents.insert(*p.parent).second)
          throw DomainError("a line has one direction at " + std::to_string(*p.parent));
      }
    }
  }
  for (const auto& c : curves) {
    if (c.size() != points.size()) throw DomainError("declared curve has the wrong number of points");
    if (c.degree < 2) throw DomainError("declared curves must have degree >= 2; use collinear for lines");
    if (self_intersection(c) > -2) throw DomainError("declared curve " + to_string(c) + " is not special");
    for (std::size_t i = 0; i < points.size(); ++i)
      if (c.mults[i] != 0 && points[i].generic)
        throw DomainError("generic point " + std::to_string(points[i].id) + " lies on a declared curve");
  }
}

bool is_satellite(const PointConfig& config, int id) { return config.node(id).proximate_to.size() == 2; }

bool proximity_check(const DivisorClass& c, const PointConfig& config) {
  if (c.size() != config.size()) throw StructuralError("class and configuration sizes differ");
  for (std::size_t i = 0; i < config.size(); ++i) {
    Int s = 0;
    for (auto j : config.proximate_points(i)) s = checked::add(s, c.mults[j]);
    if (c.mults[i] < s) return false;
  }
  return true;
}

bool multiplicities_monotone(const DivisorClass& c, const PointConfig& config) {
  if (c.size() != config.size()) throw StructuralError("class and configuration sizes differ");
  for (std::size_t i = 0; i < config.size(); ++i) {
    const auto& p = config.points[i];
    if (p.parent && c.mults[i] > c.mults[config.index_of(*p.parent)]) return false;
  }
  return true;
}

DivisorClass exceptional_component(const PointConfig& config, std::size_t i) {
  DivisorClass c = DivisorClass::exceptional(config.size(), i);
  for (auto j : config.proximate_points(i)) c.mults[j] = 1;
  return c;
}

DivisorClass line_through(const PointConfig& config, const std::vector<std::size_t>& idx) {
  DivisorClass c = DivisorClass::line(config.size());
  for (auto i : idx) c.mults[i] = 1;
  return c;
}

std::vector<DivisorClass> recorded_curves(const PointConfig& config) {
  std::vector<DivisorClass> out;
  for (std::size_t i = 0; i < config.size(); ++i) out.push_back(exceptional_component(config, i));
  for (const auto& line : config.collinear) {
    std::vector<std::size_t> idx;
    for (int id : line) idx.push_back(config.index_of(id));
    out.push_back(line_through(config, idx));
  }
  for (const auto& c : config.curves) out.push_back(c);
  return out;
}

}  // namespace birat
