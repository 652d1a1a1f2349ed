#include "birat/factorization.hpp"

#include <algorithm>
#include <numeric>

namespace birat {

std::string to_string(const Simplicity& s) {
  return "(" + std::to_string(s.k) + "," + std::to_string(s.h) + "," + std::to_string(s.s) + ")";
}

const char* to_string(Terminal t) { return t == Terminal::Linear ? "linear" : "quadratic"; }

std::vector<std::size_t> multiplicity_order(const DivisorClass& c) {
  std::vector<std::size_t> order(c.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return c.mults[a] > c.mults[b]; });
  return order;
}

Simplicity simplicity(const HomaloidalNet& net) {
  const auto& c = net.cls;
  if (c.size() != net.config.size()) throw StructuralError("class and configuration sizes differ");
  const auto order = multiplicity_order(c);
  const Int m0 = order.empty() ? 0 : c.mults[order[0]];
  Simplicity s;
  s.k = checked::sub(c.degree, m0);
  s.h = -1;
  for (std::size_t t = 0; t < order.size(); ++t)
    if (2 * c.mults[order[t]] > s.k) s.h = static_cast<Int>(t);
  for (Int t = 0; t <= s.h; ++t)
    if (is_satellite(net.config, net.config.points[order[t]].id)) ++s.s;
  return s;
}

static void require_net(const HomaloidalNet& net) {
  const auto v = is_homaloidal(net.cls, net.config);
  if (!v.ok) throw DomainError("not a homaloidal net: " + v.reason);
  if (!multiplicities_monotone(net.cls, net.config))
    throw DomainError("an infinitely near point has larger multiplicity than its parent");
}

static void check_after(const HomaloidalNet& net) {
  const auto rec = numerical_record(net.cls);
  if (rec.nu != 1 || rec.genus != 0)
    throw InternalInvariantError("transformed net " + to_string(net.cls) + " lost nu = 1, g = 0");
  const auto v = is_homaloidal(net.cls, net.config);
  if (!v.ok) throw InternalInvariantError("transformed net " + to_string(net.cls) + " is not homaloidal: " + v.reason);
}

NcStep nc_step(const HomaloidalNet& net) {
  if (net.cls.degree <= 2)
    throw DomainError(net.cls.degree == 2 ? "net is already quadratic" : "net is already linear");
  require_net(net);
  const Simplicity s0 = simplicity(net);
  if (s0.h < 2) throw InternalInvariantError("h < 2 for " + to_string(net.cls));
  const auto order = multiplicity_order(net.cls);
  const auto& cfg = net.config;
  auto pid = [&](Int t) { return cfg.points[order[t]].id; };
  const int p0 = pid(0);

  NcStep step;
  step.before = net;
  bool found = false;
  for (Int i = 1; i <= s0.h && !found; ++i)
    for (Int j = i + 1; j <= s0.h && !found; ++j) {
      if (is_satellite(cfg, pid(i)) || is_satellite(cfg, pid(j))) continue;
      try {
        step.map = make_quadratic(cfg, {p0, pid(i), pid(j)});
        step.nc_case = 1;
        found = true;
      } catch (const DomainError&) {
      }
    }
  for (Int i = 1; i <= s0.h && !found; ++i)
    for (Int j = i + 1; j <= s0.h && !found; ++j) {
      const auto& pi = cfg.node(pid(i));
      const auto& pj = cfg.node(pid(j));
      if (pi.parent != p0 || pj.parent != pi.id) continue;
      if (std::find(pj.proximate_to.begin(), pj.proximate_to.end(), p0) == pj.proximate_to.end()) continue;
      const int q = step.before.config.add_generic_point();
      step.before.cls = step.before.cls.padded(step.before.config.size());
      step.map = make_quadratic(step.before.config, {p0, pi.id, q});
      step.nc_case = 2;
      found = true;
    }
  if (!found) throw DomainError("no quadratic map lowers the simplicity of " + to_string(net.cls) +
                                "; the configuration cannot carry this net");

  const QuadraticImage img = apply_quadratic(step.before.config, step.map);
  step.action = img.action;
  step.after = {act(img.action, step.before.cls), img.config};
  check_after(step.after);
  step.simplicity = simplicity(step.after);
  if (!(step.simplicity < s0))
    throw InternalInvariantError("simplicity " + to_string(s0) + " did not drop, got " + to_string(step.simplicity));
  return step;
}

FactorizationTrace factor(const HomaloidalNet& net) {
  require_net(net);
  FactorizationTrace t;
  t.input = net;
  t.initial = simplicity(net);
  HomaloidalNet cur = net;
  while (cur.cls.degree >= 3) {
    t.steps.push_back(nc_step(cur));
    cur = t.steps.back().after;
  }
  if (cur.cls.degree == 2) {
    t.terminal = Terminal::Quadratic;
    const auto order = multiplicity_order(cur.cls);
    const auto& cfg = cur.config;
    t.closing = make_quadratic(cfg, {cfg.points[order[0]].id, cfg.points[order[1]].id, cfg.points[order[2]].id});
    const QuadraticImage img = apply_quadratic(cfg, *t.closing);
    t.closing_action = img.action;
    cur = {act(img.action, cur.cls), img.config};
  } else {
    t.terminal = Terminal::Linear;
  }
  if (cur.cls != DivisorClass::line(cur.config.size()))
    throw InternalInvariantError("descent ended at " + to_string(cur.cls) + " instead of the lines");
  t.final_net = cur;
  return t;
}

IntMatrix composed_action(const FactorizationTrace& t) {
  const std::size_t n = t.final_net.config.size();
  IntMatrix m = identity_matrix(n + 1);
  for (const auto& s : t.steps) m = multiply(pad_action(s.action, n), m);
  if (t.closing) m = multiply(pad_action(t.closing_action, n), m);
  return m;
}

IntMatrix inverse_isometry(const IntMatrix& a) {
  const std::size_t n = a.size();
  IntMatrix out(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Int sign = ((i == 0) == (j == 0)) ? 1 : -1;
      out[i][j] = sign * a[j][i];
    }
  return out;
}

bool is_point_permutation(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0 || a[0][0] != 1) return false;
  for (std::size_t i = 1; i < n; ++i)
    if (a[0][i] != 0 || a[i][0] != 0) return false;
  std::vector<int> col(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    int ones = 0;
    for (std::size_t j = 1; j < n; ++j) {
      if (a[i][j] == 1) {
        ++ones;
        ++col[j];
      } else if (a[i][j] != 0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  for (std::size_t j = 1; j < n; ++j)
    if (col[j] != 1) return false;
  return true;
}

static QuadraticDecomposition decompose_rec(const PointConfig& config, const QuadraticMap& q) {
  const QuadraticMap qq = make_quadratic(config, q.base);
  QuadraticDecomposition out;
  if (qq.kind == QuadKind::TypeI) {
    const QuadraticImage img = apply_quadratic(config, qq);
    out.maps = {qq};
    out.sources = {config};
    out.extended = config;
    out.target = img.config;
    out.action = img.action;
    return out;
  }
  const auto [a, b, c] = qq.base;
  PointConfig ext = config;
  const int x = ext.add_generic_point();
  // type II (a, b > a, c): a map at a, c and a general point makes b proper.
  // type III (a, b, c): a type II map at a, b and a general point makes the
  // base a type II triple.
  const QuadraticMap gamma = make_quadratic(ext, qq.kind == QuadKind::TypeII ? std::array<int, 3>{a, c, x}
                                                                            : std::array<int, 3>{a, b, x});
  QuadraticDecomposition first = decompose_rec(ext, gamma);
  // the factors of gamma reach its target only up to relabelling the points;
  // find where the slots of a, b, c went
  const QuadraticImage own = apply_quadratic(ext, gamma);
  const std::size_t m = first.extended.size();
  const IntMatrix rel = multiply(first.action, inverse_isometry(pad_action(own.action, m)));
  if (!is_point_permutation(rel)) throw InternalInvariantError("factors of a quadratic map disagree with it");
  std::array<int, 3> ids{a, b, c};
  for (int& id : ids) {
    const std::size_t i = own.config.index_of(id);
    std::size_t j = 0;
    while (rel[j + 1][i + 1] != 1) ++j;
    id = first.target.points[j].id;
  }
  const QuadraticMap beta = make_quadratic(first.target, ids);
  const QuadKind expected = qq.kind == QuadKind::TypeII ? QuadKind::TypeI : QuadKind::TypeII;
  if (beta.kind != expected)
    throw InternalInvariantError(std::string("residual map has type ") + to_string(beta.kind) + ", expected " +
                                 to_string(expected));
  QuadraticDecomposition second = decompose_rec(first.target, beta);
  out.maps = first.maps;
  out.maps.insert(out.maps.end(), second.maps.begin(), second.maps.end());
  out.sources = first.sources;
  out.sources.insert(out.sources.end(), second.sources.begin(), second.sources.end());
  out.extended = first.extended;
  for (std::size_t i = out.extended.size(); i < second.extended.size(); ++i) {
    const int id = out.extended.add_generic_point();
    if (id != second.extended.points[i].id) throw InternalInvariantError("auxiliary point ids diverged");
  }
  out.target = second.target;
  out.action = multiply(second.action, pad_action(first.action, second.extended.size()));
  return out;
}

QuadraticDecomposition decompose_quadratic(const PointConfig& config, const QuadraticMap& q) {
  const QuadraticMap qq = make_quadratic(config, q.base);
  if (qq.kind == QuadKind::TypeI) throw DomainError("map is already of type I");
  QuadraticDecomposition out = decompose_rec(config, qq);
  const std::size_t want = qq.kind == QuadKind::TypeII ? 2 : 4;
  if (out.maps.size() != want)
    throw InternalInvariantError("decomposition has " + std::to_string(out.maps.size()) + " maps");
  // same lattice action as q up to relabelling the points
  const IntMatrix own = apply_quadratic(out.extended, qq).action;
  if (!is_point_permutation(multiply(out.action, inverse_isometry(own))))
    throw InternalInvariantError("decomposition does not reproduce the action of the map");
  return out;
}

}  // namespace birat
