#include "birat/sarkisov.hpp"

#include <algorithm>

namespace birat {

std::string to_string(const MoriFibreSpace& m) {
  switch (m.kind) {
    case MfsKind::PlaneOverPoint: return "P2";
    case MfsKind::ScrollOverLine: return "F" + std::to_string(m.e);
    case MfsKind::QuadricRulingA: return "P1xP1/A";
    case MfsKind::QuadricRulingB: return "P1xP1/B";
  }
  return "?";
}

std::string to_string(const SarkisovDegree& d) {
  return "(" + to_string(d.mu) + "," + std::to_string(d.lambda) + "," + (d.ell ? std::to_string(*d.ell) : "*") + ")";
}

bool degree_less(const SarkisovDegree& a, const SarkisovDegree& b) {
  if (a.mu != b.mu) return a.mu < b.mu;
  if (a.lambda != b.lambda) return a.lambda < b.lambda;
  return a.ell.value_or(0) < b.ell.value_or(0);
}

const char* to_string(LinkKind k) {
  switch (k) {
    case LinkKind::I: return "I";
    case LinkKind::II: return "II";
    case LinkKind::III: return "III";
    case LinkKind::IV: return "IV";
  }
  return "?";
}

static bool on_plane(const SarkisovState& s) { return s.mfs.kind == MfsKind::PlaneOverPoint; }

SarkisovState initial_state(const DivisorClass& net, const PointConfig& config) {
  if (net.size() != config.size()) throw StructuralError("net and configuration sizes differ");
  SarkisovState s;
  s.config = config;
  s.net = net;
  const std::size_t n = config.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = config.points[i];
    s.contracted.push_back({p.id, DivisorClass::exceptional(n, i), p.parent});
  }
  s.line = DivisorClass::line(n);
  s.fibre = s.section = s.section_curve = DivisorClass::zero(n);
  s.next_label = config.next_id();
  return s;
}

Int point_multiplicity(const SarkisovState& s, const ContractedPoint& p) { return intersect(s.net, p.cls); }

// pullbacks to X of K_S and of the net on S
static DivisorClass pullback_canonical(const SarkisovState& s) {
  DivisorClass k = canonical_class(s.config.size());
  for (const auto& p : s.contracted) k = k - p.cls;
  return k;
}

static DivisorClass pullback_net(const SarkisovState& s) {
  DivisorClass d = s.net;
  for (const auto& p : s.contracted) d = d + point_multiplicity(s, p) * p.cls;
  return d;
}

static Rational threshold(const SarkisovState& s) {
  const DivisorClass k = pullback_canonical(s);
  const DivisorClass d = pullback_net(s);
  Rational mu;
  if (on_plane(s)) {
    if (intersect(k, s.line) != -3) throw InternalInvariantError("K.L != -3 on the plane");
    mu = Rational(intersect(d, s.line), 3);
  } else {
    if (intersect(k, s.fibre) != -2) throw InternalInvariantError("K.F != -2 on a ruled model");
    mu = Rational(intersect(d, s.fibre), 2);
  }
  if (mu <= 0) throw InternalInvariantError("quasi-effective threshold " + to_string(mu) + " is not positive");
  if (6 % boost::multiprecision::denominator(mu) != 0)
    throw InternalInvariantError("threshold " + to_string(mu) + " is not in 1/6 Z");
  return mu;
}

SarkisovDegree sarkisov_degree(const SarkisovState& s) {
  SarkisovDegree d;
  d.mu = threshold(s);
  Int count = 0;
  for (const auto& p : s.contracted) {
    const Int b = point_multiplicity(s, p);
    if (b < 0) throw InternalInvariantError("negative multiplicity at point " + std::to_string(p.label));
    if (b > d.lambda) {
      d.lambda = b;
      count = 1;
    } else if (b == d.lambda) {
      ++count;
    }
  }
  if (d.lambda > 0) d.ell = count;
  return d;
}

static Rational adjoint_against(const SarkisovState& s, const Rational& mu, const DivisorClass& r) {
  return Rational(intersect(pullback_canonical(s), r)) + Rational(intersect(pullback_net(s), r)) / mu;
}

bool nef_adjoint_check(const SarkisovState& s) {
  const Rational mu = threshold(s);
  if (on_plane(s)) return adjoint_against(s, mu, s.line) >= 0;
  return adjoint_against(s, mu, s.fibre) >= 0 && adjoint_against(s, mu, s.section) >= 0;
}

bool sarkisov_terminal(const SarkisovState& s) {
  const auto d = sarkisov_degree(s);
  return d.lambda <= d.mu && nef_adjoint_check(s);
}

static void release_children(SarkisovState& s, int label) {
  for (auto& p : s.contracted)
    if (p.parent == label) p.parent.reset();
}

// Strict transform on X of the exceptional curve of a contracted point.
static DivisorClass exceptional_curve(const SarkisovState& s, const ContractedPoint& x) {
  const std::size_t n = s.config.size();
  for (std::size_t i = 0; i < n; ++i)
    if (x.cls == DivisorClass::exceptional(n, i)) return exceptional_component(s.config, i);
  DivisorClass c = x.cls;
  for (const auto& p : s.contracted)
    if (p.parent == x.label) c = c - p.cls;
  return c;
}

// An elementary transformation is modelled only when the fibre through x
// carries no other point blown up by X: its strict transform on X is then
// F - E_x, and no recorded curve is another component through x.
static void require_clean_fibre(const SarkisovState& s, const ContractedPoint& x) {
  const DivisorClass clean = s.fibre - x.cls;
  for (const auto& r : recorded_curves(s.config)) {
    if (intersect(r, s.fibre) != 0 || intersect(r, x.cls) <= 0 || r == clean) continue;
    throw DomainError("the fibre through point " + std::to_string(x.label) +
                      " passes through further base points; this elementary transformation is not modelled");
  }
}

std::pair<SarkisovLink, SarkisovState> untwist_step(const SarkisovState& s) {
  const SarkisovDegree deg = sarkisov_degree(s);
  const bool nef = nef_adjoint_check(s);
  if (deg.lambda <= deg.mu && nef) throw DomainError("the map is already an isomorphism");

  SarkisovState t = s;
  SarkisovLink link;
  if (deg.lambda > deg.mu) {
    const ContractedPoint* x = nullptr;
    for (const auto& p : s.contracted)
      if (point_multiplicity(s, p) == deg.lambda && !p.parent && (!x || p.label < x->label)) x = &p;
    if (!x) throw InternalInvariantError("maximal multiplicity is not attained at a proper point");
    const Int lambda = deg.lambda;
    link.center = x->label;
    const ContractedPoint xp = *x;
    t.contracted.erase(std::find_if(t.contracted.begin(), t.contracted.end(),
                                    [&](const ContractedPoint& p) { return p.label == xp.label; }));
    release_children(t, xp.label);
    if (on_plane(s)) {
      link.kind = LinkKind::I;
      t.mfs = {MfsKind::ScrollOverLine, 1};
      t.fibre = s.line - xp.cls;
      t.section = xp.cls;
      t.section_curve = exceptional_curve(s, xp);
      t.line = DivisorClass::zero(s.config.size());
    } else {
      link.kind = LinkKind::II;
      require_clean_fibre(s, xp);
      const ContractedPoint x1{xp.label, s.fibre - xp.cls, std::nullopt};
      t.contracted.push_back(x1);
      if (2 * deg.mu - lambda != Rational(point_multiplicity(t, x1)))
        throw InternalInvariantError("new point does not have multiplicity 2 mu - lambda");
      if (s.mfs.kind == MfsKind::ScrollOverLine) {
        if (intersect(s.section_curve, xp.cls) > 0) {
          t.section = s.section - xp.cls;
          t.mfs.e = s.mfs.e + 1;
        } else {
          t.section = s.section + s.fibre - xp.cls;
          t.mfs.e = s.mfs.e - 1;
        }
      } else {
        t.section = s.section - xp.cls;
        t.section_curve = t.section;
        t.mfs.e = 1;
      }
      t.mfs.kind = t.mfs.e == 0 ? MfsKind::QuadricRulingA : MfsKind::ScrollOverLine;
      if (self_intersection(t.section) != -t.mfs.e)
        throw InternalInvariantError("section of F_" + std::to_string(t.mfs.e) + " has square " +
                                     std::to_string(self_intersection(t.section)));
    }
  } else {
    const Rational mu = deg.mu;
    if (on_plane(s)) throw InternalInvariantError("adjoint is not nef on the plane");
    if (adjoint_against(s, mu, s.section) >= 0) throw InternalInvariantError("fibre direction is adjoint negative");
    if (s.mfs.kind == MfsKind::ScrollOverLine) {
      if (s.mfs.e != 1) throw InternalInvariantError("adjoint negative on the section of F_" + std::to_string(s.mfs.e));
      // contract the (-1)-section
      link.kind = LinkKind::III;
      const int label = t.next_label++;
      for (auto& p : t.contracted)
        if (!p.parent && intersect(s.section_curve, p.cls) > 0) p.parent = label;
      t.contracted.push_back({label, s.section, std::nullopt});
      t.line = s.fibre + s.section;
      t.mfs = {MfsKind::PlaneOverPoint, 0};
      t.fibre = t.section = t.section_curve = DivisorClass::zero(s.config.size());
    } else {
      link.kind = LinkKind::IV;
      std::swap(t.fibre, t.section);
      t.section_curve = t.section;
      t.mfs.kind = s.mfs.kind == MfsKind::QuadricRulingA ? MfsKind::QuadricRulingB : MfsKind::QuadricRulingA;
    }
  }
  link.result = t.mfs;
  link.degree = sarkisov_degree(t);
  if (!degree_less(link.degree, deg))
    throw InternalInvariantError(std::string("link ") + to_string(link.kind) + " did not lower the degree " +
                                 to_string(deg) + " -> " + to_string(link.degree));
  return {link, t};
}

SarkisovTrace run_sarkisov(const DivisorClass& net, const PointConfig& config) {
  const auto v = is_homaloidal(net, config);
  if (!v.ok) throw DomainError("not a homaloidal net: " + v.reason);
  if (!multiplicities_monotone(net, config))
    throw DomainError("an infinitely near point has larger multiplicity than its parent");
  SarkisovTrace tr;
  SarkisovState s = initial_state(net, config);
  tr.initial = sarkisov_degree(s);
  while (!sarkisov_terminal(s)) {
    auto [link, next] = untwist_step(s);
    tr.links.push_back(link);
    s = std::move(next);
  }
  // Noether-Fano: the last model is the plane and the net is its lines
  if (!on_plane(s) || pullback_net(s) != s.line)
    throw InternalInvariantError("untwisting stopped on " + to_string(s.mfs) + " without reaching the lines");
  tr.final_state = std::move(s);
  return tr;
}

}  // namespace birat
