// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "birat/cli.hpp"
#include "birat/json_io.hpp"
#include "oracles.hpp"

using namespace birat;

namespace {

struct Criterion {
  std::string id;
  std::string what;
  double limit_s;  // 0: no limit
  std::function<bool(std::string&)> run;
};

SarkisovDegree deg(Int num, Int den, Int lambda, std::optional<Int> ell) { return {Rational(num) / den, lambda, ell}; }

bool ac1(std::string& why) {
  const auto t = run_sarkisov({2, {1, 1, 1}}, PointConfig::general(3));
  const std::vector<LinkKind> kinds = {LinkKind::I, LinkKind::II, LinkKind::II, LinkKind::III};
  const std::vector<SarkisovDegree> degrees = {deg(1, 2, 1, 2), deg(1, 2, 1, 1), deg(1, 2, 0, std::nullopt),
                                               deg(1, 3, 0, std::nullopt)};
  if (!(t.initial == deg(2, 3, 1, 3))) return why = "initial degree " + to_string(t.initial), false;
  if (t.links.size() != 4) return why = std::to_string(t.links.size()) + " links", false;
  for (std::size_t i = 0; i < 4; ++i)
    if (t.links[i].kind != kinds[i] || !(t.links[i].degree == degrees[i]))
      return why = "link " + std::to_string(i + 1) + " differs", false;
  // and through the command line on the shipped fixture
  const std::string path = std::string(BIRAT_FIXTURES) + "/standard-quadratic.json";
  const char* argv[] = {"birat-surf", "sarkisov", "--net", path.c_str()};
  std::ostringstream out, err;
  if (run_cli(4, argv, out, err) != 0) return why = err.str(), false;
  const std::string expect =
      "I  0  F1  (2/3,1,3) -> (1/2,1,2)\n"
      "II  1  P1xP1/A  (1/2,1,2) -> (1/2,1,1)\n"
      "II  2  F1  (1/2,1,1) -> (1/2,0,*)\n"
      "III  -  P2  (1/2,0,*) -> (1/3,0,*)\n";
  if (out.str() != expect) return why = "CLI output differs", false;
  return true;
}

bool ac2(std::string& why) {
  const auto a = plurigenus_table({0, 0, {2, 6, 6}, true}, 13).values;
  const auto b = plurigenus_table({0, 0, {2, 5, 10}, true}, 13).values;
  const std::vector<Int> first = {0, 0, 0, 1, 1, 2};
  for (std::size_t i = 0; i < 6; ++i)
    if (a[i] != first[i]) return why = "(2,6,6) P_" + std::to_string(i + 1), false;
  if (a[12] != 1) return why = "(2,6,6) P_13", false;
  const std::map<std::size_t, Int> second = {{8, 2}, {9, 2}, {10, 3}, {11, 1}, {12, 2}, {13, 2}};
  for (const auto& [n, p] : second)
    if (b[n - 1] != p) return why = "(2,5,10) P_" + std::to_string(n), false;
  return true;
}

bool ac3(std::string& why) {
  const Int g1 = riemann_hurwitz_genus({12, 0, {2, 6, 6}}), g2 = riemann_hurwitz_genus({10, 0, {2, 5, 10}});
  why = "genera " + std::to_string(g1) + ", " + std::to_string(g2);
  return g1 == 2 && g2 == 2;
}

bool ac4(std::string& why) {
  const std::vector<Int> expect = {2, 2, 4, 4, 3, 3, 6};
  const std::vector<BdF> all = {BdF::I, BdF::II, BdF::III, BdF::IV, BdF::V, BdF::VI, BdF::VII};
  for (std::size_t i = 0; i < all.size(); ++i)
    if (bdf_minimal_power(BdFCase{all[i]}) != expect[i]) return why = std::string("case ") + to_string(all[i]), false;
  if (invariant_degree({3, 0, {3, 3, 3}}, 3) != 0) return why = "l_3 for (3,3,3)", false;
  if (invariant_degree({6, 0, {2, 3, 6}}, 6) != 0) return why = "l_6 for (2,3,6)", false;
  return true;
}

bool rel(const DivisorClass& c) {
  const Int sum = std::accumulate(c.mults.begin(), c.mults.end(), Int{0});
  return oracle::dot(c, c) == 1 && 3 * (c.degree - 1) == sum;
}

bool ac5(std::string& why) {
  int nets = 0;
  while (nets < 250) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(3, 8));
    const int len = static_cast<int>(oracle::uniform(1, 8));
    const auto w = nets % 2 ? oracle::raising_word_net(n, len) : oracle::random_word_net(n, len);
    if (std::any_of(w.cls.mults.begin(), w.cls.mults.end(), [](Int m) { return m < 0; })) continue;
    ++nets;
    const FactorizationTrace t = factor({w.cls, PointConfig::general(n)});
    Simplicity prev = t.initial;
    for (const auto& s : t.steps) {
      if (!(s.simplicity < prev)) return why = "no descent on " + to_string(w.cls), false;
      if (!rel(s.after.cls)) return why = "homaloidal relations fail on " + to_string(s.after.cls), false;
      prev = s.simplicity;
    }
    const IntMatrix A = composed_action(t);
    if (act(A, w.cls.padded(A.size() - 1)) != DivisorClass::line(A.size() - 1))
      return why = "composed action misses the lines for " + to_string(w.cls), false;
  }
  why = std::to_string(nets) + " nets";
  return true;
}

bool ac6(std::string& why) {
  const std::vector<std::size_t> counts = {1, 3, 6, 10, 16, 27, 56, 240};
  for (int n = 1; n <= 8; ++n) {
    const auto v = enumerate_minus_one_classes(n);
    if (v.size() != counts[static_cast<std::size_t>(n - 1)]) return why = "n = " + std::to_string(n), false;
    for (const auto& e : v)
      if (reduce_to_exceptional(e).result.degree != 0) return why = "no reduction for " + to_string(e), false;
  }
  return true;
}

FibreMatrix random_fibre(std::size_t n) {
  FibreMatrix f;
  Int l = 1;
  for (std::size_t i = 0; i < n; ++i) {
    f.weights.push_back(oracle::uniform(1, 4));
    l = std::lcm(l, f.weights.back());
  }
  f.gram.assign(n, std::vector<Int>(n, 0));
  for (std::size_t i = 1; i < n; ++i) {
    const auto j = static_cast<std::size_t>(oracle::uniform(0, static_cast<Int>(i) - 1));
    f.gram[i][j] = f.gram[j][i] = l * oracle::uniform(1, 3);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (f.gram[i][j] == 0 && oracle::uniform(0, 3) == 0) f.gram[i][j] = f.gram[j][i] = l * oracle::uniform(1, 3);
  for (std::size_t i = 0; i < n; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) s += f.gram[i][j] * f.weights[j];
    f.gram[i][i] = -s / f.weights[i];
  }
  return f;
}

bool ac7(std::string& why) {
  for (int t = 0; t < 500; ++t) {
    const auto v = zariski_check(random_fibre(static_cast<std::size_t>(oracle::uniform(1, 7))));
    if (!v.semidefinite || v.kernel_dim != 1 || !v.kernel_is_span_of_weights) return why = "connected fibre", false;
  }
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = static_cast<std::size_t>(oracle::uniform(1, 4));
    FibreMatrix m;
    std::size_t size = 0;
    std::vector<FibreMatrix> blocks;
    for (std::size_t i = 0; i < k; ++i) {
      blocks.push_back(random_fibre(static_cast<std::size_t>(oracle::uniform(1, 4))));
      size += blocks.back().weights.size();
    }
    m.gram.assign(size, std::vector<Int>(size, 0));
    std::size_t at = 0;
    for (const auto& b : blocks) {
      for (std::size_t i = 0; i < b.weights.size(); ++i) {
        m.weights.push_back(b.weights[i]);
        for (std::size_t j = 0; j < b.weights.size(); ++j) m.gram[at + i][at + j] = b.gram[i][j];
      }
      at += b.weights.size();
    }
    const auto v = zariski_check(m);
    if (!v.semidefinite || v.kernel_dim != static_cast<int>(k)) return why = "block sum of " + std::to_string(k), false;
  }
  return true;
}

bool ac8(std::string& why) {
  int checked = 0;
  for (Int q = 0; q <= 2; ++q)
    for (Int pg = 0; pg <= 1; ++pg)
      for (Int p12 = 0; p12 <= 3; ++p12)
        for (Int K2 = 0; K2 <= 2; ++K2) {
          SurfaceInvariants s;
          s.q = q, s.p_g = pg, s.K2 = K2, s.chi = 1 - q + pg, s.e = 12 * (1 - q + pg) - K2;
          s.plurigenera = {{12, p12}};
          s.minimal = true;
          // the clauses: P12 = 0 ruled; P12 = 1 kappa 0 by (p_g, q) with
          // K^2 = 0; P12 >= 2 by K^2, general type needing P12 = chi + 66 K^2
          std::optional<std::pair<Kappa, Subclass>> expect;
          if (pg >= 1 && p12 < pg) expect.reset();
          else if (p12 == 0) expect = {{Kappa::MinusInfinity, q == 0 ? Subclass::Rational : Subclass::IrrationalRuled}};
          else if (p12 == 1 && K2 == 0) {
            if (pg == 1 && q == 0) expect = {{Kappa::Zero, Subclass::K3}};
            else if (pg == 0 && q == 0) expect = {{Kappa::Zero, Subclass::Enriques}};
            else if (pg == 1 && q == 2) expect = {{Kappa::Zero, Subclass::Abelian}};
            else if (pg == 0 && q == 1) expect = {{Kappa::Zero, Subclass::Bielliptic}};
          } else if (p12 >= 2 && K2 == 0) expect = {{Kappa::One, Subclass::ProperlyElliptic}};
          else if (p12 >= 2 && 1 - q + pg >= 1 && p12 == 1 - q + pg + 66 * K2) expect = {{Kappa::Two, Subclass::GeneralType}};
          try {
            const Classification c = classify(s);
            if (!expect || c.kappa != expect->first || c.subclass != expect->second)
              return why = "record q=" + std::to_string(q) + " p_g=" + std::to_string(pg) + " P12=" + std::to_string(p12) +
                           " K2=" + std::to_string(K2),
                     false;
          } catch (const InconsistentRecord&) {
            if (expect) return why = "rejected a consistent record", false;
          }
          ++checked;
        }
  SurfaceInvariants bad;
  bad.q = 1, bad.p_g = 1, bad.K2 = 0, bad.plurigenera = {{12, 1}}, bad.minimal = true;
  try {
    classify(bad);
    return why = "(p_g, q) = (1, 1) accepted", false;
  } catch (const InconsistentRecord&) {
  }
  for (Int n = 1; n <= 24; ++n)
    if (kappa_zero_plurigenus(2, n) != (n % 2 == 0 ? 1 : 0)) return why = "Enriques P_" + std::to_string(n), false;
  why = std::to_string(checked) + " records";
  return true;
}

bool ac9(std::string& why) {
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(3, 10));
    const auto a = oracle::random_class(n, 25), b = oracle::random_class(n, 25), c = oracle::random_class(n, 25);
    const auto K = canonical_class(n);
    if (intersect(a + b, c) != intersect(a, c) + intersect(b, c) || intersect(a, b) != intersect(b, a))
      return why = "bilinearity", false;
    if (intersect(a, a + K) % 2 != 0) return why = "adjunction parity", false;
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), oracle::rng());
    const Triple tr{idx[0], idx[1], idx[2]};
    const auto ta = quadratic_transform(a, tr), tb = quadratic_transform(b, tr);
    if (intersect(ta, tb) != intersect(a, b)) return why = "pairing", false;
    if (numerical_record(ta) != numerical_record(a)) return why = "nu or g", false;
    const auto net = oracle::random_word_net(n, static_cast<int>(oracle::uniform(0, 6))).cls;
    if (!rel(net) || !rel(quadratic_transform(net, tr))) return why = "homaloidal relations", false;
  }
  return true;
}

bool ac10(std::string& why) {
  const CollinearCone c = collinear_blowup_cone();
  if (!c.ok() || c.anticanonical_square != 6 || c.rays.size() != 4) return why = "collinear example", false;
  for (Int n = 0; n <= 8; ++n) {
    const auto h = hirzebruch_cone(n);
    std::multiset<Int> sq;
    for (const auto& r : h.rays) sq.insert(pairing(h.gram, r, r));
    if (sq != std::multiset<Int>{0, -n}) return why = "F_" + std::to_string(n), false;
  }
  const IntMatrix G = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  for (int t = 0; t < 100; ++t) {
    const std::vector<Int> x = {oracle::uniform(-5, 5), oracle::uniform(-5, 5), oracle::uniform(-5, 5)};
    const Int sq = pairing(G, x, x), d = pairing(G, x, {1, 1, 0});
    const bool zero = x == std::vector<Int>{0, 0, 0};
    if (exe_cone_membership(x[0], x[1], x[2]) != (zero || (sq >= 0 && d > 0))) return why = "E x E membership", false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> all = {
      {"AC1", "Sarkisov golden trace of the standard quadratic net", 1, ac1},
      {"AC2", "plurigenus tables (2,6,6) and (2,5,10)", 1, ac2},
      {"AC3", "Riemann-Hurwitz genus 2 for both covers", 0, ac3},
      {"AC4", "bielliptic minimal powers and invariant degrees", 0, ac4},
      {"AC5", "factorization round-trip on random words", 30, ac5},
      {"AC6", "(-1)-curve counts for n = 1..8", 10, ac6},
      {"AC7", "Zariski property suite", 10, ac7},
      {"AC8", "classifier grid", 0, ac8},
      {"AC9", "lattice invariants", 5, ac9},
      {"AC10", "cone examples", 0, ac10},
  };
  bool ok = true;
  for (const auto& c : all) {
    std::string why;
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    try {
      pass = c.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && s >= c.limit_s) {
      pass = false;
      why += " over the time limit";
    }
    ok = ok && pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << c.id << " " << (pass ? "PASS" : "FAIL") << "  " << c.what << "  " << s << " s";
    if (c.limit_s > 0) line << " (limit " << c.limit_s << " s)";
    if (!why.empty()) line << "  [" << why << "]";
    std::cout << line.str() << "\n";
  }
  return ok ? 0 : 1;
}
