#include <doctest.h>

#include "birat/sarkisov.hpp"
#include "oracles.hpp"

using namespace birat;

namespace {

// (mu, lambda, ell) compared lexicographically, an undetermined ell as 0.
bool lex_less(const SarkisovDegree& a, const SarkisovDegree& b) {
  if (a.mu != b.mu) return a.mu < b.mu;
  if (a.lambda != b.lambda) return a.lambda < b.lambda;
  return a.ell.value_or(0) < b.ell.value_or(0);
}

SarkisovDegree deg(Int num, Int den, Int lambda, std::optional<Int> ell) {
  return {Rational(num) / den, lambda, ell};
}

bool sixths(const Rational& r) { return boost::multiprecision::denominator(Rational(r * 6)) == 1; }

std::vector<const ContractedPoint*> find(const SarkisovState& s, int label) {
  std::vector<const ContractedPoint*> out;
  for (const auto& c : s.contracted)
    if (c.label == label) out.push_back(&c);
  return out;
}

// Runs link by link and checks the descent and the type II multiplicity rule.
std::vector<LinkKind> checked_run(const DivisorClass& net, const PointConfig& cfg) {
  SarkisovState s = initial_state(net, cfg);
  CHECK(sarkisov_degree(s).mu == Rational(net.degree) / 3);
  std::vector<LinkKind> kinds;
  while (!sarkisov_terminal(s)) {
    const SarkisovDegree before = sarkisov_degree(s);
    auto [link, next] = untwist_step(s);
    kinds.push_back(link.kind);
    CHECK(link.degree == sarkisov_degree(next));
    CHECK(lex_less(link.degree, before));
    CHECK(sixths(link.degree.mu));
    CHECK(link.degree.mu > 0);
    CHECK(link.degree.ell.has_value() == (link.degree.lambda > 0));
    if (link.kind == LinkKind::II) {
      CHECK(link.degree.mu == before.mu);
      REQUIRE(link.center);
      const auto x = find(next, *link.center);
      REQUIRE(x.size() == 1);
      const Rational m = 2 * before.mu - before.lambda;
      CHECK(Rational(point_multiplicity(next, *x[0])) == m);
      CHECK(m < before.lambda);
    }
    if (next.mfs.kind == MfsKind::PlaneOverPoint) CHECK(boost::multiprecision::denominator(Rational(link.degree.mu * 3)) == 1);
    s = next;
    REQUIRE(kinds.size() < 200);
  }
  CHECK(s.mfs.kind == MfsKind::PlaneOverPoint);
  CHECK(sarkisov_degree(s) == deg(1, 3, 0, std::nullopt));
  return kinds;
}

}  // namespace

TEST_CASE("degrees on the plane") {
  CHECK(sarkisov_degree(initial_state({2, {1, 1, 1}}, PointConfig::general(3))) == deg(2, 3, 1, 3));
  CHECK(sarkisov_degree(initial_state(DivisorClass::line(0), PointConfig::general(0))) == deg(1, 3, 0, std::nullopt));
  CHECK(sarkisov_degree(initial_state({3, {2, 1, 1, 1, 1}}, PointConfig::general(5))) == deg(1, 1, 2, 1));
  CHECK(to_string(deg(2, 3, 1, 3)) == "(2/3,1,3)");
  CHECK(to_string(deg(1, 2, 0, std::nullopt)) == "(1/2,0,*)");
}

TEST_CASE("standard quadratic net: golden trace") {
  const auto t = run_sarkisov({2, {1, 1, 1}}, PointConfig::general(3));
  CHECK(t.initial == deg(2, 3, 1, 3));
  REQUIRE(t.links.size() == 4);
  const std::vector<LinkKind> kinds = {LinkKind::I, LinkKind::II, LinkKind::II, LinkKind::III};
  const std::vector<SarkisovDegree> degrees = {deg(1, 2, 1, 2), deg(1, 2, 1, 1), deg(1, 2, 0, std::nullopt),
                                               deg(1, 3, 0, std::nullopt)};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(t.links[i].kind == kinds[i]);
    CHECK(t.links[i].degree == degrees[i]);
  }
  CHECK(t.links[0].result == MoriFibreSpace{MfsKind::ScrollOverLine, 1});
  CHECK(t.links[3].result == MoriFibreSpace{MfsKind::PlaneOverPoint, 0});
  CHECK(t.final_state.mfs.kind == MfsKind::PlaneOverPoint);
}

TEST_CASE("lines net needs no link") {
  const auto t = run_sarkisov(DivisorClass::line(2), PointConfig::general(2));
  CHECK(t.links.empty());
  CHECK(nef_adjoint_check(initial_state(DivisorClass::line(2), PointConfig::general(2))));
}

TEST_CASE("adjoint on the first models of the quadratic net") {
  SarkisovState s = initial_state({2, {1, 1, 1}}, PointConfig::general(3));
  // against the line the adjoint is 0, but lambda > mu
  CHECK(nef_adjoint_check(s));
  CHECK_FALSE(sarkisov_terminal(s));
  for (int i = 0; i < 3; ++i) s = untwist_step(s).second;
  // on F_1 with (1/2, 0, *): K + 2L is negative on the (-1)-section
  CHECK(s.mfs == MoriFibreSpace{MfsKind::ScrollOverLine, 1});
  CHECK_FALSE(nef_adjoint_check(s));
  CHECK(untwist_step(s).first.kind == LinkKind::III);
}

TEST_CASE("de Jonquieres starts by blowing up the double point") {
  const auto t = run_sarkisov({3, {2, 1, 1, 1, 1}}, PointConfig::general(5));
  REQUIRE(!t.links.empty());
  CHECK(t.links[0].kind == LinkKind::I);
  CHECK(t.links[0].center == 0);
  checked_run({3, {2, 1, 1, 1, 1}}, PointConfig::general(5));
}

TEST_CASE("type IV on the quadric") {
  SarkisovState s = initial_state({3, {1, 2}}, PointConfig::general(2));
  s.contracted = {{5, {1, {1, 1}}, std::nullopt}};
  s.mfs = {MfsKind::QuadricRulingA, 0};
  s.fibre = {1, {1, 0}};
  s.section = {1, {0, 1}};
  s.section_curve = s.section;
  CHECK_FALSE(nef_adjoint_check(s));
  const auto [link, next] = untwist_step(s);
  CHECK(link.kind == LinkKind::IV);
  CHECK(next.mfs.kind == MfsKind::QuadricRulingB);
  CHECK(next.fibre == s.section);
  CHECK(link.degree == deg(1, 2, 0, std::nullopt));
}

TEST_CASE("property: untwisting random nets") {
  int with_iv = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(3, 8));
    const int len = static_cast<int>(oracle::uniform(1, 6));
    const auto w = trial % 2 ? oracle::raising_word_net(n, len) : oracle::random_word_net(n, len);
    if (std::any_of(w.cls.mults.begin(), w.cls.mults.end(), [](Int m) { return m < 0; })) continue;
    const auto kinds = checked_run(w.cls, PointConfig::general(n));
    with_iv += std::count(kinds.begin(), kinds.end(), LinkKind::IV) > 0;
    if (w.cls.degree > 1) {
      CHECK(kinds.front() == LinkKind::I);
      CHECK(kinds.back() == LinkKind::III);
    }
  }
  CHECK(with_iv > 0);
}

TEST_CASE("untwisting a terminal state is an error") {
  CHECK_THROWS(untwist_step(initial_state(DivisorClass::line(1), PointConfig::general(1))));
}
