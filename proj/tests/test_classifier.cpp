#include <doctest.h>

#include "birat/classifier.hpp"

using namespace birat;

namespace {

SurfaceInvariants record(Int q, Int pg, Int K2, std::map<Int, Int> plurigenera, bool minimal = true) {
  SurfaceInvariants s;
  s.q = q;
  s.p_g = pg;
  s.K2 = K2;
  s.chi = 1 - q + pg;
  s.e = 12 * (1 - q + pg) - K2;
  s.plurigenera = std::move(plurigenera);
  s.minimal = minimal;
  return s;
}

struct Expected {
  bool inconsistent = false;
  Kappa kappa = Kappa::MinusInfinity;
  Subclass subclass = Subclass::Rational;
  std::optional<Int> order;
  std::vector<Int> admissible;
};

// The clauses of the P_12 theorem, written out case by case for a minimal
// record carrying only P_12.
Expected oracle(Int q, Int pg, Int p12, Int K2) {
  Expected e;
  if (pg >= 1 && p12 < pg) return {true};  // a section of K gives one of 12K
  if (p12 == 0) {
    e.kappa = Kappa::MinusInfinity;
    e.subclass = q == 0 ? Subclass::Rational : Subclass::IrrationalRuled;
    return e;
  }
  if (p12 == 1) {
    if (K2 != 0) return {true};
    e.kappa = Kappa::Zero;
    if (pg == 1 && q == 0) e.subclass = Subclass::K3, e.order = 1;
    else if (pg == 0 && q == 0) e.subclass = Subclass::Enriques, e.order = 2;
    else if (pg == 1 && q == 2) e.subclass = Subclass::Abelian, e.order = 1;
    else if (pg == 0 && q == 1) e.subclass = Subclass::Bielliptic, e.admissible = {2, 3, 4, 6};
    else return {true};
    return e;
  }
  if (K2 < 0) return {true};
  if (K2 == 0) {
    e.kappa = Kappa::One;
    e.subclass = Subclass::ProperlyElliptic;
    return e;
  }
  const Int chi = 1 - q + pg;
  if (chi < 1 || p12 != chi + 66 * K2) return {true};
  e.kappa = Kappa::Two;
  e.subclass = Subclass::GeneralType;
  return e;
}

}  // namespace

TEST_CASE("consistency checks") {
  SurfaceInvariants k3;
  k3.q = 0, k3.p_g = 1, k3.chi = 2, k3.K2 = 0, k3.e = 12 * 2 - 0;
  CHECK(consistency_check(k3).empty());
  SurfaceInvariants enr;
  enr.q = 0, enr.p_g = 0, enr.chi = 1, enr.K2 = 0, enr.e = 12;
  CHECK(consistency_check(enr).empty());
  SurfaceInvariants bad = k3;
  bad.chi = 3;
  bad.e = 36;
  CHECK(consistency_check(bad).size() == 1);
  bad = k3;
  bad.e = 23;
  CHECK(consistency_check(bad).size() == 1);
  bad = k3;
  bad.plurigenera = {{1, 0}};
  CHECK(consistency_check(bad).size() == 1);
  bad = k3;
  bad.plurigenera = {{2, 2}, {4, 1}};
  CHECK(consistency_check(bad).size() == 1);
  bad = k3;
  bad.plurigenera = {{3, -1}};
  CHECK_FALSE(consistency_check(bad).empty());
}

TEST_CASE("Castelnuovo's criterion") {
  CHECK(castelnuovo_rational(0, 0));
  CHECK_FALSE(castelnuovo_rational(0, 1));
  CHECK_FALSE(castelnuovo_rational(1, 0));
}

TEST_CASE("kappa = 0 subclasses") {
  auto k3 = classify(record(0, 1, 0, {{12, 1}}));
  CHECK(k3.subclass == Subclass::K3);
  CHECK(k3.canonical_order == 1);
  auto enr = classify(record(0, 0, 0, {{12, 1}}));
  CHECK(enr.subclass == Subclass::Enriques);
  CHECK(enr.canonical_order == 2);
  CHECK(classify(record(2, 1, 0, {{12, 1}})).subclass == Subclass::Abelian);
  CHECK_THROWS_AS(classify(record(1, 1, 0, {{12, 1}})), InconsistentRecord);
  try {
    classify(record(1, 1, 0, {{12, 1}}));
  } catch (const InconsistentRecord& e) {
    CHECK(std::string(e.what()).find("impossible case") != std::string::npos);
  }
}

TEST_CASE("Enriques plurigenera") {
  for (Int n = 1; n <= 24; ++n) CHECK(kappa_zero_plurigenus(2, n) == (n % 2 == 0 ? 1 : 0));
  std::map<Int, Int> table;
  for (Int n = 1; n <= 12; ++n) table[n] = n % 2 == 0 ? 1 : 0;
  CHECK(classify(record(0, 0, 0, table)).canonical_order == 2);
  table[3] = 1;
  CHECK_THROWS_AS(classify(record(0, 0, 0, table)), InconsistentRecord);
}

TEST_CASE("bielliptic orders") {
  SurfaceInvariants s = record(1, 0, 0, {{12, 1}});
  const auto open = classify(s);
  CHECK(open.subclass == Subclass::Bielliptic);
  CHECK_FALSE(open.canonical_order);
  CHECK(open.admissible_orders == std::vector<Int>{2, 3, 4, 6});
  for (auto [roman, order] : std::vector<std::pair<const char*, Int>>{{"i", 2}, {"ii", 2}, {"iii", 4}, {"iv", 4}, {"v", 3}, {"vi", 3}, {"vii", 6}}) {
    s.bdf_case = parse_bdf(roman);
    CHECK(classify(s).canonical_order == order);
  }
  // plurigenera narrow the choice: P_2 = 0 and P_3 = 1 leave order 3
  SurfaceInvariants t = record(1, 0, 0, {{2, 0}, {3, 1}, {12, 1}});
  CHECK(classify(t).canonical_order == 3);
  t.plurigenera = {{2, 0}, {3, 0}, {4, 0}, {12, 1}};
  CHECK(classify(t).canonical_order == 6);
  t.plurigenera = {{2, 1}, {3, 1}, {12, 1}};
  CHECK_THROWS_AS(classify(t), InconsistentRecord);
  SurfaceInvariants k3 = record(0, 1, 0, {{12, 1}});
  k3.bdf_case = BdF::I;
  CHECK_THROWS_AS(classify(k3), InconsistentRecord);
}

TEST_CASE("missing data") {
  CHECK_THROWS_AS(classify(record(0, 0, 0, {})), InsufficientData);
  SurfaceInvariants s;
  s.plurigenera = {{12, 0}};
  CHECK_THROWS_AS(classify(s), InsufficientData);
  s.plurigenera = {{12, 5}};
  CHECK_THROWS_AS(classify(s), InsufficientData);
  s.minimal = true;
  CHECK_THROWS_AS(classify(s), InsufficientData);
  s.K2 = 0;
  CHECK(classify(s).kappa == Kappa::One);
}

TEST_CASE("general type") {
  CHECK(general_type_plurigenus(1, 1, 2) == 2);
  CHECK(general_type_plurigenus(3, 2, 3) == 9);
  CHECK(general_type_plurigenus(1, 1, 12) == 67);
  for (Int chi = 1; chi <= 6; ++chi)
    for (Int K2 = 1; K2 <= 9 * chi; ++K2) CHECK(general_type_plurigenus(chi, K2, 12) >= 2);
  CHECK_THROWS_AS(general_type_plurigenus(1, 0, 2), DomainError);
  CHECK_THROWS_AS(general_type_plurigenus(1, 1, 1), DomainError);
  const auto c = classify(record(0, 0, 1, {{2, 2}, {12, 67}}));
  CHECK(c.kappa == Kappa::Two);
  CHECK(c.subclass == Subclass::GeneralType);
  CHECK_THROWS_AS(classify(record(0, 0, 1, {{2, 3}, {12, 67}})), InconsistentRecord);
}

TEST_CASE("pluricanonical maps") {
  CHECK(pluricanonical_behavior(5, 3, 2) == Pluricanonical::BasePointFree);
  CHECK(pluricanonical_behavior(3, 2, 1) == Pluricanonical::Exception);
  CHECK(pluricanonical_behavior(4, 2, 1) == Pluricanonical::Exception);
  CHECK(pluricanonical_behavior(3, 3, 2) == Pluricanonical::Exception);
  CHECK(pluricanonical_behavior(4, 3, 2) == Pluricanonical::BirationalMorphism);
  CHECK(pluricanonical_behavior(3, 4, 4) == Pluricanonical::BirationalMorphism);
  for (Int n = 6; n <= 12; ++n)
    for (Int pg = 0; pg <= 4; ++pg) CHECK(pluricanonical_behavior(n, pg, 1) == Pluricanonical::BirationalMorphism);
  CHECK_THROWS_AS(pluricanonical_behavior(2, 3, 2), DomainError);
}

TEST_CASE("exhaustive grid against the clause table") {
  int consistent = 0;
  for (Int q = 0; q <= 2; ++q)
    for (Int pg = 0; pg <= 1; ++pg)
      for (Int p12 = 0; p12 <= 3; ++p12)
        for (Int K2 = -1; K2 <= 2; ++K2) {
          CAPTURE(q);
          CAPTURE(pg);
          CAPTURE(p12);
          CAPTURE(K2);
          const SurfaceInvariants s = record(q, pg, K2, {{12, p12}});
          const Expected e = oracle(q, pg, p12, K2);
          if (e.inconsistent) {
            CHECK_THROWS_AS(classify(s), InconsistentRecord);
            continue;
          }
          ++consistent;
          const Classification c = classify(s);
          CHECK(c.kappa == e.kappa);
          CHECK(c.subclass == e.subclass);
          CHECK(c.canonical_order == e.order);
          CHECK(c.admissible_orders == e.admissible);
          // kappa from the growth of the plurigenera
          if (p12 == 0) CHECK(c.kappa == Kappa::MinusInfinity);
          if (p12 == 1) CHECK(c.kappa == Kappa::Zero);
        }
  CHECK(consistent > 0);
}
