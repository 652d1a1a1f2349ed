#include <doctest.h>

#include "birat/lattice.hpp"
#include "oracles.hpp"

using namespace birat;

TEST_CASE("intersection pairing examples") {
  CHECK(intersect({2, {1, 1, 1}}, {2, {1, 1, 1}}) == 1);
  CHECK(intersect(DivisorClass::line(3), DivisorClass::exceptional(3, 0)) == 0);
  CHECK(intersect({3, {1, 1, 1, 1, 1}}, {3, {2, 1, 1, 1, 0}}) == oracle::dot({3, {1, 1, 1, 1, 1}}, {3, {2, 1, 1, 1, 0}}));
  CHECK(intersect({3, {1, 1, 1, 1, 1}}, {3, {2, 1, 1, 1, 0}}) == 4);
  CHECK(self_intersection(DivisorClass::exceptional(4, 2)) == -1);
}

TEST_CASE("classes on different configurations do not mix") {
  CHECK_THROWS_AS(intersect({1, {0, 0}}, {1, {0, 0, 0}}), StructuralError);
  CHECK_THROWS_AS(DivisorClass(1, {0, 0}) + DivisorClass(1, {0}), StructuralError);
}

TEST_CASE("canonical class") {
  CHECK(canonical_class(0) == DivisorClass(-3, {}));
  CHECK(canonical_class(3) == DivisorClass(-3, {-1, -1, -1}));
  CHECK(intersect(canonical_class(3), DivisorClass::line(3)) == -3);
  // K^2 = 9 - n on the plane blown up at n points
  for (std::size_t n = 0; n <= 12; ++n) CHECK(self_intersection(canonical_class(n)) == 9 - static_cast<Int>(n));
}

TEST_CASE("numerical record") {
  CHECK(numerical_record({2, {1, 1, 1}}) == NumericalRecord{1, 0});
  CHECK(numerical_record(DivisorClass::zero(4)) == NumericalRecord{0, 1});
  CHECK(numerical_record({6, std::vector<Int>(8, 2)}) == NumericalRecord{4, 2});
  CHECK(binom2(-1) == 1);
  CHECK(binom2(0) == 0);
  CHECK(binom2(5) == 10);
}

TEST_CASE("Riemann-Roch") {
  CHECK(riemann_roch_chi(DivisorClass::zero(3), 1) == 1);
  CHECK(riemann_roch_chi(DivisorClass::line(3), 1) == 3);
  CHECK(riemann_roch_chi({2, {1, 1, 1}}, 1) == 3);
  // plane curves of degree d: h^0 = C(d+2, 2)
  for (Int d = 0; d <= 10; ++d) CHECK(riemann_roch_chi({d, {}}, 1) == (d + 2) * (d + 1) / 2);
}

TEST_CASE("property: bilinearity, symmetry, adjunction") {
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(0, 10));
    const auto a = oracle::random_class(n, 30), b = oracle::random_class(n, 30), c = oracle::random_class(n, 30);
    const Int k = oracle::uniform(-5, 5);
    CHECK(intersect(a, b) == oracle::dot(a, b));
    CHECK(intersect(a, b) == intersect(b, a));
    CHECK(intersect(a + b, c) == intersect(a, c) + intersect(b, c));
    CHECK(intersect(k * a, c) == k * intersect(a, c));
    const auto K = canonical_class(n);
    CHECK(intersect(a, a + K) == 2 * oracle::genus(a) - 2);
    CHECK(intersect(a, a + K) % 2 == 0);
    CHECK(numerical_record(a).nu == oracle::dot(a, a));
    CHECK(numerical_record(a).genus == oracle::genus(a));
    CHECK(riemann_roch_chi(a, 1) == 1 + (oracle::dot(a, a) - oracle::dot(a, K)) / 2);
  }
}

TEST_CASE("intersection form has signature (1, n)") {
  for (std::size_t n = 0; n <= 9; ++n) {
    const Inertia i = symmetric_inertia(to_rational(intersection_form(n)));
    CHECK(i.positive == 1);
    CHECK(i.negative == static_cast<int>(n));
    CHECK(i.zero == 0);
  }
}

TEST_CASE("coordinates and actions") {
  const DivisorClass c(5, {2, 2, 2, 2, 2, 2});
  CHECK(from_coords(coords(c)) == c);
  CHECK(act(identity_matrix(7), c) == c);
  CHECK(c.padded(8) == DivisorClass(5, {2, 2, 2, 2, 2, 2, 0, 0}));
  const IntMatrix q = pad_action(identity_matrix(4), 6);
  CHECK(q == identity_matrix(7));
}
