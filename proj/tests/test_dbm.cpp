#include <climits>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "tbuchi/dbm.hpp"
#include "test_util.hpp"

using namespace tbuchi;

namespace {

Zone make_zone(unsigned dim, const std::vector<std::tuple<unsigned, unsigned, Bound>>& bounds) {
  Dbm d(dim);
  for (const auto& [i, j, b] : bounds) d.tighten(i, j, b);
  auto z = Zone::canonical(std::move(d));
  REQUIRE(z.has_value());
  return *z;
}

}  // namespace

TEST_CASE("bound ordering and arithmetic") {
  CHECK(Bound::strict(1) < Bound::weak(1));
  CHECK(Bound::weak(0) < Bound::strict(1));
  CHECK(Bound::weak(0) == Bound::le_zero());
  CHECK(Bound::weak(3) < Bound::infinity());
  CHECK(Bound::infinity().is_infinity());
  CHECK_FALSE(Bound::weak(3).is_infinity());
  CHECK(Bound::strict(2).is_strict());
  CHECK_FALSE(Bound::weak(2).is_strict());
  CHECK(Bound::weak(-4).value() == -4);

  CHECK(Bound::weak(2) + Bound::weak(3) == Bound::weak(5));
  CHECK(Bound::weak(2) + Bound::strict(3) == Bound::strict(5));
  CHECK(Bound::strict(2) + Bound::strict(3) == Bound::strict(5));
  CHECK((Bound::infinity() + Bound::weak(-7)).is_infinity());

  CHECK(Bound::weak(1).text() == "<=1");
  CHECK(Bound::strict(-2).text() == "<-2");
}

TEST_CASE("bound addition overflow is detected") {
  const Bound big = Bound::weak(INT_MAX / 4);
  CHECK_NOTHROW((void)(big + big));  // sum still encodable
  const Bound huge = Bound::weak(INT_MAX / 2 - 1);  // largest finite weak bound
  CHECK_THROWS_AS((void)(huge + huge), std::overflow_error);
}

TEST_CASE("universe and origin") {
  const Zone o = Zone::origin(3);
  CHECK(o.contains_valuation({0, 0, 0}, 1));
  CHECK_FALSE(o.contains_valuation({0, 1, 0}, 2));

  Dbm u(3);
  auto z = Zone::canonical(std::move(u));
  REQUIRE(z);
  CHECK(z->contains_valuation({0, 5, 3}, 1));
  CHECK(z->includes(o));
  CHECK_FALSE(o.includes(*z));
}

TEST_CASE("canonical detects emptiness") {
  Dbm d(2);
  d.tighten(1, 0, Bound::strict(1));   // x < 1
  d.tighten(0, 1, Bound::weak(-2));    // x >= 2
  CHECK_FALSE(Zone::canonical(std::move(d)).has_value());
}

TEST_CASE("up removes upper bounds but keeps differences") {
  const Zone o = Zone::origin(3);
  const Zone u = up(o);
  CHECK(u.contains_valuation({0, 7, 7}, 2));
  CHECK_FALSE(u.contains_valuation({0, 1, 2}, 1));
  CHECK(u.includes(o));
}

TEST_CASE("guard atoms constrain as written") {
  const Zone any = *Zone::canonical(Dbm(2));
  auto sat = [&](Rel r, int c, long long num, long long den) {
    auto z = and_guard(any, {AtomicConstraint{1, r, c}});
    REQUIRE(z);
    return z->contains_valuation({0, num}, den);
  };
  CHECK(sat(Rel::lt, 2, 3, 2));
  CHECK_FALSE(sat(Rel::lt, 2, 2, 1));
  CHECK(sat(Rel::le, 2, 2, 1));
  CHECK_FALSE(sat(Rel::le, 2, 5, 2));
  CHECK(sat(Rel::eq, 2, 2, 1));
  CHECK_FALSE(sat(Rel::eq, 2, 3, 2));
  CHECK(sat(Rel::ge, 2, 2, 1));
  CHECK_FALSE(sat(Rel::ge, 2, 3, 2));
  CHECK(sat(Rel::gt, 2, 5, 2));
  CHECK_FALSE(sat(Rel::gt, 2, 2, 1));
}

TEST_CASE("conjoining an unsatisfiable guard yields no zone") {
  const Zone o = Zone::origin(2);
  CHECK_FALSE(and_guard(o, {AtomicConstraint{1, Rel::ge, 1}}).has_value());
}

TEST_CASE("reset moves a clock to zero and keeps the rest") {
  // x = y = 5
  Zone z = make_zone(3, {{1, 0, Bound::weak(5)},
                         {0, 1, Bound::weak(-5)},
                         {2, 0, Bound::weak(5)},
                         {0, 2, Bound::weak(-5)}});
  const Zone r = reset(z, ClockSet::single(1));
  CHECK(r.contains_valuation({0, 0, 5}, 1));
  CHECK_FALSE(r.contains_valuation({0, 5, 5}, 1));
}

TEST_CASE("extrapolation widens beyond the maximal constant") {
  // x >= 5 becomes x > 2 under M = 2
  const Zone z = make_zone(2, {{0, 1, Bound::weak(-5)}});
  const Zone a = approx_m(z, 2);
  CHECK(a.contains_valuation({0, 3}, 1));
  CHECK(a.at(0, 1) == Bound::strict(-2));
  CHECK(a.at(1, 0).is_infinity());
}

TEST_CASE("extrapolation keeps point zones when M = 0") {
  const Zone o = Zone::origin(3);
  CHECK(approx_m(o, 0) == o);
}

TEST_CASE("extrapolation is idempotent and only grows") {
  std::mt19937 gen(test::test_seed());
  for (int i = 0; i < 200; ++i) {
    const Zone z = test::random_zone(gen, 3, 5);
    const Zone a = approx_m(z, 2);
    CHECK(a.includes(z));
    CHECK(approx_m(a, 2) == a);
  }
}

TEST_CASE("extrapolation rejects a negative bound") {
  CHECK_THROWS_AS(approx_m(Zone::origin(2), -1), std::invalid_argument);
}

TEST_CASE("firing is monotone in the source zone") {
  std::mt19937 gen(test::test_seed() + 1);
  Transition t;
  t.src = 0;
  t.dst = 0;
  t.guard = {AtomicConstraint{1, Rel::ge, 1}, AtomicConstraint{2, Rel::le, 3}};
  t.reset = ClockSet::single(1);
  std::uniform_int_distribution<unsigned> idx(0, 2);
  for (int i = 0; i < 200; ++i) {
    const Zone small = test::random_zone(gen, 2, 3);
    // Dropping an entry can only grow the zone.
    Dbm loose = small.dbm();
    const unsigned r = idx(gen), c = idx(gen);
    // Keep row 0 intact so every clock stays >= 0.
    if (r != c && r != 0) loose.set(r, c, Bound::infinity());
    const auto big = Zone::canonical(std::move(loose));
    REQUIRE(big);
    CHECK(big->includes(small));
    const auto fs = fire(small, t, 3);
    const auto fb = fire(*big, t, 3);
    if (fs) {
      REQUIRE(fb);
      CHECK(fb->includes(*fs));
    }
  }
}

TEST_CASE("intersection is the set intersection") {
  const Zone low = make_zone(2, {{1, 0, Bound::weak(2)}});    // x <= 2
  const Zone high = make_zone(2, {{0, 1, Bound::weak(-1)}});  // x >= 1
  const auto mid = intersect(low, high);
  REQUIRE(mid);
  CHECK(mid->contains_valuation({0, 3}, 2));
  CHECK_FALSE(mid->contains_valuation({0, 1}, 2));
  CHECK_FALSE(mid->contains_valuation({0, 5}, 2));

  const Zone disjoint = make_zone(2, {{0, 1, Bound::strict(-2)}});  // x > 2
  CHECK_FALSE(intersect(low, disjoint).has_value());
  REQUIRE(intersect(low, low));
  CHECK(*intersect(low, low) == low);
}

TEST_CASE("zone equality and hashing agree on canonical forms") {
  // x <= 1 expressed twice with redundant constraints
  Dbm d1(2);
  d1.tighten(1, 0, Bound::weak(1));
  Dbm d2(2);
  d2.tighten(1, 0, Bound::weak(1));
  d2.tighten(1, 0, Bound::weak(5));
  const auto z1 = Zone::canonical(std::move(d1));
  const auto z2 = Zone::canonical(std::move(d2));
  REQUIRE(z1);
  REQUIRE(z2);
  CHECK(*z1 == *z2);
  CHECK(z1->hash() == z2->hash());
}

TEST_CASE("rational membership is exact") {
  // 0 < x < 1
  const Zone z = make_zone(2, {{1, 0, Bound::strict(1)}, {0, 1, Bound::strict(0)}});
  CHECK(z.contains_valuation({0, 1}, 2));
  CHECK(z.contains_valuation({0, 1}, 3));
  CHECK_FALSE(z.contains_valuation({0, 0}, 1));
  CHECK_FALSE(z.contains_valuation({0, 2}, 2));
}

TEST_CASE("edge profile reads facts off the crossing zone") {
  // From x = 0, an edge guarded x >= 1 never sees x = 0, has no upper bound
  // on x, and holds x >= 1: exactly the shape the lower-bound rule wants.
  const Zone origin = Zone::origin(2);
  Transition ge1;
  ge1.src = ge1.dst = 0;
  ge1.guard = {AtomicConstraint{1, Rel::ge, 1}};
  auto p = edge_profile(origin, ge1);
  REQUIRE(p);
  CHECK(p->zero_checked.empty());
  CHECK(p->bounded.empty());
  CHECK(p->lower1.contains(1));
  CHECK(p->reset.empty());
  CHECK_FALSE(p->is_tau);

  // From x >= 1, an edge guarded x <= 1 crosses exactly at x = 1.
  const Zone ge1z = make_zone(2, {{0, 1, Bound::weak(-1)}});
  Transition le1;
  le1.src = le1.dst = 0;
  le1.guard = {AtomicConstraint{1, Rel::le, 1}};
  le1.reset = ClockSet::single(1);
  p = edge_profile(ge1z, le1);
  REQUIRE(p);
  CHECK(p->zero_checked.empty());
  CHECK(p->bounded.contains(1));
  CHECK(p->lower1.contains(1));
  CHECK(p->reset.contains(1));

  // A guard x = 0 zero-checks x.
  Transition eq0;
  eq0.src = eq0.dst = 0;
  eq0.guard = {AtomicConstraint{1, Rel::eq, 0}};
  p = edge_profile(origin, eq0);
  REQUIRE(p);
  CHECK(p->zero_checked.contains(1));
  CHECK(p->bounded.contains(1));
  CHECK(p->lower1.empty());

  // Unreachable guard: no profile.
  Transition lt0;
  lt0.src = lt0.dst = 0;
  lt0.guard = {AtomicConstraint{1, Rel::lt, 0}};
  CHECK_FALSE(edge_profile(origin, lt0).has_value());
}

TEST_CASE("zone text is stable for simple shapes") {
  Tba a;
  a.add_state("s", false);
  a.add_clock("x");
  a.add_clock("y");
  CHECK(zone_text(Zone::origin(3), a) == "x=0 & y=0");
}
