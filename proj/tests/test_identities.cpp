#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "looplab/catalog.hpp"
#include "looplab/enumerate.hpp"
#include "looplab/identities.hpp"
#include "looplab/loop_table.hpp"

using namespace looplab;

TEST_CASE("groups satisfy everything") {
  for (int n : {1, 2, 3, 4, 5, 6}) {
    const LoopTable t = cyclic(n).table;
    CHECK(is_associative(t).holds);
    CHECK(is_moufang(t).holds);
    CHECK(is_cc(t).holds);
    CHECK(is_alternative(t).holds);
    CHECK(is_diassociative(t).holds);
  }
}

TEST_CASE("the octonion loop is Moufang but not associative") {
  const LoopTable& t = o16().table;
  CHECK(is_moufang(t, MoufangVariant::One).holds);
  CHECK(is_moufang(t, MoufangVariant::Two).holds);
  CHECK(is_moufang(t, MoufangVariant::Three).holds);
  CHECK(is_moufang(t, MoufangVariant::All).holds);
  CHECK(is_alternative(t).holds);
  CHECK(is_diassociative(t).holds);

  const IdentityVerdict a = is_associative(t);
  CHECK_FALSE(a.holds);
  REQUIRE(a.witness.has_value());
  const auto& w = *a.witness;
  REQUIRE(w.size() == 3);
  CHECK(t.mul(t.mul(w[0], w[1]), w[2]) != t.mul(w[0], t.mul(w[1], w[2])));
}

TEST_CASE("moufang witness re-evaluates to a violation") {
  // cyclic(5) twisted off associativity: any nonassociative order-5 loop
  // violates Moufang (Moufang loops of order 5 are groups).
  EnumerationJob job;
  job.order = 5;
  job.filters = {Filter::Nonassociative};
  const std::vector<LoopTable> loops = enumerate_all(job);
  REQUIRE_FALSE(loops.empty());
  for (const LoopTable& t : loops) {
    const IdentityVerdict m = is_moufang(t);
    CHECK_FALSE(m.holds);
    REQUIRE(m.witness.has_value());
    const auto& w = *m.witness;
    REQUIRE(w.size() == 3);
    const Elem z = w[0], x = w[1], y = w[2];
    bool violated = false;
    // one of the three identities must fail at (z, x, y)
    violated |= t.mul(z, t.mul(x, t.mul(z, y))) != t.mul(t.mul(t.mul(z, x), z), y);
    violated |= t.mul(t.mul(t.mul(x, z), y), z) != t.mul(x, t.mul(z, t.mul(y, z)));
    violated |= t.mul(t.mul(z, x), t.mul(y, z)) != t.mul(t.mul(z, t.mul(x, y)), z);
    CHECK(violated);
  }
}

TEST_CASE("smallest_cc is conjugacy closed and nonassociative") {
  const LoopTable& t = smallest_cc().table;
  CHECK(is_cc(t).holds);
  CHECK_FALSE(is_associative(t).holds);
}

TEST_CASE("cc identities are independent: (4) can hold while (5) fails") {
  const LoopTable t = LoopTable::require(MagmaTable::from_rows({
      {0, 1, 2, 3, 4, 5},
      {1, 0, 3, 2, 5, 4},
      {2, 3, 4, 5, 0, 1},
      {3, 4, 5, 0, 1, 2},
      {4, 5, 0, 1, 2, 3},
      {5, 2, 1, 4, 3, 0},
  }));

  // identity (4) holds on every triple
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y)
      for (Elem z = 0; z < 6; ++z)
        CHECK(t.mul(z, t.mul(x, y)) ==
              t.mul(t.right_div(z, t.mul(z, x)), t.mul(z, y)));

  const IdentityVerdict v = is_cc(t);
  CHECK_FALSE(v.holds);
  CHECK(v.violated == "(xy)z = (xz)*L_z^-1(yz)");
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == std::vector<Elem>{1, 1, 2});
}

TEST_CASE("all loops of order <= 4 are associative") {
  for (int n : {1, 2, 3, 4}) {
    EnumerationJob job;
    job.order = n;
    for (const LoopTable& t : enumerate_all(job)) CHECK(is_associative(t).holds);
  }
}

TEST_CASE("some order-5 loop fails the alternative laws") {
  EnumerationJob job;
  job.order = 5;
  job.filters = {Filter::Nonassociative};
  bool found = false;
  for (const LoopTable& t : enumerate_all(job))
    if (!is_alternative(t).holds) {
      found = true;
      break;
    }
  CHECK(found);
}

TEST_CASE("associative_on restricted subsets") {
  const LoopTable& t = o16().table;
  CHECK(associative_on(t, {0, 1, 8, 9}));  // a cyclic-4 subloop of units
  std::vector<Elem> all(16);
  for (Elem i = 0; i < 16; ++i) all[i] = i;
  CHECK_FALSE(associative_on(t, all));
}
