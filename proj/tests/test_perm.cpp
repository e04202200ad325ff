#include <catch2/catch_amalgamated.hpp>

#include "loopkit/perm.hpp"

using namespace loopkit;

TEST_CASE("right action and composition order") {
  Perm p({1, 2, 3, 0});  // +1 mod 4
  CHECK(apply(p, 0) == 1);
  CHECK(apply(p, 3) == 0);
  // x(PQ) = (xP)Q
  Perm pq = compose(p, p);
  CHECK(pq.images() == std::vector<int>{2, 3, 0, 1});
  Perm q({0, 2, 1, 3});
  for (int x = 0; x < 4; ++x) CHECK(compose(p, q)(x) == q(p(x)));
}

TEST_CASE("inverse and identity") {
  Perm j({0, 3, 2, 1});  // negation on Z4
  CHECK(invert(j) == j);
  CHECK(compose(j, j).is_identity());
  CHECK(Perm::identity(5).is_identity());
  Perm p({2, 0, 1});
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(compose(p.inverse(), p).is_identity());
}

TEST_CASE("perm validation") {
  CHECK_THROWS_AS(Perm({0, 0, 1}), error);
  CHECK_THROWS_AS(Perm({0, 1, 3}), error);
  CHECK_NOTHROW(Perm(std::vector<int>{}));
}

TEST_CASE("cycle type is conjugation invariant") {
  Perm p({1, 0, 3, 4, 2});  // 2-cycle + 3-cycle
  CHECK(p.cycle_type() == std::vector<int>{2, 3});
  Perm g({4, 2, 0, 1, 3});
  CHECK(conjugate(g, p).cycle_type() == p.cycle_type());
}

TEST_CASE("self-maps") {
  SelfMap s({0, 0, 2});
  CHECK_FALSE(s.is_bijective());
  CHECK_THROWS_AS(s.to_perm(), error);
  CHECK_THROWS_AS(SelfMap({0, 5, 1}), error);
  SelfMap id = SelfMap::identity(4);
  CHECK(id.to_perm().is_identity());
}
