#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "loopkit/constructions.hpp"
#include "loopkit/identities.hpp"
#include "loopkit/io.hpp"

using namespace loopkit;

namespace {
const char* kQ5 =
    "5\n"
    "0 1 2 3 4\n"
    "1 0 3 4 2\n"
    "2 3 4 0 1\n"
    "3 4 1 2 0\n"
    "4 2 0 1 3\n";
}

TEST_CASE("parse cyclic group table") {
  LoopTable z3 = parse_loop("3\n0 1 2\n1 2 0\n2 0 1");
  CHECK(z3.order() == 3);
  CHECK(z3.mul(2, 2) == 1);
  CHECK(z3 == cyclic_group(3));
}

TEST_CASE("parse rejects bad tables") {
  // repeated entry in column 1
  CHECK_THROWS_WITH(parse_loop("2\n0 1\n1 1"), Catch::Matchers::ContainsSubstring("repeats"));
  // non-square
  CHECK_THROWS_AS(parse_loop("3\n0 1 2\n1 2 0"), error);
  CHECK_THROWS_AS(parse_loop("2\n0 1 0\n1 0 1"), error);
  // out of range entry
  CHECK_THROWS_WITH(parse_loop("2\n0 2\n2 0"), Catch::Matchers::ContainsSubstring("out of range"));
  // Latin but no two-sided identity
  CHECK_THROWS_WITH(parse_loop("3\n1 2 0\n2 0 1\n0 1 2"),
                    Catch::Matchers::ContainsSubstring("identity"));
}

TEST_CASE("comments and blank lines are skipped") {
  LoopTable q = parse_loop("# a comment\n\n2\n# another\n0 1\n1 0\n");
  CHECK(q.order() == 2);
}

TEST_CASE("canonicalization relabels the identity to 0") {
  // Z3 with labels 0 and 1 swapped: identity is element 1
  std::string shifted = "3\n1 0 2\n0 2 1\n2 1 0\n";
  CHECK_THROWS_AS(parse_loop(shifted), error);
  LoopTable q = parse_loop(shifted, /*canonicalize=*/true);
  CHECK(q.mul(0, 2) == 2);
  CHECK(q.mul(2, 0) == 2);
  CHECK(loops_isomorphic(q, cyclic_group(3)));
}

TEST_CASE("q5 fixture is a valid non-associative loop") {
  LoopTable q5 = parse_loop(kQ5);
  CHECK(q5.order() == 5);
  auto assoc = check_associativity(q5);
  CHECK_FALSE(assoc.holds);
  // spot value: (1.1).2 = 2 but 1.(1.2) = 4
  CHECK(q5.mul(q5.mul(1, 1), 2) == 2);
  CHECK(q5.mul(1, q5.mul(1, 2)) == 4);
}

TEST_CASE("loop file round-trip over the small corpus") {
  enumerate_loops(5, 40, [&](const LoopTable& q) {
    std::ostringstream os;
    write_loop(os, q);
    CHECK(parse_loop(os.str()) == q);
    return true;
  });
}

TEST_CASE("map and perms files") {
  std::ostringstream os;
  write_map(os, SelfMap({2, 0, 1}));
  std::istringstream is(os.str());
  CHECK(parse_map(is) == SelfMap({2, 0, 1}));
  std::istringstream bad("3\n0 1");
  CHECK_THROWS_AS(parse_map(bad), error);

  std::ostringstream po;
  write_perms(po, 3, {Perm::identity(3), Perm({1, 2, 0})});
  std::istringstream pi(po.str());
  auto perms = parse_perms(pi);
  REQUIRE(perms.size() == 2);
  CHECK(perms[1] == Perm({1, 2, 0}));
}

TEST_CASE("oracle materialization and sampled validation") {
  MulOracle oracle(4, [](int x, int y) { return (x + y) % 4; });
  CHECK(oracle.validate_sampled(200, 7));
  CHECK(oracle.materialize() == cyclic_group(4));
  MulOracle broken(4, [](int x, int y) { return (x * y) % 4; });  // not a quasigroup
  CHECK_FALSE(broken.validate_sampled(200, 7));
}
