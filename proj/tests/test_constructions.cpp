#include <catch2/catch_amalgamated.hpp>

#include "loopkit/constructions.hpp"
#include "loopkit/identities.hpp"

using namespace loopkit;

TEST_CASE("ring spec parsing") {
  RingSpec zn = RingSpec::parse("zn:3");
  CHECK(zn.kind == RingSpec::Kind::integers_mod);
  CHECK(zn.size() == 3);
  RingSpec m = RingSpec::parse("m2gf3");
  CHECK(m.kind == RingSpec::Kind::matrices);
  CHECK(m.size() == 81);
  RingSpec ut = RingSpec::parse("ut2gf3");
  CHECK(ut.kind == RingSpec::Kind::upper_triangular);
  CHECK(ut.size() == 27);
  CHECK_THROWS_AS(RingSpec::parse("zn:1"), error);
  CHECK_THROWS_AS(RingSpec::parse("m2gf4"), error);  // 4 is not prime
  CHECK_THROWS_AS(RingSpec::parse("blah"), error);
}

TEST_CASE("matrix ring arithmetic over GF(3)") {
  Ring r(RingSpec::parse("m2gf3"));
  // entries encoded row-major base 3: index = a + 3b + 9c + 27d for
  // the matrix [[a, b], [c, d]]
  auto enc = [](int a, int b, int c, int d) { return a + 3 * b + 9 * c + 27 * d; };
  int id = enc(1, 0, 0, 1);
  int x = enc(1, 2, 0, 1);
  CHECK(r.mul(id, x) == x);
  CHECK(r.mul(x, id) == x);
  CHECK(r.add(x, r.mul(enc(2, 0, 0, 2), x)) == 0);  // x + (-1)x = 0
  // [[1,2],[0,1]] * [[1,2],[0,1]] = [[1,4],[0,1]] = [[1,1],[0,1]] mod 3
  CHECK(r.mul(x, x) == enc(1, 1, 0, 1));
  // a non-commutative pair
  int a = enc(0, 1, 0, 0), b = enc(0, 0, 1, 0);
  CHECK(r.mul(a, b) != r.mul(b, a));
  CHECK(r.mul(a, b) == enc(1, 0, 0, 0));
  CHECK(r.mul(b, a) == enc(0, 0, 0, 1));
}

TEST_CASE("upper triangular ring is closed and unital") {
  Ring r(RingSpec::parse("ut2gf3"));
  // slots: (0,0), (0,1), (1,1); identity has 1 on the diagonal
  auto enc = [](int d0, int u, int d1) { return d0 + 3 * u + 9 * d1; };
  int id = enc(1, 0, 1);
  for (int x = 0; x < r.size(); ++x) {
    CHECK(r.mul(id, x) == x);
    CHECK(r.mul(x, id) == x);
  }
  CHECK(r.mul(enc(1, 1, 1), enc(1, 1, 1)) == enc(1, 2, 1));
}

TEST_CASE("the zn:3 ring loop is the expected order-9 group") {
  RingLoop rl = example_ring_loop(RingSpec::parse("zn:3"));
  REQUIRE(rl.oracle.order() == 9);
  LoopTable t = rl.table();
  // independent construction: v^3 = v in Z3, so (u,f).(v,g) = (u+v, f+g+uv)
  for (int x = 0; x < 9; ++x)
    for (int y = 0; y < 9; ++y) {
      int u = x / 3, f = x % 3, v = y / 3, g = y % 3;
      CHECK(t.mul(x, y) == ((u + v) % 3) * 3 + (f + g + u * v) % 3);
    }
  CHECK(check_associativity(t).holds);
  CHECK(check_identity(t, IdentityKind::right_bol).holds);
  // exponent 3: this is the elementary abelian group, not Z9
  CHECK(automorphism_group(t).order() == 48);
  // identity law (0,0).(v,g) = (v,g)
  for (int y = 0; y < 9; ++y) CHECK(rl.oracle.mul(0, y) == y);
}

TEST_CASE("sigma of a ring loop is the loop squaring") {
  RingLoop rl = example_ring_loop(RingSpec::parse("zn:5"));
  for (int x = 0; x < rl.oracle.order(); ++x)
    CHECK(rl.sigma(x) == rl.oracle.mul(x, x));
}

TEST_CASE("the m2gf3 loop has order 6561 and two-sided inverses exist") {
  RingLoop rl = example_ring_loop(RingSpec::parse("m2gf3"));
  REQUIRE(rl.oracle.order() == 6561);
  CHECK(rl.oracle.validate_sampled(2000, 11));
  // identity law at (0,0)
  for (int y : {1, 80, 6560, 4242}) {
    CHECK(rl.oracle.mul(0, y) == y);
    CHECK(rl.oracle.mul(y, 0) == y);
  }
  // spot-check the product formula against direct matrix arithmetic
  Ring r(RingSpec::parse("m2gf3"));
  auto probe = [&](int x, int y) {
    int u = x / 81, f = x % 81, v = y / 81, g = y % 81;
    int expect = r.add(u, v) * 81 + r.add(r.add(f, g), r.mul(u, r.cube(v)));
    CHECK(rl.oracle.mul(x, y) == expect);
  };
  probe(1, 2);
  probe(100, 2000);
  probe(6560, 6560);
  probe(81 * 5 + 7, 81 * 33 + 80);
}

TEST_CASE("standard loops") {
  CHECK(standard_loop("cyclic:4") == cyclic_group(4));
  CHECK(standard_loop("klein").order() == 4);
  CHECK_FALSE(loops_isomorphic(standard_loop("klein"), cyclic_group(4)));
  LoopTable s3 = standard_loop("sym3");
  CHECK(s3.order() == 6);
  CHECK(check_associativity(s3).holds);
  CHECK_FALSE(check_identity(s3, IdentityKind::aip).holds);  // non-abelian
  CHECK(standard_loop("ea:3:2").order() == 9);
  CHECK_THROWS_AS(standard_loop("noidea"), error);
}

TEST_CASE("enumeration counts, frozen") {
  auto count = [](int n, bool dedup = false) {
    return enumerate_loops(n, 0, [](const LoopTable&) { return true; }, dedup);
  };
  CHECK(count(1) == 1);
  CHECK(count(2) == 1);
  CHECK(count(3) == 1);
  CHECK(count(4) == 4);
  CHECK(count(5) == 56);
  CHECK(count(4, true) == 2);  // Z4 and Klein
  CHECK(count(5, true) == 6);
  CHECK_THROWS_AS(count(7), error);
}

TEST_CASE("order-5 census cross-checked by naive generate-and-filter") {
  // independent oracle: choose each row r >= 1 as a permutation with
  // p_r(0) = r, filter for column-Latin
  std::vector<std::vector<int>> rows;  // all permutations of 0..4 per first entry
  std::vector<int> base{0, 1, 2, 3, 4};
  std::vector<std::vector<std::vector<int>>> by_first(5);
  std::sort(base.begin(), base.end());
  do {
    if (base[0] == 0) continue;  // row 0 is fixed as the identity row
    by_first[static_cast<size_t>(base[0])].push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));

  uint64_t count = 0;
  for (auto& r1 : by_first[1])
    for (auto& r2 : by_first[2])
      for (auto& r3 : by_first[3])
        for (auto& r4 : by_first[4]) {
          bool latin = true;
          for (int c = 1; c < 5 && latin; ++c) {
            int mask = 1 << c;  // column c already holds value c from row 0
            for (auto* row : {&r1, &r2, &r3, &r4}) {
              int v = (*row)[static_cast<size_t>(c)];
              if (mask & (1 << v)) {
                latin = false;
                break;
              }
              mask |= 1 << v;
            }
          }
          if (latin) ++count;
        }
  CHECK(count == 56);
}

TEST_CASE("enumeration order is deterministic and the cap works") {
  std::vector<LoopTable> first;
  enumerate_loops(5, 3, [&](const LoopTable& q) {
    first.push_back(q);
    return true;
  });
  REQUIRE(first.size() == 3);
  std::vector<LoopTable> again;
  enumerate_loops(5, 0, [&](const LoopTable& q) {
    again.push_back(q);
    return again.size() < 3;
  });
  CHECK(first == again);
}

TEST_CASE("every emitted loop passes validation by construction") {
  // from_rows inside the enumerator would throw; sample a few explicitly
  uint64_t n = enumerate_loops(6, 50, [&](const LoopTable& q) {
    CHECK(q.order() == 6);
    CHECK(q.mul(0, 3) == 3);
    CHECK(q.mul(3, 0) == 3);
    return true;
  });
  CHECK(n == 50);
}

TEST_CASE("isomorphism search") {
  CHECK(loops_isomorphic(cyclic_group(4), cyclic_group(4)));
  CHECK_FALSE(loops_isomorphic(cyclic_group(4), klein_group()));
  auto iso = find_isomorphism(cyclic_group(3), cyclic_group(3));
  REQUIRE(iso.has_value());
  // seeded helpers are deterministic
  CHECK(random_self_map(6, 5) == random_self_map(6, 5));
  CHECK(random_perm(6, 5) == random_perm(6, 5));
  CHECK_FALSE(random_perm(6, 5) == random_perm(6, 6));
}
