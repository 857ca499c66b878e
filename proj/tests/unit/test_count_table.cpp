#include <doctest.h>

#include <rainbow/count_table.hpp>
#include <rainbow/enumerate.hpp>

#include <vector>

using namespace rainbow;

namespace {

const std::vector<Params> kGrid = {{1, 1}, {1, 2}, {1, 3}, {1, 4},
                                   {2, 1}, {2, 2}, {2, 3}, {2, 4}};

}  // namespace

TEST_SUITE("series") {

TEST_CASE("frozen count sequences") {
  auto t12 = CountTable::build({1, 2}, 8);
  const long s12[] = {1, 1, 1, 2, 4, 8, 17, 37, 82};
  for (int n = 0; n <= 8; ++n) CHECK(t12.structures(n) == s12[n]);

  const long f12[] = {1, 0, 1, 1, 2};
  for (int n = 1; n <= 5; ++n) CHECK(t12.irreducible(n) == f12[n - 1]);

  auto t11 = CountTable::build({1, 1}, 5);
  const long motzkin[] = {1, 1, 2, 4, 9, 21};
  for (int n = 0; n <= 5; ++n) CHECK(t11.structures(n) == motzkin[n]);

  CHECK(CountTable::build({2, 2}, 6).structures(6) == 4);
}

TEST_CASE("build rejects bad arguments") {
  CHECK_THROWS_AS(CountTable::build({1, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(CountTable::build({0, 1}, 5), std::invalid_argument);
  CHECK_THROWS_AS(CountTable::build({1, 0}, 5), std::invalid_argument);
}

TEST_CASE("accessors reject out-of-horizon indices") {
  auto t = CountTable::build({1, 2}, 6);
  CHECK_THROWS_AS(t.structures(7), std::out_of_range);
  CHECK_THROWS_AS(t.irreducible(-1), std::out_of_range);
  CHECK_THROWS_AS(t.allowed_inner(7), std::out_of_range);
  CHECK_THROWS_AS(t.rainbow_weight(0), std::out_of_range);
  CHECK_THROWS_AS(t.rainbow_weight(8), std::out_of_range);
  CHECK(t.rainbow_weight(7) >= 0);  // horizon + 1 is available
}

TEST_CASE("structural identities hold across the grid") {
  for (const Params& p : kGrid) {
    CAPTURE(p.min_stack);
    CAPTURE(p.min_arc);
    auto t = CountTable::build(p, 40);

    CHECK(t.structures(0) == 1);
    CHECK(t.irreducible(1) == 1);
    CHECK(t.rainbow_weight(1) == 1);
    CHECK(t.rainbow_weight(2) == 2 * t.structures(0) * t.structures(1));

    // s(n) = sum f(i) s(n-i)
    for (int n = 1; n <= 40; ++n) {
      BigInt acc = 0;
      for (int i = 1; i <= n; ++i) acc += t.irreducible(i) * t.structures(n - i);
      CHECK(acc == t.structures(n));
    }
    // sum_{t >= r, 2t <= n} a(n - 2t) = f(n)
    for (int n = 2; n <= 40; ++n) {
      BigInt acc = 0;
      for (int st = p.min_stack; 2 * st <= n; ++st)
        acc += t.allowed_inner(n - 2 * st);
      CHECK(acc == t.irreducible(n));
    }

    // s(n) stays 1 exactly until an arc fits.
    const int first = p.min_arc + 2 * p.min_stack - 1;
    for (int n = 1; n <= 40; ++n) {
      if (n < first)
        CHECK(t.structures(n) == 1);
      else if (n == first)
        CHECK(t.structures(n) == 2);
    }
  }
}

TEST_CASE("counts agree with the enumerator") {
  for (const Params& p : kGrid) {
    auto t = CountTable::build(p, 9);
    for (int n = 0; n <= 9; ++n) {
      CAPTURE(p.min_stack);
      CAPTURE(p.min_arc);
      CAPTURE(n);
      size_t total = 0, irreducible = 0;
      enumerate_all(p, n, [&](const SecondaryStructure& st) {
        ++total;
        if (!st.arcs().empty() && st.arcs()[0].open == 1 &&
            st.arcs()[0].close == n)
          ++irreducible;
        if (n == 1) ++irreducible;  // the single vertex
      });
      CHECK(t.structures(n) == total);
      if (n >= 1) CHECK(t.irreducible(n) == irreducible);
    }
  }
}

TEST_CASE("bounded structure counts") {
  auto t = CountTable::build({1, 2}, 12);

  SUBCASE("inactive bound reproduces s(n)") {
    auto sb = t.bounded_structure_counts(11, 12);
    for (int n = 0; n <= 12; ++n) CHECK(sb[n] == t.structures(n));
  }
  SUBCASE("bound zero keeps only the open chain") {
    auto sb = t.bounded_structure_counts(0, 12);
    for (int n = 0; n <= 12; ++n) CHECK(sb[n] == 1);
  }
  SUBCASE("hand-counted value") {
    CHECK(t.bounded_structure_counts(2, 5)[5] == 4);
  }
  SUBCASE("argument validation") {
    CHECK_THROWS_AS(t.bounded_structure_counts(-1, 5), std::invalid_argument);
    CHECK_THROWS_AS(t.bounded_structure_counts(2, 13), std::out_of_range);
  }
  SUBCASE("monotone in the bound and consistent with the enumerator") {
    for (const Params& p : kGrid) {
      auto tg = CountTable::build(p, 8);
      for (int n = 1; n <= 8; ++n) {
        BigInt prev = -1;
        for (int m = 0; m <= n; ++m) {
          BigInt cur = tg.bounded_structure_counts(m, n)[n];
          CHECK(cur >= prev);
          prev = cur;

          size_t expect = 0;
          enumerate_all(p, n, [&](const SecondaryStructure& st) {
            auto spec = rainbow_spectrum(st);
            if (spec.rainbow_lengths.empty() || spec.rainbow_lengths[0] <= m)
              ++expect;
          });
          CHECK(cur == expect);
        }
      }
    }
  }
}

TEST_CASE("from_series validates its input") {
  auto t = CountTable::build({1, 2}, 10);
  std::vector<BigInt> s, f;
  for (int n = 0; n <= 10; ++n) s.push_back(t.structures(n));
  for (int n = 0; n <= 10; ++n) f.push_back(t.irreducible(n));

  auto rebuilt = CountTable::from_series({1, 2}, s, f);
  for (int n = 0; n <= 10; ++n) {
    CHECK(rebuilt.allowed_inner(n) == t.allowed_inner(n));
    CHECK(rebuilt.rainbow_weight(n + 1) == t.rainbow_weight(n + 1));
  }

  auto bad_f = f;
  bad_f[3] += 1;
  CHECK_THROWS_AS(CountTable::from_series({1, 2}, s, bad_f),
                  std::invalid_argument);
}

}  // TEST_SUITE
