#include <doctest.h>

#include <rainbow/asymptotics.hpp>
#include <rainbow/count_table.hpp>
#include <rainbow/distribution.hpp>
#include <rainbow/polynomial.hpp>

#include <nlohmann/json.hpp>

#include <thread>
#include <vector>

using namespace rainbow;

namespace {

HPReal abs_err(const HPReal& a, const HPReal& b) { return abs(a - b); }

}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("find_rho reproduces the closed forms") {
  PrecisionGuard guard(80);

  HPReal rho11 = find_rho({1, 1}, 50);
  CHECK(abs_err(rho11, HPReal(1) / 3) < HPReal("1e-50"));

  // With r = 1, lambda = 2: root of x^2 - 3x + 1, i.e. (3 - sqrt 5)/2.
  HPReal rho12 = find_rho({1, 2}, 50);
  CHECK(abs_err(rho12, (3 - sqrt(HPReal(5))) / 2) < HPReal("1e-50"));

  HPReal rho24 = find_rho({2, 4}, 30);
  CHECK(abs_err(rho24, HPReal("0.540857")) < HPReal("5e-7"));

  CHECK_THROWS_AS(find_rho({1, 1}, 0), std::invalid_argument);
}

TEST_CASE("singular constants at r = lambda = 1") {
  auto k = singular_constants({1, 1}, 40);
  PrecisionGuard guard(k.working_digits);

  CHECK(abs_err(k.rho, HPReal(1) / 3) < HPReal("1e-40"));
  CHECK(abs_err(k.tau, HPReal(2) / 3) < HPReal("1e-40"));
  CHECK(abs_err(k.delta_hat, HPReal(1)) < HPReal("1e-40"));
  CHECK(abs_err(k.c, HPReal(1) / 9) < HPReal("1e-40"));

  HPReal alpha_expected = 2 * sqrt(HPReal(3)) / sqrt(pi_value());
  CHECK(abs_err(k.alpha, alpha_expected) < HPReal("1e-38"));
  CHECK(abs_err(k.alpha, HPReal("1.95441")) < HPReal("1e-5"));
}

TEST_CASE("singular constants at r = 2, lambda = 4") {
  auto k = singular_constants({2, 4}, 30);
  PrecisionGuard guard(k.working_digits);
  CHECK(abs_err(k.rho, HPReal("0.540857")) < HPReal("5e-7"));
  CHECK(abs_err(k.c, HPReal("0.107902")) < HPReal("5e-7"));
}

TEST_CASE("constants obey their defining relations") {
  for (Params p : {Params{1, 1}, Params{1, 3}, Params{2, 2}, Params{4, 4}}) {
    CAPTURE(p.min_stack);
    CAPTURE(p.min_arc);
    auto k = singular_constants(p, 30);
    PrecisionGuard guard(k.working_digits);

    CHECK(k.rho > 0);
    CHECK(k.rho < 1);
    CHECK(k.tau > 0);
    CHECK(k.tau < 1);
    CHECK(k.delta_hat > 0);
    CHECK(k.c_f > 0);

    // c = (1 - tau)^2 and c S(rho)^2 = 1 with S(rho) = 1/(1 - tau).
    const HPReal tol("1e-150");
    CHECK(abs_err(k.c, (1 - k.tau) * (1 - k.tau)) < tol);
    HPReal s_rho = 1 / (1 - k.tau);
    CHECK(abs_err(k.c * s_rho * s_rho, HPReal(1)) < tol);
    CHECK(abs_err(k.beta / k.alpha, 1 - pi_value() / 4) < tol);
    CHECK(abs_err(k.c_f, k.delta_hat * sqrt(k.rho) / (2 * sqrt(pi_value()))) < tol);
  }
}

TEST_CASE("limit law of the longest rainbow") {
  auto k = singular_constants({1, 1}, 30);
  auto t = CountTable::build({1, 1}, 60);
  PrecisionGuard guard(k.working_digits);

  CHECK(abs_err(limit_longest_pmf(k, t, 1), HPReal(1) / 9) < HPReal("1e-100"));
  CHECK(abs_err(limit_longest_pmf(k, t, 2), HPReal(2) / 27) < HPReal("1e-100"));

  HPReal running = 0;
  for (int kk = 1; kk <= 50; ++kk) {
    HPReal p = limit_longest_pmf(k, t, kk);
    CHECK(p > 0);
    CHECK(p < 1);
    HPReal next = limit_longest_cdf(k, t, kk);
    CHECK(next > running);
    CHECK(next < 1);
    CHECK(abs_err(next, running + p) < HPReal("1e-100"));
    running = next;
  }
}

TEST_CASE("corollary-1 cumulative probabilities") {
  auto k11 = singular_constants({1, 1}, 30);
  auto t11 = CountTable::build({1, 1}, 120);
  CHECK(abs_err(limit_longest_cdf(k11, t11, 100), HPReal("0.808013")) <
        HPReal("1e-6"));

  auto k24 = singular_constants({2, 4}, 30);
  auto t24 = CountTable::build({2, 4}, 120);
  CHECK(abs_err(limit_longest_cdf(k24, t24, 100), HPReal("0.811441")) <
        HPReal("1e-6"));
}

TEST_CASE("negative binomial limit") {
  auto k = singular_constants({1, 1}, 30);
  auto t = CountTable::build({1, 1}, 10);
  PrecisionGuard guard(k.working_digits);

  HPReal nb_t = nb_parameter(k, t.irreducible(3), 2);
  CHECK(abs_err(nb_t, HPReal(1) / 10) < HPReal("1e-100"));
  CHECK(abs_err(nb_limit_pmf(nb_t, 0), HPReal("0.81")) < HPReal("1e-100"));

  SUBCASE("degenerate when no block of that length exists") {
    HPReal zero_t = nb_parameter(k, BigInt(0), 5);
    CHECK(zero_t == 0);
    CHECK(nb_limit_pmf(zero_t, 0) == 1);
    CHECK(nb_limit_pmf(zero_t, 1) == 0);
  }

  SUBCASE("pmf normalizes") {
    HPReal total = 0;
    for (int b = 0; b <= 400; ++b) total += nb_limit_pmf(nb_t, b);
    CHECK(abs_err(total, HPReal(1)) < HPReal("1e-100"));
  }

  SUBCASE("moments match NB(2, t)") {
    auto m = expected_rainbows_k(k, t.irreducible(3), 2);
    CHECK(abs_err(m.mean, HPReal(2) / 9) < HPReal("1e-100"));
    CHECK(abs_err(m.mean, 2 * nb_t / (1 - nb_t)) < HPReal("1e-100"));
    CHECK(abs_err(m.variance, 2 * nb_t / ((1 - nb_t) * (1 - nb_t))) <
          HPReal("1e-100"));

    auto none = expected_rainbows_k(k, BigInt(0), 5);
    CHECK(none.mean == 0);
    CHECK(none.variance == 0);
  }
}

TEST_CASE("expected length-k rainbow counts vs k") {
  // The curve is zero until a block of length k+1 fits, then peaks and
  // decays like k^{-3/2}.
  auto k24 = singular_constants({2, 4}, 30);
  auto t = CountTable::build({2, 4}, 60);
  PrecisionGuard guard(k24.working_digits);

  const int first_k = 4 + 2 * 2 - 1 - 1;  // block length lambda + 2r - 1
  for (int k = 1; k < first_k; ++k)
    CHECK(expected_rainbows_k(k24, t.irreducible(k + 1), k).mean == 0);
  HPReal at_first = expected_rainbows_k(k24, t.irreducible(first_k + 1), first_k).mean;
  CHECK(at_first > 0);

  HPReal m10 = expected_rainbows_k(k24, t.irreducible(11), 10).mean;
  HPReal m20 = expected_rainbows_k(k24, t.irreducible(21), 20).mean;
  HPReal m40 = expected_rainbows_k(k24, t.irreducible(41), 40).mean;
  CHECK(m10 > m20);
  CHECK(m20 > m40);
}

TEST_CASE("lemma-1 moments") {
  auto k = singular_constants({1, 1}, 30);
  PrecisionGuard guard(k.working_digits);
  auto m = lemma1_moments(k, 400);
  CHECK(abs_err(m.mean, HPReal("360.9118")) < HPReal("1e-3"));
  CHECK(abs_err(m.variance, k.beta * 8000) < HPReal("1e-80"));
  CHECK_THROWS_AS(lemma1_moments(k, 0), std::invalid_argument);
}

TEST_CASE("coefficient asymptotics tie the expansion to exact counts") {
  auto k = singular_constants({1, 2}, 30);
  auto t = CountTable::build({1, 2}, 1000);
  PrecisionGuard guard(50);
  HPReal r1000 = coefficient_asymptotics_check(t, k, 1000);
  CHECK(r1000 > 0.98);
  CHECK(r1000 < 1.02);
  HPReal r500 = coefficient_asymptotics_check(t, k, 500);
  CHECK(abs(r1000 - 1) < abs(r500 - 1));
}

TEST_CASE("exact law approaches the limit law at rate O(1/n)") {
  auto table = CountTable::build({1, 1}, 400);
  auto k11 = singular_constants({1, 1}, 30);
  PrecisionGuard guard(60);

  // |D(rho)| residual of the isolated root, far below the target digits.
  auto d = singularity_polynomial({1, 1});
  CHECK(abs(d.eval(k11.rho)) < HPReal("1e-30"));

  for (int k = 1; k <= 10; ++k) {
    CAPTURE(k);
    HPReal limit = limit_longest_pmf(k11, table, k);
    HPReal e100 = abs(to_real(exact_longest_pmf_fast(table, 100, k)) - limit);
    HPReal e200 = abs(to_real(exact_longest_pmf_fast(table, 200, k)) - limit);
    HPReal e400 = abs(to_real(exact_longest_pmf_fast(table, 400, k)) - limit);
    CHECK(e200 < HPReal("0.6") * e100);
    CHECK(e400 < HPReal("0.6") * e200);
  }
}

TEST_CASE("high-precision entry points are safe under concurrency") {
  auto k11 = singular_constants({1, 1}, 30);
  auto t11 = CountTable::build({1, 1}, 120);

  std::vector<HPReal> reference;
  for (int t = 10; t <= 100; t += 10)
    reference.push_back(limit_longest_cdf(k11, t11, t));

  std::vector<HPReal> parallel(reference.size());
  std::vector<std::thread> pool;
  for (size_t i = 0; i < reference.size(); ++i) {
    pool.emplace_back([&, i] {
      // interleave with unrelated guarded work at another precision
      PrecisionGuard guard(40 + static_cast<unsigned>(i));
      parallel[i] = limit_longest_cdf(k11, t11, 10 * (static_cast<int>(i) + 1));
    });
  }
  for (auto& th : pool) th.join();

  PrecisionGuard guard(k11.working_digits);
  for (size_t i = 0; i < reference.size(); ++i)
    CHECK(abs(parallel[i] - reference[i]) < HPReal("1e-100"));
}

TEST_CASE("constants export as JSON") {
  auto k = singular_constants({2, 4}, 20);
  auto j = nlohmann::json::parse(constants_to_json(k));
  CHECK(j["r"] == 2);
  CHECK(j["lambda"] == 4);
  CHECK(j["digits"] == 20);
  CHECK(j["rho"].get<std::string>().substr(0, 8) == "0.540856");
  for (const char* key : {"tau", "delta_hat", "c_F", "c", "alpha", "beta"})
    CHECK(j.contains(key));
}

}  // TEST_SUITE
