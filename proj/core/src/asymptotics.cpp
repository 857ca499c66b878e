#include "rainbow/asymptotics.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "rainbow/polynomial.hpp"

namespace rainbow {

namespace {

Rational pow10_inverse(int digits) {
  BigInt den = 1;
  for (int i = 0; i < digits; ++i) den *= 10;
  return Rational(BigInt(1), den);
}

HPReal bracket_midpoint(const RootBracket& bracket) {
  return to_real(bracket.midpoint());
}

}  // namespace

HPReal find_rho(const Params& params, int target_digits) {
  check_params(params);
  if (target_digits < 1) throw std::invalid_argument("target_digits must be >= 1");

  const IntPolynomial d = singularity_polynomial(params);
  RootBracket bracket;
  try {
    bracket = isolate_smallest_positive_root(d, Rational(1),
                                             pow10_inverse(target_digits + 5));
  } catch (const RootIsolationError& e) {
    throw ComputationError(std::string("dominant singularity: ") + e.what());
  }
  PrecisionGuard guard(static_cast<unsigned>(target_digits) + 15);
  return bracket_midpoint(bracket);
}

AsymptoticConstants singular_constants(const Params& params,
                                       int target_digits) {
  check_params(params);
  if (target_digits < 1) throw std::invalid_argument("target_digits must be >= 1");

  // rho^t for t into the hundreds has to survive with headroom, hence the
  // 200-digit floor on the working precision.
  const int working = std::max(200, target_digits + 20);

  const IntPolynomial d = singularity_polynomial(params);
  RootBracket bracket;
  try {
    bracket = isolate_smallest_positive_root(d, Rational(1),
                                             pow10_inverse(working + 10));
  } catch (const RootIsolationError& e) {
    throw ComputationError(std::string("dominant singularity: ") + e.what());
  }

  PrecisionGuard guard(static_cast<unsigned>(working));

  AsymptoticConstants k;
  k.params = params;
  k.target_digits = target_digits;
  k.working_digits = working;
  k.rho = bracket_midpoint(bracket);

  const HPReal dprime = d.derivative().eval(k.rho);
  if (dprime >= 0)
    throw ComputationError(
        "D'(rho) >= 0: singular expansion orientation violated");

  const HPReal b_at_rho = count_poly_b(params).eval(k.rho);
  const HPReal rho_2r = pow(k.rho, 2 * params.min_stack);
  const HPReal s_at_rho = b_at_rho / (2 * rho_2r);  // branch-point value of S
  k.tau = 1 - 1 / s_at_rho;
  if (k.tau <= 0 || k.tau >= 1)
    throw ComputationError("F(rho) outside (0, 1): subcriticality violated");

  const HPReal sqrt_pi = sqrt(pi_value());
  k.delta_hat = sqrt(-dprime) / (2 * rho_2r * s_at_rho * s_at_rho);
  k.c_f = k.delta_hat * sqrt(k.rho) / (2 * sqrt_pi);
  k.c = (1 - k.tau) * (1 - k.tau);
  k.alpha = 2 * k.delta_hat * sqrt(k.rho) / (sqrt_pi * (1 - k.tau));
  k.beta = (1 - pi_value() / 4) * k.alpha;
  return k;
}

HPReal limit_longest_pmf(const AsymptoticConstants& constants,
                         const CountTable& table, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  PrecisionGuard guard(static_cast<unsigned>(constants.working_digits));
  return constants.c * to_real(table.rainbow_weight(k)) *
         pow(constants.rho, k - 1);
}

HPReal limit_longest_cdf(const AsymptoticConstants& constants,
                         const CountTable& table, int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  PrecisionGuard guard(static_cast<unsigned>(constants.working_digits));
  HPReal sum = 0;
  HPReal rho_pow = 1;  // rho^{k-1}
  for (int k = 1; k <= t; ++k) {
    sum += to_real(table.rainbow_weight(k)) * rho_pow;
    rho_pow *= constants.rho;
  }
  return constants.c * sum;
}

HPReal nb_parameter(const AsymptoticConstants& constants,
                    const BigInt& f_k_plus_1, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (f_k_plus_1 < 0) throw std::invalid_argument("f(k+1) must be >= 0");
  PrecisionGuard guard(static_cast<unsigned>(constants.working_digits));
  const HPReal weight = to_real(f_k_plus_1) * pow(constants.rho, k + 1);
  return weight / (1 - constants.tau + weight);
}

HPReal nb_limit_pmf(const HPReal& t, int b) {
  if (b < 0) throw std::invalid_argument("b must be >= 0");
  if (t < 0 || t >= 1) throw std::invalid_argument("t must lie in [0, 1)");
  const HPReal one_minus = 1 - t;
  return (b + 1) * pow(t, b) * one_minus * one_minus;
}

Moments expected_rainbows_k(const AsymptoticConstants& constants,
                            const BigInt& f_k_plus_1, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  PrecisionGuard guard(static_cast<unsigned>(constants.working_digits));
  const HPReal weight = to_real(f_k_plus_1) * pow(constants.rho, k + 1);
  const HPReal one_minus_tau = 1 - constants.tau;
  Moments m;
  m.mean = 2 * weight / one_minus_tau;
  m.variance = 2 * weight * (one_minus_tau + weight) /
               (one_minus_tau * one_minus_tau);
  return m;
}

Moments lemma1_moments(const AsymptoticConstants& constants, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  PrecisionGuard guard(static_cast<unsigned>(constants.working_digits));
  const HPReal sqrt_n = sqrt(HPReal(n));
  Moments m;
  m.mean = n - constants.alpha * sqrt_n;
  m.variance = constants.beta * n * sqrt_n;
  return m;
}

HPReal coefficient_asymptotics_check(const CountTable& table,
                                     const AsymptoticConstants& constants,
                                     int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  PrecisionGuard guard(static_cast<unsigned>(constants.working_digits));
  const HPReal fn = to_real(table.irreducible(n));
  return fn * pow(HPReal(n), HPReal(3) / 2) * pow(constants.rho, n) /
         constants.c_f;
}

std::string constants_to_json(const AsymptoticConstants& constants) {
  PrecisionGuard guard(static_cast<unsigned>(constants.working_digits));
  const int digits = constants.target_digits;
  nlohmann::ordered_json j;
  j["r"] = constants.params.min_stack;
  j["lambda"] = constants.params.min_arc;
  j["digits"] = digits;
  j["rho"] = constants.rho.str(digits);
  j["tau"] = constants.tau.str(digits);
  j["delta_hat"] = constants.delta_hat.str(digits);
  j["c_F"] = constants.c_f.str(digits);
  j["c"] = constants.c.str(digits);
  j["alpha"] = constants.alpha.str(digits);
  j["beta"] = constants.beta.str(digits);
  return j.dump(2);
}

}  // namespace rainbow
