#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "rainbow/count_table.hpp"
#include "rainbow/numeric.hpp"
#include "rainbow/params.hpp"

namespace rainbow {

class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dominant-singularity data for one (min_stack, min_arc) filtration.
///
/// The singular expansion reads F(x) = tau - delta_hat (rho - x)^{1/2} + ...;
/// delta_hat is stored positive and the orientation is validated against
/// the exact coefficients via coefficient_asymptotics_check. The derived
/// constants are
///
///   c_f   : f(n) ~ c_f n^{-3/2} rho^{-n}
///   c     : (1 - tau)^2, normalizer of the longest-rainbow limit law
///   alpha : E[Y_n] = n - alpha sqrt(n) (1 + o(1))
///   beta  : V[Y_n] = beta n^{3/2} (1 + o(1)), beta = (1 - pi/4) alpha
struct AsymptoticConstants {
  Params params;
  int target_digits = 30;   // requested output precision
  int working_digits = 200; // precision the stored values carry
  HPReal rho;
  HPReal tau;
  HPReal delta_hat;
  HPReal c_f;
  HPReal c;
  HPReal alpha;
  HPReal beta;
};

/// Smallest positive real root of B(x)^2 - 4 x^{2r} A(x), isolated by
/// exact rational bisection; accurate to 10^-target_digits.
HPReal find_rho(const Params& params, int target_digits);

AsymptoticConstants singular_constants(const Params& params,
                                       int target_digits = 30);

/// lim_n P(n - Y_n = k) = c b_k rho^{k-1}. Requires k <= horizon + 1.
HPReal limit_longest_pmf(const AsymptoticConstants& constants,
                         const CountTable& table, int k);

/// lim_n P(Y_n >= n - t) = sum_{k<=t} c b_k rho^{k-1}.
HPReal limit_longest_cdf(const AsymptoticConstants& constants,
                         const CountTable& table, int t);

/// t = f(k+1) rho^{k+1} / (1 - tau + f(k+1) rho^{k+1}), the NB(2, t)
/// parameter of the length-k rainbow-count limit law.
HPReal nb_parameter(const AsymptoticConstants& constants,
                    const BigInt& f_k_plus_1, int k);

/// P(b) = (b+1) t^b (1-t)^2.
HPReal nb_limit_pmf(const HPReal& t, int b);

struct Moments {
  HPReal mean;
  HPReal variance;
};

/// Asymptotic mean 2 f(k+1) rho^{k+1} / (1 - tau) and variance of the
/// number of length-k rainbows; consistent with NB(2, t).
Moments expected_rainbows_k(const AsymptoticConstants& constants,
                            const BigInt& f_k_plus_1, int k);

/// Leading-order (n - alpha sqrt(n), beta n^{3/2}); rejects n < 1.
Moments lemma1_moments(const AsymptoticConstants& constants, int n);

/// f(n) n^{3/2} rho^n / c_f; tends to 1 at rate O(1/n).
HPReal coefficient_asymptotics_check(const CountTable& table,
                                     const AsymptoticConstants& constants,
                                     int n);

/// {r, lambda, digits, rho, tau, delta_hat, c_F, c, alpha, beta} with the
/// decimals rendered at target precision.
std::string constants_to_json(const AsymptoticConstants& constants);

}  // namespace rainbow
