#pragma once

// Jack connection coefficients
//
//   a_{lambda^1..lambda^s}(alpha) = sum_{beta |- n} prod_i theta^beta_{lambda^i}(alpha) / (h_beta h'_beta),
//
// the Laplace-Beltrami fast path for a^r_lambda = a_{lambda, rho, ..., rho}
// (rho = [1^{n-2} 2]), and executable checks of the structural results about
// them: vanishing below the reflection length, palindromic integer
// coefficients, nonnegativity in b = alpha - 1, the closed form at
// r = r_lambda, alpha -> 1/alpha duality, Jackson's transposition count,
// the X-specialization identity and the single-D hypermap formulas.

#include "jackcc/exactalg.hpp"
#include "jackcc/partitions.hpp"
#include "jackcc/symfunc.hpp"

#include <span>
#include <string>
#include <vector>

namespace jackcc {

/// sum_{beta |- n} numerators[beta] / (h_beta(alpha) h'_beta(alpha)), with
/// numerators indexed as generate_partitions(n). Computed exactly over the
/// factored common denominator; throws TheoremViolation if the sum is not a
/// Laurent polynomial.
LaurentAlpha sum_over_hook_norms(int n, std::span<const LaurentAlpha> numerators);

/// a_{lambda^1, ..., lambda^s}(alpha) from the theta table. Symmetric in
/// its arguments. Throws std::invalid_argument on an empty list or unequal weights.
LaurentAlpha jcc(std::span<const Partition> lambdas);
inline LaurentAlpha jcc(std::initializer_list<Partition> lambdas) {
  return jcc(std::span<const Partition>(lambdas.begin(), lambdas.size()));
}

/// D(alpha)^r (p_1^n) / (alpha^n n!) for r = 0..r_max; entry r holds
/// sum_lambda a^r_lambda(alpha) p_lambda.
std::vector<PowerVec> laplace_beltrami_iterates(int n, int r_max);

struct ArLambdaResult {
  Partition lambda;
  int r = 0;
  LaurentAlpha value;
  /// g^i for i = 0..r - r_lambda: value = (1/n!) sum_i g^i alpha^{i - l(lambda)}.
  /// Empty when r < r_lambda.
  std::vector<BigInt> g;
  /// Coefficients of n! alpha^{l(lambda)} value in powers of b = alpha - 1, i = 0..r - r_lambda.
  /// Empty when r < r_lambda.
  std::vector<BigInt> b;
};

/// Builds g/b and checks every structural property of a^r_lambda: zero below
/// r_lambda, integrality, g^i = (-1)^{r - r_lambda} g^{r - r_lambda - i},
/// nonnegative b-coefficients of degree <= r - r_lambda. Throws
/// TheoremViolation with a diagnostic on failure.
ArLambdaResult analyze_ar(const Partition& lambda, int r, const LaurentAlpha& value);

/// a^r_lambda via r applications of D(alpha) to p_1^n, analyzed as above.
/// For n <= kArCrossCheckMaxWeight and r <= r_lambda + 3 the value is also
/// compared with jcc(lambda, rho, ..., rho).
ArLambdaResult a_r_lambda(const Partition& lambda, int r);
inline constexpr int kArCrossCheckMaxWeight = 6;

/// jcc(lambda, rho x r): the character-sum route to a^r_lambda.
LaurentAlpha a_r_lambda_via_characters(const Partition& lambda, int r);

/// (|lambda| - l)! prod_i lambda_i^{lambda_i - 2} / (alpha^l Aut_lambda prod_i lambda_i!).
LaurentAlpha denes_closed_form(const Partition& lambda);

struct CheckResult {
  std::string name;
  std::string detail;
  bool passed = false;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  void add(std::string name, std::string detail, bool passed);
};

/// Runs the structural checks for every lambda |- n <= n_max and
/// r <= r_lambda + r_extra, plus alpha-inversion duality on every multiset of
/// up to four partitions of each n. One report entry per (check, n).
VerificationReport verify_theorems(int n_max, int r_extra);

/// ((s-1)!/n!) n^{s-1} 2^{n-s} [X^{s-1}] sinh(X)^{n-1}.
Rational jackson_closed_form(int n, int s);
/// n * a^{s-1}_{(n)}(1), checked against jackson_closed_form. Throws
/// TheoremViolation on mismatch. Requires s >= 2.
Rational jackson_formula(int n, int s);

/// sum over lambda^i |- n with l(lambda^i) = lengths[i] of jcc(lambda^1..lambda^s).
LaurentAlpha aggregate_by_lengths(int n, std::span<const int> lengths);

/// Checks sum_p a_{n,p} prod X_i^{p_i} = sum_beta prod_i R_beta(X_i) / (h_beta h'_beta)
/// at every point of sample_x^s, exactly in alpha. Returns true or throws
/// TheoremViolation.
bool gen_identity_check(int n, int s, std::span<const Rational> sample_x);

/// a_{lambda, mu, rho}(alpha) = [p_mu] D(alpha)(p_lambda) / (alpha^{l(lambda)} z_lambda),
/// checked against the diagonal/merge/split case formulas and against jcc.
LaurentAlpha hypermap_triple(const Partition& lambda, const Partition& mu);

/// The diagonal/merge/split case formulas for a_{lambda, mu, rho}, summed
/// over every pair of parts (merge) or part and split (split) producing mu.
LaurentAlpha hypermap_case_formula(const Partition& lambda, const Partition& mu);

/// Observation for the Matchings-Jack conjecture on
/// c^lambda_{mu nu}(b) = alpha^{l(lambda)} z_lambda a_{lambda,mu,nu}(alpha), alpha = 1 + b.
struct MatchingsJackObservation {
  std::vector<Rational> b_coeffs;
  bool nonnegative_integers = false;
  int degree_bound = 0;
  bool degree_within_bound = false;
  bool consistent() const { return nonnegative_integers && degree_within_bound; }
};

/// Throws TheoremViolation only when c is not a polynomial in alpha.
MatchingsJackObservation matchings_jack_coef(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Runs matchings_jack_coef on every triple of partitions of each n <= n_max;
/// one report entry per n. Failed entries are observations, not errors.
VerificationReport verify_matchings_conjecture(int n_max);

/// [p_target] U^r (p_{1^n}) with n = |target| and r = n - l(target).
BigInt u_power_coefficient(const Partition& target);

struct RecUSides {
  BigInt lhs;
  Rational rhs;
};
/// Both sides of the product recursion for [p_{(i,j)}] U^{i+j-2}(p_{1^{i+j}}).
RecUSides rec_u(int i, int j);

/// t_n = alpha n a^{n-1}_{(n)}(alpha) for n = 1..n_max (index 0 is t_1).
std::vector<LaurentAlpha> t_sequence(int n_max);

/// Checks t_n = (n/2) sum_{i=1}^{n-1} C(n-2, i-1) t_i t_{n-i} for n = 2..t.size().
bool rec_a_holds(std::span<const LaurentAlpha> t);

/// Coefficients of u^1..u^order of G(u) = sum_n t_n u^n/(n-1)! and of
/// u exp(G(u)); entry 0 is u^0.
struct SeriesPair {
  std::vector<Rational> g;
  std::vector<Rational> u_exp_g;
};
SeriesPair denes_series(std::span<const Rational> t, int order);

}  // namespace jackcc
