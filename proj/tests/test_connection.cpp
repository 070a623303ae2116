#include "jackcc/connection.hpp"
#include "jackcc/jack.hpp"

#include "test_support.hpp"

#include <random>

using namespace jackcc;

namespace {

LaurentAlpha alpha() { return LaurentAlpha::alpha(); }

LaurentAlpha inverse_alpha_power(const Rational& c, int k) { return LaurentAlpha::monomial(c, -k); }

BigInt int_pow(long base, unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

}  // namespace

TEST_CASE("sum over hook norms agrees with pointwise evaluation") {
  std::mt19937 rng(5);
  for (int n = 1; n <= 7; ++n) {
    const auto parts = generate_partitions(n);
    const auto table = theta_table(n);
    for (int trial = 0; trial < 5; ++trial) {
      std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
      const std::size_t i = pick(rng);
      const std::size_t k = pick(rng);
      const std::size_t m = pick(rng);
      std::vector<LaurentAlpha> numerators;
      for (std::size_t b = 0; b < parts.size(); ++b) {
        numerators.push_back(table->theta(b, i) * table->theta(b, k) * table->theta(b, m));
      }
      const LaurentAlpha sum = sum_over_hook_norms(n, numerators);
      for (int a = 1; a <= 4; ++a) {
        const Rational av = make_rational(a, 2);
        Rational direct = 0;
        for (std::size_t b = 0; b < parts.size(); ++b) {
          direct += substitute_alpha(numerators[b], av) / substitute_alpha(hook_norm(parts[b]), av);
        }
        CHECK(substitute_alpha(sum, av) == direct);
      }
    }
  }
  // A numerator vector whose sum is not a Laurent polynomial.
  std::vector<LaurentAlpha> bad(2);
  bad[0] = 1;
  CHECK_THROWS_AS(sum_over_hook_norms(2, bad), TheoremViolation);
  CHECK_THROWS_AS(sum_over_hook_norms(2, std::vector<LaurentAlpha>(3)), std::invalid_argument);
}

TEST_CASE("connection coefficients with one or two arguments") {
  for (int n = 1; n <= 6; ++n) {
    const Rational inv_fact = Rational(1) / Rational(factorial(static_cast<unsigned>(n)));
    for (const auto& l : generate_partitions(n)) {
      CHECK(jcc({l}) == (l == Partition::ones(n) ? inverse_alpha_power(inv_fact, n) : LaurentAlpha()));
      for (const auto& m : generate_partitions(n)) {
        const LaurentAlpha expected =
            l == m ? inverse_alpha_power(Rational(1) / Rational(z(l)), l.length()) : LaurentAlpha();
        CHECK(jcc({l, m}) == expected);
      }
    }
  }
  CHECK(jcc({Partition{2}, Partition{2}}) == inverse_alpha_power(make_rational(1, 2), 1));
  CHECK(jcc({Partition{1, 1}, Partition{2}, Partition{2}}) == inverse_alpha_power(make_rational(1, 2), 1));
  CHECK_THROWS_AS(jcc({Partition{2}, Partition{3}}), std::invalid_argument);
  CHECK_THROWS_AS(jcc(std::span<const Partition>()), std::invalid_argument);
}

TEST_CASE("symmetry under reordering of random triples") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const auto parts = generate_partitions(n);
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    std::vector<Partition> args{parts[pick(rng)], parts[pick(rng)], parts[pick(rng)]};
    const LaurentAlpha base = jcc(args);
    std::sort(args.begin(), args.end());
    do {
      CHECK(jcc(args) == base);
    } while (std::next_permutation(args.begin(), args.end()));
  }
}

TEST_CASE("a^r_lambda values") {
  // 3^{3-2} / (3 alpha)
  CHECK(a_r_lambda(Partition{3}, 2).value == inverse_alpha_power(1, 1));
  CHECK(a_r_lambda(Partition{2, 1}, 0).value.is_zero());
  CHECK(a_r_lambda(Partition{1, 1}, 1).value.is_zero());
  CHECK(substitute_alpha(a_r_lambda(Partition{2}, 1).value, 2) == make_rational(1, 4));
  CHECK(a_r_lambda(Partition{2, 2}, 2).value == inverse_alpha_power(make_rational(1, 4), 2));
  const auto res = a_r_lambda(Partition{2, 1}, 3);
  CHECK(res.g == std::vector<BigInt>{3, 21, 3});
  CHECK(res.b == std::vector<BigInt>{27, 27, 3});
  CHECK_THROWS_AS(a_r_lambda(Partition{2}, -1), std::invalid_argument);
  CHECK_THROWS_AS(analyze_ar(Partition{2, 1}, 0, LaurentAlpha(1)), TheoremViolation);
  CHECK_THROWS_AS(analyze_ar(Partition{2}, 2, alpha()), TheoremViolation);
}

TEST_CASE("worked example: first and second application of D") {
  for (int n = 4; n <= 6; ++n) {
    const auto it = laplace_beltrami_iterates(n, 2);
    const Rational f2 = Rational(factorial(static_cast<unsigned>(n - 2)));
    const Rational f3 = Rational(factorial(static_cast<unsigned>(n - 3)));
    const Rational f4 = Rational(factorial(static_cast<unsigned>(n - 4)));
    PowerVec d1(n);
    d1.add(Partition::transposition(n), inverse_alpha_power(1 / (2 * f2), n - 1));
    CHECK(it[1] == d1);

    const Partition rho = Partition::transposition(n);
    std::vector<int> two_two(static_cast<std::size_t>(n - 4), 1);
    two_two.insert(two_two.begin(), {2, 2});
    std::vector<int> three(static_cast<std::size_t>(n - 3), 1);
    three.insert(three.begin(), 3);
    PowerVec d2(n);
    d2.add(Partition::ones(n), inverse_alpha_power(1 / (2 * f2), n - 1));
    // (alpha - 1) N acting on the first iterate; N(p_rho) = p_rho.
    d2.add(rho, (alpha() - LaurentAlpha(1)) * inverse_alpha_power(1 / (2 * f2), n - 1));
    d2.add(Partition(two_two), inverse_alpha_power(1 / (4 * f4), n - 2));
    d2.add(Partition(three), inverse_alpha_power(1 / f3, n - 2));
    CHECK(it[2] == d2);
  }
}

TEST_CASE("closed form at r = r_lambda") {
  for (int n = 2; n <= 9; ++n) {
    const auto res = a_r_lambda(Partition{n}, n - 1);
    CHECK(res.value == inverse_alpha_power(Rational(int_pow(n, static_cast<unsigned>(n - 2))) / n, 1));
  }
  for (int n = 1; n <= 7; ++n) {
    const auto it = laplace_beltrami_iterates(n, n - 1);
    for (const auto& l : generate_partitions(n)) {
      CHECK(it[static_cast<std::size_t>(l.reflection_length())].coeff(l) == denes_closed_form(l));
    }
  }
}

TEST_CASE("theorem sweep") {
  const auto report = verify_theorems(6, 4);
  for (const auto& c : report.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}

TEST_CASE("tuple inversion on random tuples") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const int s = std::uniform_int_distribution<int>(1, 5)(rng);
    const auto parts = generate_partitions(n);
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    std::vector<Partition> args;
    int total_len = 0;
    for (int i = 0; i < s; ++i) {
      args.push_back(parts[pick(rng)]);
      total_len += args.back().length();
    }
    const LaurentAlpha a = jcc(args);
    const int k = (2 - s) * n + total_len;
    CHECK(a.inverted() == LaurentAlpha::monomial(k % 2 == 0 ? 1 : -1, k) * a);
  }
}

TEST_CASE("Jackson's formula") {
  for (int n = 1; n <= 7; ++n) {
    for (int s = 2; s <= n + 4; ++s) {
      const Rational c = jackson_formula(n, s);
      if ((s - n) % 2 != 0) CHECK(c == 0);
      if (s == n && n >= 2) CHECK(c == Rational(int_pow(n, static_cast<unsigned>(n - 2))));
    }
  }
  CHECK(jackson_formula(3, 2) == 0);
  CHECK(jackson_formula(3, 3) == 3);
  CHECK_THROWS_AS(jackson_formula(3, 1), std::invalid_argument);
}

TEST_CASE("aggregates by number of parts") {
  const std::vector<int> ones{1, 1, 1};
  CHECK(aggregate_by_lengths(1, ones) == inverse_alpha_power(1, 1));
  // a_{2,(1),(1)}: only lambda = (2) in both slots.
  const std::vector<int> lens{1, 1};
  CHECK(aggregate_by_lengths(2, lens) == jcc({Partition{2}, Partition{2}}));
  const std::vector<int> bad{3};
  CHECK_THROWS_AS(aggregate_by_lengths(2, bad), std::invalid_argument);
}

TEST_CASE("X-specialization identity") {
  const std::vector<Rational> xs{1, 2, 3};
  CHECK(gen_identity_check(2, 2, xs));
  const std::vector<Rational> xs2{make_rational(-1, 2), 2};
  for (int n = 1; n <= 5; ++n) {
    for (int s = 1; s <= 3; ++s) CHECK(gen_identity_check(n, s, xs2));
  }
}

TEST_CASE("single-D hypermap formulas") {
  CHECK(hypermap_triple(Partition{2, 2}, Partition{2, 2}) ==
        (alpha() - LaurentAlpha(1)) * inverse_alpha_power(make_rational(2, 8), 2));
  CHECK(hypermap_triple(Partition{1, 1}, Partition{2}) == inverse_alpha_power(make_rational(1, 2), 1));
  for (int n = 2; n <= 6; ++n) {
    for (const auto& l : generate_partitions(n)) {
      for (const auto& m : generate_partitions(n)) CHECK_NOTHROW(hypermap_triple(l, m));
    }
    const LaurentAlpha a = hypermap_triple(Partition{n}, Partition{n});
    // alpha = 1 gives c^{(n)}_{(n),rho} = z_{(n)} a = 0.
    CHECK(substitute_alpha(a, 1) == 0);
    // alpha = 2 gives b^{(n)}_{(n),rho} / |B_n| = 2n a(2) = C(n, 2).
    CHECK(2 * n * substitute_alpha(a, 2) == Rational(binomial(static_cast<unsigned>(n), 2)));
  }
  CHECK_THROWS_AS(hypermap_triple(Partition{1}, Partition{1}), std::invalid_argument);
}

TEST_CASE("Matchings-Jack observations") {
  for (int n = 1; n <= 6; ++n) {
    const auto parts = generate_partitions(n);
    for (const auto& m : parts) {
      for (const auto& v : parts) CHECK(matchings_jack_coef(Partition::ones(n), m, v).consistent());
    }
  }
  const auto obs = matchings_jack_coef(Partition{2}, Partition{2}, Partition{2});
  CHECK(obs.consistent());
  CHECK(obs.degree_bound == 1);
  const auto report = verify_matchings_conjecture(5);
  CHECK(report.all_passed());
}

TEST_CASE("recursions for the top coefficients") {
  CHECK(u_power_coefficient(Partition{5}) == 3000);
  for (int i = 1; i <= 8; ++i) {
    for (int j = 1; i + j <= 9; ++j) {
      const auto sides = rec_u(i, j);
      CHECK(Rational(sides.lhs) == sides.rhs);
    }
  }
  const auto t = t_sequence(9);
  std::vector<Rational> t_values;
  for (int n = 1; n <= 9; ++n) {
    const Rational expected = n == 1 ? Rational(1) : Rational(int_pow(n, static_cast<unsigned>(n - 2)));
    CHECK(t[static_cast<std::size_t>(n - 1)] == LaurentAlpha(expected));
    t_values.push_back(expected);
  }
  CHECK(rec_a_holds(t));
  std::vector<LaurentAlpha> broken = t;
  broken[4] += 1;
  CHECK(!rec_a_holds(broken));

  const auto series = denes_series(t_values, 9);
  for (int k = 1; k <= 9; ++k) CHECK(series.g[static_cast<std::size_t>(k)] == series.u_exp_g[static_cast<std::size_t>(k)]);
}
