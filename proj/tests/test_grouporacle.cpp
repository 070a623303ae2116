#include "jackcc/grouporacle.hpp"
#include "jackcc/jack.hpp"

#include "test_support.hpp"

#include <random>

using namespace jackcc;

namespace {

BigInt class_size(const Partition& mu) {
  return factorial(static_cast<unsigned>(mu.weight())) / z(mu);
}

// Counts ordered pairs (s1, s2) with s1 s2 = target directly over all of S_n.
BigInt brute_pair_count(const Permutation& target, const Partition& a, const Partition& b) {
  BigInt count = 0;
  for (const auto& s1 : all_permutations(target.size())) {
    if (s1.cycle_type() != a) continue;
    if (s1.inverse().compose(target).cycle_type() == b) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("permutations") {
  const Permutation t = Permutation::from_cycles(4, {{1, 2}});
  CHECK(t.cycle_type() == Partition{2, 1, 1});
  const Permutation c = Permutation::from_cycles(4, {{1, 2, 3, 4}});
  CHECK(c.cycle_type() == Partition{4});
  CHECK(c.compose(c.inverse()) == Permutation::identity(4));
  CHECK(c(0) == 1);
  CHECK(c.compose(t)(0) == c(t(0)));
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK(all_permutations(4).size() == 24);
}

TEST_CASE("Murnaghan-Nakayama characters") {
  CHECK(character(Partition{2, 1}, Partition{3}) == -1);
  CHECK(character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(character(Partition{2, 1}, Partition{2, 1}) == 0);
  CHECK(character(Partition{2, 2}, Partition{2, 2}) == 2);
  CHECK(hook_length_product(Partition{2, 1}) == 3);
  CHECK_THROWS_AS(character(Partition{2}, Partition{1}), std::invalid_argument);
  for (int n = 1; n <= 7; ++n) {
    const auto parts = generate_partitions(n);
    for (const auto& l : parts) {
      CHECK(character(l, Partition::ones(n)) * hook_length_product(l) == factorial(static_cast<unsigned>(n)));
    }
    // Column orthogonality.
    for (const auto& mu : parts) {
      for (const auto& nu : parts) {
        BigInt sum = 0;
        for (const auto& l : parts) sum += character(l, mu) * character(l, nu);
        CHECK(sum == (mu == nu ? z(mu) : BigInt(0)));
      }
    }
  }
}

TEST_CASE("class algebra products") {
  const std::vector<Partition> tt{Partition{2, 1}, Partition{2, 1}};
  const auto prod = class_product(tt);
  CHECK(prod.coeff(Partition{3}) == 3);
  CHECK(prod.coeff(Partition{1, 1, 1}) == 3);
  CHECK(prod.coeff(Partition{2, 1}) == 0);
  CHECK(c_coeff(Partition{3}, tt) == 3);

  for (int n = 2; n <= 6; ++n) {
    // Minimal transitive factorizations of an n-cycle into transpositions.
    const std::vector<Partition> factors(static_cast<std::size_t>(n - 1), Partition::transposition(n));
    BigInt expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n - 2));
    CHECK(c_coeff(Partition{n}, factors) == expected);
    for (const auto& mu : generate_partitions(n)) {
      for (const auto& nu : generate_partitions(n)) {
        const std::vector<Partition> pair{mu, nu};
        CHECK(c_coeff(Partition::ones(n), pair) == (mu == nu ? class_size(mu) : BigInt(0)));
      }
    }
  }
  CHECK_THROWS_AS(class_product(std::vector<Partition>{Partition{7}}), std::out_of_range);
}

TEST_CASE("three routes to class coefficients agree on random triples") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    const auto parts = generate_partitions(n);
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    const Partition target = parts[pick(rng)];
    const std::vector<Partition> factors{parts[pick(rng)], parts[pick(rng)]};
    const BigInt dfs = c_coeff(target, factors);
    CHECK(Rational(dfs) == c_coeff_from_characters(target, factors));
    CHECK(class_product(factors).coeff(target) == dfs);
    // A canonical permutation of the target type.
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int part : target.parts()) {
      std::vector<int> cyc;
      for (int i = 0; i < part; ++i) cyc.push_back(next++);
      cycles.push_back(cyc);
    }
    CHECK(brute_pair_count(Permutation::from_cycles(n, cycles), factors[0], factors[1]) == dfs);
  }
}

TEST_CASE("coset types") {
  CHECK(coset_type(Permutation::identity(4)) == Partition{1, 1});
  CHECK(coset_type(Permutation::from_cycles(4, {{1, 2}})) == Partition{1, 1});
  CHECK(coset_type(Permutation::from_cycles(4, {{2, 3}})) == Partition{2});
  CHECK_THROWS_AS(coset_type(Permutation::identity(3)), std::invalid_argument);
  CHECK(hyperoctahedral_order(3) == 48);
}

TEST_CASE("double cosets of the hyperoctahedral group") {
  for (int n = 1; n <= kMaxDoubleCosetWeight; ++n) {
    const BigInt bn = hyperoctahedral_order(n);
    BigInt total = 0;
    for (const auto& [mu, perms] : double_cosets(n)) {
      BigInt two_l;
      mpz_ui_pow_ui(two_l.get_mpz_t(), 2, static_cast<unsigned long>(mu.length()));
      CHECK(BigInt(perms.size()) == bn * bn / (two_l * z(mu)));
      total += perms.size();
    }
    CHECK(total == factorial(static_cast<unsigned>(2 * n)));
    // K_{1^n} = B_n acts as |B_n| times the identity.
    for (const auto& mu : generate_partitions(n)) {
      const std::vector<Partition> pair{Partition::ones(n), mu};
      const auto prod = doublecoset_product(pair);
      for (const auto& nu : generate_partitions(n)) CHECK(prod.coeff(nu) == (nu == mu ? bn : BigInt(0)));
    }
  }
  CHECK_THROWS_AS(doublecoset_product(std::vector<Partition>{Partition{4}}), std::out_of_range);
}

TEST_CASE("double-coset coefficients") {
  for (int n = 2; n <= 3; ++n) {
    const std::vector<Partition> factors{Partition{n}, Partition::transposition(n)};
    CHECK(b_coeff(Partition{n}, factors) == hyperoctahedral_order(n) * binomial(static_cast<unsigned>(n), 2));
    for (const auto& t : generate_partitions(n)) {
      for (const auto& a : generate_partitions(n)) {
        for (const auto& b : generate_partitions(n)) {
          const std::vector<Partition> ab{a, b};
          CHECK(Rational(b_coeff(t, ab)) == b_coeff_from_characters(t, ab));
        }
      }
    }
  }
  CHECK_THROWS_AS(b_coeff(Partition{2}, std::span<const Partition>()), std::invalid_argument);
}

TEST_CASE("Gram-Schmidt Jack polynomials") {
  const auto one = gram_schmidt_jack(1);
  CHECK(one.at(Partition{1}) == jack_in_monomial(Partition{1}));
  const auto two = gram_schmidt_jack(2);
  MonoVec j2(2);
  j2.add(Partition{2}, LaurentAlpha(0, {1, 1}));
  j2.add(Partition{1, 1}, 2);
  CHECK(two.at(Partition{2}) == j2);
  for (int n = 3; n <= 4; ++n) {
    for (const auto& [l, v] : gram_schmidt_jack(n)) CHECK(v == jack_in_monomial(l));
  }
  CHECK_THROWS_AS(gram_schmidt_jack(kMaxGramSchmidtWeight + 1), std::out_of_range);
}

TEST_CASE("oracle sweep") {
  const auto report = verify_oracles(5);
  for (const auto& c : report.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}
