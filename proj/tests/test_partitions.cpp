#include "jackcc/partitions.hpp"

#include "test_support.hpp"

#include <algorithm>
#include <random>

using namespace jackcc;

TEST_CASE("partition construction and parsing") {
  CHECK(Partition{4, 2, 1, 1}.to_string() == "4,2,1,1");
  CHECK(parse_partition("[1^2 2^1 4^1]") == Partition{4, 2, 1, 1});
  CHECK(parse_partition("[1^2 2 4]") == Partition{4, 2, 1, 1});
  CHECK(parse_partition("(3,1)") == Partition{3, 1});
  CHECK(parse_partition(" 2 , 2 ") == Partition{2, 2});
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("3,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("[0^2]"), std::invalid_argument);
  CHECK(Partition::from_unsorted({1, 3, 2}) == Partition{3, 2, 1});
  CHECK(Partition::transposition(4) == Partition{2, 1, 1});
  CHECK(Partition::ones(3) == Partition{1, 1, 1});
  CHECK(Partition{3, 3, 1}.multiplicity(3) == 2);
  CHECK(Partition{3, 3, 1}.reflection_length() == 4);
}

TEST_CASE("enumeration counts and order") {
  // Partition numbers p(1..12).
  const std::vector<std::size_t> p{1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 1; n <= 12; ++n) CHECK(generate_partitions(n).size() == p[static_cast<std::size_t>(n - 1)]);
  const auto four = generate_partitions(4);
  CHECK(four.front() == Partition{4});
  CHECK(four.back() == Partition{1, 1, 1, 1});
  CHECK(std::is_sorted(four.begin(), four.end(), RevLex{}));
  CHECK_THROWS_AS(generate_partitions(13), std::out_of_range);
}

TEST_CASE("statistics") {
  CHECK(z(Partition{2, 1}) == 2);
  CHECK(z(Partition{1, 1, 1}) == 6);
  CHECK(z(Partition{2, 2}) == 8);
  CHECK(aut(Partition{2, 2, 1}) == 2);
  CHECK(nstat(Partition{2, 1}) == 1);
  CHECK(nstat(Partition{1, 1, 1}) == 3);
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
}

TEST_CASE("dominance") {
  CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
  CHECK(!dominance_leq(Partition{3, 1}, Partition{2, 2}));
  CHECK(!dominance_less(Partition{2, 2}, Partition{2, 2}));
  // (3,1,1,1) and (2,2,2) are incomparable.
  CHECK(!dominance_leq(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
  CHECK(!dominance_leq(Partition{2, 2, 2}, Partition{3, 1, 1, 1}));
  CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{3}), std::invalid_argument);
}

TEST_CASE("hook products and eigenvalues") {
  const auto [h2, hp2] = hook_products(Partition{2});
  CHECK(h2 == LaurentAlpha(0, {1, 1}));                 // alpha + 1
  CHECK(hp2 == LaurentAlpha(0, {0, 0, 2}));             // 2 alpha^2
  CHECK(hook_norm(Partition{1, 1}) == LaurentAlpha(0, {0, 2, 2}));
  CHECK(eigenvalue(Partition{2, 1}) == LaurentAlpha(0, {-1, 1}));
}

TEST_CASE("properties over all small partitions") {
  for (int n = 1; n <= 9; ++n) {
    BigInt sum_sq = 0;
    Rational sum_inv_z = 0;
    for (const auto& l : generate_partitions(n)) {
      CHECK(conjugate(conjugate(l)) == l);
      // n(lambda) = sum_i (i - 1) lambda_i, and n(lambda') = sum_i C(lambda_i, 2).
      long direct = 0;
      long conj = 0;
      for (int i = 0; i < l.length(); ++i) {
        direct += static_cast<long>(i) * l[static_cast<std::size_t>(i)];
        conj += static_cast<long>(l[static_cast<std::size_t>(i)]) * (l[static_cast<std::size_t>(i)] - 1) / 2;
      }
      CHECK(nstat(l) == direct);
      CHECK(nstat(conjugate(l)) == conj);
      // h_lambda(1/alpha) = alpha^{-n} h'_{lambda'}(alpha).
      const auto h = hook_products(l).first;
      CHECK(h.inverted() == hook_products(conjugate(l)).second.shifted(-n));
      // Sum of squared degrees is n!.
      const BigInt hook_len = substitute_alpha(h, 1).get_num();
      const BigInt degree = factorial(static_cast<unsigned>(n)) / hook_len;
      sum_sq += degree * degree;
      sum_inv_z += Rational(1) / Rational(z(l));
      CHECK(dominance_leq(l, l));
      CHECK(dominance_leq(Partition::ones(n), l));
      CHECK(dominance_leq(l, Partition{n}));
      CHECK(dominance_leq(l, Partition{n}) == dominance_leq(conjugate(Partition{n}), conjugate(l)));
    }
    CHECK(sum_sq == factorial(static_cast<unsigned>(n)));
    CHECK(sum_inv_z == 1);
  }
}

TEST_CASE("norm duality and eigenvalue gaps") {
  for (int n = 1; n <= 9; ++n) {
    const auto parts = generate_partitions(n);
    for (const auto& l : parts) {
      CHECK(hook_norm(l) == hook_norm(conjugate(l)).inverted().shifted(2 * n));
      const auto [h, hp] = hook_products(l);
      int positive_arms = 0;
      for (const auto& s : box_stats(l)) positive_arms += s.arm > 0 ? 1 : 0;
      CHECK(h.max_degree() == positive_arms);
      CHECK(hp.max_degree() == n);
      // Along strict dominance the eigenvalue gap is p alpha + q with p, q > 0.
      for (const auto& m : parts) {
        if (!dominance_less(m, l)) continue;
        const LaurentAlpha gap = eigenvalue(l) - eigenvalue(m);
        CHECK(gap.min_degree() == 0);
        CHECK(gap.max_degree() == 1);
        CHECK(gap.coeff(0) > 0);
        CHECK(gap.coeff(1) > 0);
      }
    }
  }
}

TEST_CASE("dominance reverses under conjugation on random pairs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const auto parts = generate_partitions(n);
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    const Partition& a = parts[pick(rng)];
    const Partition& b = parts[pick(rng)];
    CHECK(dominance_leq(a, b) == dominance_leq(conjugate(b), conjugate(a)));
    // Dominance refines into lexicographic order.
    if (dominance_leq(a, b)) CHECK(a <= b);
  }
}
