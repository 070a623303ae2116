#include "jackcc/symfunc.hpp"

#include "test_support.hpp"

#include <map>
#include <random>

using namespace jackcc;

namespace {

// Explicit polynomials in k variables with coefficients in Q[alpha, 1/alpha].
using Exponent = std::vector<int>;
using Poly = std::map<Exponent, LaurentAlpha>;

void add_term(Poly& p, const Exponent& e, const LaurentAlpha& c) {
  auto& slot = p[e];
  slot += c;
  if (slot.is_zero()) p.erase(e);
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_term(out, e, ca * cb);
    }
  }
  return out;
}

Poly power_sum_poly(const Partition& lambda, int k) {
  Poly out{{Exponent(static_cast<std::size_t>(k), 0), LaurentAlpha(1)}};
  for (int part : lambda.parts()) {
    Poly pk;
    for (int i = 0; i < k; ++i) {
      Exponent e(static_cast<std::size_t>(k), 0);
      e[static_cast<std::size_t>(i)] = part;
      add_term(pk, e, 1);
    }
    out = multiply(out, pk);
  }
  return out;
}

template <class Basis>
Poly to_poly(const SymVec<Basis>& v, int k);

template <>
Poly to_poly(const PowerVec& v, int k) {
  Poly out;
  for (const auto& [mu, c] : v.terms()) {
    for (const auto& [e, pc] : power_sum_poly(mu, k)) add_term(out, e, c * pc);
  }
  return out;
}

// (alpha/2) sum_i x_i^2 d_i^2 + sum_{i != j} x_i x_j / (x_i - x_j) d_i, applied
// literally; the second sum is taken over pairs i < j as a divided difference.
Poly laplace_beltrami(const Poly& f, int k) {
  Poly out;
  const LaurentAlpha half_alpha = LaurentAlpha::monomial(make_rational(1, 2), 1);
  for (const auto& [e, c] : f) {
    for (int i = 0; i < k; ++i) {
      const int a = e[static_cast<std::size_t>(i)];
      if (a >= 2) add_term(out, e, half_alpha * c * LaurentAlpha(a * (a - 1)));
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      // g = x_i x_j (d_i - d_j) f, antisymmetric under swapping x_i and x_j.
      Poly g;
      for (const auto& [e, c] : f) {
        const int a = e[static_cast<std::size_t>(i)];
        const int b = e[static_cast<std::size_t>(j)];
        if (a > 0) {
          Exponent ee = e;
          ee[static_cast<std::size_t>(j)] += 1;
          add_term(g, ee, c * LaurentAlpha(a));
        }
        if (b > 0) {
          Exponent ee = e;
          ee[static_cast<std::size_t>(i)] += 1;
          add_term(g, ee, c * LaurentAlpha(-b));
        }
      }
      for (const auto& [e, c] : g) {
        const int a = e[static_cast<std::size_t>(i)];
        const int b = e[static_cast<std::size_t>(j)];
        REQUIRE(a != b);
        if (a < b) continue;  // handled together with its swapped partner
        // (x_i^a x_j^b - x_i^b x_j^a) / (x_i - x_j) = x_i^b x_j^b sum_t x_i^t x_j^{a-b-1-t}
        for (int t = 0; t < a - b; ++t) {
          Exponent q = e;
          q[static_cast<std::size_t>(i)] = b + t;
          q[static_cast<std::size_t>(j)] = b + (a - b - 1 - t);
          add_term(out, q, c);
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("operators on small power sums") {
  const PowerVec p111 = p_one_power(3);
  CHECK(op_U(p111) == PowerVec::basis_element(Partition{2, 1}, 3));
  CHECK(op_S(PowerVec::basis_element(Partition{2})) == PowerVec::basis_element(Partition{1, 1}));
  CHECK(op_N(PowerVec::basis_element(Partition{2, 1})) == PowerVec::basis_element(Partition{2, 1}, 1));
  // U^4 (p_{1^5}) = 3000 p_5
  PowerVec v = p_one_power(5);
  for (int i = 0; i < 4; ++i) v = op_U(v);
  CHECK(v == PowerVec::basis_element(Partition{5}, 3000));
}

TEST_CASE("basis change matches explicit expansion") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : generate_partitions(n)) {
      const PowerVec p = PowerVec::basis_element(lambda);
      const MonoVec m = power_to_mono(p);
      const Poly explicit_poly = power_sum_poly(lambda, n);
      // [m_mu] p_lambda is the coefficient of x^mu.
      for (const auto& mu : generate_partitions(n)) {
        Exponent e(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < mu.length(); ++i) e[static_cast<std::size_t>(i)] = mu[static_cast<std::size_t>(i)];
        auto it = explicit_poly.find(e);
        CHECK(m.coeff(mu) == (it == explicit_poly.end() ? LaurentAlpha() : it->second));
      }
      CHECK(mono_to_power(m) == p);
    }
  }
  // p_1^2 = m_2 + 2 m_11
  MonoVec expected(2);
  expected.add(Partition{2}, 1);
  expected.add(Partition{1, 1}, 2);
  CHECK(power_to_mono(p_one_power(2)) == expected);
}

TEST_CASE("D on power sums agrees with the differential operator") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lambda : generate_partitions(n)) {
      const PowerVec p = PowerVec::basis_element(lambda);
      CHECK(to_poly(op_D(p), n) == laplace_beltrami(power_sum_poly(lambda, n), n));
    }
  }
}

TEST_CASE("scalar product") {
  const PowerVec a = PowerVec::basis_element(Partition{2, 1});
  const PowerVec b = PowerVec::basis_element(Partition{1, 1, 1});
  CHECK(scalar_product(a, a) == LaurentAlpha::monomial(2, 2));
  CHECK(scalar_product(a, b).is_zero());
  CHECK(scalar_product(b, b) == LaurentAlpha::monomial(6, 3));
  CHECK_THROWS_AS(scalar_product(a, PowerVec::basis_element(Partition{2})), std::invalid_argument);
}

TEST_CASE("D is self-adjoint for the alpha scalar product") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 7)(rng);
    const auto parts = generate_partitions(n);
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    const PowerVec f = PowerVec::basis_element(parts[pick(rng)]);
    const PowerVec g = PowerVec::basis_element(parts[pick(rng)]);
    CHECK(scalar_product(op_D(f), g) == scalar_product(f, op_D(g)));
    CHECK(op_D(f) == LaurentAlpha::alpha() * op_U(f) + op_S(f) + (LaurentAlpha::alpha() - LaurentAlpha(1)) * op_N(f));
  }
}
