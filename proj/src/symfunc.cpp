#include "jackcc/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

namespace jackcc {

namespace {

Partition replace_parts(const Partition& lambda, std::size_t skip_a, std::size_t skip_b, std::vector<int> extra) {
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(lambda.length()) + extra.size());
  for (std::size_t i = 0; i < static_cast<std::size_t>(lambda.length()); ++i) {
    if (i != skip_a && i != skip_b) parts.push_back(lambda[i]);
  }
  parts.insert(parts.end(), extra.begin(), extra.end());
  return Partition::from_unsorted(std::move(parts));
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

PowerVec op_N(const PowerVec& f) {
  PowerVec out(f.weight());
  for (const auto& [lambda, c] : f.terms()) {
    out.add(lambda, c * LaurentAlpha(nstat(conjugate(lambda))));
  }
  return out;
}

PowerVec op_U(const PowerVec& f) {
  PowerVec out(f.weight());
  for (const auto& [lambda, c] : f.terms()) {
    const auto len = static_cast<std::size_t>(lambda.length());
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = i + 1; j < len; ++j) {
        const Partition merged = replace_parts(lambda, i, j, {lambda[i] + lambda[j]});
        out.add(merged, c * LaurentAlpha(lambda[i] * lambda[j]));
      }
    }
  }
  return out;
}

PowerVec op_S(const PowerVec& f) {
  PowerVec out(f.weight());
  for (const auto& [lambda, c] : f.terms()) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(lambda.length()); ++i) {
      const int m = lambda[i];
      for (int k = 1; 2 * k <= m; ++k) {
        const Partition split = replace_parts(lambda, i, kNone, {k, m - k});
        const int weight = (2 * k == m) ? k : m;
        out.add(split, c * LaurentAlpha(weight));
      }
    }
  }
  return out;
}

PowerVec op_D(const PowerVec& f) {
  const LaurentAlpha alpha = LaurentAlpha::alpha();
  PowerVec out = (alpha - LaurentAlpha(1)) * op_N(f);
  out += alpha * op_U(f);
  out += op_S(f);
  return out;
}

LaurentAlpha scalar_product(const PowerVec& f, const PowerVec& g) {
  if (f.weight() != g.weight()) throw std::invalid_argument("scalar product of different weights");
  LaurentAlpha sum;
  for (const auto& [lambda, c] : f.terms()) {
    auto it = g.terms().find(lambda);
    if (it == g.terms().end()) continue;
    sum += c * it->second * LaurentAlpha::monomial(Rational(z(lambda)), lambda.length());
  }
  return sum;
}

std::size_t BasisChange::index_of(const Partition& mu) const {
  auto it = std::lower_bound(partitions.begin(), partitions.end(), mu, RevLex{});
  if (it == partitions.end() || *it != mu) throw std::invalid_argument("partition not of weight " + std::to_string(n));
  return static_cast<std::size_t>(it - partitions.begin());
}

namespace {

// m_lambda * p_k = sum over distinct values v of lambda (and v = 0) of
// m_{v+k}(kappa) m_kappa, where kappa replaces one v by v + k.
std::map<Partition, BigInt> times_power_sum(const std::map<Partition, BigInt>& f, int k) {
  std::map<Partition, BigInt> out;
  for (const auto& [lambda, c] : f) {
    std::set<int> values(lambda.parts().begin(), lambda.parts().end());
    values.insert(0);
    for (int v : values) {
      std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
      if (v == 0) {
        parts.push_back(k);
      } else {
        *std::find(parts.begin(), parts.end(), v) += k;
      }
      Partition kappa = Partition::from_unsorted(std::move(parts));
      const int mult = kappa.multiplicity(v + k);
      out[kappa] += c * mult;
    }
  }
  return out;
}

std::shared_ptr<const BasisChange> build_basis_change(int n) {
  auto bc = std::make_shared<BasisChange>();
  bc->n = n;
  bc->partitions = generate_partitions(n);
  const std::size_t size = bc->partitions.size();
  bc->p_to_m.assign(size, std::vector<Rational>(size));
  for (std::size_t j = 0; j < size; ++j) {
    std::map<Partition, BigInt> prod{{Partition(), BigInt(1)}};
    for (int part : bc->partitions[j].parts()) prod = times_power_sum(prod, part);
    for (const auto& [kappa, c] : prod) bc->p_to_m[bc->index_of(kappa)][j] = c;
  }
  // p_to_m is upper triangular in this ordering (dominating partitions come
  // first); invert column by column with back substitution.
  bc->m_to_p.assign(size, std::vector<Rational>(size));
  for (std::size_t col = 0; col < size; ++col) {
    for (std::size_t row = col + 1; row-- > 0;) {
      Rational rhs = row == col ? Rational(1) : Rational(0);
      for (std::size_t k = row + 1; k <= col; ++k) rhs -= bc->p_to_m[row][k] * bc->m_to_p[k][col];
      bc->m_to_p[row][col] = rhs / bc->p_to_m[row][row];
    }
  }
  return bc;
}

}  // namespace

std::shared_ptr<const BasisChange> basis_change(int n) {
  static std::mutex mutex;
  static std::unordered_map<int, std::shared_ptr<const BasisChange>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto built = build_basis_change(n);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(built)).first->second;
}

MonoVec power_to_mono(const PowerVec& f) {
  const auto bc = basis_change(f.weight());
  MonoVec out(f.weight());
  for (const auto& [mu, c] : f.terms()) {
    const std::size_t j = bc->index_of(mu);
    for (std::size_t k = 0; k <= j; ++k) {
      if (bc->p_to_m[k][j] != 0) out.add(bc->partitions[k], c * LaurentAlpha(bc->p_to_m[k][j]));
    }
  }
  return out;
}

PowerVec mono_to_power(const MonoVec& f) {
  const auto bc = basis_change(f.weight());
  PowerVec out(f.weight());
  for (const auto& [mu, c] : f.terms()) {
    const std::size_t j = bc->index_of(mu);
    for (std::size_t k = 0; k <= j; ++k) {
      if (bc->m_to_p[k][j] != 0) out.add(bc->partitions[k], c * LaurentAlpha(bc->m_to_p[k][j]));
    }
  }
  return out;
}

PowerVec p_one_power(int n) { return PowerVec::basis_element(Partition::ones(n)); }

}  // namespace jackcc
