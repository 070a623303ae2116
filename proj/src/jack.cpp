#include "jackcc/jack.hpp"

#include "jackcc/serialize.hpp"

#include <algorithm>

namespace jackcc {

namespace {

using Matrix = std::vector<std::vector<LaurentAlpha>>;

std::shared_ptr<const Matrix> monomial_matrix_cached(int n) {
  static std::mutex mutex;
  static std::unordered_map<int, std::shared_ptr<const Matrix>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  const auto bc = basis_change(n);
  const std::size_t size = bc->partitions.size();
  auto m = std::make_shared<Matrix>(size, std::vector<LaurentAlpha>(size));
  for (std::size_t j = 0; j < size; ++j) {
    PowerVec column(n);
    for (std::size_t k = 0; k <= j; ++k) {
      if (bc->m_to_p[k][j] != 0) column.add(bc->partitions[k], bc->m_to_p[k][j]);
    }
    const MonoVec image = power_to_mono(op_D(column));
    for (const auto& [mu, c] : image.terms()) {
      const std::size_t k = bc->index_of(mu);
      if (!dominance_leq(mu, bc->partitions[j])) {
        throw TheoremViolation("D(alpha) is not dominance-triangular on m_" + bc->partitions[j].to_string());
      }
      (*m)[k][j] = c;
    }
    if ((*m)[j][j] != eigenvalue(bc->partitions[j])) {
      throw TheoremViolation("diagonal of D(alpha) differs from the eigenvalue at " + bc->partitions[j].to_string());
    }
  }
  return cache.emplace(n, std::move(m)).first->second;
}

}  // namespace

std::vector<std::vector<LaurentAlpha>> laplace_beltrami_monomial_matrix(int n) {
  return *monomial_matrix_cached(n);
}

MonoVec jack_in_monomial(const Partition& lambda) {
  const int n = lambda.weight();
  const auto bc = basis_change(n);
  const auto matrix = monomial_matrix_cached(n);
  const std::size_t top = bc->index_of(lambda);
  const std::size_t size = bc->partitions.size();
  const LaurentAlpha e_top = eigenvalue(lambda);

  // Walk down a linear extension of dominance: v_mu (e(lambda) - e(mu)) =
  // sum over already solved nu of D_{mu nu} v_nu.
  std::vector<LaurentAlpha> v(size);
  v[top] = hook_products(lambda).first;
  for (std::size_t k = top + 1; k < size; ++k) {
    const Partition& mu = bc->partitions[k];
    if (!dominance_leq(mu, lambda)) continue;
    LaurentAlpha rhs;
    for (std::size_t j = top; j < k; ++j) {
      if (!v[j].is_zero() && !(*matrix)[k][j].is_zero()) rhs += (*matrix)[k][j] * v[j];
    }
    const LaurentAlpha gap = e_top - (*matrix)[k][k];
    if (gap.is_zero()) {
      throw TheoremViolation("equal eigenvalues for comparable partitions " + lambda.to_string() + " and " +
                             mu.to_string());
    }
    v[k] = exact_divide(rhs, gap, "Jack coefficient [m_" + mu.to_string() + "] J_" + lambda.to_string());
  }
  MonoVec out(n);
  for (std::size_t k = top; k < size; ++k) out.add(bc->partitions[k], v[k]);
  return out;
}

JackExpansion jack_expansion(const Partition& lambda) {
  MonoVec mono = jack_in_monomial(lambda);
  PowerVec power = mono_to_power(mono);
  return {lambda, std::move(mono), std::move(power)};
}

// ---------------------------------------------------------------------------

ThetaTable::ThetaTable(int n, std::vector<Partition> partitions, std::vector<std::vector<LaurentAlpha>> theta,
                       std::vector<LaurentAlpha> norm)
    : n_(n), partitions_(std::move(partitions)), theta_(std::move(theta)), norm_(std::move(norm)) {
  if (theta_.size() != partitions_.size() || norm_.size() != partitions_.size()) {
    throw std::invalid_argument("theta table dimensions do not match the partition list");
  }
}

std::size_t ThetaTable::index_of(const Partition& mu) const {
  auto it = std::lower_bound(partitions_.begin(), partitions_.end(), mu, RevLex{});
  if (it == partitions_.end() || *it != mu) {
    throw std::invalid_argument("partition " + mu.to_string() + " is not of weight " + std::to_string(n_));
  }
  return static_cast<std::size_t>(it - partitions_.begin());
}

const LaurentAlpha& ThetaTable::theta(const Partition& lambda, const Partition& mu) const {
  return theta_[index_of(lambda)][index_of(mu)];
}

ThetaTable build_theta_table(int n) {
  auto parts = generate_partitions(n);
  std::vector<std::vector<LaurentAlpha>> rows;
  std::vector<LaurentAlpha> norms;
  rows.reserve(parts.size());
  for (const auto& lambda : parts) {
    const PowerVec j = jack_expansion(lambda).in_power;
    std::vector<LaurentAlpha> row;
    row.reserve(parts.size());
    for (const auto& mu : parts) {
      LaurentAlpha t = j.coeff(mu);
      if (!t.is_polynomial()) {
        throw TheoremViolation("theta^" + lambda.to_string() + "_" + mu.to_string() + " is not a polynomial");
      }
      row.push_back(std::move(t));
    }
    if (row.back() != LaurentAlpha(1)) {
      throw TheoremViolation("theta^" + lambda.to_string() + "_{1^n} = " + row.back().to_string() + ", expected 1");
    }
    rows.push_back(std::move(row));
    norms.push_back(hook_norm(lambda));
  }
  return ThetaTable(n, std::move(parts), std::move(rows), std::move(norms));
}

ThetaStore::ThetaStore(std::optional<std::filesystem::path> cache_dir) : cache_dir_(std::move(cache_dir)) {}

std::shared_ptr<const ThetaTable> ThetaStore::get(int n) {
  std::lock_guard lock(mutex_);
  if (auto it = tables_.find(n); it != tables_.end()) return it->second;
  std::optional<ThetaTable> table;
  if (cache_dir_) table = load_theta_table(theta_cache_file(*cache_dir_, n));
  if (table && table->n() != n) table.reset();
  if (!table) {
    table = build_theta_table(n);
    if (cache_dir_) save_theta_table(*table, theta_cache_file(*cache_dir_, n));
  }
  return tables_.emplace(n, std::make_shared<const ThetaTable>(std::move(*table))).first->second;
}

void ThetaStore::set_cache_dir(std::optional<std::filesystem::path> dir) {
  std::lock_guard lock(mutex_);
  cache_dir_ = std::move(dir);
}

ThetaStore& ThetaStore::global() {
  static ThetaStore store;
  return store;
}

std::shared_ptr<const ThetaTable> theta_table(int n) { return ThetaStore::global().get(n); }

LaurentAlpha theta(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw std::invalid_argument("theta needs partitions of equal weight");
  return theta_table(lambda.weight())->theta(lambda, mu);
}

BivarAlphaX content_polynomial(const Partition& lambda) {
  BivarAlphaX r = BivarAlphaX::from_alpha(1);
  for (const auto& s : box_stats(lambda)) {
    r = r * BivarAlphaX::x_plus(LaurentAlpha(0, {Rational(-s.coleg), Rational(s.coarm)}));
  }
  return r;
}

PrincipalSpecialization principal_specialization(const Partition& lambda) {
  const auto table = theta_table(lambda.weight());
  PrincipalSpecialization out;
  for (const auto& mu : table->partitions()) {
    out.theta_side += BivarAlphaX::from_alpha(table->theta(lambda, mu), mu.length());
  }
  out.product_side = content_polynomial(lambda);
  if (out.theta_side != out.product_side) {
    throw TheoremViolation("principal specialization mismatch for " + lambda.to_string() + ": " +
                           out.theta_side.to_string() + " vs " + out.product_side.to_string());
  }
  return out;
}

LaurentAlpha jack_norm(const Partition& lambda) {
  const PowerVec j = jack_expansion(lambda).in_power;
  LaurentAlpha norm = scalar_product(j, j);
  if (norm != hook_norm(lambda)) {
    throw TheoremViolation("<J,J> differs from h h' for " + lambda.to_string());
  }
  return norm;
}

}  // namespace jackcc
