#pragma once

// Jack symmetric functions J^alpha_lambda and the Jack characters
// theta^lambda_mu(alpha) = [p_mu] J^alpha_lambda.

#include "jackcc/exactalg.hpp"
#include "jackcc/partitions.hpp"
#include "jackcc/symfunc.hpp"

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace jackcc {

/// Dense matrix of D(alpha) on the monomial basis of weight n:
/// entry [k][j] = [m_{partitions[k]}] D(alpha) m_{partitions[j]}, indexed as
/// in basis_change(n). Nonzero only when partitions[k] <= partitions[j] in
/// dominance; the diagonal is eigenvalue(partitions[j]).
std::vector<std::vector<LaurentAlpha>> laplace_beltrami_monomial_matrix(int n);

/// J^alpha_lambda in the monomial basis: the dominance-triangular eigenvector
/// of D(alpha) with [m_lambda] = h_lambda(alpha). Throws TheoremViolation if a
/// coefficient fails to be a polynomial in alpha.
MonoVec jack_in_monomial(const Partition& lambda);

struct JackExpansion {
  Partition lambda;
  MonoVec in_monomial;
  PowerVec in_power;
};

JackExpansion jack_expansion(const Partition& lambda);

/// Jack characters and norms for every pair of partitions of n.
class ThetaTable {
 public:
  ThetaTable(int n, std::vector<Partition> partitions, std::vector<std::vector<LaurentAlpha>> theta,
             std::vector<LaurentAlpha> norm);

  int n() const { return n_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  std::size_t index_of(const Partition& mu) const;

  /// theta^lambda_mu(alpha).
  const LaurentAlpha& theta(const Partition& lambda, const Partition& mu) const;
  const LaurentAlpha& theta(std::size_t lambda, std::size_t mu) const { return theta_[lambda][mu]; }
  /// h_lambda(alpha) h'_lambda(alpha).
  const LaurentAlpha& norm(const Partition& lambda) const { return norm_[index_of(lambda)]; }
  const LaurentAlpha& norm(std::size_t lambda) const { return norm_[lambda]; }

  friend bool operator==(const ThetaTable&, const ThetaTable&) = default;

 private:
  int n_;
  std::vector<Partition> partitions_;
  std::vector<std::vector<LaurentAlpha>> theta_;
  std::vector<LaurentAlpha> norm_;
};

/// Builds the table from scratch; checks theta^lambda_{1^n} = 1 and that
/// every character is a polynomial.
ThetaTable build_theta_table(int n);

/// In-process memo of theta tables, optionally backed by a cache directory
/// holding theta_n<k>.json files.
class ThetaStore {
 public:
  explicit ThetaStore(std::optional<std::filesystem::path> cache_dir = std::nullopt);

  std::shared_ptr<const ThetaTable> get(int n);

  const std::optional<std::filesystem::path>& cache_dir() const { return cache_dir_; }
  /// Tables already held in memory are kept.
  void set_cache_dir(std::optional<std::filesystem::path> dir);

  /// Process-wide store without a cache directory.
  static ThetaStore& global();

 private:
  std::optional<std::filesystem::path> cache_dir_;
  std::mutex mutex_;
  std::unordered_map<int, std::shared_ptr<const ThetaTable>> tables_;
};

/// Shorthand for ThetaStore::global().get(n).
std::shared_ptr<const ThetaTable> theta_table(int n);

/// theta^lambda_mu(alpha). Throws std::invalid_argument on unequal weights.
LaurentAlpha theta(const Partition& lambda, const Partition& mu);

/// Both sides of sum_mu theta^lambda_mu X^{l(mu)} = prod_s (X + alpha a'(s) - l'(s)).
struct PrincipalSpecialization {
  BivarAlphaX theta_side;
  BivarAlphaX product_side;
};

/// Throws TheoremViolation when the two sides differ.
PrincipalSpecialization principal_specialization(const Partition& lambda);

/// R^alpha_lambda(X) = prod_s (X + alpha a'(s) - l'(s)).
BivarAlphaX content_polynomial(const Partition& lambda);

/// <J_lambda, J_lambda>_alpha, checked against h_lambda h'_lambda.
LaurentAlpha jack_norm(const Partition& lambda);

}  // namespace jackcc
