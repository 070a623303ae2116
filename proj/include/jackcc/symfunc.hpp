#pragma once

// Homogeneous symmetric functions as sparse vectors over a partition-indexed
// basis, the alpha scalar product, and the Laplace-Beltrami operator
// D(alpha) = (alpha - 1) N + alpha U + S acting on power sums.

#include "jackcc/exactalg.hpp"
#include "jackcc/partitions.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

namespace jackcc {

struct PowerSumBasis {
  static constexpr const char* name = "p";
};
struct MonomialBasis {
  static constexpr const char* name = "m";
};

/// Sparse homogeneous symmetric function of weight n in the basis `Basis`.
/// Keys all have weight n and no stored coefficient is zero.
template <class Basis>
class SymVec {
 public:
  using Terms = std::map<Partition, LaurentAlpha, RevLex>;

  explicit SymVec(int weight = 0) : weight_(weight) {}

  static SymVec basis_element(const Partition& mu, const LaurentAlpha& c = 1) {
    SymVec v(mu.weight());
    v.add(mu, c);
    return v;
  }

  int weight() const { return weight_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  LaurentAlpha coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? LaurentAlpha() : it->second;
  }

  /// Adds c to the coefficient of mu.
  void add(const Partition& mu, const LaurentAlpha& c) {
    if (mu.weight() != weight_) throw std::invalid_argument("term weight does not match vector weight");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mu, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SymVec& operator+=(const SymVec& o) {
    check_weight(o);
    for (const auto& [mu, c] : o.terms_) add(mu, c);
    return *this;
  }
  SymVec& operator-=(const SymVec& o) {
    check_weight(o);
    for (const auto& [mu, c] : o.terms_) add(mu, -c);
    return *this;
  }
  SymVec& operator*=(const LaurentAlpha& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [mu, v] : terms_) v *= c;
    return *this;
  }

  friend SymVec operator+(SymVec a, const SymVec& b) { return a += b; }
  friend SymVec operator-(SymVec a, const SymVec& b) { return a -= b; }
  friend SymVec operator*(const LaurentAlpha& c, SymVec a) { return a *= c; }
  friend bool operator==(const SymVec& a, const SymVec& b) {
    return a.weight_ == b.weight_ && a.terms_ == b.terms_;
  }

 private:
  void check_weight(const SymVec& o) const {
    if (o.weight_ != weight_) throw std::invalid_argument("weight mismatch between symmetric functions");
  }

  int weight_;
  Terms terms_;
};

using PowerVec = SymVec<PowerSumBasis>;
using MonoVec = SymVec<MonomialBasis>;

/// N(p_lambda) = n(lambda') p_lambda.
PowerVec op_N(const PowerVec& f);
/// Merges two parts: each unordered pair of parts (i, j) of lambda
/// contributes i*j to p_{lambda with i, j replaced by i + j}.
PowerVec op_U(const PowerVec& f);
/// Splits one part m into {k, m - k}: weight m per unordered split, m/2
/// when k = m - k.
PowerVec op_S(const PowerVec& f);
/// D(alpha) = (alpha - 1) N + alpha U + S.
PowerVec op_D(const PowerVec& f);

/// <f, g>_alpha = sum_lambda f_lambda g_lambda z_lambda alpha^{l(lambda)}.
LaurentAlpha scalar_product(const PowerVec& f, const PowerVec& g);

/// Dense change-of-basis data for weight n, indexed by generate_partitions(n).
struct BasisChange {
  int n = 0;
  std::vector<Partition> partitions;
  /// p_to_m[k][j] = [m_{partitions[k]}] p_{partitions[j]} (integers; nonzero
  /// only when partitions[k] dominates partitions[j]).
  std::vector<std::vector<Rational>> p_to_m;
  /// Inverse matrix: m_to_p[k][j] = [p_{partitions[k]}] m_{partitions[j]}.
  std::vector<std::vector<Rational>> m_to_p;

  std::size_t index_of(const Partition& mu) const;
};

/// Memoized per weight; safe to call from several threads.
std::shared_ptr<const BasisChange> basis_change(int n);

MonoVec power_to_mono(const PowerVec& f);
PowerVec mono_to_power(const MonoVec& f);

/// p_1^n.
PowerVec p_one_power(int n);

}  // namespace jackcc
