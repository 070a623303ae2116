#pragma once

// Integer partitions and the statistics attached to their Young diagrams.

#include "jackcc/exactalg.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jackcc {

/// Largest weight accepted by generate_partitions unless the caller asks for
/// a different cap. Table sizes explode beyond this.
inline constexpr int kMaxWeight = 12;

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  /// Sorts `parts` first; zeros are dropped.
  static Partition from_unsorted(std::vector<int> parts);
  /// (1^n).
  static Partition ones(int n);
  /// (1^{n-2} 2), the class of transpositions. Requires n >= 2.
  static Partition transposition(int n);

  std::span<const int> parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  /// m_i(lambda): number of parts equal to i.
  int multiplicity(int i) const;
  /// |lambda| - l(lambda), the reflection length.
  int reflection_length() const { return weight_ - length(); }

  /// Canonical text "4,2,1,1"; the empty partition prints as "".
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  /// Lexicographic on the part sequence.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Orders partitions of equal weight with the lexicographically largest first
/// ((n) first, (1^n) last). This is the output order everywhere.
struct RevLex {
  bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

/// Parses "4,2,1,1" or the multiplicity form "[1^2 2^1 4^1]" (a bare "k"
/// inside brackets means k^1). Throws std::invalid_argument.
Partition parse_partition(std::string_view text);

/// All partitions of n in reverse-lexicographic order. Throws
/// std::out_of_range when n exceeds max_weight.
std::vector<Partition> generate_partitions(int n, int max_weight = kMaxWeight);

Partition conjugate(const Partition& lambda);

/// z_lambda = prod_i i^{m_i} m_i!
BigInt z(const Partition& lambda);
/// Aut_lambda = prod_i m_i!
BigInt aut(const Partition& lambda);
/// n(lambda) = sum_i (i-1) lambda_i
long nstat(const Partition& lambda);

/// Weak dominance mu <= lambda. Throws std::invalid_argument on unequal weights.
bool dominance_leq(const Partition& mu, const Partition& lambda);
/// Strict dominance mu < lambda: weakly dominated and distinct.
bool dominance_less(const Partition& mu, const Partition& lambda);

/// Arm, leg, coarm and coleg of one box.
struct BoxStats {
  int row = 0;  // 1-based
  int col = 0;  // 1-based
  int arm = 0;
  int leg = 0;
  int coarm = 0;
  int coleg = 0;
};

/// One entry per box, row by row.
std::vector<BoxStats> box_stats(const Partition& lambda);

/// (h_lambda(alpha), h'_lambda(alpha)) with
///   h  = prod_s (alpha a(s) + l(s) + 1),
///   h' = prod_s (alpha (a(s) + 1) + l(s)).
std::pair<LaurentAlpha, LaurentAlpha> hook_products(const Partition& lambda);

/// h_lambda(alpha) h'_lambda(alpha), the squared norm of J_lambda.
LaurentAlpha hook_norm(const Partition& lambda);

/// alpha n(lambda') - n(lambda), the eigenvalue of the Laplace-Beltrami
/// operator on J_lambda.
LaurentAlpha eigenvalue(const Partition& lambda);

}  // namespace jackcc

template <>
struct std::hash<jackcc::Partition> {
  std::size_t operator()(const jackcc::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int part : p.parts()) {
      h ^= static_cast<std::size_t>(part);
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};
