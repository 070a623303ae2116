#pragma once

// Brute-force ground truth from the symmetric group: Murnaghan-Nakayama
// characters, class-algebra products in S_n, double-coset products of the
// hyperoctahedral group B_n in S_{2n}, and Jack polynomials obtained by
// Gram-Schmidt orthogonalization instead of the eigenvector solve.

#include "jackcc/connection.hpp"
#include "jackcc/exactalg.hpp"
#include "jackcc/partitions.hpp"
#include "jackcc/symfunc.hpp"

#include <map>
#include <span>
#include <vector>

namespace jackcc {

/// A bijection of {0, ..., m-1}.
class Permutation {
 public:
  /// Throws std::invalid_argument unless images is a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int m);
  /// Builds from disjoint cycles written with 1-based points.
  static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  /// (this o g)(x) = this(g(x)).
  Permutation compose(const Permutation& g) const;
  Permutation inverse() const;
  Partition cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// All m! permutations in lexicographic order of their image vectors.
std::vector<Permutation> all_permutations(int m);

/// chi^lambda_mu by the Murnaghan-Nakayama rule. Throws std::invalid_argument
/// on unequal weights.
BigInt character(const Partition& lambda, const Partition& mu);

/// h_lambda(1): the product of the hook lengths of lambda.
BigInt hook_length_product(const Partition& lambda);

struct AlgebraVector {
  enum class Mode { ClassAlgebra, DoubleCosetAlgebra };
  Mode mode = Mode::ClassAlgebra;
  int n = 0;
  std::map<Partition, BigInt, RevLex> coeffs;

  BigInt coeff(const Partition& mu) const;
};

inline constexpr int kMaxConvolutionWeight = 6;
inline constexpr int kMaxDoubleCosetWeight = 3;

/// prod_i C_{lambda^i} in the class algebra of S_n, by convolution in the
/// group algebra. Throws std::out_of_range for n > kMaxConvolutionWeight.
AlgebraVector class_product(std::span<const Partition> lambdas);

/// c^{target}_{factors...}: ordered factorizations of a fixed permutation of
/// type target into factors of the given types, counted by pruned search.
BigInt c_coeff(const Partition& target, std::span<const Partition> factors);

/// The same number from irreducible characters.
Rational c_coeff_from_characters(const Partition& target, std::span<const Partition> factors);

/// The partition lambda of n such that f* w f* w^{-1} has type
/// (lambda_1, lambda_1, lambda_2, lambda_2, ...), f* = (1 2)(3 4)...(2n-1 2n).
/// Throws std::invalid_argument for odd size or a type without paired parts.
Partition coset_type(const Permutation& w);

/// |B_n| = 2^n n!.
BigInt hyperoctahedral_order(int n);

/// The double cosets K_lambda of B_n in S_{2n}; checks
/// |K_lambda| = |B_n|^2 / (2^{l(lambda)} z_lambda). n <= kMaxDoubleCosetWeight.
const std::map<Partition, std::vector<Permutation>, RevLex>& double_cosets(int n);

/// prod_i K_{lambda^i} in the double-coset algebra, by convolution in the
/// group algebra of S_{2n}. Throws std::out_of_range for n > kMaxDoubleCosetWeight.
AlgebraVector doublecoset_product(std::span<const Partition> lambdas);

/// b^{target}_{factors...} = [K_target] prod K_{factors}; at least one factor.
BigInt b_coeff(const Partition& target, std::span<const Partition> factors);

/// phi^beta_mu = sum_{w in K_mu} chi^{2 beta}(w).
BigInt phi(const Partition& beta, const Partition& mu);

/// b^{target}_{factors...} from the zonal spherical functions phi.
Rational b_coeff_from_characters(const Partition& target, std::span<const Partition> factors);

inline constexpr int kMaxGramSchmidtWeight = 5;

/// Jack polynomials of weight n built by orthogonalizing the monomial basis
/// in increasing lexicographic order under <,>_alpha at sample values of
/// alpha, scaling so [m_lambda] = h_lambda(alpha), and interpolating.
std::map<Partition, MonoVec, RevLex> gram_schmidt_jack(int n);

/// Character orthogonality, degree formula, alpha = 1 and alpha = 2 bridges
/// between connection coefficients and the group algebras, and agreement of
/// the Gram-Schmidt construction with the eigenvector solve.
VerificationReport verify_oracles(int n_max);

}  // namespace jackcc
