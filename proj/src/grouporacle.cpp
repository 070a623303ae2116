#include "jackcc/grouporacle.hpp"

#include "jackcc/jack.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace jackcc {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("permutation images must form a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i] - 1;
      const int to = cycle[(i + 1) % cycle.size()] - 1;
      if (from < 0 || from >= m || used[static_cast<std::size_t>(from)]) {
        throw std::invalid_argument("cycles must be disjoint and lie in 1..m");
      }
      used[static_cast<std::size_t>(from)] = true;
      images[static_cast<std::size_t>(from)] = to;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& g) const {
  if (g.size() != size()) throw std::invalid_argument("cannot compose permutations of different sizes");
  std::vector<int> out(images_.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = images_[static_cast<std::size_t>(g.images_[x])];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
  return Permutation(std::move(out));
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> parts;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
      seen[x] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return Partition::from_unsorted(std::move(parts));
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Partition <-> beta-set (first-column hook lengths) with a fixed number of beads.
std::vector<int> beta_set(const Partition& lambda, int beads) {
  std::vector<int> b;
  for (int i = 0; i < beads; ++i) {
    const int part = i < lambda.length() ? lambda[static_cast<std::size_t>(i)] : 0;
    b.push_back(part + beads - 1 - i);
  }
  return b;  // strictly decreasing
}

Partition from_beta_set(std::vector<int> b) {
  std::sort(b.rbegin(), b.rend());
  std::vector<int> parts;
  const int beads = static_cast<int>(b.size());
  for (int i = 0; i < beads; ++i) {
    const int part = b[static_cast<std::size_t>(i)] - (beads - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

struct CharacterMemo {
  std::mutex mutex;
  std::map<std::pair<Partition, Partition>, BigInt> values;

  BigInt compute(const Partition& lambda, const Partition& mu) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    if (auto it = values.find({lambda, mu}); it != values.end()) return it->second;
    const int k = mu[0];
    const Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
    const int beads = lambda.length();
    const std::vector<int> b = beta_set(lambda, beads);
    BigInt total = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const int target = b[i] - k;
      if (target < 0 || std::find(b.begin(), b.end(), target) != b.end()) continue;
      // Removing a border strip of length k = sliding one bead down by k; its
      // height is the number of beads jumped over.
      const auto jumped = std::count_if(b.begin(), b.end(), [&](int x) { return x > target && x < b[i]; });
      std::vector<int> moved = b;
      moved[i] = target;
      const BigInt sub = compute(from_beta_set(std::move(moved)), rest);
      if (jumped % 2 == 0) total += sub;
      else total -= sub;
    }
    values.emplace(std::make_pair(lambda, mu), total);
    return total;
  }
};

}  // namespace

BigInt character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw std::invalid_argument("character needs partitions of equal weight");
  static CharacterMemo memo;
  std::lock_guard lock(memo.mutex);
  return memo.compute(lambda, mu);
}

BigInt hook_length_product(const Partition& lambda) {
  BigInt h = 1;
  for (const auto& s : box_stats(lambda)) h *= s.arm + s.leg + 1;
  return h;
}

BigInt AlgebraVector::coeff(const Partition& mu) const {
  auto it = coeffs.find(mu);
  return it == coeffs.end() ? BigInt(0) : it->second;
}

// ---------------------------------------------------------------------------

namespace {

// The full group S_m with a lexicographic rank for each element.
struct GroupTable {
  int m = 0;
  std::vector<Permutation> elements;
  std::vector<Partition> types;

  std::size_t rank(const Permutation& p) const {
    std::size_t r = 0;
    for (int i = 0; i < m; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < m; ++j) smaller += p(j) < p(i);
      r = r * static_cast<std::size_t>(m - i) + static_cast<std::size_t>(smaller);
    }
    return r;
  }
};

const GroupTable& group_table(int m) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GroupTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) {
    slot = std::make_unique<GroupTable>();
    slot->m = m;
    slot->elements = all_permutations(m);
    for (const auto& p : slot->elements) slot->types.push_back(p.cycle_type());
  }
  return *slot;
}

using GroupVector = std::vector<BigInt>;

// f * (sum of the given elements) in the group algebra.
GroupVector right_multiply(const GroupTable& g, const GroupVector& f, const std::vector<std::size_t>& set) {
  GroupVector out(g.elements.size(), 0);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] == 0) continue;
    for (std::size_t y : set) out[g.rank(g.elements[x].compose(g.elements[y]))] += f[x];
  }
  return out;
}

std::vector<std::size_t> class_members(const GroupTable& g, const Partition& lambda) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.types.size(); ++i) {
    if (g.types[i] == lambda) out.push_back(i);
  }
  return out;
}

// Reads a group-algebra vector back in a basis of blocks, checking it is
// constant on each block.
AlgebraVector collapse(const GroupVector& f, const std::map<Partition, std::vector<std::size_t>, RevLex>& blocks,
                       AlgebraVector::Mode mode, int n) {
  AlgebraVector out{mode, n, {}};
  for (const auto& [mu, members] : blocks) {
    const BigInt value = f[members.front()];
    for (std::size_t x : members) {
      if (f[x] != value) throw TheoremViolation("product is not constant on the block of " + mu.to_string());
    }
    if (value != 0) out.coeffs.emplace(mu, value);
  }
  return out;
}

Permutation representative(const Partition& lambda) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int part : lambda.parts()) {
    std::vector<int> cycle;
    for (int i = 0; i < part; ++i) cycle.push_back(next++);
    cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(lambda.weight(), cycles);
}

void check_weights(const Partition& target, std::span<const Partition> factors) {
  for (const auto& f : factors) {
    if (f.weight() != target.weight()) throw std::invalid_argument("connection coefficients need equal weights");
  }
}

}  // namespace

AlgebraVector class_product(std::span<const Partition> lambdas) {
  if (lambdas.empty()) throw std::invalid_argument("class_product needs at least one class");
  const int n = lambdas[0].weight();
  if (n > kMaxConvolutionWeight) throw std::out_of_range("class_product is limited to n <= 6");
  check_weights(lambdas[0], lambdas);
  const GroupTable& g = group_table(n);
  GroupVector f(g.elements.size(), 0);
  for (std::size_t x : class_members(g, lambdas[0])) f[x] = 1;
  for (std::size_t i = 1; i < lambdas.size(); ++i) f = right_multiply(g, f, class_members(g, lambdas[i]));
  std::map<Partition, std::vector<std::size_t>, RevLex> blocks;
  for (const auto& mu : generate_partitions(n)) blocks.emplace(mu, class_members(g, mu));
  return collapse(f, blocks, AlgebraVector::Mode::ClassAlgebra, n);
}

BigInt c_coeff(const Partition& target, std::span<const Partition> factors) {
  check_weights(target, factors);
  const int n = target.weight();
  if (factors.empty()) return target == Partition::ones(n) ? 1 : 0;
  if (n > kMaxConvolutionWeight) throw std::out_of_range("c_coeff is limited to n <= 6");
  const GroupTable& g = group_table(n);
  std::vector<std::vector<std::size_t>> members;
  std::vector<int> reach(factors.size() + 1, 0);  // sum of reflection lengths from index k on
  for (const auto& f : factors) members.push_back(class_members(g, f));
  for (std::size_t k = factors.size(); k-- > 0;) reach[k] = reach[k + 1] + factors[k].reflection_length();

  // Count sigma_k o ... o sigma_s = tau, peeling off sigma_k from the left.
  std::function<BigInt(std::size_t, const Permutation&)> count = [&](std::size_t k, const Permutation& tau) -> BigInt {
    const int r = tau.cycle_type().reflection_length();
    if (r > reach[k] || (reach[k] - r) % 2 != 0) return 0;
    if (k + 1 == factors.size()) return tau.cycle_type() == factors[k] ? 1 : 0;
    BigInt total = 0;
    for (std::size_t x : members[k]) total += count(k + 1, g.elements[x].inverse().compose(tau));
    return total;
  };
  return count(0, representative(target));
}

Rational c_coeff_from_characters(const Partition& target, std::span<const Partition> factors) {
  check_weights(target, factors);
  const int n = target.weight();
  std::vector<Partition> all{target};
  all.insert(all.end(), factors.begin(), factors.end());
  Rational sum = 0;
  for (const auto& beta : generate_partitions(n)) {
    const Rational h = Rational(hook_length_product(beta));
    Rational term = 1 / (h * h);
    for (const auto& l : all) term *= h * Rational(character(beta, l)) / Rational(z(l));
    sum += term;
  }
  return Rational(z(target)) * sum;
}

// ---------------------------------------------------------------------------

Partition coset_type(const Permutation& w) {
  const int m = w.size();
  if (m % 2 != 0) throw std::invalid_argument("coset_type needs a permutation of even degree");
  std::vector<int> f_images(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) f_images[static_cast<std::size_t>(i)] = i ^ 1;
  const Permutation f(std::move(f_images));
  const Partition doubled = f.compose(w).compose(f).compose(w.inverse()).cycle_type();
  std::vector<int> parts;
  for (int i = 0; i < doubled.length(); i += 2) {
    if (i + 1 >= doubled.length() || doubled[static_cast<std::size_t>(i)] != doubled[static_cast<std::size_t>(i + 1)]) {
      throw std::invalid_argument("cycle type " + doubled.to_string() + " does not have paired parts");
    }
    parts.push_back(doubled[static_cast<std::size_t>(i)]);
  }
  return Partition(std::move(parts));
}

BigInt hyperoctahedral_order(int n) {
  BigInt two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
  return two_n * factorial(static_cast<unsigned>(n));
}

namespace {

const std::map<Partition, std::vector<std::size_t>, RevLex>& coset_blocks(int n) {
  if (n < 1 || n > kMaxDoubleCosetWeight) throw std::out_of_range("double cosets are limited to 1 <= n <= 3");
  static std::mutex mutex;
  static std::map<int, std::map<Partition, std::vector<std::size_t>, RevLex>> cache;
  const GroupTable& g = group_table(2 * n);
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::map<Partition, std::vector<std::size_t>, RevLex> blocks;
  for (const auto& mu : generate_partitions(n)) blocks[mu];
  for (std::size_t i = 0; i < g.elements.size(); ++i) blocks[coset_type(g.elements[i])].push_back(i);
  const BigInt b = hyperoctahedral_order(n);
  for (const auto& [mu, members] : blocks) {
    BigInt expected = b * b / z(mu);
    expected >>= static_cast<mp_bitcnt_t>(mu.length());
    if (BigInt(static_cast<unsigned long>(members.size())) != expected) {
      throw TheoremViolation("|K_" + mu.to_string() + "| = " + std::to_string(members.size()) + ", expected " +
                             expected.get_str());
    }
  }
  return cache.emplace(n, std::move(blocks)).first->second;
}

}  // namespace

const std::map<Partition, std::vector<Permutation>, RevLex>& double_cosets(int n) {
  static std::mutex mutex;
  static std::map<int, std::map<Partition, std::vector<Permutation>, RevLex>> cache;
  const auto& blocks = coset_blocks(n);
  const GroupTable& g = group_table(2 * n);
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::map<Partition, std::vector<Permutation>, RevLex> out;
  for (const auto& [mu, members] : blocks) {
    auto& v = out[mu];
    for (std::size_t x : members) v.push_back(g.elements[x]);
  }
  return cache.emplace(n, std::move(out)).first->second;
}

AlgebraVector doublecoset_product(std::span<const Partition> lambdas) {
  if (lambdas.empty()) throw std::invalid_argument("doublecoset_product needs at least one double coset");
  const int n = lambdas[0].weight();
  check_weights(lambdas[0], lambdas);
  const auto& blocks = coset_blocks(n);
  const GroupTable& g = group_table(2 * n);
  GroupVector f(g.elements.size(), 0);
  for (std::size_t x : blocks.at(lambdas[0])) f[x] = 1;
  for (std::size_t i = 1; i < lambdas.size(); ++i) f = right_multiply(g, f, blocks.at(lambdas[i]));
  return collapse(f, blocks, AlgebraVector::Mode::DoubleCosetAlgebra, n);
}

BigInt b_coeff(const Partition& target, std::span<const Partition> factors) {
  if (factors.empty()) throw std::invalid_argument("b_coeff needs at least one factor");
  check_weights(target, factors);
  return doublecoset_product(factors).coeff(target);
}

BigInt phi(const Partition& beta, const Partition& mu) {
  if (beta.weight() != mu.weight()) throw std::invalid_argument("phi needs partitions of equal weight");
  std::vector<int> doubled;
  for (int part : beta.parts()) doubled.push_back(2 * part);
  const Partition two_beta(std::move(doubled));
  const GroupTable& g = group_table(2 * mu.weight());
  std::map<Partition, long> type_counts;
  for (std::size_t x : coset_blocks(mu.weight()).at(mu)) ++type_counts[g.types[x]];
  BigInt total = 0;
  for (const auto& [type, count] : type_counts) total += character(two_beta, type) * count;
  return total;
}

Rational b_coeff_from_characters(const Partition& target, std::span<const Partition> factors) {
  check_weights(target, factors);
  const int n = target.weight();
  std::vector<Partition> all{target};
  all.insert(all.end(), factors.begin(), factors.end());
  Rational sum = 0;
  for (const auto& beta : generate_partitions(n)) {
    Rational term = 1 / substitute_alpha(hook_norm(beta), 2);
    for (const auto& l : all) term *= Rational(phi(beta, l));
    sum += term;
  }
  const auto size = static_cast<unsigned long>(coset_blocks(n).at(target).size());
  return sum / Rational(BigInt(size));
}

// ---------------------------------------------------------------------------

std::map<Partition, MonoVec, RevLex> gram_schmidt_jack(int n) {
  if (n < 1 || n > kMaxGramSchmidtWeight) throw std::out_of_range("gram_schmidt_jack is limited to 1 <= n <= 5");
  const auto bc = basis_change(n);
  const auto& parts = bc->partitions;
  const std::size_t size = parts.size();
  const int degree_bound = n;
  const int samples = degree_bound + 3;

  // values[lambda][mu] = list of (alpha, [m_mu] J_lambda(alpha)).
  std::vector<std::vector<std::vector<std::pair<Rational, Rational>>>> values(
      size, std::vector<std::vector<std::pair<Rational, Rational>>>(size));
  for (int sample = 1; sample <= samples; ++sample) {
    const Rational a = sample;
    // Gram matrix of the monomial basis under <p_k, p_l> = delta z_k a^{l(k)}.
    std::vector<Rational> pnorm(size);
    for (std::size_t k = 0; k < size; ++k) {
      Rational ak = 1;
      for (int i = 0; i < parts[k].length(); ++i) ak *= a;
      pnorm[k] = Rational(z(parts[k])) * ak;
    }
    std::vector<std::vector<Rational>> gram(size, std::vector<Rational>(size));
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        Rational s = 0;
        for (std::size_t k = 0; k < size; ++k) s += bc->m_to_p[k][i] * bc->m_to_p[k][j] * pnorm[k];
        gram[i][j] = s;
      }
    }
    auto inner = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
      Rational s = 0;
      for (std::size_t i = 0; i < size; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < size; ++j) s += x[i] * gram[i][j] * y[j];
      }
      return s;
    };
    // Increasing lexicographic order is the reverse of the generation order.
    std::vector<std::vector<Rational>> basis;
    for (std::size_t idx = size; idx-- > 0;) {
      std::vector<Rational> v(size, 0);
      v[idx] = 1;
      std::vector<Rational> e = v;
      for (const auto& u : basis) {
        const Rational c = inner(e, u) / inner(u, u);
        for (std::size_t i = 0; i < size; ++i) v[i] -= c * u[i];
      }
      basis.push_back(v);
      const Rational scale = substitute_alpha(hook_products(parts[idx]).first, a);
      for (std::size_t mu = 0; mu < size; ++mu) values[idx][mu].emplace_back(a, v[mu] * scale);
    }
  }
  std::map<Partition, MonoVec, RevLex> out;
  for (std::size_t l = 0; l < size; ++l) {
    MonoVec j(n);
    for (std::size_t mu = 0; mu < size; ++mu) j.add(parts[mu], interpolate(values[l][mu], degree_bound));
    out.emplace(parts[l], std::move(j));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string fail_or_count(const std::string& fail, long cases) {
  return fail.empty() ? std::to_string(cases) + " cases" : "FAILED at " + fail;
}

}  // namespace

VerificationReport verify_oracles(int n_max) {
  if (n_max > kMaxWeight) throw std::out_of_range("n_max exceeds the maximum weight");
  VerificationReport report;
  for (int n = 1; n <= n_max; ++n) {
    const auto parts = generate_partitions(n);
    const std::string at = " n=" + std::to_string(n);
    const BigInt n_fact = factorial(static_cast<unsigned>(n));

    if (n <= 8) {
      std::string fail;
      long cases = 0;
      for (const auto& l : parts) {
        for (const auto& k : parts) {
          BigInt s = 0;
          for (const auto& mu : parts) s += (n_fact / z(mu)) * character(l, mu) * character(k, mu);
          ++cases;
          if (s != (l == k ? n_fact : BigInt(0)) && fail.empty()) fail = l.to_string() + " vs " + k.to_string();
        }
        if (character(l, Partition::ones(n)) * hook_length_product(l) != n_fact && fail.empty()) {
          fail = "degree of chi^" + l.to_string();
        }
      }
      report.add("character orthogonality and degrees" + at, fail_or_count(fail, cases), fail.empty());
    }

    if (n <= 7) {
      std::string fail;
      long cases = 0;
      const auto table = theta_table(n);
      for (const auto& l : parts) {
        for (const auto& mu : parts) {
          ++cases;
          const Rational via_theta =
              substitute_alpha(table->theta(l, mu), 1) * Rational(z(mu)) / Rational(hook_length_product(l));
          if (via_theta != Rational(character(l, mu)) && fail.empty()) fail = l.to_string() + ";" + mu.to_string();
        }
      }
      report.add("theta at alpha=1 matches characters" + at, fail_or_count(fail, cases), fail.empty());
    }

    if (n <= 5) {
      std::string fail;
      long cases = 0;
      for (const auto& l2 : parts) {
        for (const auto& l3 : parts) {
          const std::vector<Partition> factors{l2, l3};
          const AlgebraVector product = class_product(factors);
          for (const auto& l1 : parts) {
            ++cases;
            const Rational from_jack = Rational(z(l1)) * substitute_alpha(jcc({l1, l2, l3}), 1);
            const BigInt direct = product.coeff(l1);
            const BigInt searched = c_coeff(l1, factors);
            const Rational from_chars = c_coeff_from_characters(l1, factors);
            if ((from_jack != Rational(direct) || searched != direct || from_chars != Rational(direct)) && fail.empty()) {
              fail = l1.to_string() + ";" + l2.to_string() + ";" + l3.to_string();
            }
          }
        }
      }
      report.add("alpha=1 connection coefficients match S_n" + at, fail_or_count(fail, cases), fail.empty());
    }

    if (n <= kMaxDoubleCosetWeight) {
      std::string fail;
      long cases = 0;
      const Rational b_order = Rational(hyperoctahedral_order(n));
      const auto table = theta_table(n);
      for (const auto& beta : parts) {
        for (const auto& mu : parts) {
          ++cases;
          if (substitute_alpha(table->theta(beta, mu), 2) * b_order != Rational(phi(beta, mu)) && fail.empty()) {
            fail = "theta^" + beta.to_string() + "_" + mu.to_string() + "(2)";
          }
        }
      }
      for (const auto& l2 : parts) {
        for (const auto& l3 : parts) {
          const std::vector<Partition> factors{l2, l3};
          const AlgebraVector product = doublecoset_product(factors);
          for (const auto& l1 : parts) {
            ++cases;
            const Rational k_size = Rational(BigInt(static_cast<unsigned long>(double_cosets(n).at(l1).size())));
            const Rational from_jack = b_order * b_order * b_order / k_size * substitute_alpha(jcc({l1, l2, l3}), 2);
            const BigInt direct = product.coeff(l1);
            if ((from_jack != Rational(direct) || b_coeff_from_characters(l1, factors) != Rational(direct)) &&
                fail.empty()) {
              fail = l1.to_string() + ";" + l2.to_string() + ";" + l3.to_string();
            }
          }
        }
      }
      report.add("alpha=2 connection coefficients match double cosets" + at, fail_or_count(fail, cases), fail.empty());
    }

    if (n <= kMaxGramSchmidtWeight) {
      std::string fail;
      const auto gs = gram_schmidt_jack(n);
      for (const auto& l : parts) {
        if (gs.at(l) != jack_in_monomial(l) && fail.empty()) fail = l.to_string();
      }
      report.add("Gram-Schmidt Jack matches eigenvector solve" + at,
                 fail_or_count(fail, static_cast<long>(parts.size())), fail.empty());
    }
  }
  return report;
}

}  // namespace jackcc
