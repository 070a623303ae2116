#include "jackcc/connection.hpp"

#include "jackcc/jack.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace jackcc {

namespace {

// A primitive linear form p*alpha + q with p > 0.
using LinearForm = std::pair<int, int>;

struct FactoredNorm {
  BigInt constant = 1;
  std::map<LinearForm, int> factors;

  void multiply(int p, int q) {
    if (p == 0) {
      constant *= q;
      return;
    }
    const int g = std::gcd(p, q);
    constant *= g;
    ++factors[{p / g, q / g}];
  }
};

// Common denominator data for sum_beta x_beta / (h_beta h'_beta) at weight n.
struct NormDenominators {
  int alpha_power = 0;
  LaurentAlpha coprime_part;                 // lcm with the alpha factors removed
  std::vector<LaurentAlpha> cofactors;       // lcm / (h_beta h'_beta)
};

LaurentAlpha linear(const LinearForm& f) { return LaurentAlpha(0, {Rational(f.second), Rational(f.first)}); }

std::shared_ptr<const NormDenominators> norm_denominators(int n) {
  static std::mutex mutex;
  static std::unordered_map<int, std::shared_ptr<const NormDenominators>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  const auto parts = generate_partitions(n);
  std::vector<FactoredNorm> norms;
  std::map<LinearForm, int> lcm;
  for (const auto& beta : parts) {
    FactoredNorm f;
    for (const auto& s : box_stats(beta)) {
      f.multiply(s.arm, s.leg + 1);
      f.multiply(s.arm + 1, s.leg);
    }
    for (const auto& [form, e] : f.factors) lcm[form] = std::max(lcm[form], e);
    norms.push_back(std::move(f));
  }
  auto out = std::make_shared<NormDenominators>();
  const LinearForm alpha_form{1, 0};
  out->alpha_power = lcm.count(alpha_form) ? lcm.at(alpha_form) : 0;
  out->coprime_part = 1;
  for (const auto& [form, e] : lcm) {
    if (form != alpha_form) out->coprime_part *= pow(linear(form), static_cast<unsigned>(e));
  }
  for (const auto& f : norms) {
    LaurentAlpha cof = Rational(Rational(1) / Rational(f.constant));
    for (const auto& [form, e] : lcm) {
      auto it = f.factors.find(form);
      const int have = it == f.factors.end() ? 0 : it->second;
      cof *= pow(linear(form), static_cast<unsigned>(e - have));
    }
    out->cofactors.push_back(std::move(cof));
  }
  return cache.emplace(n, std::move(out)).first->second;
}

LaurentAlpha signed_alpha_power(int k) {
  // (-alpha)^k
  return LaurentAlpha::monomial((k % 2 == 0) ? 1 : -1, k);
}

std::string join_partitions(std::span<const Partition> ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ";" : "") + ps[i].to_string();
  return s;
}

}  // namespace

LaurentAlpha sum_over_hook_norms(int n, std::span<const LaurentAlpha> numerators) {
  const auto den = norm_denominators(n);
  if (numerators.size() != den->cofactors.size()) {
    throw std::invalid_argument("one numerator per partition of n is required");
  }
  LaurentAlpha total;
  for (std::size_t i = 0; i < numerators.size(); ++i) {
    if (!numerators[i].is_zero()) total += numerators[i] * den->cofactors[i];
  }
  if (total.is_zero()) return total;
  const int low = std::min(0, total.min_degree());
  LaurentAlpha q = exact_divide(total.shifted(-low), den->coprime_part,
                                "sum over hook norms at n=" + std::to_string(n) + " is not a Laurent polynomial");
  return q.shifted(low - den->alpha_power);
}

LaurentAlpha jcc(std::span<const Partition> lambdas) {
  if (lambdas.empty()) throw std::invalid_argument("jcc needs at least one partition");
  const int n = lambdas[0].weight();
  for (const auto& l : lambdas) {
    if (l.weight() != n) throw std::invalid_argument("jcc arguments must have equal weight");
  }
  const auto table = theta_table(n);
  std::vector<std::size_t> idx;
  for (const auto& l : lambdas) idx.push_back(table->index_of(l));
  std::vector<LaurentAlpha> numerators;
  numerators.reserve(table->partitions().size());
  for (std::size_t beta = 0; beta < table->partitions().size(); ++beta) {
    LaurentAlpha prod = 1;
    for (std::size_t k : idx) {
      prod *= table->theta(beta, k);
      if (prod.is_zero()) break;
    }
    numerators.push_back(std::move(prod));
  }
  return sum_over_hook_norms(n, numerators);
}

std::vector<PowerVec> laplace_beltrami_iterates(int n, int r_max) {
  if (r_max < 0) throw std::invalid_argument("negative r");
  std::vector<PowerVec> out;
  PowerVec current = p_one_power(n);
  current *= LaurentAlpha::monomial(Rational(1) / Rational(factorial(static_cast<unsigned>(n))), -n);
  out.push_back(current);
  for (int r = 1; r <= r_max; ++r) {
    current = op_D(current);
    out.push_back(current);
  }
  return out;
}

ArLambdaResult analyze_ar(const Partition& lambda, int r, const LaurentAlpha& value) {
  const int n = lambda.weight();
  const int rl = lambda.reflection_length();
  const std::string where = "a^" + std::to_string(r) + "_" + lambda.to_string();
  ArLambdaResult res{lambda, r, value, {}, {}};
  if (r < rl) {
    if (!value.is_zero()) throw TheoremViolation(where + " should vanish below r_lambda but is " + value.to_string());
    return res;
  }
  const int top = r - rl;
  // n! alpha^l a = sum_i g^i alpha^i must be an integer polynomial of degree <= r - r_lambda.
  const LaurentAlpha scaled = value.shifted(lambda.length()) * LaurentAlpha(Rational(factorial(static_cast<unsigned>(n))));
  if (!scaled.is_polynomial() || !scaled.has_integer_coeffs() || (!scaled.is_zero() && scaled.max_degree() > top)) {
    throw TheoremViolation(where + ": n! alpha^l a is not an integer polynomial of degree <= " + std::to_string(top) +
                           " (" + scaled.to_string() + ")");
  }
  for (int i = 0; i <= top; ++i) res.g.push_back(scaled.coeff(i).get_num());
  const int sign = (top % 2 == 0) ? 1 : -1;
  for (int i = 0; i <= top; ++i) {
    if (res.g[static_cast<std::size_t>(i)] != sign * res.g[static_cast<std::size_t>(top - i)]) {
      throw TheoremViolation(where + ": g coefficients are not (anti)palindromic");
    }
  }
  for (const auto& c : to_b_variable(scaled)) {
    if (!is_integer(c) || c < 0) throw TheoremViolation(where + ": negative or fractional b-coefficient");
    res.b.push_back(c.get_num());
  }
  if (static_cast<int>(res.b.size()) > top + 1) throw TheoremViolation(where + ": b-degree exceeds r - r_lambda");
  res.b.resize(static_cast<std::size_t>(top + 1));
  return res;
}

LaurentAlpha a_r_lambda_via_characters(const Partition& lambda, int r) {
  const int n = lambda.weight();
  if (r == 0) return jcc({lambda});
  std::vector<Partition> args{lambda};
  args.insert(args.end(), static_cast<std::size_t>(r), Partition::transposition(n));
  return jcc(args);
}

ArLambdaResult a_r_lambda(const Partition& lambda, int r) {
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  const auto iterates = laplace_beltrami_iterates(lambda.weight(), r);
  const LaurentAlpha value = iterates.back().coeff(lambda);
  if (lambda.weight() <= kArCrossCheckMaxWeight && lambda.weight() >= 2 && r <= lambda.reflection_length() + 3) {
    const LaurentAlpha other = a_r_lambda_via_characters(lambda, r);
    if (other != value) {
      throw TheoremViolation("a^" + std::to_string(r) + "_" + lambda.to_string() + ": D^r route gives " +
                             value.to_string() + ", character route gives " + other.to_string());
    }
  }
  return analyze_ar(lambda, r, value);
}

LaurentAlpha denes_closed_form(const Partition& lambda) {
  const int rl = lambda.reflection_length();
  Rational num = Rational(factorial(static_cast<unsigned>(rl)));
  Rational den = Rational(aut(lambda));
  for (int part : lambda.parts()) {
    den *= Rational(factorial(static_cast<unsigned>(part)));
    // part^{part-2}; for part == 1 this is 1/1.
    if (part >= 2) {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(part - 2));
      num *= Rational(p);
    }
  }
  return LaurentAlpha::monomial(num / den, -lambda.length());
}

// ---------------------------------------------------------------------------

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void VerificationReport::add(std::string name, std::string detail, bool passed) {
  checks.push_back({std::move(name), std::move(detail), passed});
}

namespace {

// Calls f on each nondecreasing index tuple of length s over [0, count).
void for_each_multiset(std::size_t count, int s, const std::function<void(std::span<const std::size_t>)>& f) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(s), 0);
  while (true) {
    f(idx);
    int pos = s - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == count) --pos;
    if (pos < 0) return;
    const std::size_t v = idx[static_cast<std::size_t>(pos)] + 1;
    for (int k = pos; k < s; ++k) idx[static_cast<std::size_t>(k)] = v;
  }
}

}  // namespace

VerificationReport verify_theorems(int n_max, int r_extra) {
  if (n_max > kMaxWeight) throw std::out_of_range("n_max exceeds the maximum weight");
  VerificationReport report;
  for (int n = 1; n <= n_max; ++n) {
    const auto parts = generate_partitions(n);
    const auto iterates = laplace_beltrami_iterates(n, n - 1 + r_extra);
    int cases_zero = 0, cases_pol = 0, cases_denes = 0, cases_route = 0, cases_inv = 0;
    std::string fail_zero, fail_pol, fail_polpos, fail_denes, fail_route, fail_inv;
    for (const auto& lambda : parts) {
      const int rl = lambda.reflection_length();
      for (int r = 0; r <= rl + r_extra; ++r) {
        const LaurentAlpha value = iterates[static_cast<std::size_t>(r)].coeff(lambda);
        const std::string tag = "a^" + std::to_string(r) + "_" + lambda.to_string();
        if (r < rl) {
          ++cases_zero;
          if (!value.is_zero() && fail_zero.empty()) fail_zero = tag + " = " + value.to_string();
        } else {
          ++cases_pol;
          try {
            analyze_ar(lambda, r, value);
          } catch (const TheoremViolation& e) {
            std::string msg = e.what();
            auto& slot = msg.find("b-") != std::string::npos ? fail_polpos : fail_pol;
            if (slot.empty()) slot = msg;
          }
        }
        if (r == rl) {
          ++cases_denes;
          if (value != denes_closed_form(lambda) && fail_denes.empty()) fail_denes = tag + " = " + value.to_string();
        }
        if (n >= 2) {
          ++cases_route;
          try {
            if (a_r_lambda_via_characters(lambda, r) != value && fail_route.empty()) fail_route = tag;
          } catch (const TheoremViolation& e) {
            if (fail_route.empty()) fail_route = e.what();
          }
        }
        ++cases_inv;
        if (value.inverted() != signed_alpha_power(n - r + lambda.length()) * value && fail_inv.empty()) {
          fail_inv = tag;
        }
      }
    }
    const std::string at = " n=" + std::to_string(n);
    auto detail = [](int cases, const std::string& fail) {
      return fail.empty() ? std::to_string(cases) + " cases" : "FAILED at " + fail;
    };
    report.add("vanishing below r_lambda" + at, detail(cases_zero, fail_zero), fail_zero.empty());
    report.add("palindromic integer g" + at, detail(cases_pol, fail_pol), fail_pol.empty());
    report.add("nonnegative b-expansion" + at, detail(cases_pol, fail_polpos), fail_polpos.empty());
    report.add("closed form at r = r_lambda" + at, detail(cases_denes, fail_denes), fail_denes.empty());
    if (n >= 2) report.add("D^r route = character route" + at, detail(cases_route, fail_route), fail_route.empty());
    report.add("alpha inversion for a^r" + at, detail(cases_inv, fail_inv), fail_inv.empty());

    int tuples = 0;
    std::string fail_tuple;
    for (int s = 1; s <= 4; ++s) {
      for_each_multiset(parts.size(), s, [&](std::span<const std::size_t> idx) {
        std::vector<Partition> args;
        int total_len = 0;
        for (auto k : idx) {
          args.push_back(parts[k]);
          total_len += parts[k].length();
        }
        ++tuples;
        try {
          const LaurentAlpha a = jcc(args);
          if (a.inverted() != signed_alpha_power((2 - s) * n + total_len) * a && fail_tuple.empty()) {
            fail_tuple = join_partitions(args);
          }
        } catch (const TheoremViolation& e) {
          if (fail_tuple.empty()) fail_tuple = e.what();
        }
      });
    }
    report.add("alpha inversion for tuples s<=4" + at, detail(tuples, fail_tuple), fail_tuple.empty());
  }
  return report;
}

// ---------------------------------------------------------------------------

Rational jackson_closed_form(int n, int s) {
  if (n < 1 || s < 2) throw std::invalid_argument("jackson_formula needs n >= 1 and s >= 2");
  const int order = s - 1;
  // sinh(X) truncated at X^order, then raised to n - 1.
  std::vector<Rational> sinh(static_cast<std::size_t>(order + 1));
  for (int k = 1; k <= order; k += 2) sinh[static_cast<std::size_t>(k)] = Rational(1) / Rational(factorial(static_cast<unsigned>(k)));
  std::vector<Rational> power(static_cast<std::size_t>(order + 1));
  power[0] = 1;
  for (int e = 0; e < n - 1; ++e) {
    std::vector<Rational> next(static_cast<std::size_t>(order + 1));
    for (int i = 0; i <= order; ++i) {
      if (power[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 1; i + j <= order; ++j) next[static_cast<std::size_t>(i + j)] += power[static_cast<std::size_t>(i)] * sinh[static_cast<std::size_t>(j)];
    }
    power = std::move(next);
  }
  Rational two_power = 1;
  for (int i = 0; i < std::abs(n - s); ++i) two_power *= 2;
  if (n - s < 0) two_power = 1 / two_power;
  BigInt n_power;
  mpz_ui_pow_ui(n_power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(s - 1));
  return Rational(factorial(static_cast<unsigned>(s - 1))) / Rational(factorial(static_cast<unsigned>(n))) *
         Rational(n_power) * two_power * power[static_cast<std::size_t>(order)];
}

Rational jackson_formula(int n, int s) {
  const Rational closed = jackson_closed_form(n, s);
  const auto iterates = laplace_beltrami_iterates(n, s - 1);
  const Rational via_d = n * substitute_alpha(iterates.back().coeff(Partition{n}), 1);
  if (via_d != closed) {
    throw TheoremViolation("Jackson formula mismatch at n=" + std::to_string(n) + ", s=" + std::to_string(s) + ": " +
                           via_d.get_str() + " vs " + closed.get_str());
  }
  return via_d;
}

namespace {

// Calls f with every tuple (lambda^1..lambda^s) of partitions of n.
void for_each_tuple(const std::vector<Partition>& parts, int s,
                    const std::function<void(std::span<const Partition>)>& f) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(s), 0);
  std::vector<Partition> args(static_cast<std::size_t>(s), parts.front());
  while (true) {
    for (int k = 0; k < s; ++k) args[static_cast<std::size_t>(k)] = parts[idx[static_cast<std::size_t>(k)]];
    f(args);
    int pos = s - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == parts.size()) idx[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) return;
    ++idx[static_cast<std::size_t>(pos)];
  }
}

}  // namespace

LaurentAlpha aggregate_by_lengths(int n, std::span<const int> lengths) {
  if (lengths.empty()) throw std::invalid_argument("aggregate_by_lengths needs at least one length");
  const auto parts = generate_partitions(n);
  std::vector<std::vector<Partition>> choices;
  for (int p : lengths) {
    if (p < 1 || p > n) throw std::invalid_argument("part counts must lie in [1, n]");
    std::vector<Partition> with_len;
    std::copy_if(parts.begin(), parts.end(), std::back_inserter(with_len),
                 [p](const Partition& l) { return l.length() == p; });
    choices.push_back(std::move(with_len));
  }
  LaurentAlpha sum;
  std::vector<Partition> args(lengths.size());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == choices.size()) {
      sum += jcc(args);
      return;
    }
    for (const auto& l : choices[k]) {
      args[k] = l;
      rec(k + 1);
    }
  };
  rec(0);
  return sum;
}

bool gen_identity_check(int n, int s, std::span<const Rational> sample_x) {
  if (s < 1) throw std::invalid_argument("s must be positive");
  const auto parts = generate_partitions(n);
  // a_{n, p_1..p_s} for every length vector.
  std::map<std::vector<int>, LaurentAlpha> by_lengths;
  for_each_tuple(parts, s, [&](std::span<const Partition> args) {
    std::vector<int> lens;
    for (const auto& l : args) lens.push_back(l.length());
    by_lengths[lens] += jcc(args);
  });
  std::vector<BivarAlphaX> r_polys;
  for (const auto& beta : parts) r_polys.push_back(content_polynomial(beta));

  std::vector<std::size_t> point(static_cast<std::size_t>(s), 0);
  if (sample_x.empty()) return true;
  while (true) {
    LaurentAlpha lhs;
    for (const auto& [lens, coeff] : by_lengths) {
      Rational mono = 1;
      for (int i = 0; i < s; ++i) {
        for (int e = 0; e < lens[static_cast<std::size_t>(i)]; ++e) mono *= sample_x[point[static_cast<std::size_t>(i)]];
      }
      lhs += coeff * LaurentAlpha(mono);
    }
    std::vector<LaurentAlpha> numerators;
    for (const auto& r : r_polys) {
      LaurentAlpha prod = 1;
      for (int i = 0; i < s; ++i) prod *= r.at_x(sample_x[point[static_cast<std::size_t>(i)]]);
      numerators.push_back(std::move(prod));
    }
    const LaurentAlpha rhs = sum_over_hook_norms(n, numerators);
    if (lhs != rhs) {
      std::ostringstream os;
      os << "X-specialization identity fails at n=" << n << ", s=" << s << ": " << lhs.to_string() << " vs "
         << rhs.to_string();
      throw TheoremViolation(os.str());
    }
    int pos = s - 1;
    while (pos >= 0 && point[static_cast<std::size_t>(pos)] + 1 == sample_x.size()) point[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) return true;
    ++point[static_cast<std::size_t>(pos)];
  }
}

// ---------------------------------------------------------------------------

LaurentAlpha hypermap_case_formula(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw std::invalid_argument("hypermap formula needs equal weights");
  const int len = lambda.length();
  const Rational inv_z = Rational(1) / Rational(z(lambda));
  if (mu == lambda) {
    return (LaurentAlpha::alpha() - LaurentAlpha(1)) *
           LaurentAlpha::monomial(inv_z * nstat(conjugate(lambda)), -len);
  }
  std::vector<int> values(lambda.parts().begin(), lambda.parts().end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  auto without = [&](std::vector<int> remove, std::vector<int> add) {
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
    for (int v : remove) parts.erase(std::find(parts.begin(), parts.end(), v));
    parts.insert(parts.end(), add.begin(), add.end());
    return Partition::from_unsorted(std::move(parts));
  };
  Rational total = 0;
  if (mu.length() == len - 1) {
    for (std::size_t a = 0; a < values.size(); ++a) {
      for (std::size_t b = a; b < values.size(); ++b) {
        const int va = values[a];
        const int vb = values[b];
        const int ma = lambda.multiplicity(va);
        if (a == b && ma < 2) continue;
        if (without({va, vb}, {va + vb}) != mu) continue;
        // Pairs of parts with these values, each contributing lambda_i lambda_j.
        const long pairs = a == b ? static_cast<long>(ma) * (ma - 1) / 2
                                  : static_cast<long>(ma) * lambda.multiplicity(vb);
        total += Rational(pairs * va * vb);
      }
    }
    return LaurentAlpha::monomial(total * inv_z, 1 - len);
  }
  if (mu.length() == len + 1) {
    for (int m : values) {
      for (int k = 1; 2 * k <= m; ++k) {
        if (without({m}, {k, m - k}) != mu) continue;
        // Each part equal to m contributes m / 2^{delta_{m, 2k}}.
        total += make_rational(lambda.multiplicity(m) * m, 2 * k == m ? 2 : 1);
      }
    }
    return LaurentAlpha::monomial(total * inv_z, -len);
  }
  return {};
}

LaurentAlpha hypermap_triple(const Partition& lambda, const Partition& mu) {
  const int n = lambda.weight();
  if (mu.weight() != n) throw std::invalid_argument("hypermap_triple needs equal weights");
  if (n < 2) throw std::invalid_argument("hypermap_triple needs n >= 2");
  const PowerVec image = op_D(PowerVec::basis_element(lambda));
  const LaurentAlpha value =
      laurent_div_monomial(image.coeff(mu), Rational(z(lambda)), lambda.length());
  const std::string where = "a_{" + lambda.to_string() + ";" + mu.to_string() + ";rho}";
  const LaurentAlpha cases = hypermap_case_formula(lambda, mu);
  if (cases != value) {
    throw TheoremViolation(where + ": single-D value " + value.to_string() + " differs from case formula " +
                           cases.to_string());
  }
  const LaurentAlpha via_characters = jcc({lambda, mu, Partition::transposition(n)});
  if (via_characters != value) {
    throw TheoremViolation(where + ": single-D value " + value.to_string() + " differs from jcc " +
                           via_characters.to_string());
  }
  return value;
}

MatchingsJackObservation matchings_jack_coef(const Partition& lambda, const Partition& mu, const Partition& nu) {
  const int n = lambda.weight();
  const LaurentAlpha c = jcc({lambda, mu, nu}).shifted(lambda.length()) * LaurentAlpha(Rational(z(lambda)));
  if (!c.is_polynomial()) {
    throw TheoremViolation("c^" + lambda.to_string() + "_{" + mu.to_string() + "," + nu.to_string() +
                           "} is not a polynomial in alpha: " + c.to_string());
  }
  MatchingsJackObservation obs;
  obs.b_coeffs = to_b_variable(c);
  obs.nonnegative_integers = std::all_of(obs.b_coeffs.begin(), obs.b_coeffs.end(),
                                         [](const Rational& q) { return is_integer(q) && q >= 0; });
  obs.degree_bound = n - std::min(mu.length(), nu.length());
  obs.degree_within_bound = static_cast<int>(obs.b_coeffs.size()) <= obs.degree_bound + 1;
  return obs;
}

VerificationReport verify_matchings_conjecture(int n_max) {
  if (n_max > kMaxWeight) throw std::out_of_range("n_max exceeds the maximum weight");
  VerificationReport report;
  for (int n = 1; n <= n_max; ++n) {
    const auto parts = generate_partitions(n);
    long cases = 0;
    std::string fail;
    for (const auto& l : parts) {
      for (std::size_t i = 0; i < parts.size(); ++i) {
        // c^lambda_{mu nu} is symmetric in mu and nu.
        for (std::size_t j = i; j < parts.size(); ++j) {
          ++cases;
          if (!matchings_jack_coef(l, parts[i], parts[j]).consistent() && fail.empty()) {
            fail = l.to_string() + ";" + parts[i].to_string() + ";" + parts[j].to_string();
          }
        }
      }
    }
    report.add("Matchings-Jack b-expansion n=" + std::to_string(n),
               fail.empty() ? std::to_string(cases) + " cases" : "inconsistent at " + fail, fail.empty());
  }
  return report;
}

// ---------------------------------------------------------------------------

BigInt u_power_coefficient(const Partition& target) {
  const int n = target.weight();
  PowerVec v = p_one_power(n);
  for (int r = 0; r < target.reflection_length(); ++r) v = op_U(v);
  const LaurentAlpha c = v.coeff(target);
  if (c.is_zero()) return 0;
  return c.coeff(0).get_num();
}

RecUSides rec_u(int i, int j) {
  if (i < 1 || j < 1) throw std::invalid_argument("rec_u needs i, j >= 1");
  const BigInt lhs = u_power_coefficient(Partition::from_unsorted({i, j}));
  Rational rhs = Rational(binomial(static_cast<unsigned>(i + j), static_cast<unsigned>(i)) *
                          binomial(static_cast<unsigned>(i + j - 2), static_cast<unsigned>(i - 1)));
  rhs *= Rational(u_power_coefficient(Partition{i}) * u_power_coefficient(Partition{j}));
  if (i == j) rhs /= 2;
  return {lhs, rhs};
}

std::vector<LaurentAlpha> t_sequence(int n_max) {
  std::vector<LaurentAlpha> t;
  for (int n = 1; n <= n_max; ++n) {
    const auto iterates = laplace_beltrami_iterates(n, n - 1);
    t.push_back(iterates.back().coeff(Partition{n}).shifted(1) * LaurentAlpha(n));
  }
  return t;
}

bool rec_a_holds(std::span<const LaurentAlpha> t) {
  for (std::size_t n = 2; n <= t.size(); ++n) {
    LaurentAlpha sum;
    for (std::size_t i = 1; i < n; ++i) {
      sum += LaurentAlpha(Rational(binomial(static_cast<unsigned>(n - 2), static_cast<unsigned>(i - 1)))) *
             t[i - 1] * t[n - i - 1];
    }
    sum.scale(make_rational(static_cast<long>(n), 2));
    if (sum != t[n - 1]) return false;
  }
  return true;
}

SeriesPair denes_series(std::span<const Rational> t, int order) {
  SeriesPair out;
  out.g.assign(static_cast<std::size_t>(order + 1), 0);
  for (int n = 1; n <= order && static_cast<std::size_t>(n) <= t.size(); ++n) {
    out.g[static_cast<std::size_t>(n)] = t[static_cast<std::size_t>(n - 1)] / Rational(factorial(static_cast<unsigned>(n - 1)));
  }
  // exp(G) with E' = G' E: k E_k = sum_{j=1}^k j G_j E_{k-j}.
  std::vector<Rational> e(static_cast<std::size_t>(order + 1));
  e[0] = 1;
  for (int k = 1; k <= order; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += j * out.g[static_cast<std::size_t>(j)] * e[static_cast<std::size_t>(k - j)];
    e[static_cast<std::size_t>(k)] = acc / k;
  }
  out.u_exp_g.assign(static_cast<std::size_t>(order + 1), 0);
  for (int k = 1; k <= order; ++k) out.u_exp_g[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k - 1)];
  return out;
}

}  // namespace jackcc
