#include "jackcc/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jackcc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Partition Partition::transposition(int n) {
  if (n < 2) throw std::invalid_argument("the transposition class needs n >= 2");
  std::vector<int> parts(static_cast<std::size_t>(n - 1), 1);
  parts[0] = 2;
  return Partition(std::move(parts));
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

int parse_positive(std::string_view tok, std::string_view whole) {
  if (tok.empty() || tok.size() > 6 ||
      !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw std::invalid_argument("bad partition syntax: '" + std::string(whole) + "'");
  }
  const int value = std::stoi(std::string(tok));
  if (value == 0) throw std::invalid_argument("partition parts must be positive: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) return {};
  if (s.front() == '[' || s.front() == '(') {
    const char close = s.front() == '[' ? ']' : ')';
    if (s.back() != close) throw std::invalid_argument("unbalanced brackets in '" + std::string(text) + "'");
    std::string inner = s.substr(1, s.size() - 2);
    if (close == ')') return parse_partition(inner);
    // Multiplicity form: tokens "k^m" or "k" separated by whitespace or commas.
    std::vector<int> parts;
    std::string spaced(text.substr(text.find('[') + 1));
    spaced = spaced.substr(0, spaced.rfind(']'));
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    std::istringstream is(spaced);
    std::string tok;
    while (is >> tok) {
      const auto caret = tok.find('^');
      const int value = parse_positive(std::string_view(tok).substr(0, caret), text);
      const int mult = caret == std::string::npos ? 1 : [&] {
        const std::string_view m = std::string_view(tok).substr(caret + 1);
        if (m == "0") return 0;
        return parse_positive(m, text);
      }();
      parts.insert(parts.end(), static_cast<std::size_t>(mult), value);
    }
    return Partition::from_unsorted(std::move(parts));
  }
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto end = comma == std::string::npos ? s.size() : comma;
    parts.push_back(parse_positive(std::string_view(s).substr(start, end - start), text));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    throw std::invalid_argument("partition parts must be weakly decreasing: '" + std::string(text) + "'");
  }
  return Partition(std::move(parts));
}

std::vector<Partition> generate_partitions(int n, int max_weight) {
  if (n < 0) throw std::invalid_argument("negative partition weight");
  if (n > max_weight) {
    throw std::out_of_range("partition weight " + std::to_string(n) + " exceeds the maximum " +
                            std::to_string(max_weight));
  }
  std::vector<Partition> out;
  std::vector<int> current;
  // Depth-first with the largest next part first gives reverse-lex order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> parts(static_cast<std::size_t>(lambda[0]), 0);
  for (int part : lambda.parts()) {
    for (int j = 0; j < part; ++j) ++parts[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(parts));
}

BigInt z(const Partition& lambda) {
  BigInt r = 1;
  for (int i = 1; i <= (lambda.empty() ? 0 : lambda[0]); ++i) {
    const int m = lambda.multiplicity(i);
    if (m == 0) continue;
    BigInt ip;
    mpz_ui_pow_ui(ip.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m));
    r *= ip * factorial(static_cast<unsigned>(m));
  }
  return r;
}

BigInt aut(const Partition& lambda) {
  BigInt r = 1;
  for (int i = 1; i <= (lambda.empty() ? 0 : lambda[0]); ++i) r *= factorial(static_cast<unsigned>(lambda.multiplicity(i)));
  return r;
}

long nstat(const Partition& lambda) {
  long s = 0;
  for (int i = 0; i < lambda.length(); ++i) s += static_cast<long>(i) * lambda[static_cast<std::size_t>(i)];
  return s;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight()) throw std::invalid_argument("dominance between partitions of different weights");
  long sm = 0;
  long sl = 0;
  const int len = std::max(mu.length(), lambda.length());
  for (int i = 0; i < len; ++i) {
    if (i < mu.length()) sm += mu[static_cast<std::size_t>(i)];
    if (i < lambda.length()) sl += lambda[static_cast<std::size_t>(i)];
    if (sl < sm) return false;
  }
  return true;
}

bool dominance_less(const Partition& mu, const Partition& lambda) {
  return mu != lambda && dominance_leq(mu, lambda);
}

std::vector<BoxStats> box_stats(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  std::vector<BoxStats> out;
  out.reserve(static_cast<std::size_t>(lambda.weight()));
  for (int i = 1; i <= lambda.length(); ++i) {
    const int row_len = lambda[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= row_len; ++j) {
      const int col_len = conj[static_cast<std::size_t>(j - 1)];
      out.push_back({i, j, row_len - j, col_len - i, j - 1, i - 1});
    }
  }
  return out;
}

std::pair<LaurentAlpha, LaurentAlpha> hook_products(const Partition& lambda) {
  LaurentAlpha h = 1;
  LaurentAlpha hp = 1;
  for (const auto& s : box_stats(lambda)) {
    h *= LaurentAlpha(0, {Rational(s.leg + 1), Rational(s.arm)});
    hp *= LaurentAlpha(0, {Rational(s.leg), Rational(s.arm + 1)});
  }
  return {h, hp};
}

LaurentAlpha hook_norm(const Partition& lambda) {
  auto [h, hp] = hook_products(lambda);
  return h * hp;
}

LaurentAlpha eigenvalue(const Partition& lambda) {
  return LaurentAlpha(0, {Rational(-nstat(lambda)), Rational(nstat(conjugate(lambda)))});
}

}  // namespace jackcc
