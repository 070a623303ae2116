#include "jackcc/exactalg.hpp"

#include <algorithm>
#include <sstream>

namespace jackcc {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    const auto b = t.find_first_not_of(" \t");
    const auto e = t.find_last_not_of(" \t");
    t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  trim(s);
  auto parse_int = [&](std::string part) {
    trim(part);
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (part.size() == start ||
        !std::all_of(part.begin() + static_cast<long>(start), part.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    }
    if (part[0] == '+') part.erase(0, 1);
    return BigInt(part, 10);
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  const BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_int(s.substr(0, slash)), den);
}

std::string to_string(const Rational& q) { return q.get_str(); }

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

// ---------------------------------------------------------------------------
// LaurentAlpha

LaurentAlpha::LaurentAlpha(int min_degree, std::vector<Rational> coeffs)
    : min_degree_(min_degree), coeffs_(std::move(coeffs)) {
  canonicalize();
}

LaurentAlpha::LaurentAlpha(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentAlpha LaurentAlpha::monomial(const Rational& c, int degree) {
  return LaurentAlpha(degree, {c});
}

void LaurentAlpha::canonicalize() {
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const Rational& c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
  min_degree_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) min_degree_ = 0;
}

int LaurentAlpha::max_degree() const {
  if (is_zero()) throw std::domain_error("degree of the zero polynomial");
  return min_degree_ + static_cast<int>(coeffs_.size()) - 1;
}

Rational LaurentAlpha::coeff(int degree) const {
  const long i = static_cast<long>(degree) - min_degree_;
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

bool LaurentAlpha::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), is_integer);
}

LaurentAlpha LaurentAlpha::shifted(int k) const {
  LaurentAlpha r = *this;
  if (!r.is_zero()) r.min_degree_ += k;
  return r;
}

LaurentAlpha LaurentAlpha::inverted() const {
  if (is_zero()) return {};
  std::vector<Rational> rev(coeffs_.rbegin(), coeffs_.rend());
  return LaurentAlpha(-max_degree(), std::move(rev));
}

LaurentAlpha& LaurentAlpha::operator+=(const LaurentAlpha& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(min_degree_, o.min_degree_);
  const int hi = std::max(max_degree(), o.max_degree());
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<std::size_t>(min_degree_ - lo)] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    out[i + static_cast<std::size_t>(o.min_degree_ - lo)] += o.coeffs_[i];
  min_degree_ = lo;
  coeffs_ = std::move(out);
  canonicalize();
  return *this;
}

LaurentAlpha& LaurentAlpha::operator-=(const LaurentAlpha& o) { return *this += -o; }

LaurentAlpha& LaurentAlpha::operator*=(const LaurentAlpha& o) { return *this = *this * o; }

LaurentAlpha& LaurentAlpha::scale(const Rational& c) {
  if (c == 0) return *this = LaurentAlpha();
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentAlpha operator*(const LaurentAlpha& a, const LaurentAlpha& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentAlpha(a.min_degree_ + b.min_degree_, std::move(out));
}

LaurentAlpha operator-(const LaurentAlpha& a) {
  LaurentAlpha r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string LaurentAlpha::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = max_degree(); d >= min_degree_; --d) {
    Rational c = coeff(d);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (d == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "alpha";
    if (d != 1) os << "^" << d;
  }
  return os.str();
}

LaurentAlpha laurent_add(const LaurentAlpha& a, const LaurentAlpha& b) { return a + b; }
LaurentAlpha laurent_mul(const LaurentAlpha& a, const LaurentAlpha& b) { return a * b; }
LaurentAlpha laurent_neg(const LaurentAlpha& a) { return -a; }

LaurentAlpha pow(const LaurentAlpha& a, unsigned e) {
  LaurentAlpha result = 1;
  LaurentAlpha base = a;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

LaurentAlpha laurent_div_monomial(const LaurentAlpha& a, const Rational& c, int k) {
  if (c == 0) throw std::domain_error("division by a zero monomial");
  LaurentAlpha r = a.shifted(-k);
  r.scale(1 / Rational(c));
  return r;
}

Rational substitute_alpha(const LaurentAlpha& a, const Rational& v) {
  if (a.is_zero()) return 0;
  if (v == 0) {
    if (a.min_degree() < 0) throw std::domain_error("alpha = 0 substituted into a negative power");
    return a.coeff(0);
  }
  // Horner over the stored run, then scale by v^min_degree.
  Rational acc = 0;
  const auto& cs = a.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * v + *it;
  Rational scale = 1;
  const Rational base = a.min_degree() >= 0 ? v : Rational(1 / v);
  for (int i = 0; i < std::abs(a.min_degree()); ++i) scale *= base;
  return acc * scale;
}

std::vector<Rational> to_b_variable(const LaurentAlpha& a) {
  if (!a.is_polynomial()) throw std::domain_error("b-expansion of a Laurent polynomial with negative powers");
  if (a.is_zero()) return {};
  const int deg = a.max_degree();
  std::vector<Rational> out(static_cast<std::size_t>(deg + 1));
  for (int k = a.min_degree(); k <= deg; ++k) {
    const Rational c = a.coeff(k);
    if (c == 0) continue;
    for (int j = 0; j <= k; ++j) {
      out[static_cast<std::size_t>(j)] += c * Rational(binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)));
    }
  }
  return out;
}

LaurentAlpha from_b_variable(std::span<const Rational> b_coeffs) {
  const LaurentAlpha b = LaurentAlpha::alpha() - LaurentAlpha(1);
  LaurentAlpha result;
  LaurentAlpha power = 1;
  for (const auto& c : b_coeffs) {
    result += power * LaurentAlpha(c);
    power *= b;
  }
  return result;
}

std::pair<LaurentAlpha, LaurentAlpha> poly_divmod(const LaurentAlpha& num, const LaurentAlpha& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (!num.is_polynomial() || !den.is_polynomial()) {
    throw std::domain_error("poly_divmod requires polynomials");
  }
  if (num.is_zero()) return {LaurentAlpha(), LaurentAlpha()};
  const int dn = den.max_degree();
  int nn = num.max_degree();
  if (nn < dn) return {LaurentAlpha(), num};
  std::vector<Rational> rem(static_cast<std::size_t>(nn + 1));
  for (int i = num.min_degree(); i <= nn; ++i) rem[static_cast<std::size_t>(i)] = num.coeff(i);
  std::vector<Rational> d(static_cast<std::size_t>(dn + 1));
  for (int i = den.min_degree(); i <= dn; ++i) d[static_cast<std::size_t>(i)] = den.coeff(i);
  std::vector<Rational> quot(static_cast<std::size_t>(nn - dn + 1));
  const Rational lead_inv = 1 / d.back();
  for (int k = nn - dn; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + dn)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dn; ++j) rem[static_cast<std::size_t>(k + j)] -= q * d[static_cast<std::size_t>(j)];
  }
  return {LaurentAlpha(0, std::move(quot)), LaurentAlpha(0, std::move(rem))};
}

LaurentAlpha exact_divide(const LaurentAlpha& num, const LaurentAlpha& den, std::string_view context) {
  auto [q, r] = poly_divmod(num, den);
  if (!r.is_zero()) {
    throw TheoremViolation(std::string(context) + ": inexact division, remainder " + r.to_string());
  }
  return q;
}

LaurentAlpha interpolate(std::span<const std::pair<Rational, Rational>> points, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
  const auto m = static_cast<std::size_t>(degree_bound + 1);
  if (points.size() < m) throw std::invalid_argument("not enough interpolation points for the degree bound");
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].first == points[j].first) throw std::invalid_argument("duplicate interpolation abscissa");
    }
  }
  // Newton divided differences on the first m points.
  std::vector<Rational> dd(m);
  for (std::size_t i = 0; i < m; ++i) dd[i] = points[i].second;
  for (std::size_t k = 1; k < m; ++k) {
    for (std::size_t i = m - 1; i >= k; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - k].first);
    }
  }
  LaurentAlpha result = dd[m - 1];
  for (std::size_t k = m - 1; k-- > 0;) {
    result = result * (LaurentAlpha::alpha() - LaurentAlpha(points[k].first)) + LaurentAlpha(dd[k]);
  }
  for (std::size_t i = m; i < points.size(); ++i) {
    if (substitute_alpha(result, points[i].first) != points[i].second) {
      throw std::domain_error("interpolation points inconsistent with degree bound " +
                              std::to_string(degree_bound));
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// BivarAlphaX

void BivarAlphaX::add_term(Key key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivarAlphaX BivarAlphaX::from_alpha(const LaurentAlpha& coeff, int x_degree) {
  if (!coeff.is_polynomial()) throw std::domain_error("BivarAlphaX needs nonnegative alpha powers");
  if (x_degree < 0) throw std::domain_error("BivarAlphaX needs nonnegative X powers");
  BivarAlphaX r;
  if (coeff.is_zero()) return r;
  for (int d = coeff.min_degree(); d <= coeff.max_degree(); ++d) r.add_term({d, x_degree}, coeff.coeff(d));
  return r;
}

BivarAlphaX BivarAlphaX::x_plus(const LaurentAlpha& c) {
  BivarAlphaX r = from_alpha(c);
  r.add_term({0, 1}, 1);
  return r;
}

Rational BivarAlphaX::coeff(int alpha_degree, int x_degree) const {
  auto it = terms_.find({alpha_degree, x_degree});
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentAlpha BivarAlphaX::x_coeff(int x_degree) const {
  LaurentAlpha r;
  for (const auto& [key, c] : terms_) {
    if (key.second == x_degree) r += LaurentAlpha::monomial(c, key.first);
  }
  return r;
}

LaurentAlpha BivarAlphaX::at_x(const Rational& x) const {
  LaurentAlpha r;
  for (const auto& [key, c] : terms_) {
    Rational xp = 1;
    for (int i = 0; i < key.second; ++i) xp *= x;
    r += LaurentAlpha::monomial(c * xp, key.first);
  }
  return r;
}

BivarAlphaX& BivarAlphaX::operator+=(const BivarAlphaX& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

BivarAlphaX operator*(const BivarAlphaX& a, const BivarAlphaX& b) {
  BivarAlphaX r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  }
  return r;
}

std::string BivarAlphaX::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [key, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    const bool bare = key.first == 0 && key.second == 0;
    if (mag != 1 || bare) os << mag.get_str() << (bare ? "" : "*");
    bool need_star = false;
    if (key.first > 0) {
      os << "alpha";
      if (key.first != 1) os << "^" << key.first;
      need_star = true;
    }
    if (key.second > 0) {
      if (need_star) os << "*";
      os << "X";
      if (key.second != 1) os << "^" << key.second;
    }
  }
  return os.str();
}

}  // namespace jackcc
