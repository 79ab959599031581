#include "mckay/ering.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <numeric>
#include <sstream>

#include "mckay/expr_parser.hpp"

namespace mckay {

namespace {

using Univariate = std::map<std::int64_t, BigInt>;

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min()) {
    throw ScaleOverflow("exponent does not fit in 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ScaleOverflow("exponent overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw ScaleOverflow("exponent overflow");
  return out;
}

std::int64_t common_scale(std::int64_t a, std::int64_t b) {
  const std::int64_t l = checked_mul(a / std::gcd(a, b), b);
  if (l > kMaxLatticeScale) throw ScaleOverflow("exponent denominator overflow");
  return l;
}

std::int64_t scale_of(const Rational& r) {
  const BigInt den = boost::multiprecision::denominator(r);
  if (den > kMaxLatticeScale) throw ScaleOverflow("exponent denominator overflow");
  return den.convert_to<std::int64_t>();
}

/// r * scale as an exact integer; scale must be a multiple of r's denominator.
std::int64_t scaled(const Rational& r, std::int64_t scale) {
  const Rational s = r * scale;
  return to_int64(boost::multiprecision::numerator(s));
}

BigInt integer_root(const BigInt& x, unsigned n) {
  if (x < 2 || n == 1) return x;
  const unsigned bits = boost::multiprecision::msb(x) / n + 1;
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (bits + 1);
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, n) <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::optional<BigInt> exact_root(const BigInt& x, unsigned n) {
  BigInt r = integer_root(x, n);
  if (boost::multiprecision::pow(r, n) != x) return std::nullopt;
  return r;
}

/// Exact division of a univariate Laurent polynomial by x^k - 1.
std::optional<Univariate> divide_univariate(Univariate h, std::int64_t k) {
  Univariate quotient;
  while (!h.empty()) {
    const auto top = std::prev(h.end());
    const std::int64_t e = top->first;
    const BigInt c = top->second;
    if (e - h.begin()->first < k) return std::nullopt;
    h.erase(top);
    quotient[e - k] += c;
    auto& low = h[e - k];
    low += c;
    if (low == 0) h.erase(e - k);
  }
  return quotient;
}

std::string exponent_to_string(const Rational& e) {
  if (boost::multiprecision::denominator(e) == 1) return rational_to_string(e);
  return "(" + rational_to_string(e) + ")";
}

std::string monomial_to_string(const Rational& p, const Rational& q) {
  if (p == q) {
    if (p == 0) return "";
    if (p == 1) return "L";
    return "L^" + exponent_to_string(p);
  }
  std::string out;
  auto append = [&](const char* var, const Rational& e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += var;
    if (e != 1) out += "^" + exponent_to_string(e);
  };
  append("u", p);
  append("v", q);
  return out;
}

}  // namespace

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) -> BigInt {
    std::size_t i = 0;
    const bool negative = !s.empty() && (s[0] == '-' || s[0] == '+');
    if (negative) i = 1;
    if (i == s.size()) throw std::invalid_argument("malformed rational");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw std::invalid_argument("malformed rational");
    }
    BigInt v(std::string(s.substr(i)));
    return s[0] == '-' ? BigInt(-v) : v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

Rational rational_power(const Rational& base, const Rational& exponent) {
  if (base == 0) {
    if (exponent > 0) return 0;
    if (exponent == 0) return 1;
    throw PoleError("zero raised to a negative power");
  }
  const BigInt root_index = boost::multiprecision::denominator(exponent);
  if (root_index > 64) throw std::domain_error("root index too large for exact specialization");
  const unsigned n = root_index.convert_to<unsigned>();
  Rational root = base;
  if (n > 1) {
    const bool negative = base < 0;
    if (negative && n % 2 == 0) throw std::domain_error("even root of a negative number");
    const Rational magnitude = negative ? Rational(-base) : base;
    const auto num = exact_root(boost::multiprecision::numerator(magnitude), n);
    const auto den = exact_root(boost::multiprecision::denominator(magnitude), n);
    if (!num || !den) {
      throw std::domain_error("specialization point is not a perfect power for exponent " +
                              rational_to_string(exponent));
    }
    root = Rational(*num, *den);
    if (negative) root = -root;
  }
  const BigInt power = boost::multiprecision::numerator(exponent);
  const BigInt magnitude = power < 0 ? BigInt(-power) : power;
  if (magnitude > 1'000'000) throw std::domain_error("exponent too large for exact specialization");
  const unsigned k = magnitude.convert_to<unsigned>();
  Rational result(boost::multiprecision::pow(boost::multiprecision::numerator(root), k),
                  boost::multiprecision::pow(boost::multiprecision::denominator(root), k));
  return power < 0 ? Rational(1 / result) : result;
}

// ---------------------------------------------------------------------------
// EPoly

EPoly::EPoly(long long constant) : EPoly(BigInt(constant)) {}

EPoly::EPoly(const BigInt& constant) {
  if (constant != 0) terms_.emplace(Key{0, 0}, constant);
}

EPoly EPoly::monomial(const Rational& p, const Rational& q, const BigInt& coefficient) {
  const std::int64_t s = common_scale(scale_of(p), scale_of(q));
  TermMap terms;
  terms.emplace(Key{scaled(p, s), scaled(q, s)}, coefficient);
  return from_scaled(std::move(terms), s);
}

EPoly EPoly::from_scaled(TermMap terms, std::int64_t scale) {
  if (scale < 1 || scale > kMaxLatticeScale) throw ScaleOverflow("exponent denominator overflow");
  EPoly out;
  out.terms_ = std::move(terms);
  out.scale_ = scale;
  out.normalize();
  return out;
}

void EPoly::normalize() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  if (terms_.empty()) {
    scale_ = 1;
    return;
  }
  std::int64_t g = scale_;
  for (const auto& [key, coefficient] : terms_) {
    g = std::gcd(g, std::gcd(key.first, key.second));
    if (g == 1) return;
  }
  TermMap reduced;
  for (auto& [key, coefficient] : terms_) {
    reduced.emplace(Key{key.first / g, key.second / g}, std::move(coefficient));
  }
  terms_ = std::move(reduced);
  scale_ /= g;
}

std::vector<Term> EPoly::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [key, coefficient] : terms_) {
    out.push_back({Rational(key.first, scale_), Rational(key.second, scale_), coefficient});
  }
  return out;
}

bool EPoly::is_lefschetz_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.first == kv.first.second; });
}

Rational EPoly::max_half_degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero EPoly");
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (const auto& [key, c] : terms_) best = std::max(best, checked_add(key.first, key.second));
  return Rational(best, 2 * scale_);
}

Rational EPoly::min_half_degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero EPoly");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& [key, c] : terms_) best = std::min(best, checked_add(key.first, key.second));
  return Rational(best, 2 * scale_);
}

BigInt EPoly::coefficient(const Rational& p, const Rational& q) const {
  const Rational sp = p * scale_;
  const Rational sq = q * scale_;
  if (boost::multiprecision::denominator(sp) != 1 || boost::multiprecision::denominator(sq) != 1) return 0;
  const auto it = terms_.find(Key{to_int64(boost::multiprecision::numerator(sp)),
                                  to_int64(boost::multiprecision::numerator(sq))});
  return it == terms_.end() ? BigInt(0) : it->second;
}

EPoly::TermMap EPoly::terms_at_scale(std::int64_t scale) const {
  if (scale % scale_ != 0) throw std::logic_error("target scale is not a multiple of the lattice scale");
  const std::int64_t f = scale / scale_;
  if (f == 1) return terms_;
  TermMap out;
  for (const auto& [key, c] : terms_) out.emplace(Key{checked_mul(key.first, f), checked_mul(key.second, f)}, c);
  return out;
}

EPoly EPoly::operator-() const {
  EPoly out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

EPoly operator+(const EPoly& a, const EPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::int64_t s = common_scale(a.scale_, b.scale_);
  EPoly::TermMap terms = a.terms_at_scale(s);
  for (const auto& [key, c] : b.terms_at_scale(s)) terms[key] += c;
  return EPoly::from_scaled(std::move(terms), s);
}

EPoly operator-(const EPoly& a, const EPoly& b) { return a + (-b); }

EPoly operator*(const EPoly& a, const EPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::int64_t s = common_scale(a.scale_, b.scale_);
  const EPoly::TermMap ta = a.terms_at_scale(s);
  const EPoly::TermMap tb = b.terms_at_scale(s);
  EPoly::TermMap terms;
  for (const auto& [ka, ca] : ta) {
    for (const auto& [kb, cb] : tb) {
      terms[EPoly::Key{checked_add(ka.first, kb.first), checked_add(ka.second, kb.second)}] += ca * cb;
    }
  }
  return EPoly::from_scaled(std::move(terms), s);
}

EPoly EPoly::pow(unsigned exponent) const {
  EPoly result(1);
  EPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational EPoly::evaluate(const Rational& u0, const Rational& v0) const {
  const Rational w = u0 * v0;
  Rational total = 0;
  for (const auto& [key, c] : terms_) {
    const Rational diagonal(key.first - key.second, scale_);
    const Rational q(key.second, scale_);
    total += Rational(c) * rational_power(u0, diagonal) * rational_power(w, q);
  }
  return total;
}

std::string EPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const std::string mono = monomial_to_string(Rational(key.first, scale_), Rational(key.second, scale_));
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.str() + "*" + mono;
    }
  }
  return out;
}

EPoly lefschetz_power(const Rational& e) { return EPoly::monomial(e, e); }

EPoly lefschetz_binomial(const Rational& k) { return lefschetz_power(k) - EPoly(1); }

std::optional<EPoly> divide_by_lefschetz_binomial(const EPoly& a, const Rational& k) {
  if (k <= 0) throw std::domain_error("binomial exponent must be positive");
  if (a.is_zero()) return EPoly{};
  const std::int64_t s = common_scale(a.scale(), scale_of(k));
  const std::int64_t step = scaled(k, s);
  std::map<std::int64_t, Univariate> classes;
  for (const auto& [key, c] : a.terms_at_scale(s)) classes[key.first - key.second][key.second] = c;
  EPoly::TermMap quotient;
  for (auto& [diagonal, poly] : classes) {
    auto q = divide_univariate(std::move(poly), step);
    if (!q) return std::nullopt;
    for (auto& [e, c] : *q) quotient.emplace(EPoly::Key{checked_add(diagonal, e), e}, std::move(c));
  }
  return EPoly::from_scaled(std::move(quotient), s);
}

std::optional<BinomialFactorization> factor_into_binomials(const EPoly& a) {
  if (a.is_zero()) return std::nullopt;
  const std::int64_t s = a.scale();
  const auto& terms = a.scaled_terms();
  const std::int64_t diagonal = terms.begin()->first.first - terms.begin()->first.second;
  Univariate poly;
  for (const auto& [key, c] : terms) {
    if (key.first - key.second != diagonal) return std::nullopt;
    poly[key.second] = c;
  }
  BinomialFactorization out;
  const std::int64_t low = poly.begin()->first;
  out.monomial_p = Rational(diagonal + low, s);
  out.monomial_q = Rational(low, s);
  Univariate shifted;
  for (auto& [e, c] : poly) shifted.emplace(e - low, std::move(c));
  while (shifted.size() > 1) {
    const std::int64_t step = std::next(shifted.begin())->first;
    auto q = divide_univariate(shifted, step);
    if (!q) return std::nullopt;
    out.factors.emplace_back(step, s);
    shifted = std::move(*q);
  }
  const auto& [e, c] = *shifted.begin();
  if (e != 0 || (c != 1 && c != -1)) return std::nullopt;
  out.sign = c == 1 ? 1 : -1;
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

// ---------------------------------------------------------------------------
// ERat

ERat::ERat(EPoly numerator) : numerator_(std::move(numerator)) {}

ERat::ERat(EPoly numerator, std::vector<Rational> denominator_factors)
    : numerator_(std::move(numerator)), factors_(std::move(denominator_factors)) {
  for (const auto& k : factors_) {
    if (k <= 0) throw std::domain_error("denominator factor L^k - 1 requires k > 0, got k = " + rational_to_string(k));
  }
  std::sort(factors_.begin(), factors_.end());
  cancel_common_factors();
}

void ERat::cancel_common_factors() {
  if (numerator_.is_zero()) {
    factors_.clear();
    return;
  }
  std::vector<Rational> kept;
  kept.reserve(factors_.size());
  for (const auto& k : factors_) {
    if (auto q = divide_by_lefschetz_binomial(numerator_, k)) {
      numerator_ = std::move(*q);
    } else {
      if (auto shrunk = shrink_factor(k)) kept.push_back(*shrunk);
    }
  }
  std::sort(kept.begin(), kept.end());
  factors_ = std::move(kept);
}

std::optional<Rational> ERat::shrink_factor(Rational k) {
  // L^k - 1 = (L^(k/r) - 1) * (1 + L^(k/r) + ... + L^((r-1)k/r)).
  for (;;) {
    const BigInt top = boost::multiprecision::numerator(k);
    if (top > 4096) return k;
    bool reduced = false;
    for (long long r = top.convert_to<long long>(); r >= 2 && !reduced; --r) {
      if (top % r != 0) continue;
      const Rational j = k / r;
      if (auto q = divide_by_lefschetz_binomial(numerator_ * lefschetz_binomial(j), k)) {
        numerator_ = std::move(*q);
        k = j;
        reduced = true;
      }
    }
    if (!reduced) return k;
    if (auto q = divide_by_lefschetz_binomial(numerator_, k)) {
      numerator_ = std::move(*q);
      return std::nullopt;
    }
  }
}

EPoly ERat::expanded_denominator() const {
  EPoly out(1);
  for (const auto& k : factors_) out *= lefschetz_binomial(k);
  return out;
}

ERat ERat::operator-() const {
  ERat out = *this;
  out.numerator_ = -out.numerator_;
  return out;
}

namespace {

EPoly product_of_binomials(const std::vector<Rational>& ks) {
  EPoly out(1);
  for (const auto& k : ks) out *= lefschetz_binomial(k);
  return out;
}

std::vector<Rational> multiset_difference(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

ERat operator+(const ERat& a, const ERat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<Rational> common;
  std::set_union(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
                 std::back_inserter(common));
  EPoly numerator = a.numerator_ * product_of_binomials(multiset_difference(common, a.factors_)) +
                    b.numerator_ * product_of_binomials(multiset_difference(common, b.factors_));
  return ERat(std::move(numerator), std::move(common));
}

ERat operator-(const ERat& a, const ERat& b) { return a + (-b); }

ERat operator*(const ERat& a, const ERat& b) {
  std::vector<Rational> factors = a.factors_;
  factors.insert(factors.end(), b.factors_.begin(), b.factors_.end());
  return ERat(a.numerator_ * b.numerator_, std::move(factors));
}

ERat ERat::reciprocal() const {
  const auto f = factor_into_binomials(numerator_);
  if (!f) {
    throw std::domain_error("cannot invert " + numerator_.to_string() +
                            ": not a monomial times a product of (L^k - 1) factors");
  }
  EPoly numerator = EPoly::monomial(-f->monomial_p, -f->monomial_q, f->sign) * product_of_binomials(factors_);
  return ERat(std::move(numerator), f->factors);
}

ERat ERat::pow(long long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  ERat result(1);
  ERat base = *this;
  auto e = static_cast<unsigned long long>(exponent);
  while (e > 0) {
    if (e & 1ULL) result *= base;
    e >>= 1ULL;
    if (e > 0) base *= base;
  }
  return result;
}

std::string ERat::to_string() const {
  if (factors_.empty()) return numerator_.to_string();
  std::string num = numerator_.to_string();
  if (numerator_.size() > 1) num = "(" + num + ")";
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < factors_.size();) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    std::string part = "(" + lefschetz_binomial(factors_[i]).to_string() + ")";
    if (j - i > 1) part += "^" + std::to_string(j - i);
    parts.push_back(std::move(part));
    i = j;
  }
  std::string den;
  for (std::size_t i = 0; i < parts.size(); ++i) den += (i ? "*" : "") + parts[i];
  if (parts.size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

bool erat_eq(const ERat& a, const ERat& b) {
  const auto& fa = a.denominator_factors();
  const auto& fb = b.denominator_factors();
  return a.numerator() * product_of_binomials(multiset_difference(fb, fa)) ==
         b.numerator() * product_of_binomials(multiset_difference(fa, fb));
}

ERat erat_divide(const ERat& a, const ERat& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return a * b.reciprocal();
}

// ---------------------------------------------------------------------------
// Filtration

FiltrationSeries::FiltrationSeries(std::int64_t level, EPoly terms)
    : level_(level), terms_(truncate_epoly(terms, level)) {}

std::map<Rational, EPoly, std::greater<Rational>> FiltrationSeries::by_degree() const {
  std::map<Rational, EPoly, std::greater<Rational>> out;
  for (const auto& t : terms_.terms()) {
    out[(t.p + t.q) / 2] += EPoly::monomial(t.p, t.q, t.coefficient);
  }
  return out;
}

EPoly truncate_epoly(const EPoly& x, std::int64_t level) {
  const std::int64_t s = x.scale();
  const std::int64_t bound = checked_mul(checked_mul(-2, level), s);
  EPoly::TermMap kept;
  for (const auto& [key, c] : x.scaled_terms()) {
    if (checked_add(key.first, key.second) >= bound) kept.emplace(key, c);
  }
  return EPoly::from_scaled(std::move(kept), s);
}

FiltrationSeries truncate_filtration(const ERat& x, std::int64_t level) {
  EPoly series = truncate_epoly(x.numerator(), level);
  for (const auto& k : x.denominator_factors()) {
    if (k <= 0) throw std::domain_error("non-positive factor exponent in filtration expansion");
    if (series.is_zero()) break;
    const Rational reach = (series.max_half_degree() + level) / k;
    const BigInt terms_needed = boost::multiprecision::numerator(reach) / boost::multiprecision::denominator(reach);
    if (reach < 1) {
      series = EPoly{};
      break;
    }
    const std::int64_t count = to_int64(terms_needed);
    EPoly geometric;
    for (std::int64_t j = 1; j <= count; ++j) geometric += lefschetz_power(-k * j);
    series = truncate_epoly(series * geometric, level);
  }
  return FiltrationSeries(level, std::move(series));
}

Rational specialize(const ERat& x, const Rational& u0, const Rational& v0) {
  const Rational w = u0 * v0;
  Rational denominator = 1;
  for (const auto& k : x.denominator_factors()) {
    const Rational value = rational_power(w, k) - 1;
    if (value == 0) {
      throw PoleError("denominator factor " + lefschetz_binomial(k).to_string() + " vanishes at (u, v) = (" +
                      rational_to_string(u0) + ", " + rational_to_string(v0) + ")");
    }
    denominator *= value;
  }
  return x.numerator().evaluate(u0, v0) / denominator;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct ERatAlgebra {
  using Value = ERat;

  static constexpr long long kMaxIntegerPower = 4096;

  Value integer(const BigInt& n) { return ERat(EPoly(n)); }

  Value variable(std::string_view name, std::size_t pos) {
    if (name == "u") return ERat(EPoly::u());
    if (name == "v") return ERat(EPoly::v());
    if (name == "L") return ERat(EPoly::lefschetz());
    throw ParseError("unknown variable '" + std::string(name) + "'", pos);
  }

  Value add(Value a, Value b) { return a + b; }
  Value sub(Value a, Value b) { return a - b; }
  Value mul(Value a, Value b) { return a * b; }
  Value neg(Value a) { return -a; }

  Value div(Value a, Value b, std::size_t pos) {
    try {
      return erat_divide(a, b);
    } catch (const std::domain_error& e) {
      throw ParseError(std::string("invalid denominator: ") + e.what(), pos);
    }
  }

  Value pow(Value base, const Rational& e, std::size_t pos) {
    try {
      if (boost::multiprecision::denominator(e) == 1) {
        const BigInt n = boost::multiprecision::numerator(e);
        if (n > kMaxIntegerPower || n < -kMaxIntegerPower) throw ParseError("exponent too large", pos);
        return base.pow(n.convert_to<long long>());
      }
      if (!base.is_polynomial() || !base.numerator().is_monomial()) {
        throw ParseError("fractional exponent requires a monomial base", pos);
      }
      const Term t = base.numerator().terms().front();
      if (t.coefficient != 1) throw ParseError("fractional exponent requires coefficient 1", pos);
      return ERat(EPoly::monomial(t.p * e, t.q * e));
    } catch (const ScaleOverflow&) {
      throw ParseError("exponent denominator overflow", pos);
    } catch (const std::domain_error& err) {
      throw ParseError(err.what(), pos);
    }
  }
};

}  // namespace

ERat parse_erat(std::string_view text) {
  ERatAlgebra algebra;
  try {
    return ExprParser<ERatAlgebra>(text, algebra).parse();
  } catch (const ScaleOverflow&) {
    throw ParseError("exponent denominator overflow", 0);
  }
}

EPoly parse_epoly(std::string_view text) {
  ERat value = parse_erat(text);
  if (!value.is_polynomial()) throw ParseError("expected a Laurent polynomial, got a fraction", 0);
  return value.numerator();
}

}  // namespace mckay
