// Exact arithmetic in the Hodge realization ring.
//
// EPoly is a Laurent polynomial in u, v with big-integer coefficients and
// rational exponents on a common lattice scale N.  The Lefschetz class is
// L = u*v.  ERat divides an EPoly by a product of binomials (L^k - 1), which
// is the only family of denominators needed by the stringy sums.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mckay {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an expression string does not match the grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when a common exponent denominator grows past kMaxLatticeScale.
class ScaleOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Raised when specialization hits a vanishing denominator.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr std::int64_t kMaxLatticeScale = std::int64_t{1} << 24;

std::string rational_to_string(const Rational& r);
Rational parse_rational(std::string_view text);

/// base^exponent for rational exponent; exact roots only.
/// Throws PoleError for 0 raised to a negative power and std::domain_error
/// when the root is not rational.
Rational rational_power(const Rational& base, const Rational& exponent);

struct Term {
  Rational p;
  Rational q;
  BigInt coefficient;
};

class EPoly {
 public:
  /// Exponent pair (p, q) stored as integer multiples of 1/scale().
  using Key = std::pair<std::int64_t, std::int64_t>;
  /// Descending lexicographic order: highest u-exponent first.
  using TermMap = std::map<Key, BigInt, std::greater<Key>>;

  EPoly() = default;
  EPoly(long long constant);  // NOLINT(google-explicit-constructor)
  explicit EPoly(const BigInt& constant);

  static EPoly monomial(const Rational& p, const Rational& q, const BigInt& coefficient = 1);
  static EPoly u() { return monomial(1, 0); }
  static EPoly v() { return monomial(0, 1); }
  static EPoly lefschetz() { return monomial(1, 1); }
  /// Builds from raw scaled terms; zero coefficients are dropped and the scale reduced.
  static EPoly from_scaled(TermMap terms, std::int64_t scale);

  std::int64_t scale() const noexcept { return scale_; }
  const TermMap& scaled_terms() const noexcept { return terms_; }
  std::vector<Term> terms() const;

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// True when every term is a power of L (p == q).
  bool is_lefschetz_polynomial() const;

  /// Largest / smallest (p+q)/2 over terms. Precondition: nonzero.
  Rational max_half_degree() const;
  Rational min_half_degree() const;

  /// Coefficient of u^p v^q (zero if absent).
  BigInt coefficient(const Rational& p, const Rational& q) const;

  /// Same value expressed with exponent scale N (a multiple of scale()).
  TermMap terms_at_scale(std::int64_t scale) const;

  EPoly operator-() const;
  friend EPoly operator+(const EPoly& a, const EPoly& b);
  friend EPoly operator-(const EPoly& a, const EPoly& b);
  friend EPoly operator*(const EPoly& a, const EPoly& b);
  EPoly& operator+=(const EPoly& other) { return *this = *this + other; }
  EPoly& operator-=(const EPoly& other) { return *this = *this - other; }
  EPoly& operator*=(const EPoly& other) { return *this = *this * other; }
  friend bool operator==(const EPoly& a, const EPoly& b) {
    return a.scale_ == b.scale_ && a.terms_ == b.terms_;
  }

  EPoly pow(unsigned exponent) const;

  /// Exact rational value at (u0, v0), monomials read as u0^(p-q) (u0 v0)^q.
  Rational evaluate(const Rational& u0, const Rational& v0) const;

  /// Canonical text, e.g. "L^2 + L", "u^2*v - 3", "L^(1/2)".
  std::string to_string() const;

 private:
  void normalize();

  TermMap terms_;
  std::int64_t scale_ = 1;
};

EPoly lefschetz_power(const Rational& e);

/// L^k - 1.
EPoly lefschetz_binomial(const Rational& k);

/// Exact quotient a / (L^k - 1), or nullopt if the division leaves a remainder.
std::optional<EPoly> divide_by_lefschetz_binomial(const EPoly& a, const Rational& k);

/// Presentation of an EPoly as sign * u^p v^q * prod (L^k_i - 1).
struct BinomialFactorization {
  int sign = 1;
  Rational monomial_p;
  Rational monomial_q;
  std::vector<Rational> factors;
};

/// Succeeds iff the argument lies in the allowed denominator family.
std::optional<BinomialFactorization> factor_into_binomials(const EPoly& a);

class ERat {
 public:
  ERat() = default;
  ERat(EPoly numerator);  // NOLINT(google-explicit-constructor)
  ERat(long long constant) : ERat(EPoly(constant)) {}  // NOLINT(google-explicit-constructor)
  /// numerator / prod (L^k - 1). Every k must be a positive rational.
  ERat(EPoly numerator, std::vector<Rational> denominator_factors);

  const EPoly& numerator() const noexcept { return numerator_; }
  /// Sorted ascending multiset of k, one entry per factor (L^k - 1).
  const std::vector<Rational>& denominator_factors() const noexcept { return factors_; }
  EPoly expanded_denominator() const;

  bool is_zero() const noexcept { return numerator_.is_zero(); }
  bool is_polynomial() const noexcept { return factors_.empty(); }

  ERat operator-() const;
  friend ERat operator+(const ERat& a, const ERat& b);
  friend ERat operator-(const ERat& a, const ERat& b);
  friend ERat operator*(const ERat& a, const ERat& b);
  ERat& operator+=(const ERat& other) { return *this = *this + other; }
  ERat& operator*=(const ERat& other) { return *this = *this * other; }

  /// 1/x; the numerator must factor into the allowed denominator family.
  /// Throws std::domain_error otherwise.
  ERat reciprocal() const;
  ERat pow(long long exponent) const;

  std::string to_string() const;

 private:
  void cancel_common_factors();
  /// Replaces L^k - 1 by L^(k/r) - 1 while the numerator absorbs the cofactor; nullopt when it cancels.
  std::optional<Rational> shrink_factor(Rational k);

  EPoly numerator_;
  std::vector<Rational> factors_;
};

/// Cross-multiplied equality: num(a)*den(b) == num(b)*den(a).
bool erat_eq(const ERat& a, const ERat& b);

ERat erat_divide(const ERat& a, const ERat& b);

/// Finite expansion of an ERat modulo the filtration level m: every monomial
/// with (p+q)/2 < -m is discarded.
class FiltrationSeries {
 public:
  FiltrationSeries(std::int64_t level, EPoly terms);

  std::int64_t level() const noexcept { return level_; }
  const EPoly& terms() const noexcept { return terms_; }
  /// Terms grouped by the L-degree (p+q)/2, highest first.
  std::map<Rational, EPoly, std::greater<Rational>> by_degree() const;

  friend bool operator==(const FiltrationSeries& a, const FiltrationSeries& b) {
    return a.level_ == b.level_ && a.terms_ == b.terms_;
  }
  std::string to_string() const { return terms_.to_string(); }

 private:
  std::int64_t level_;
  EPoly terms_;
};

/// Drops monomials with (p+q)/2 < -level.
EPoly truncate_epoly(const EPoly& x, std::int64_t level);

/// Expands each 1/(L^k - 1) as L^-k + L^-2k + ... and truncates at `level`.
FiltrationSeries truncate_filtration(const ERat& x, std::int64_t level);

/// Exact value at (u0, v0). Throws PoleError if a denominator factor vanishes.
Rational specialize(const ERat& x, const Rational& u0, const Rational& v0);

/// Parses the expression grammar (u, v, L, integers, + - * / ^, parentheses).
ERat parse_erat(std::string_view text);
/// As parse_erat, but the result must have no denominator factors.
EPoly parse_epoly(std::string_view text);

}  // namespace mckay
