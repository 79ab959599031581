// Seeded random generators shared by the property tests.

#pragma once

#include <random>
#include <vector>

#include "mckay/ering.hpp"

namespace mckay::testing {

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// Up to four terms, exponents in [-3, 3] with occasional halves.
  EPoly epoly(bool allow_fractional = true) {
    EPoly out;
    const int terms = integer(0, 4);
    const int scale = allow_fractional && integer(0, 3) == 0 ? 2 : 1;
    for (int i = 0; i < terms; ++i) {
      const Rational p(integer(-3 * scale, 3 * scale), scale);
      const Rational q(integer(-3 * scale, 3 * scale), scale);
      out += EPoly::monomial(p, q, integer(-5, 5));
    }
    return out;
  }

  /// Polynomial in L only, integral exponents in [-2, 3].
  EPoly lefschetz_poly() {
    EPoly out;
    const int terms = integer(1, 4);
    for (int i = 0; i < terms; ++i) out += lefschetz_power(integer(-2, 3)) * EPoly(integer(-4, 4));
    return out;
  }

  /// Denominator factors drawn from a shared pool.
  std::vector<Rational> factors() {
    static const std::vector<Rational> pool{Rational(1), Rational(2), Rational(3), Rational(1, 2)};
    std::vector<Rational> out;
    const int n = integer(0, 2);
    for (int i = 0; i < n; ++i) out.push_back(pool[static_cast<std::size_t>(integer(0, 3))]);
    return out;
  }

  ERat erat(bool allow_fractional = true) { return ERat(epoly(allow_fractional), factors()); }

 private:
  std::mt19937 rng_;
};

}  // namespace mckay::testing
