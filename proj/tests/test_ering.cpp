#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mckay/ering.hpp"
#include "support.hpp"

using namespace mckay;
using mckay::testing::Gen;

namespace {

const EPoly L = EPoly::lefschetz();

ERat R(const char* text) { return parse_erat(text); }

}  // namespace

TEST_CASE("parse: L is the Tate monomial u*v") {
  const EPoly x = parse_epoly("L^2 + L");
  CHECK(x.size() == 2);
  CHECK(x.coefficient(2, 2) == 1);
  CHECK(x.coefficient(1, 1) == 1);
  CHECK(x.scale() == 1);
}

TEST_CASE("parse: alias expansion") {
  CHECK(parse_epoly("1 + u*v + (u*v)^2") == parse_epoly("1 + L + L^2"));
}

TEST_CASE("parse: fractional power has lattice scale 2") {
  const EPoly x = parse_epoly("L^(1/2)");
  CHECK(x.scale() == 2);
  REQUIRE(x.is_monomial());
  const Term t = x.terms().front();
  CHECK(t.p == Rational(1, 2));
  CHECK(t.q == Rational(1, 2));
  CHECK(t.coefficient == 1);
}

TEST_CASE("parse: errors carry positions") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_erat(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("expected a parse error for " << text);
    return 0;
  };
  CHECK(position_of("L + x") == 4);
  CHECK(position_of("L^") == 2);
  CHECK(position_of("(L + 1") == 6);
  CHECK(position_of("L $ 2") == 2);
  CHECK(position_of("1/(L + 2)") == 1);
  CHECK_THROWS_AS(parse_erat(""), ParseError);
  CHECK_THROWS_AS(parse_erat("L^(1/0)"), ParseError);
  CHECK_THROWS_AS(parse_erat("(L+1)^(1/2)"), ParseError);
  CHECK_THROWS_AS(parse_epoly("1/(L-1)"), ParseError);
}

TEST_CASE("parse: exponent denominator overflow") {
  CHECK_THROWS_WITH_AS(parse_erat("L^(1/33554432)"), doctest::Contains("overflow"), ParseError);
  CHECK_THROWS_AS(parse_erat("L^(1/4096) * u^(1/4099) * v^(1/4097)"), ParseError);
}

TEST_CASE("printing: canonical order and L^k form") {
  CHECK(parse_epoly("L + L^2").to_string() == "L^2 + L");
  CHECK(parse_epoly("L^3 + L + L^2").to_string() == "L^3 + L^2 + L");
  CHECK(parse_epoly("1 - 2*L").to_string() == "-2*L + 1");
  CHECK(parse_epoly("u^2*v - 3").to_string() == "u^2*v - 3");
  CHECK(parse_epoly("L^-1").to_string() == "L^-1");
  CHECK(parse_epoly("L^(3/2)").to_string() == "L^(3/2)");
  CHECK(parse_epoly("u^(1/2)").to_string() == "u^(1/2)");
  CHECK(EPoly{}.to_string() == "0");
  CHECK(R("1/(L-1)").to_string() == "1/(L - 1)");
  CHECK(R("(L+1)/((L-1)*(L^2-1))").to_string() == "1/(L - 1)^2");
}

TEST_CASE("epoly add/mul/neg examples") {
  CHECK((L - EPoly(1)) + EPoly(1) == L);
  CHECK((L - EPoly(1)) * (L + EPoly(1)) == L * L - EPoly(1));
  CHECK(-(L - EPoly(1)) == EPoly(1) - L);
  CHECK((L - L).is_zero());
  CHECK((L - L).scale() == 1);
  // The scale drops back once fractional terms cancel.
  const EPoly half = lefschetz_power(Rational(1, 2));
  CHECK((L + half - half).scale() == 1);
  CHECK((half * half) == L);
}

TEST_CASE("lefschetz_power examples") {
  CHECK(lefschetz_power(0) == EPoly(1));
  CHECK(lefschetz_power(3) == L * L * L);
  CHECK(lefschetz_power(Rational(1, 2)).scale() == 2);
  CHECK(lefschetz_power(-2) * lefschetz_power(2) == EPoly(1));
}

TEST_CASE("erat_eq examples") {
  CHECK(erat_eq(R("(L^2-1)/(L-1)"), R("L+1")));
  const ERat l(L);
  CHECK(erat_eq(l, l));
  CHECK(erat_eq(R("L^2/L"), l));
  CHECK(erat_eq(ERat(L - EPoly(1), {3}), ERat(L - EPoly(1), {3})));
  CHECK_FALSE(erat_eq(R("1/(L-1)"), R("1/(L^2-1)")));
  CHECK_THROWS_AS(ERat(L, {0}), std::domain_error);
  CHECK_THROWS_AS(ERat(L, {-1}), std::domain_error);
}

TEST_CASE("erat_add/mul examples") {
  CHECK(erat_eq(R("1/(L-1)") + R("1/(L-1)"), R("2/(L-1)")));
  CHECK((R("1/(L-1)") + R("1/(L-1)")).denominator_factors().size() == 1);
  CHECK(erat_eq(R("(L-1)/(L^2-1)") * R("L+1"), ERat(1)));
  const ERat a = R("(L^3 + 2)/(L^2-1)");
  CHECK(erat_eq(a + ERat(0), a));
  // Exact numerator divisibility cancels the factor.
  const ERat c = ERat(L * L - EPoly(1), {2});
  CHECK(c.is_polynomial());
  CHECK(c.numerator() == EPoly(1));
}

TEST_CASE("reciprocal and factorization into binomials") {
  const auto f = factor_into_binomials(parse_epoly("-u^2*v*(L-1)*(L^3-1)"));
  REQUIRE(f.has_value());
  CHECK(f->sign == -1);
  CHECK(f->monomial_p == 2);
  CHECK(f->monomial_q == 1);
  CHECK(f->factors == std::vector<Rational>{1, 3});
  CHECK_FALSE(factor_into_binomials(parse_epoly("L + 2")).has_value());
  CHECK_FALSE(factor_into_binomials(parse_epoly("L^2 + L + 1")).has_value());
  CHECK(factor_into_binomials(parse_epoly("(L^(1/2) - 1)^2")).has_value());
  CHECK(erat_eq(R("(L-1)/(L^3-1)").reciprocal() * R("(L-1)/(L^3-1)"), ERat(1)));
  CHECK_THROWS_AS(ERat(L + EPoly(2)).reciprocal(), std::domain_error);
}

TEST_CASE("truncate_filtration examples") {
  const auto s = truncate_filtration(R("1/(L-1)"), 3);
  CHECK(s.to_string() == "L^-1 + L^-2 + L^-3");
  CHECK(s.level() == 3);
  for (int m = -2; m <= 5; ++m) CHECK(truncate_filtration(ERat(L * L), m).terms() == L * L);
  CHECK(truncate_filtration(ERat(L * L), -3).terms().is_zero());
  CHECK(truncate_filtration(R("1/(L-1)"), 0).terms().is_zero());
  const auto grouped = truncate_filtration(R("(u + v)/(L-1)"), 2).by_degree();
  CHECK(grouped.size() == 2);
}

TEST_CASE("truncate_filtration: (L-1)/(L^2-1) against the series of 1/(L+1)") {
  const ERat x = R("(L-1)/(L^2-1)");
  // Independent expansion: 1/(L+1) = L^-1 - L^-2 + L^-3 - ...
  for (int m = -1; m <= 12; ++m) {
    EPoly expected;
    for (int j = 1; j <= m; ++j) expected += lefschetz_power(-j) * EPoly(j % 2 == 1 ? 1 : -1);
    CHECK(truncate_filtration(x, m).terms() == expected);
  }
  CHECK(erat_eq(x * R("L+1"), ERat(1)));
}

TEST_CASE("truncate_filtration with fractional factor exponents") {
  const auto s = truncate_filtration(ERat(EPoly(1), {Rational(1, 2)}), 2);
  CHECK(s.to_string() == "L^(-1/2) + L^-1 + L^(-3/2) + L^-2");
}

TEST_CASE("specialize examples") {
  CHECK(specialize(R("1 + L + L^2"), 1, 1) == 3);
  CHECK(specialize(R("L - 1"), 1, 1) == 0);
  CHECK(specialize(R("(L-1)/(L^2-1)"), 2, 2) == Rational(1, 5));
  CHECK(specialize(R("u^2*v^-1"), 3, 2) == Rational(9, 2));
  CHECK(specialize(R("L^(1/2)"), 2, 2) == 2);
  CHECK(specialize(R("u^(1/2)*v^(-1/2)"), 4, 1) == 2);
  CHECK_THROWS_AS(specialize(R("1/(L-1)"), 1, 1), PoleError);
  CHECK_THROWS_AS(specialize(R("1/(L^2-1)"), -1, 1), PoleError);
  CHECK_THROWS_AS(specialize(R("L^(1/2)"), 2, 1), std::domain_error);
  CHECK_THROWS_AS(specialize(R("L^-1"), 0, 1), PoleError);
}

TEST_CASE("property: parse(print(x)) == x") {
  Gen gen(11);
  for (int trial = 0; trial < 500; ++trial) {
    const EPoly x = gen.epoly();
    CHECK(parse_epoly(x.to_string()) == x);
    const ERat r = gen.erat();
    CHECK(erat_eq(parse_erat(r.to_string()), r));
  }
}

TEST_CASE("property: commutative ring axioms") {
  Gen gen(7);
  const EPoly one(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const EPoly a = gen.epoly();
    const EPoly b = gen.epoly();
    const EPoly c = gen.epoly();
    REQUIRE((a + b) == (b + a));
    REQUIRE((a * b) == (b * a));
    REQUIRE(((a + b) + c) == (a + (b + c)));
    REQUIRE(((a * b) * c) == (a * (b * c)));
    REQUIRE((a * (b + c)) == (a * b + a * c));
    REQUIRE((a * one) == a);
    REQUIRE((a + EPoly{}) == a);
    REQUIRE((a + (-a)).is_zero());
    const EPoly mixed = a * b + c;
    for (const auto& [key, coeff] : mixed.scaled_terms()) REQUIRE(coeff != 0);
  }
}

TEST_CASE("property: erat_eq is an equivalence compatible with + and *") {
  Gen gen(3);
  // Replace one factor (L^k - 1) by (L^2k - 1) and the numerator by N (L^k + 1).
  auto represent = [&](const ERat& x) {
    if (x.denominator_factors().empty()) return x;
    auto factors = x.denominator_factors();
    const Rational k = factors[static_cast<std::size_t>(gen.integer(0, static_cast<int>(factors.size()) - 1))];
    factors.erase(std::find(factors.begin(), factors.end(), k));
    factors.push_back(2 * k);
    return ERat(x.numerator() * (lefschetz_power(k) + EPoly(1)), factors);
  };
  int rewritten = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const ERat a = gen.erat();
    const ERat b = represent(a);
    const ERat c = represent(b);
    const ERat z = gen.erat();
    if (!a.denominator_factors().empty()) ++rewritten;
    REQUIRE(erat_eq(a, a));
    REQUIRE(erat_eq(a, b) == erat_eq(b, a));
    REQUIRE(erat_eq(a, b));
    REQUIRE(erat_eq(b, c));
    REQUIRE(erat_eq(a, c));
    REQUIRE(erat_eq(a + z, b + z));
    REQUIRE(erat_eq(a * z, c * z));
    // Unrelated random pairs agree with a direct cross-multiplication.
    REQUIRE(erat_eq(a, z) == (a.numerator() * z.expanded_denominator() == z.numerator() * a.expanded_denominator()));
  }
  CHECK(rewritten > 300);
}

TEST_CASE("property: truncation is multiplicative up to the degree bound") {
  Gen gen(5);
  auto bound = [](const ERat& x) -> std::int64_t {
    if (x.is_zero()) return 0;
    const Rational top = x.numerator().max_half_degree();
    const BigInt n = boost::multiprecision::numerator(top);
    const BigInt d = boost::multiprecision::denominator(top);
    BigInt ceil = n >= 0 ? BigInt((n + d - 1) / d) : BigInt(n / d);
    return std::max<std::int64_t>(0, ceil.convert_to<std::int64_t>());
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const ERat x = gen.erat();
    const ERat y = gen.erat();
    const std::int64_t m = gen.integer(-2, 5);
    const EPoly lhs = truncate_filtration(x * y, m).terms();
    const EPoly rhs =
        truncate_epoly(truncate_filtration(x, m + bound(y)).terms() * truncate_filtration(y, m + bound(x)).terms(), m);
    REQUIRE(lhs == rhs);
    REQUIRE(truncate_filtration(x + y, m).terms() ==
            truncate_filtration(x, m).terms() + truncate_filtration(y, m).terms());
  }
}

TEST_CASE("property: specialize is a ring homomorphism away from poles") {
  Gen gen(9);
  const std::vector<Rational> points{Rational(1, 4), Rational(4), Rational(9), Rational(25, 9), Rational(16)};
  int evaluated = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const ERat a = gen.erat();
    const ERat b = gen.erat();
    const Rational u0 = points[static_cast<std::size_t>(gen.integer(0, 4))];
    const Rational v0 = points[static_cast<std::size_t>(gen.integer(0, 4))];
    if (u0 * v0 == 1) continue;
    REQUIRE(specialize(a * b, u0, v0) == specialize(a, u0, v0) * specialize(b, u0, v0));
    REQUIRE(specialize(a + b, u0, v0) == specialize(a, u0, v0) + specialize(b, u0, v0));
    ++evaluated;
  }
  CHECK(evaluated > 800);
}
