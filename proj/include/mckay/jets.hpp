// Truncated jet schemes of affine varieties and brute-force point counts.
//
// L_n X for X = V(f_1..f_r) in A^d is cut out by the coefficients of
// t^0..t^n in f_k(sum_j x_{i,j} t^j) mod t^{n+1}.  Counts over F_p are exact
// exhaustive enumerations and serve as oracles for level-wise identities.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mckay/ering.hpp"

namespace mckay {

/// Integer polynomial in a fixed number of variables.
class Polynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}
  static Polynomial constant(std::size_t num_vars, const BigInt& c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::map<Exponents, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Variables with a positive exponent in some term, ascending.
  std::vector<std::size_t> support() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial pow(unsigned exponent) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  BigInt evaluate(const std::vector<BigInt>& point) const;
  std::uint64_t evaluate_mod(const std::vector<std::uint64_t>& point, std::uint64_t p) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Exponents& e, const BigInt& c);

  std::size_t num_vars_;
  std::map<Exponents, BigInt> terms_;
};

struct PolySystem {
  std::vector<std::string> vars;
  std::vector<Polynomial> polys;

  std::size_t num_vars() const noexcept { return vars.size(); }
  /// Parses each expression over the named variables (nonnegative integer
  /// exponents, no division). Throws ParseError.
  static PolySystem parse(std::vector<std::string> vars, const std::vector<std::string>& exprs);
};

struct JetSystem {
  PolySystem base;
  int level = 0;
  /// One equation per (base polynomial, power of t), polynomial-major.
  std::vector<Polynomial> equations;

  std::size_t num_vars() const noexcept { return base.num_vars() * static_cast<std::size_t>(level + 1); }
  /// Index of x_{i,j}: i * (level + 1) + j.
  std::size_t variable_index(std::size_t i, std::size_t j) const { return i * static_cast<std::size_t>(level + 1) + j; }
  std::vector<std::string> variable_names() const;
};

JetSystem jet_equations(const PolySystem& sys, int level);

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CountOptions {
  std::uint64_t max_points = 100'000'000;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// q^exponent, saturating at UINT64_MAX.
std::uint64_t saturating_power(std::uint64_t q, std::uint64_t exponent);

/// Throws std::invalid_argument unless q is a supported prime field size.
void require_prime_field(std::uint64_t q);

/// Number of F_q points of V(equations) in A^num_vars, by exhaustive search
/// with early rejection. Throws CapExceeded if q^num_vars > max_points.
std::uint64_t count_solutions(const std::vector<Polynomial>& equations, std::size_t num_vars, std::uint64_t q,
                              const CountOptions& options = {});

std::uint64_t count_jets(const PolySystem& sys, int level, std::uint64_t q, const CountOptions& options = {});

/// Highest level n with q^{d(n+1)} <= max_points, or -1 if none.
int max_level_under_cap(std::size_t num_vars, std::uint64_t q, std::uint64_t max_points);

struct BundleReport {
  int dimension = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> counts;
  /// ratio_holds[k] is c_{k+1} == q^dimension * c_k.
  std::vector<bool> ratio_holds;

  bool all_hold() const;
  /// Smallest k whose check fails, or -1.
  int first_failing_level() const;
};

BundleReport check_smooth_bundle(const PolySystem& sys, int dimension, int max_level, std::uint64_t q,
                                 const CountOptions& options = {});

/// Series r_0 t^{a_i} + r_1 t^{a_i + l} + ... truncated after n + 1 parameters
/// per coordinate.
struct TwistedJetFamily {
  int dim = 0;
  std::int64_t order = 1;
  std::vector<std::int64_t> exponents;
  int level = 0;

  /// Throws std::invalid_argument on malformed data.
  void validate() const;
  /// t-exponents available to coordinate i: a_i, a_i + l, ..., a_i + n l.
  std::vector<std::int64_t> coordinate_exponents(std::size_t i) const;
  std::size_t parameter_count() const;
};

/// Number of F_q-points of the parameter space of the family.
std::uint64_t twisted_jet_count(const TwistedJetFamily& family, std::uint64_t q, const CountOptions& options = {});

}  // namespace mckay
