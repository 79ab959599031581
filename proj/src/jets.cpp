#include "mckay/jets.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "mckay/expr_parser.hpp"

namespace mckay {

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(std::size_t num_vars, const BigInt& c) {
  Polynomial out(num_vars);
  out.add_term(Exponents(num_vars, 0), c);
  return out;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw std::out_of_range("variable index out of range");
  Exponents e(num_vars, 0);
  e[index] = 1;
  Polynomial out(num_vars);
  out.add_term(e, 1);
  return out;
}

void Polynomial::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < num_vars_; ++i) {
    for (const auto& [e, c] : terms_) {
      if (e[i] > 0) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw std::invalid_argument("polynomial variable counts differ");
  Polynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw std::invalid_argument("polynomial variable counts differ");
  Polynomial out(a.num_vars_);
  Polynomial::Exponents e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(num_vars_, 1);
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

BigInt Polynomial::evaluate(const std::vector<BigInt>& point) const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) {
    BigInt term = c;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] > 0) term *= boost::multiprecision::pow(point[i], e[i]);
    }
    total += term;
  }
  return total;
}

std::uint64_t Polynomial::evaluate_mod(const std::vector<std::uint64_t>& point, std::uint64_t p) const {
  std::uint64_t total = 0;
  for (const auto& [e, c] : terms_) {
    BigInt r = c % p;
    if (r < 0) r += p;
    std::uint64_t term = r.convert_to<std::uint64_t>();
    for (std::size_t i = 0; i < num_vars_ && term != 0; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term = term * point[i] % p;
    }
    total = (total + term) % p;
  }
  return total;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
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

// ---------------------------------------------------------------------------
// PolySystem

namespace {

struct PolynomialAlgebra {
  using Value = Polynomial;
  const std::vector<std::string>& names;

  Value integer(const BigInt& n) { return Polynomial::constant(names.size(), n); }
  Value variable(std::string_view name, std::size_t pos) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return Polynomial::variable(names.size(), i);
    }
    throw ParseError("unknown variable '" + std::string(name) + "'", pos);
  }
  Value add(Value a, Value b) { return a + b; }
  Value sub(Value a, Value b) { return a - b; }
  Value mul(Value a, Value b) { return a * b; }
  Value neg(Value a) { return -a; }
  Value div(Value, Value, std::size_t pos) { throw ParseError("division is not allowed in a polynomial system", pos); }
  Value pow(Value base, const Rational& e, std::size_t pos) {
    if (boost::multiprecision::denominator(e) != 1 || e < 0 || e > 64) {
      throw ParseError("polynomial exponents must be integers in [0, 64]", pos);
    }
    return base.pow(boost::multiprecision::numerator(e).convert_to<unsigned>());
  }
};

}  // namespace

PolySystem PolySystem::parse(std::vector<std::string> vars, const std::vector<std::string>& exprs) {
  if (vars.empty()) throw std::invalid_argument("a polynomial system needs at least one variable");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].empty() || std::find(vars.begin(), vars.begin() + static_cast<std::ptrdiff_t>(i), vars[i]) !=
                               vars.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw std::invalid_argument("variable names must be nonempty and distinct");
    }
  }
  PolySystem out;
  out.vars = std::move(vars);
  PolynomialAlgebra algebra{out.vars};
  for (const auto& e : exprs) out.polys.push_back(ExprParser<PolynomialAlgebra>(e, algebra).parse());
  return out;
}

// ---------------------------------------------------------------------------
// Jet equations

std::vector<std::string> JetSystem::variable_names() const {
  std::vector<std::string> out;
  for (const auto& v : base.vars) {
    for (int j = 0; j <= level; ++j) out.push_back(v + "_" + std::to_string(j));
  }
  return out;
}

namespace {

using Series = std::vector<Polynomial>;

Series series_mul(const Series& a, const Series& b, std::size_t num_vars) {
  Series out(a.size(), Polynomial(num_vars));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) {
      if (!b[j].is_zero()) out[i + j] = out[i + j] + a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

JetSystem jet_equations(const PolySystem& sys, int level) {
  if (level < 0) throw std::invalid_argument("jet level must be nonnegative");
  JetSystem out;
  out.base = sys;
  out.level = level;
  const std::size_t length = static_cast<std::size_t>(level) + 1;
  const std::size_t nv = out.num_vars();

  std::vector<Series> coordinate(sys.num_vars());
  for (std::size_t i = 0; i < sys.num_vars(); ++i) {
    for (std::size_t j = 0; j < length; ++j) coordinate[i].push_back(Polynomial::variable(nv, out.variable_index(i, j)));
  }
  std::vector<std::vector<Series>> powers(sys.num_vars());
  auto power = [&](std::size_t i, std::uint32_t k) -> const Series& {
    auto& cache = powers[i];
    if (cache.empty()) {
      Series one(length, Polynomial(nv));
      one[0] = Polynomial::constant(nv, 1);
      cache.push_back(std::move(one));
    }
    while (cache.size() <= k) cache.push_back(series_mul(cache.back(), coordinate[i], nv));
    return cache[k];
  };

  for (const auto& f : sys.polys) {
    Series total(length, Polynomial(nv));
    for (const auto& [e, c] : f.terms()) {
      Series term(length, Polynomial(nv));
      term[0] = Polynomial::constant(nv, c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] > 0) term = series_mul(term, power(i, e[i]), nv);
      }
      for (std::size_t k = 0; k < length; ++k) total[k] = total[k] + term[k];
    }
    for (auto& eq : total) out.equations.push_back(std::move(eq));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Counting

std::uint64_t saturating_power(std::uint64_t q, std::uint64_t exponent) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(out, q, &out)) return std::numeric_limits<std::uint64_t>::max();
  }
  return out;
}

void require_prime_field(std::uint64_t q) {
  switch (q) {
    case 2:
    case 3:
    case 5:
    case 7:
      return;
    case 4:
    case 8:
    case 9:
      throw std::invalid_argument("q = " + std::to_string(q) + " is a prime power; only prime fields are supported");
    default:
      throw std::invalid_argument("q must be one of 2, 3, 5, 7; got " + std::to_string(q));
  }
}

namespace {

struct CompiledTerm {
  std::uint64_t coefficient;
  std::vector<std::pair<std::size_t, std::uint32_t>> factors;
};

struct CompiledEquation {
  std::vector<CompiledTerm> terms;
};

class Enumerator {
 public:
  Enumerator(const std::vector<Polynomial>& equations, std::size_t num_vars, std::uint64_t q)
      : q_(q), checks_(num_vars) {
    std::vector<bool> constrained(num_vars, false);
    for (const auto& eq : equations) {
      const auto support = eq.support();
      CompiledEquation compiled;
      for (const auto& [e, c] : eq.terms()) {
        BigInt r = c % q;
        if (r < 0) r += q;
        if (r == 0) continue;
        CompiledTerm t{r.convert_to<std::uint64_t>(), {}};
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (e[i] > 0) t.factors.emplace_back(i, e[i]);
        }
        compiled.terms.push_back(std::move(t));
      }
      if (compiled.terms.empty()) continue;
      if (support.empty()) {
        inconsistent_ = true;  // nonzero constant mod q
        continue;
      }
      for (auto i : support) constrained[i] = true;
      checks_[support.back()].push_back(equations_.size());
      equations_.push_back(std::move(compiled));
    }
    for (std::size_t i = 0; i < num_vars; ++i) {
      if (constrained[i]) {
        order_.push_back(i);
      } else {
        ++free_vars_;
      }
    }
  }

  std::uint64_t count(unsigned threads) const {
    if (inconsistent_) return 0;
    const std::uint64_t free_factor = saturating_power(q_, free_vars_);
    if (order_.empty()) return free_factor;
    if (threads <= 1 || q_ < 2) {
      std::vector<std::uint64_t> values(checks_.size(), 0);
      return free_factor * search(values, 0, 0, q_);
    }
    // Partition by the value of the first constrained variable.
    std::atomic<std::uint64_t> total{0};
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::uint64_t>(threads, q_); ++t) {
      pool.emplace_back([&] {
        std::vector<std::uint64_t> values(checks_.size(), 0);
        for (std::uint64_t v = next++; v < q_; v = next++) total += search(values, 0, v, v + 1);
      });
    }
    for (auto& th : pool) th.join();
    return free_factor * total.load();
  }

 private:
  std::uint64_t search(std::vector<std::uint64_t>& values, std::size_t depth, std::uint64_t lo,
                       std::uint64_t hi) const {
    const std::size_t var = order_[depth];
    std::uint64_t found = 0;
    for (std::uint64_t value = lo; value < hi; ++value) {
      values[var] = value;
      if (!satisfied(var, values)) continue;
      found += depth + 1 == order_.size() ? 1 : search(values, depth + 1, 0, q_);
    }
    return found;
  }

  bool satisfied(std::size_t var, const std::vector<std::uint64_t>& values) const {
    for (auto index : checks_[var]) {
      std::uint64_t total = 0;
      for (const auto& t : equations_[index].terms) {
        std::uint64_t term = t.coefficient;
        for (const auto& [i, e] : t.factors) {
          for (std::uint32_t k = 0; k < e; ++k) term = term * values[i] % q_;
        }
        total += term;
      }
      if (total % q_ != 0) return false;
    }
    return true;
  }

  std::uint64_t q_;
  std::vector<CompiledEquation> equations_;
  std::vector<std::vector<std::size_t>> checks_;  // equations completed at each variable
  std::vector<std::size_t> order_;
  std::uint64_t free_vars_ = 0;
  bool inconsistent_ = false;
};

void require_under_cap(std::size_t num_vars, std::uint64_t q, std::uint64_t cap) {
  if (saturating_power(q, num_vars) > cap) {
    throw CapExceeded("search space " + std::to_string(q) + "^" + std::to_string(num_vars) + " exceeds the cap of " +
                      std::to_string(cap) + " points");
  }
}

}  // namespace

std::uint64_t count_solutions(const std::vector<Polynomial>& equations, std::size_t num_vars, std::uint64_t q,
                              const CountOptions& options) {
  require_prime_field(q);
  require_under_cap(num_vars, q, options.max_points);
  const unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  return Enumerator(equations, num_vars, q).count(threads);
}

std::uint64_t count_jets(const PolySystem& sys, int level, std::uint64_t q, const CountOptions& options) {
  require_prime_field(q);
  if (level < 0) throw std::invalid_argument("jet level must be nonnegative");
  require_under_cap(sys.num_vars() * static_cast<std::size_t>(level + 1), q, options.max_points);
  const JetSystem jets = jet_equations(sys, level);
  return count_solutions(jets.equations, jets.num_vars(), q, options);
}

int max_level_under_cap(std::size_t num_vars, std::uint64_t q, std::uint64_t max_points) {
  int level = -1;
  while (saturating_power(q, num_vars * static_cast<std::size_t>(level + 2)) <= max_points) ++level;
  return level;
}

bool BundleReport::all_hold() const {
  return std::all_of(ratio_holds.begin(), ratio_holds.end(), [](bool b) { return b; });
}

int BundleReport::first_failing_level() const {
  for (std::size_t k = 0; k < ratio_holds.size(); ++k) {
    if (!ratio_holds[k]) return static_cast<int>(k);
  }
  return -1;
}

BundleReport check_smooth_bundle(const PolySystem& sys, int dimension, int max_level, std::uint64_t q,
                                 const CountOptions& options) {
  if (dimension < 0) throw std::invalid_argument("dimension must be nonnegative");
  if (max_level < 0) throw std::invalid_argument("max level must be nonnegative");
  BundleReport report;
  report.dimension = dimension;
  report.q = q;
  const std::uint64_t fiber = saturating_power(q, static_cast<std::uint64_t>(dimension));
  for (int n = 0; n <= max_level; ++n) report.counts.push_back(count_jets(sys, n, q, options));
  for (std::size_t k = 0; k + 1 < report.counts.size(); ++k) {
    report.ratio_holds.push_back(report.counts[k + 1] == fiber * report.counts[k]);
  }
  return report;
}

void TwistedJetFamily::validate() const {
  if (dim < 1) throw std::invalid_argument("twisted family dimension must be at least 1");
  if (order < 1) throw std::invalid_argument("twisted family order must be at least 1");
  if (level < 0) throw std::invalid_argument("twisted family level must be nonnegative");
  if (exponents.size() != static_cast<std::size_t>(dim)) throw std::invalid_argument("exponent count differs from dim");
  for (auto a : exponents) {
    if (a < 1 || a > order) throw std::invalid_argument("twisted exponents must lie in [1, order]");
  }
}

std::vector<std::int64_t> TwistedJetFamily::coordinate_exponents(std::size_t i) const {
  std::vector<std::int64_t> out;
  const std::int64_t top = exponents.at(i) + static_cast<std::int64_t>(level) * order;
  for (std::int64_t e = 0; e <= top; ++e) {
    if (e >= exponents[i] && (e - exponents[i]) % order == 0) out.push_back(e);
  }
  return out;
}

std::size_t TwistedJetFamily::parameter_count() const {
  validate();
  std::size_t total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) total += coordinate_exponents(i).size();
  return total;
}

std::uint64_t twisted_jet_count(const TwistedJetFamily& family, std::uint64_t q, const CountOptions& options) {
  require_prime_field(q);
  const std::size_t params = family.parameter_count();
  require_under_cap(params, q, options.max_points);
  // Each parameter r_{i,j} is a free coordinate on affine space.
  return saturating_power(q, params);
}

}  // namespace mckay
