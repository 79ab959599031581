#include "mckay/orbifold.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace mckay {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool is_identity(const GroupElement& g) {
  return std::all_of(g.begin(), g.end(), [](std::int64_t e) { return e == 0; });
}

}  // namespace

AbelianAction::AbelianAction(int dim, std::vector<Generator> generators)
    : dim_(dim), generators_(std::move(generators)) {
  if (dim_ < 1) throw std::invalid_argument("action dimension must be at least 1");
  for (auto& gen : generators_) {
    if (gen.order < 1) throw std::invalid_argument("generator order must be at least 1");
    if (gen.weights.size() != static_cast<std::size_t>(dim_)) {
      throw std::invalid_argument("generator has " + std::to_string(gen.weights.size()) + " weights, expected " +
                                  std::to_string(dim_));
    }
    for (auto& w : gen.weights) w = mod(w, gen.order);
    if (__builtin_mul_overflow(group_order_, gen.order, &group_order_) || group_order_ > kMaxGroupOrder) {
      throw std::invalid_argument("group order exceeds " + std::to_string(kMaxGroupOrder));
    }
  }
}

std::vector<GroupElement> AbelianAction::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(group_order_));
  GroupElement g = identity();
  for (;;) {
    out.push_back(g);
    std::size_t k = generators_.size();
    while (k > 0) {
      --k;
      if (++g[k] < generators_[k].order) break;
      g[k] = 0;
      if (k == 0) return out;
    }
    if (generators_.empty()) return out;
  }
}

GroupElement AbelianAction::inverse(const GroupElement& g) const {
  if (!contains(g)) throw std::out_of_range("group element out of range");
  GroupElement out(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) out[k] = mod(-g[k], generators_[k].order);
  return out;
}

bool AbelianAction::contains(const GroupElement& g) const {
  if (g.size() != generators_.size()) return false;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k] < 0 || g[k] >= generators_[k].order) return false;
  }
  return true;
}

ElementExponents element_exponents(const AbelianAction& action, const GroupElement& g) {
  if (!action.contains(g)) throw std::out_of_range("group element out of range");
  const auto& gens = action.generators();
  std::int64_t order = 1;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::int64_t component = gens[k].order / std::gcd(g[k], gens[k].order);
    order = std::lcm(order, component);
  }
  ElementExponents out{order, std::vector<std::int64_t>(static_cast<std::size_t>(action.dim()))};
  for (int j = 0; j < action.dim(); ++j) {
    std::int64_t a = 0;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      // e_k / l_k * order is integral because l_k / gcd(e_k, l_k) divides order.
      const std::int64_t common = std::gcd(g[k], gens[k].order);
      const std::int64_t scaled = (g[k] / common) * (order / (gens[k].order / common));
      a = mod(a + scaled * gens[k].weights[static_cast<std::size_t>(j)], order);
    }
    out.exponents[static_cast<std::size_t>(j)] = a == 0 ? order : a;
  }
  return out;
}

Rational shift_number(std::int64_t order, std::span<const std::int64_t> exponents) {
  if (order < 1) throw std::invalid_argument("element order must be positive");
  std::int64_t sum = 0;
  for (auto a : exponents) {
    if (a < 1 || a > order) {
      throw std::invalid_argument("exponent " + std::to_string(a) + " outside [1, " + std::to_string(order) + "]");
    }
    sum += a;
  }
  return Rational(static_cast<long long>(exponents.size())) - Rational(sum, order);
}

Rational Sector::age() const {
  std::int64_t sum = 0;
  for (auto a : exponents) sum += a % order;
  return Rational(sum, order);
}

std::vector<Sector> sectors(const AbelianAction& action) {
  std::vector<Sector> out;
  for (auto& g : action.elements()) {
    auto [order, exponents] = element_exponents(action, g);
    Sector s;
    s.order = order;
    s.fixed_dim = static_cast<int>(std::count(exponents.begin(), exponents.end(), order));
    s.shift = shift_number(order, exponents);
    // The coarse space of [(A^d)^g / G] is an affine quotient of A^{fixed_dim}.
    s.coarse_class = ERat(lefschetz_power(s.fixed_dim));
    s.exponents = std::move(exponents);
    s.element = std::move(g);
    out.push_back(std::move(s));
  }
  return out;
}

bool is_gorenstein(const AbelianAction& action) {
  for (const auto& g : action.elements()) {
    const auto e = element_exponents(action, g);
    const std::int64_t sum = std::accumulate(e.exponents.begin(), e.exponents.end(), std::int64_t{0});
    if (sum % e.order != 0) return false;
  }
  return true;
}

bool has_reflections(const AbelianAction& action) {
  for (const auto& g : action.elements()) {
    if (is_identity(g)) continue;
    const auto e = element_exponents(action, g);
    if (std::count(e.exponents.begin(), e.exponents.end(), e.order) == action.dim() - 1) return true;
  }
  return false;
}

std::vector<GroupElement> trivially_acting_elements(const AbelianAction& action) {
  std::vector<GroupElement> out;
  for (const auto& g : action.elements()) {
    if (is_identity(g)) continue;
    const auto e = element_exponents(action, g);
    if (std::count(e.exponents.begin(), e.exponents.end(), e.order) == action.dim()) out.push_back(g);
  }
  return out;
}

void validate_sector_spec(const SectorSpec& spec) {
  for (const auto& s : spec.sectors) {
    if (s.shift < 0) throw std::invalid_argument("sector " + s.label + " has a negative shift");
    if (const auto* table = std::get_if<HodgeTable>(&s.coarse)) {
      for (const auto& [pq, h] : *table) {
        if (h < 0) throw std::invalid_argument("sector " + s.label + " has a negative Hodge number");
      }
    }
  }
}

EPoly hodge_table_epoly(const HodgeTable& table) {
  EPoly out;
  for (const auto& [pq, h] : table) {
    const Rational degree = pq.first + pq.second;
    if (boost::multiprecision::denominator(degree) != 1) {
      throw std::invalid_argument("Hodge table entry with non-integral total degree");
    }
    const bool odd = boost::multiprecision::numerator(degree) % 2 != 0;
    out += EPoly::monomial(pq.first, pq.second, odd ? BigInt(-h) : h);
  }
  return out;
}

ERat orbifold_e(const std::vector<Sector>& sectors) {
  ERat total;
  for (const auto& s : sectors) total += ERat(lefschetz_power(s.shift)) * s.coarse_class;
  return total;
}

ERat orbifold_e(const SectorSpec& spec) {
  validate_sector_spec(spec);
  ERat total;
  for (const auto& s : spec.sectors) {
    const EPoly coarse = std::holds_alternative<EPoly>(s.coarse) ? std::get<EPoly>(s.coarse)
                                                                  : hodge_table_epoly(std::get<HodgeTable>(s.coarse));
    total += ERat(lefschetz_power(s.shift) * coarse);
  }
  return total;
}

namespace {

HodgeTable table_from_epoly(const SectorSpecEntry& s) {
  const auto& poly = std::get<EPoly>(s.coarse);
  HodgeTable table;
  for (const auto& t : poly.terms()) {
    if (t.p != t.q || boost::multiprecision::denominator(t.p) != 1 || t.p < 0 || t.coefficient < 0) {
      throw std::invalid_argument("sector " + s.label + ": E-polynomial " + poly.to_string() +
                                  " does not determine Hodge numbers; supply an explicit table");
    }
    table[{t.p, t.q}] = t.coefficient;
  }
  return table;
}

}  // namespace

OrbifoldHodge orbifold_hodge(const SectorSpec& spec) {
  validate_sector_spec(spec);
  OrbifoldHodge out;
  bool integral_shifts = true;
  for (const auto& s : spec.sectors) {
    const HodgeTable local =
        std::holds_alternative<HodgeTable>(s.coarse) ? std::get<HodgeTable>(s.coarse) : table_from_epoly(s);
    if (boost::multiprecision::denominator(s.shift) != 1) integral_shifts = false;
    for (const auto& [pq, h] : local) {
      if (h == 0) continue;
      out.table[{pq.first + s.shift, pq.second + s.shift}] += h;
    }
  }
  for (const auto& [pq, h] : out.table) out.betti[pq.first + pq.second] += h;
  out.euler_from_e = specialize(orbifold_e(spec), 1, 1);
  if (integral_shifts) {
    BigInt euler = 0;
    for (const auto& [degree, b] : out.betti) {
      if (boost::multiprecision::denominator(degree) != 1) {
        integral_shifts = false;
        break;
      }
      euler += boost::multiprecision::numerator(degree) % 2 == 0 ? b : BigInt(-b);
    }
    if (integral_shifts) {
      out.euler_from_betti = euler;
      out.e_check = Rational(euler) == out.euler_from_e;
    }
  }
  return out;
}

MainTheoremReport verify_main_theorem(const AbelianAction& action, const SncModel& resolution) {
  std::string failed;
  if (!is_gorenstein(action)) failed = "action is not Gorenstein (some element has det != 1)";
  if (has_reflections(action)) failed += std::string(failed.empty() ? "" : "; ") + "action contains a reflection";
  if (!failed.empty()) throw PreconditionError(failed);
  for (const auto& d : resolution.divisors()) {
    if (boost::multiprecision::denominator(d.multiplicity) != 1) {
      throw PreconditionError("divisor " + d.label + " has a non-integral discrepancy");
    }
  }
  if (resolution.ambient_dim() != action.dim()) {
    throw PreconditionError("resolution dimension " + std::to_string(resolution.ambient_dim()) +
                            " differs from action dimension " + std::to_string(action.dim()));
  }
  auto violations = validate_snc(resolution);
  if (!violations.empty()) throw PreconditionError(InvalidModel(std::move(violations)).what());

  MainTheoremReport report;
  report.stringy_side = gorenstein_volume(resolution);
  report.orbifold_side = orbifold_e(sectors(action));
  report.equal = erat_eq(report.stringy_side, report.orbifold_side);
  return report;
}

}  // namespace mckay
