// Twisted sectors of finite abelian diagonal quotient stacks [A^d / G].
//
// G is presented as a product of cyclic groups Z/l_k, generator k acting on
// coordinate j by exp(2 pi i w_kj / l_k).  For an element g of order l the
// eigenvalues are zeta_l^{a_j} with 1 <= a_j <= l (a_j = l marks a fixed
// direction), and its sector has shift number s = d - (1/l) sum_j a_j.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mckay/ering.hpp"
#include "mckay/stringy.hpp"

namespace mckay {

using GroupElement = std::vector<std::int64_t>;

struct Generator {
  std::int64_t order;
  std::vector<std::int64_t> weights;
};

class AbelianAction {
 public:
  static constexpr std::int64_t kMaxGroupOrder = 1'000'000;

  AbelianAction(int dim, std::vector<Generator> generators);

  int dim() const noexcept { return dim_; }
  /// Weights are stored reduced into [0, order).
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  std::int64_t group_order() const noexcept { return group_order_; }

  /// All tuples (e_1..e_r), 0 <= e_k < l_k, in lexicographic order.
  std::vector<GroupElement> elements() const;
  GroupElement identity() const { return GroupElement(generators_.size(), 0); }
  GroupElement inverse(const GroupElement& g) const;
  bool contains(const GroupElement& g) const;

 private:
  int dim_;
  std::vector<Generator> generators_;
  std::int64_t group_order_ = 1;
};

struct ElementExponents {
  std::int64_t order;
  std::vector<std::int64_t> exponents;
};

/// Exact order of g in G and its eigenvalue exponents normalized to [1, l].
/// Throws std::out_of_range for tuples outside the group.
ElementExponents element_exponents(const AbelianAction& action, const GroupElement& g);

/// d - (1/l) sum a_j. Throws std::invalid_argument unless 1 <= a_j <= l.
Rational shift_number(std::int64_t order, std::span<const std::int64_t> exponents);

struct Sector {
  GroupElement element;
  std::int64_t order = 1;
  std::vector<std::int64_t> exponents;
  int fixed_dim = 0;
  Rational shift;
  ERat coarse_class;

  /// Age with exponents normalized to [0, l); derived, for display.
  Rational age() const;
};

std::vector<Sector> sectors(const AbelianAction& action);

bool is_gorenstein(const AbelianAction& action);
bool has_reflections(const AbelianAction& action);
/// Non-identity elements that act as the identity on A^d.
std::vector<GroupElement> trivially_acting_elements(const AbelianAction& action);

/// Hodge numbers h^{p,q} keyed by (p, q); entries are positive.
using HodgeTable = std::map<std::pair<Rational, Rational>, BigInt>;

struct SectorSpecEntry {
  std::string label;
  Rational shift;
  std::variant<EPoly, HodgeTable> coarse;
};

/// User-supplied sector data for examples beyond diagonal abelian actions.
struct SectorSpec {
  std::vector<SectorSpecEntry> sectors;
};

/// Throws std::invalid_argument on negative shifts or Hodge numbers.
void validate_sector_spec(const SectorSpec& spec);

/// sum (-1)^{p+q} h^{p,q} u^p v^q.
EPoly hodge_table_epoly(const HodgeTable& table);

ERat orbifold_e(const std::vector<Sector>& sectors);
ERat orbifold_e(const SectorSpec& spec);

struct OrbifoldHodge {
  HodgeTable table;
  /// b_i keyed by the total degree p + q.
  std::map<Rational, BigInt> betti;
  /// sum (-1)^i b_i; only defined when every shift is an integer.
  std::optional<BigInt> euler_from_betti;
  Rational euler_from_e;
  bool e_check = false;
};

/// Shifted sum h^{p,q}_orb = sum_Y h^{p-s(Y), q-s(Y)}(Y). EPoly sectors must be
/// nonnegative combinations of integral powers of L; anything else is
/// ambiguous and rejected with std::invalid_argument.
OrbifoldHodge orbifold_hodge(const SectorSpec& spec);

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MainTheoremReport {
  ERat stringy_side;
  ERat orbifold_side;
  bool equal = false;
};

/// Compares the Gorenstein volume of a crepant-or-not resolution with the
/// orbifold E-function of the action. Requires a Gorenstein action without
/// reflections, integral discrepancies and a valid model; throws
/// PreconditionError otherwise.
MainTheoremReport verify_main_theorem(const AbelianAction& action, const SncModel& resolution);

}  // namespace mckay
