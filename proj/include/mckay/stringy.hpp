// Stringy volumes from resolution data.
//
// An SncModel describes a smooth variety Z with an SNC divisor sum d_i E_i:
// the class of Z, the multiplicities d_i, and the classes of the open strata
// E_J° (points lying on exactly the divisors in J).  The motivic integral of
// L^{-ord} over the arc space of Z is then
//
//   sum_J {E_J°} prod_{i in J} (L - 1) / (L^{d_i + 1} - 1).
//
// With d_i the discrepancies of K_{Z/X} this is the Gorenstein volume of X.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mckay/ering.hpp"

namespace mckay {

struct Divisor {
  std::string label;
  Rational multiplicity;
};

/// Sorted divisor indices J.
using StratumKey = std::vector<std::size_t>;

class SncModel {
 public:
  SncModel() = default;
  SncModel(int ambient_dim, EPoly total_class, std::vector<Divisor> divisors);

  int ambient_dim() const noexcept { return ambient_dim_; }
  const EPoly& total_class() const noexcept { return total_class_; }
  const std::vector<Divisor>& divisors() const noexcept { return divisors_; }
  const std::map<StratumKey, EPoly>& strata() const noexcept { return strata_; }

  /// Adds `cls` to the class of E_J°. Repeated keys accumulate, so one
  /// stratum may be given as several pieces. Throws on unknown indices.
  void add_stratum(StratumKey key, const EPoly& cls);
  /// As add_stratum, keyed by divisor labels.
  void add_stratum(const std::vector<std::string>& labels, const EPoly& cls);

  /// Class of E_J°; zero when absent.
  EPoly stratum(const StratumKey& key) const;
  std::size_t index_of(const std::string& label) const;

 private:
  int ambient_dim_ = 0;
  EPoly total_class_;
  std::vector<Divisor> divisors_;
  std::map<StratumKey, EPoly> strata_;
};

struct Violation {
  enum class Kind { Cover, NegativeMultiplicity, Dimension };
  Kind kind;
  std::string message;
};

std::vector<Violation> validate_snc(const SncModel& model);

class InvalidModel : public std::invalid_argument {
 public:
  explicit InvalidModel(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

ERat batyrev_integral(const SncModel& model);

/// The Gorenstein volume when multiplicities are the discrepancies of K_{Z/X}.
ERat gorenstein_volume(const SncModel& model);

/// Volume of the arcs with ord I_E = n:
///   sum_J {E_J°} (L-1)^{|J+|} sum_{n_i >= 1, sum d_i n_i = n} L^{-sum n_i}
/// where J+ are the divisors of J with d_i > 0. Divisors with d_i = 0 carry
/// no contact: their contact orders sum out to 1 and they do not constrain n.
ERat ord_level_volume(const SncModel& model, std::int64_t n);

/// N(m) = d * (m + max degree of the total class), rounded up.
std::int64_t resummation_level_bound(const SncModel& model, std::int64_t m);

/// sum_{n = 0..max_level} ord_level_volume(n) * L^{-n}.
ERat level_partial_sum(const SncModel& model, std::int64_t max_level);

/// Two resolutions expected to share the discrepancy divisor.
struct KPair {
  SncModel first;
  SncModel second;
};

struct KEquivalenceReport {
  ERat first_volume;
  ERat second_volume;
  bool equal = false;
};

KEquivalenceReport verify_kequivalence(const KPair& pair);

}  // namespace mckay
