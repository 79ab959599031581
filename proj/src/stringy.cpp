#include "mckay/stringy.hpp"

#include <algorithm>

namespace mckay {

SncModel::SncModel(int ambient_dim, EPoly total_class, std::vector<Divisor> divisors)
    : ambient_dim_(ambient_dim), total_class_(std::move(total_class)), divisors_(std::move(divisors)) {
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (divisors_[i].label == divisors_[j].label) {
        throw std::invalid_argument("duplicate divisor label '" + divisors_[i].label + "'");
      }
    }
  }
}

void SncModel::add_stratum(StratumKey key, const EPoly& cls) {
  std::sort(key.begin(), key.end());
  if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
    throw std::invalid_argument("stratum index set has a repeated divisor");
  }
  for (auto i : key) {
    if (i >= divisors_.size()) throw std::invalid_argument("stratum refers to divisor index " + std::to_string(i));
  }
  auto& slot = strata_[key];
  slot += cls;
  if (slot.is_zero()) strata_.erase(key);
}

void SncModel::add_stratum(const std::vector<std::string>& labels, const EPoly& cls) {
  StratumKey key;
  key.reserve(labels.size());
  for (const auto& label : labels) key.push_back(index_of(label));
  add_stratum(std::move(key), cls);
}

EPoly SncModel::stratum(const StratumKey& key) const {
  const auto it = strata_.find(key);
  return it == strata_.end() ? EPoly{} : it->second;
}

std::size_t SncModel::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    if (divisors_[i].label == label) return i;
  }
  throw std::invalid_argument("unknown divisor label '" + label + "'");
}

std::vector<Violation> validate_snc(const SncModel& model) {
  std::vector<Violation> out;
  if (model.ambient_dim() < 1) {
    out.push_back({Violation::Kind::Dimension,
                   "ambient dimension must be positive, got " + std::to_string(model.ambient_dim())});
  }
  for (const auto& d : model.divisors()) {
    if (d.multiplicity < 0) {
      out.push_back({Violation::Kind::NegativeMultiplicity,
                     "divisor " + d.label + " has negative multiplicity " + rational_to_string(d.multiplicity)});
    }
  }
  EPoly sum;
  for (const auto& [key, cls] : model.strata()) sum += cls;
  if (sum != model.total_class()) {
    out.push_back({Violation::Kind::Cover,
                   "strata sum " + sum.to_string() + " != total class " + model.total_class().to_string()});
  }
  return out;
}

namespace {

std::string describe(const std::vector<Violation>& violations) {
  std::string out = "invalid SNC model:";
  for (const auto& v : violations) out += " " + v.message + ";";
  return out;
}

void require_valid(const SncModel& model) {
  auto violations = validate_snc(model);
  if (!violations.empty()) throw InvalidModel(std::move(violations));
}

// Counts tuples (n_i >= 1) with sum d_i n_i == target, bucketed by sum n_i.
void enumerate_contacts(const std::vector<Rational>& mults, std::size_t index, const Rational& remaining,
                        std::int64_t contact_sum, std::map<std::int64_t, BigInt>& counts) {
  if (index == mults.size()) {
    if (remaining == 0) counts[contact_sum] += 1;
    return;
  }
  const Rational& d = mults[index];
  Rational rest_min = 0;
  for (std::size_t j = index + 1; j < mults.size(); ++j) rest_min += mults[j];
  for (std::int64_t n = 1; d * n + rest_min <= remaining; ++n) {
    enumerate_contacts(mults, index + 1, remaining - d * n, contact_sum + n, counts);
  }
}

}  // namespace

InvalidModel::InvalidModel(std::vector<Violation> violations)
    : std::invalid_argument(describe(violations)), violations_(std::move(violations)) {}

ERat batyrev_integral(const SncModel& model) {
  require_valid(model);
  const EPoly L = EPoly::lefschetz();
  ERat total;
  for (const auto& [key, cls] : model.strata()) {
    ERat term(cls);
    for (auto i : key) {
      const Rational& d = model.divisors()[i].multiplicity;
      if (d == 0) continue;
      term *= ERat(L - EPoly(1), {d + 1});
    }
    total += term;
  }
  return total;
}

ERat gorenstein_volume(const SncModel& model) { return batyrev_integral(model); }

ERat ord_level_volume(const SncModel& model, std::int64_t n) {
  require_valid(model);
  if (n < 0) throw std::invalid_argument("contact level must be nonnegative");
  const EPoly L = EPoly::lefschetz();
  EPoly total;
  for (const auto& [key, cls] : model.strata()) {
    std::vector<Rational> mults;
    for (auto i : key) {
      if (model.divisors()[i].multiplicity > 0) mults.push_back(model.divisors()[i].multiplicity);
    }
    std::map<std::int64_t, BigInt> counts;
    enumerate_contacts(mults, 0, Rational(n), 0, counts);
    if (counts.empty()) continue;
    EPoly contacts;
    for (const auto& [sum, count] : counts) contacts += EPoly::monomial(-sum, -sum, count);
    total += cls * (L - EPoly(1)).pow(static_cast<unsigned>(mults.size())) * contacts;
  }
  return ERat(total);
}

std::int64_t resummation_level_bound(const SncModel& model, std::int64_t m) {
  const Rational top = model.total_class().is_zero() ? Rational(0) : model.total_class().max_half_degree();
  const Rational bound = model.ambient_dim() * (m + top);
  if (bound <= 0) return 0;
  const BigInt num = boost::multiprecision::numerator(bound);
  const BigInt den = boost::multiprecision::denominator(bound);
  return static_cast<std::int64_t>(((num + den - 1) / den).convert_to<long long>());
}

ERat level_partial_sum(const SncModel& model, std::int64_t max_level) {
  ERat sum;
  for (std::int64_t n = 0; n <= max_level; ++n) {
    sum += ord_level_volume(model, n) * ERat(lefschetz_power(-n));
  }
  return sum;
}

KEquivalenceReport verify_kequivalence(const KPair& pair) {
  KEquivalenceReport report;
  report.first_volume = gorenstein_volume(pair.first);
  report.second_volume = gorenstein_volume(pair.second);
  report.equal = erat_eq(report.first_volume, report.second_volume);
  return report;
}

}  // namespace mckay
