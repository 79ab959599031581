// One line per acceptance criterion; exit status is nonzero if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mckay/io.hpp"
#include "support.hpp"

using namespace mckay;

namespace {

const std::filesystem::path kSource = MCKAY_SOURCE_DIR;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int shell(const std::string& args) {
  const std::string command = std::string(MCKAY_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string quoted(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

std::vector<CatalogueEntry> catalogue() { return load_catalogue(kSource / "catalogue/catalogue.json"); }

/// Catalogue actions plus the shipped non-Gorenstein and product-presented ones.
std::vector<AbelianAction> all_actions() {
  std::vector<AbelianAction> out;
  for (const auto& e : catalogue()) out.push_back(e.action);
  for (const char* f : {"z2_10.json", "z2xz3.json", "z6_15.json", "z3_111.json"})
    out.push_back(action_from_json(read_json((kSource / "data" / f).string())));
  return out;
}

PolySystem system_file(const char* name) { return poly_system_from_json(read_json((kSource / "data" / name).string())); }

Outcome main_theorem_catalogue() {
  Outcome o;
  const auto entries = catalogue();
  std::vector<std::string> names;
  for (const auto& e : entries) {
    names.push_back(e.name);
    const auto report = verify_main_theorem(e.action, e.resolution);
    if (!report.equal) o.fail(e.name + ": stringy " + report.stringy_side.to_string() + " != orbifold " +
                              report.orbifold_side.to_string());
    if (!erat_eq(report.stringy_side, parse_erat(e.expected)))
      o.fail(e.name + ": expected " + e.expected + ", got " + report.stringy_side.to_string());
  }
  const std::vector<std::string> wanted{"A1", "A2", "A3", "A4", "A5", "C3/Z3"};
  if (names != wanted) o.fail("catalogue entries differ from A1..A5, C3/Z3");
  if (shell("verify --catalogue") != 0) o.fail("verify --catalogue did not exit 0");
  o.detail = o.ok ? "6 entries, stringy == orbifold == expected" : o.detail;
  return o;
}

Outcome k_equivalence() {
  Outcome o;
  const auto a1 = snc_from_json(read_json((kSource / "data/a1_resolution.json").string()));
  const auto alt = snc_from_json(read_json((kSource / "data/a1_resolution_alt.json").string()));
  const auto a2 = snc_from_json(read_json((kSource / "data/a2_resolution.json").string()));
  if (!verify_kequivalence({a1, alt}).equal) o.fail("A1 presentations disagree");
  if (verify_kequivalence({a1, a2}).equal) o.fail("A1 and A2 reported equal");
  if (shell("stringy kequiv " + quoted(kSource / "data/a1_resolution.json") + " " +
            quoted(kSource / "data/a1_resolution_alt.json")) != 0)
    o.fail("kequiv A1/A1' did not exit 0");
  if (shell("stringy kequiv " + quoted(kSource / "data/a1_resolution.json") + " " +
            quoted(kSource / "data/a2_resolution.json")) != 1)
    o.fail("kequiv A1/A2 did not exit 1");
  if (o.ok) o.detail = "A1 == A1' ; A1 vs A2 mismatch, exit 1";
  return o;
}

Outcome resummation() {
  Outcome o;
  int checks = 0;
  for (const auto& e : catalogue()) {
    const ERat closed = batyrev_integral(e.resolution);
    for (std::int64_t m = 1; m <= 6; ++m) {
      const auto bound = resummation_level_bound(e.resolution, m);
      if (truncate_filtration(level_partial_sum(e.resolution, bound), m) != truncate_filtration(closed, m))
        o.fail(e.name + " at m = " + std::to_string(m));
      ++checks;
    }
  }
  if (o.ok) o.detail = std::to_string(checks) + " truncations agree";
  return o;
}

Outcome shift_duality() {
  Outcome o;
  std::size_t elements = 0;
  for (const auto& a : all_actions()) {
    bool integral = true;
    for (const auto& s : sectors(a)) {
      ++elements;
      integral = integral && boost::multiprecision::denominator(s.shift) == 1;
      if (s.element == a.identity()) continue;
      const auto inv = element_exponents(a, a.inverse(s.element));
      if (s.shift + shift_number(inv.order, inv.exponents) != a.dim() - s.fixed_dim)
        o.fail("duality fails for an element of order " + std::to_string(s.order));
    }
    if (integral != is_gorenstein(a)) o.fail("Gorenstein flag disagrees with shift integrality");
  }
  if (o.ok) o.detail = std::to_string(elements) + " elements";
  return o;
}

Outcome euler_count() {
  Outcome o;
  for (const auto& a : all_actions()) {
    const Rational e = specialize(orbifold_e(sectors(a)), 1, 1);
    if (e != a.group_order()) o.fail("|G| = " + std::to_string(a.group_order()) + " but e = " + rational_to_string(e));
  }
  if (o.ok) o.detail = "e(1,1) = |G| for every action";
  return o;
}

Outcome bundle_property() {
  Outcome o;
  const std::uint64_t cap = CountOptions{}.max_points;
  std::ostringstream levels;
  struct Smooth {
    const char* file;
    int dim;
  };
  for (const auto& [file, dim] : {Smooth{"affine1.json", 1}, Smooth{"affine2.json", 2}, Smooth{"smooth_surface.json", 2}}) {
    const PolySystem s = system_file(file);
    for (std::uint64_t q : {2, 3, 5}) {
      const int top = max_level_under_cap(s.num_vars(), q, cap);
      const auto report = check_smooth_bundle(s, dim, top, q);
      if (!report.all_hold()) o.fail(std::string(file) + " q=" + std::to_string(q));
      if (std::string(file) == "smooth_surface.json") levels << " q" << q << ":n<=" << top;
    }
  }
  // Oracle-produced counts and failing level for the cone.
  const PolySystem cone = system_file("cone.json");
  const std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> frozen{
      {2, {4, 20, 80, 352, 1408}}, {3, {9, 99, 891, 8505}}, {5, {25, 725, 18125}}};
  for (const auto& [q, counts] : frozen) {
    const auto report = check_smooth_bundle(cone, 2, static_cast<int>(counts.size()) - 1, q);
    if (report.counts != counts) o.fail("cone counts differ from the oracle at q=" + std::to_string(q));
    if (report.first_failing_level() != 0) o.fail("cone failing level is not 0 at q=" + std::to_string(q));
  }
  if (o.ok) o.detail = "smooth ratios hold up to the cap (x - yz" + levels.str() + "); cone fails at level 0";
  return o;
}

Outcome twisted_ratios() {
  Outcome o;
  std::vector<TwistedJetFamily> families{{2, 2, {1, 1}, 0}, {3, 3, {1, 1, 1}, 0}};
  for (std::int64_t l = 2; l <= 6; ++l) families.push_back({2, l, {1, l - 1}, 0});
  int ratios = 0;
  for (auto f : families) {
    for (std::uint64_t q : {2, 3, 5}) {
      const int top = max_level_under_cap(static_cast<std::size_t>(f.dim), q, CountOptions{}.max_points);
      for (int n = 0; n < top; ++n) {
        f.level = n;
        const std::uint64_t c = twisted_jet_count(f, q);
        f.level = n + 1;
        if (twisted_jet_count(f, q) != c * saturating_power(q, static_cast<std::uint64_t>(f.dim)))
          o.fail("ratio fails at level " + std::to_string(n));
        ++ratios;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(ratios) + " level ratios equal q^d";
  return o;
}

Outcome ring_laws() {
  Outcome o;
  mckay::testing::Gen gen(2024);
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    const EPoly a = gen.epoly(), b = gen.epoly(), c = gen.epoly();
    if ((a + b) != (b + a) || (a * b) != (b * a) || ((a + b) + c) != (a + (b + c)) ||
        ((a * b) * c) != (a * (b * c)) || (a * (b + c)) != (a * b + a * c) || !(a + (-a)).is_zero() ||
        (a * EPoly(1)) != a)
      o.fail("ring axiom");
  }
  for (int t = 0; t < trials; ++t) {
    const ERat x = gen.erat(), z = gen.erat();
    ERat y = x;
    if (!x.denominator_factors().empty()) {
      auto f = x.denominator_factors();
      const Rational k = f.back();
      f.back() = 2 * k;
      y = ERat(x.numerator() * (lefschetz_power(k) + EPoly(1)), f);
    }
    if (!erat_eq(x, x) || !erat_eq(x, y) || !erat_eq(y, x) || erat_eq(x, z) != erat_eq(z, x) ||
        !erat_eq(x + z, y + z) || !erat_eq(x * z, y * z))
      o.fail("erat_eq equivalence");
  }
  for (int t = 0; t < trials; ++t) {
    const ERat x = gen.erat(), y = gen.erat();
    const std::int64_t m = gen.integer(-2, 6);
    if (truncate_filtration(x + y, m).terms() != truncate_filtration(x, m).terms() + truncate_filtration(y, m).terms())
      o.fail("truncation additivity");
    // Products: truncate factors deep enough that the discarded tails cannot reach level m.
    auto depth = [](const ERat& r) {
      if (r.numerator().is_zero()) return std::int64_t{0};
      const Rational top = r.numerator().max_half_degree();
      return std::max<std::int64_t>(0, static_cast<std::int64_t>(
          ((boost::multiprecision::numerator(top) + boost::multiprecision::denominator(top) - 1) /
           boost::multiprecision::denominator(top)).convert_to<long long>()));
    };
    const EPoly lhs = truncate_filtration(x * y, m).terms();
    const EPoly rhs = truncate_epoly(
        truncate_filtration(x, m + depth(y)).terms() * truncate_filtration(y, m + depth(x)).terms(), m);
    if (lhs != rhs) o.fail("truncation multiplicativity");
  }
  if (o.ok) o.detail = "3 x " + std::to_string(trials) + " randomized trials";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "main-theorem catalogue", 1.0, main_theorem_catalogue},
      {2, "K-equivalence", 1.0, k_equivalence},
      {3, "Batyrev re-summation", 5.0, resummation},
      {4, "shift-number duality", 1.0, shift_duality},
      {5, "orbifold Euler count", 1.0, euler_count},
      {6, "jet bundle property", 60.0, bundle_property},
      {7, "truncation-fiber counting", 1.0, twisted_ratios},
      {8, "ring-law property suite", 10.0, ring_laws},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && seconds >= c.limit_seconds) o.fail("took longer than the limit");
    failures += !o.ok;
    std::printf("%s [%d] %s (%.3fs < %.0fs): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, seconds, c.limit_seconds,
                o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
