#include "mckay/classes.hpp"

#include <stdexcept>

namespace mckay {

namespace {

int checked_dim(int n) {
  if (n < 0) throw std::invalid_argument("class dimension must be nonnegative, got " + std::to_string(n));
  return n;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string join(const std::vector<ClassExpr>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i].to_string();
  return out;
}

}  // namespace

ClassExpr ClassExpr::affine(int n) { return ClassExpr(Affine{checked_dim(n)}); }
ClassExpr ClassExpr::torus(int n) { return ClassExpr(Torus{checked_dim(n)}); }
ClassExpr ClassExpr::proj(int n) { return ClassExpr(Proj{checked_dim(n)}); }
ClassExpr ClassExpr::product(std::vector<ClassExpr> parts) { return ClassExpr(Product{std::move(parts)}); }
ClassExpr ClassExpr::disjoint_union(std::vector<ClassExpr> parts) {
  return ClassExpr(DisjointUnion{std::move(parts)});
}
ClassExpr ClassExpr::affine_quotient(int n, std::string group) {
  return ClassExpr(AffineQuotient{checked_dim(n), std::move(group)});
}
ClassExpr ClassExpr::custom(std::string label, EPoly epoly) {
  return ClassExpr(Custom{std::move(label), std::move(epoly)});
}

std::string ClassExpr::to_string() const {
  return std::visit(
      Overloaded{
          [](const Point&) -> std::string { return "pt"; },
          [](const Affine& a) -> std::string { return "A^" + std::to_string(a.n); },
          [](const Torus& t) -> std::string { return "Gm^" + std::to_string(t.n); },
          [](const Proj& p) -> std::string { return "P^" + std::to_string(p.n); },
          [](const Product& p) -> std::string { return "(" + join(p.parts, " x ") + ")"; },
          [](const DisjointUnion& d) -> std::string { return "(" + join(d.parts, " + ") + ")"; },
          [](const AffineQuotient& q) -> std::string {
            return "A^" + std::to_string(q.n) + "/" + (q.group.empty() ? "G" : q.group);
          },
          [](const Custom& c) -> std::string { return c.label; },
      },
      node());
}

EPoly hodge_characteristic(const ClassExpr& c) {
  const EPoly L = EPoly::lefschetz();
  return std::visit(
      Overloaded{
          [](const ClassExpr::Point&) { return EPoly(1); },
          [&](const ClassExpr::Affine& a) { return L.pow(static_cast<unsigned>(a.n)); },
          [&](const ClassExpr::Torus& t) { return (L - EPoly(1)).pow(static_cast<unsigned>(t.n)); },
          [&](const ClassExpr::Proj& p) {
            EPoly out;
            for (int i = 0; i <= p.n; ++i) out += L.pow(static_cast<unsigned>(i));
            return out;
          },
          [](const ClassExpr::Product& p) {
            EPoly out(1);
            for (const auto& part : p.parts) out *= hodge_characteristic(part);
            return out;
          },
          [](const ClassExpr::DisjointUnion& d) {
            EPoly out;
            for (const auto& part : d.parts) out += hodge_characteristic(part);
            return out;
          },
          // H^*_c of A^n/G is the G-invariant part of H^*_c(A^n), which is all of it.
          [&](const ClassExpr::AffineQuotient& q) { return L.pow(static_cast<unsigned>(q.n)); },
          [](const ClassExpr::Custom& c) { return c.epoly; },
      },
      c.node());
}

bool scissor_check(const ClassExpr& whole, const ClassExpr& open_part, const ClassExpr& closed_part) {
  return hodge_characteristic(whole) == hodge_characteristic(open_part) + hodge_characteristic(closed_part);
}

}  // namespace mckay
