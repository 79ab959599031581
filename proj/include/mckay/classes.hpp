// Symbolic variety classes and their Hodge characteristics.

#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "mckay/ering.hpp"

namespace mckay {

class ClassExpr {
 public:
  struct Point {};
  struct Affine { int n; };
  struct Torus { int n; };
  struct Proj { int n; };
  struct Product { std::vector<ClassExpr> parts; };
  struct DisjointUnion { std::vector<ClassExpr> parts; };
  /// A^n / G. The group marker is carried for display only.
  struct AffineQuotient { int n; std::string group; };
  struct Custom { std::string label; EPoly epoly; };

  using Node = std::variant<Point, Affine, Torus, Proj, Product, DisjointUnion, AffineQuotient, Custom>;

  static ClassExpr point() { return ClassExpr(Point{}); }
  static ClassExpr affine(int n);
  static ClassExpr torus(int n);
  static ClassExpr proj(int n);
  static ClassExpr product(std::vector<ClassExpr> parts);
  static ClassExpr disjoint_union(std::vector<ClassExpr> parts);
  static ClassExpr affine_quotient(int n, std::string group);
  static ClassExpr custom(std::string label, EPoly epoly);

  const Node& node() const { return *node_; }
  std::string to_string() const;

 private:
  explicit ClassExpr(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

  std::shared_ptr<const Node> node_;
};

EPoly hodge_characteristic(const ClassExpr& c);

/// Additivity of E-polynomials over a decomposition whole = open ⊔ closed.
bool scissor_check(const ClassExpr& whole, const ClassExpr& open_part, const ClassExpr& closed_part);

}  // namespace mckay
