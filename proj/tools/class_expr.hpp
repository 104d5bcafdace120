#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schubfire/bigint.hpp"
#include "schubfire/bundle.hpp"
#include "schubfire/chow.hpp"
#include "schubfire/errors.hpp"
#include "schubfire/partition.hpp"

namespace schubfire::cli {

/// Parsed class expression, e.g. "ctop(sym(2,Ustar))" or "c1^2 - 2*s[1,1]".
///
/// Grammar:
///   class  := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' INT)?
///   atom   := INT | cI | s[INT,...] | ctop(bundle) | chern(INT, bundle)
///           | segre(INT, bundle) | '(' class ')'
///   bundle := bterm (('+' | '-') bterm)*        '-' forms a virtual difference
///   bterm  := Ustar | U | O | O(INT) | trivial(INT) | sym(INT, bundle)
///           | dual(bundle) | twist(bundle, INT) | '(' bundle ')'
/// O(m) is the line bundle with c_1 = m * sigma_1; twist(E, m) is E (x) O(m).
struct ClassNode {
  enum class Op { Integer, Generator, Schubert, Chern, Segre, CTop, Add, Sub, Mul, Neg, Pow };

  Op op = Op::Integer;
  BigInt value;
  int index = 0;
  Partition partition;
  std::optional<BundleExpr> bundle;
  std::vector<std::shared_ptr<const ClassNode>> args;
};

using ClassExpr = std::shared_ptr<const ClassNode>;

/// Throws ParseError with a position hint on malformed input.
ClassExpr parse_class_expr(const std::string& text);

/// Schubert class as a polynomial in c_1..c_k via the dual Jacobi-Trudi
/// (Giambelli) determinant s_lambda = det(e_{lambda'_i - i + j}).
Polynomial giambelli(const Partition& lambda, const UniversalRing& ring);

template <ChernRing R>
typename R::Element evaluate(const ClassExpr& node, const R& ring) {
  using Op = ClassNode::Op;
  switch (node->op) {
    case Op::Integer:
      return ring.one() * node->value;
    case Op::Generator:
      return ring.universal_chern(node->index);
    case Op::Schubert:
      if constexpr (std::is_same_v<R, GrassRing>) {
        return ChowClass::schubert(ring.ctx(), node->partition);
      } else if constexpr (std::is_same_v<R, UniversalRing>) {
        return giambelli(node->partition, ring);
      } else {
        throw ParseError("Schubert classes are not available in this ring");
      }
    case Op::Chern: {
      if (node->index < 0) throw ParseError("negative Chern class index");
      if (node->index > ring.top_degree()) return ring.zero();
      return total_chern(*node->bundle, ring, node->index)[static_cast<std::size_t>(node->index)];
    }
    case Op::Segre: {
      if (node->index < 0) throw ParseError("negative Segre class index");
      if (node->index > ring.top_degree()) return ring.zero();
      return segre(*node->bundle, ring, node->index)[static_cast<std::size_t>(node->index)];
    }
    case Op::CTop:
      if (!node->bundle->is_honest()) {
        throw ParseError("ctop() needs an honest bundle; use chern(i, E) for virtual ones");
      }
      return c_top(*node->bundle, ring);
    case Op::Add:
      return evaluate(node->args[0], ring) + evaluate(node->args[1], ring);
    case Op::Sub:
      return evaluate(node->args[0], ring) - evaluate(node->args[1], ring);
    case Op::Mul:
      return evaluate(node->args[0], ring) * evaluate(node->args[1], ring);
    case Op::Neg:
      return evaluate(node->args[0], ring) * BigInt(-1);
    case Op::Pow: {
      const auto base = evaluate(node->args[0], ring);
      auto out = ring.one();
      for (int i = 0; i < node->index; ++i) out = out * base;
      return out;
    }
  }
  throw std::logic_error("unhandled class expression");
}

}  // namespace schubfire::cli
