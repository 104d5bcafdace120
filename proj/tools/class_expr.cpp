#include "class_expr.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace schubfire::cli {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  ClassExpr parse() {
    ClassExpr out = parse_class();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return text_.substr(start, pos_ - start);
  }

  int small_int() {
    const std::string d = digits();
    if (d.size() > 6) fail("integer too large");
    return std::stoi(d);
  }

  int signed_small_int() {
    const bool negative = accept('-');
    const int v = small_int();
    return negative ? -v : v;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  static ClassExpr binary(ClassNode::Op op, ClassExpr a, ClassExpr b) {
    auto node = std::make_shared<ClassNode>();
    node->op = op;
    node->args = {std::move(a), std::move(b)};
    return node;
  }

  ClassExpr parse_class() {
    ClassExpr left = parse_term();
    while (true) {
      if (accept('+')) {
        left = binary(ClassNode::Op::Add, left, parse_term());
      } else if (accept('-')) {
        left = binary(ClassNode::Op::Sub, left, parse_term());
      } else {
        return left;
      }
    }
  }

  ClassExpr parse_term() {
    ClassExpr left = parse_unary();
    while (accept('*')) left = binary(ClassNode::Op::Mul, left, parse_unary());
    return left;
  }

  ClassExpr parse_unary() {
    if (accept('-')) {
      auto node = std::make_shared<ClassNode>();
      node->op = ClassNode::Op::Neg;
      node->args = {parse_unary()};
      return node;
    }
    ClassExpr base = parse_atom();
    if (accept('^')) {
      auto node = std::make_shared<ClassNode>();
      node->op = ClassNode::Op::Pow;
      node->index = small_int();
      node->args = {std::move(base)};
      return node;
    }
    return base;
  }

  ClassExpr parse_atom() {
    auto node = std::make_shared<ClassNode>();
    if (accept('(')) {
      ClassExpr inner = parse_class();
      expect(')');
      return inner;
    }
    if (peek_digit()) {
      node->op = ClassNode::Op::Integer;
      node->value = parse_decimal(digits());
      return node;
    }
    const std::string name = identifier();
    if (name.empty()) fail("expected a class expression");
    if (name == "c") {
      node->op = ClassNode::Op::Generator;
      node->index = small_int();
      return node;
    }
    if (name == "s") {
      expect('[');
      std::vector<int> parts;
      if (!accept(']')) {
        do {
          parts.push_back(small_int());
        } while (accept(','));
        expect(']');
      }
      if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
        fail("Schubert index must be weakly decreasing");
      }
      node->op = ClassNode::Op::Schubert;
      node->partition = Partition(parts);
      return node;
    }
    if (name == "ctop") {
      expect('(');
      node->op = ClassNode::Op::CTop;
      node->bundle = parse_bundle();
      expect(')');
      return node;
    }
    if (name == "chern" || name == "segre") {
      expect('(');
      node->op = name == "chern" ? ClassNode::Op::Chern : ClassNode::Op::Segre;
      node->index = small_int();
      expect(',');
      node->bundle = parse_bundle();
      expect(')');
      return node;
    }
    fail("unknown name '" + name + "'");
  }

  BundleExpr parse_bundle() {
    std::vector<BundleExpr> plus{parse_bundle_term()};
    std::vector<BundleExpr> minus;
    while (true) {
      if (accept('+')) {
        plus.push_back(parse_bundle_term());
      } else if (accept('-')) {
        minus.push_back(parse_bundle_term());
      } else {
        break;
      }
    }
    BundleExpr positive = BundleExpr::sum(std::move(plus));
    if (minus.empty()) return positive;
    return BundleExpr::virtual_diff(std::move(positive), BundleExpr::sum(std::move(minus)));
  }

  BundleExpr parse_bundle_term() {
    if (accept('(')) {
      BundleExpr inner = parse_bundle();
      expect(')');
      return inner;
    }
    const std::string name = identifier();
    if (name == "Ustar") return BundleExpr::universal_dual();
    if (name == "U") return BundleExpr::dual(BundleExpr::universal_dual());
    if (name == "O") {
      long m = 0;
      if (accept('(')) {
        m = signed_small_int();
        expect(')');
      }
      return BundleExpr::line(LineClass{0, m});
    }
    if (name == "trivial") {
      expect('(');
      const int rank = small_int();
      expect(')');
      return BundleExpr::trivial(rank);
    }
    if (name == "sym") {
      expect('(');
      const int degree = small_int();
      if (degree < 1) fail("sym degree must be positive");
      expect(',');
      BundleExpr child = parse_bundle();
      expect(')');
      if (!child.is_honest()) fail("sym() of a virtual bundle");
      return BundleExpr::sym(degree, std::move(child));
    }
    if (name == "dual") {
      expect('(');
      BundleExpr child = parse_bundle();
      expect(')');
      return BundleExpr::dual(std::move(child));
    }
    if (name == "twist") {
      expect('(');
      BundleExpr child = parse_bundle();
      expect(',');
      const long m = signed_small_int();
      expect(')');
      if (!child.is_honest()) fail("twist() of a virtual bundle");
      return BundleExpr::twist(std::move(child), LineClass{0, m});
    }
    fail(name.empty() ? "expected a bundle" : "unknown bundle '" + name + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

ClassExpr parse_class_expr(const std::string& text) { return Parser(text).parse(); }

Polynomial giambelli(const Partition& lambda, const UniversalRing& ring) {
  const Partition conj = conjugate(lambda);
  const int size = conj.length();
  if (size == 0) return ring.one();
  std::vector<int> perm(static_cast<std::size_t>(size));
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial out = ring.zero();
  do {
    int inversions = 0;
    for (int i = 0; i < size; ++i) {
      for (int j = i + 1; j < size; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    }
    Polynomial term = ring.one();
    for (int i = 0; i < size && !term.is_zero(); ++i) {
      const int idx = conj[static_cast<std::size_t>(i)] - i + perm[static_cast<std::size_t>(i)];
      if (idx < 0) {
        term = ring.zero();
      } else {
        term = term * ring.universal_chern(idx);
      }
    }
    if (inversions % 2) term *= BigInt(-1);
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace schubfire::cli
