#pragma once

#include <algorithm>
#include <concepts>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "schubfire/bigint.hpp"
#include "schubfire/chow.hpp"
#include "schubfire/polynomial.hpp"

namespace schubfire {

/// A degree-one class zeta_coeff * zeta + hyperplane_coeff * sigma_1.
///
/// On a Grassmannian only the hyperplane part may be nonzero; on a projective
/// bundle zeta = c_1(O(1)). These two generators span every degree-one class
/// on either space, so this is the full range of line twists.
struct LineClass {
  long zeta = 0;
  long hyperplane = 0;

  static LineClass tautological() { return {-1, 0}; }  // c_1(O(-1)) = -zeta
  bool is_zero() const { return zeta == 0 && hyperplane == 0; }
  friend bool operator==(const LineClass&, const LineClass&) = default;
};

/// Formal vector-bundle expression built from U* by symmetric powers, duals,
/// line twists, direct sums and virtual differences.
class BundleExpr {
 public:
  enum class Kind { UniversalDual, Trivial, Sym, Dual, Twist, Sum, VirtualDiff, Pullback };

  static BundleExpr universal_dual();
  static BundleExpr trivial(int rank);
  static BundleExpr sym(int degree, BundleExpr child);
  static BundleExpr dual(BundleExpr child);
  static BundleExpr twist(BundleExpr child, LineClass t);
  /// The line bundle with first Chern class t.
  static BundleExpr line(LineClass t) { return twist(trivial(1), t); }
  static BundleExpr sum(std::vector<BundleExpr> summands);
  static BundleExpr virtual_diff(BundleExpr plus, BundleExpr minus);
  /// Marks a subexpression living on the base of a projective bundle, so it is
  /// evaluated there once and pulled back.
  static BundleExpr pullback(BundleExpr child);

  Kind kind() const { return node_->kind; }
  /// Sym degree or Trivial rank.
  int parameter() const { return node_->parameter; }
  const LineClass& twist_class() const { return node_->line; }
  std::span<const BundleExpr> children() const { return node_->children; }

  /// False if a virtual difference occurs anywhere in the tree.
  bool is_honest() const;
  /// Rank when U* has rank k; virtual differences may give negative values.
  long rank(int k) const;
  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    int parameter = 0;
    LineClass line;
    std::vector<BundleExpr> children;
  };
  explicit BundleExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline BundleExpr operator+(BundleExpr a, BundleExpr b) {
  return BundleExpr::sum({std::move(a), std::move(b)});
}
inline BundleExpr operator-(BundleExpr a, BundleExpr b) {
  return BundleExpr::virtual_diff(std::move(a), std::move(b));
}

/// Ranks of Sym^d U*, Sym^k U*, Sym^l U* for a degeneration d = k + l.
struct RankTriple {
  long r_d;
  long r_k;
  long r_l;

  static RankTriple of(int r, int d, int k);
};

/// Rank of Sym^d of a rank-e bundle: C(e+d-1, d).
long sym_rank(long e, int d);

/// Universal Chern classes of Sym^d E for E of rank e: entry i is c_i(Sym^d E)
/// as a polynomial in c_1(E)..c_e(E), for i = 0..degree_cap. Computed from
/// the C(e+d-1, d) Chern roots x_{i1}+...+x_{id} and straightened into
/// elementary symmetric functions; memoized per (e, d), thread-safe.
std::vector<Polynomial> sym_chern(int d, int e, int degree_cap);

/// Upper bound on polynomial terms a universal Sym table may touch before
/// sym_chern refuses with GuardrailError.
inline constexpr long kSymTableTermLimit = 3'000'000;

// ---------------------------------------------------------------------------
// Rings in which Chern classes can be evaluated.

template <class R>
concept ChernRing = requires(const R& ring, const typename R::Element& a, const BigInt& s, int i,
                             const LineClass& t) {
  typename R::Element;
  { ring.zero() } -> std::same_as<typename R::Element>;
  { ring.one() } -> std::same_as<typename R::Element>;
  { ring.top_degree() } -> std::convertible_to<int>;
  { ring.rank_of_universal() } -> std::convertible_to<int>;
  { ring.universal_chern(i) } -> std::same_as<typename R::Element>;
  { ring.line_class(t) } -> std::same_as<typename R::Element>;
  { ring.is_zero(a) } -> std::convertible_to<bool>;
  { a + a } -> std::convertible_to<typename R::Element>;
  { a - a } -> std::convertible_to<typename R::Element>;
  { a * a } -> std::convertible_to<typename R::Element>;
  { a * s } -> std::convertible_to<typename R::Element>;
};

/// A(G(r+1, n+1)) in the Schubert basis.
class GrassRing {
 public:
  using Element = ChowClass;

  explicit GrassRing(GrassCtxPtr ctx) : ctx_(std::move(ctx)) {}

  const GrassCtxPtr& ctx() const { return ctx_; }
  Element zero() const { return ChowClass::zero(ctx_); }
  Element one() const { return ChowClass::one(ctx_); }
  int top_degree() const { return ctx_->dim(); }
  int rank_of_universal() const { return ctx_->k(); }
  Element universal_chern(int i) const { return chern_universal_dual(ctx_, i); }
  Element line_class(const LineClass& t) const;
  bool is_zero(const Element& a) const { return a.is_zero(); }

 private:
  GrassCtxPtr ctx_;
};

/// Polynomials in c_1..c_k with no relations, truncated at a degree cap: the
/// universal (splitting-principle) ring, used to print classes in the Chern basis.
class UniversalRing {
 public:
  using Element = Polynomial;

  UniversalRing(int k, int degree_cap) : prototype_(Polynomial::chern(k, degree_cap)) {}

  Element zero() const { return prototype_; }
  Element one() const { return prototype_.constant(1); }
  int top_degree() const { return prototype_.degree_cap(); }
  int rank_of_universal() const { return prototype_.nvars(); }
  Element universal_chern(int i) const;
  Element line_class(const LineClass& t) const;
  bool is_zero(const Element& a) const { return a.is_zero(); }

 private:
  Polynomial prototype_;
};

template <ChernRing R>
using Series = std::vector<typename R::Element>;

namespace detail {

template <ChernRing R>
Series<R> unit_series(const R& ring, int cap) {
  Series<R> out(static_cast<std::size_t>(cap) + 1, ring.zero());
  out[0] = ring.one();
  return out;
}

template <ChernRing R>
Series<R> multiply_series(const R& ring, const Series<R>& a, const Series<R>& b) {
  Series<R> out(a.size(), ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ring.is_zero(a[i])) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) {
      if (ring.is_zero(b[j])) continue;
      out[i + j] = out[i + j] + a[i] * b[j];
    }
  }
  return out;
}

template <ChernRing R>
typename R::Element power(const R& ring, std::vector<typename R::Element>& cache,
                          const typename R::Element& base, int exponent) {
  if (cache.empty()) cache.push_back(ring.one());
  while (static_cast<int>(cache.size()) <= exponent) cache.push_back(cache.back() * base);
  return cache[static_cast<std::size_t>(exponent)];
}

}  // namespace detail

/// Inverse power series: s_0 = 1 and sum_{i+j=p} c_i s_j = 0 for p >= 1.
template <ChernRing R>
Series<R> invert_series(const R& ring, const Series<R>& c) {
  Series<R> s(c.size(), ring.zero());
  s[0] = ring.one();
  for (std::size_t p = 1; p < c.size(); ++p) {
    auto acc = ring.zero();
    for (std::size_t i = 1; i <= p; ++i) {
      if (ring.is_zero(c[i]) || ring.is_zero(s[p - i])) continue;
      acc = acc + c[i] * s[p - i];
    }
    s[p] = acc * BigInt(-1);
  }
  return s;
}

/// Substitutes c_j -> gens[j] into a polynomial in c_1..c_e.
template <ChernRing R>
typename R::Element evaluate_polynomial(const R& ring, const Polynomial& poly,
                                        const Series<R>& gens) {
  auto out = ring.zero();
  std::vector<std::vector<typename R::Element>> powers(static_cast<std::size_t>(poly.nvars()));
  for (const auto& [a, c] : poly.terms()) {
    if (poly.degree_of(a) > ring.top_degree()) continue;
    auto term = ring.one() * c;
    for (std::size_t j = 0; j < a.size() && !ring.is_zero(term); ++j) {
      if (a[j] == 0) continue;
      const auto& g = j + 1 < gens.size() ? gens[j + 1] : ring.zero();
      term = term * detail::power(ring, powers[j], g, a[j]);
    }
    out = out + term;
  }
  return out;
}

/// Total Chern class c_0..c_cap of a bundle expression (c_0 = 1), where cap
/// defaults to the ring's top degree.
template <ChernRing R>
Series<R> total_chern(const BundleExpr& expr, const R& ring, int cap);

template <ChernRing R>
Series<R> total_chern(const BundleExpr& expr, const R& ring) {
  return total_chern(expr, ring, ring.top_degree());
}

/// Segre series s = c^{-1}, truncated at cap (default: the ring's top degree).
template <ChernRing R>
Series<R> segre(const BundleExpr& expr, const R& ring, int cap) {
  return invert_series(ring, total_chern(expr, ring, cap));
}

template <ChernRing R>
Series<R> segre(const BundleExpr& expr, const R& ring) {
  return segre(expr, ring, ring.top_degree());
}

/// Degree-r_top part of c(plus) * s(minus), the top Chern class of an honest
/// quotient plus/minus whose rank the caller asserts to be r_top.
template <ChernRing R>
typename R::Element c_top_virtual(const BundleExpr& plus, const BundleExpr& minus, long r_top,
                                  const R& ring) {
  if (r_top < 0) throw std::invalid_argument("c_top_virtual: negative top degree");
  if (plus.is_honest() && minus.is_honest()) {
    const int k = ring.rank_of_universal();
    if (plus.rank(k) - minus.rank(k) != r_top) {
      throw std::invalid_argument("c_top_virtual: r_top differs from rank(plus) - rank(minus)");
    }
  }
  if (r_top > ring.top_degree()) return ring.zero();
  const Series<R> c = total_chern(plus, ring, static_cast<int>(r_top));
  const Series<R> s = segre(minus, ring, static_cast<int>(r_top));
  auto out = ring.zero();
  for (long i = 0; i <= r_top; ++i) {
    const auto& ci = c[static_cast<std::size_t>(i)];
    const auto& sj = s[static_cast<std::size_t>(r_top - i)];
    if (ring.is_zero(ci) || ring.is_zero(sj)) continue;
    out = out + ci * sj;
  }
  return out;
}

/// Overload taking the VirtualDiff node itself.
template <ChernRing R>
typename R::Element c_top_virtual(const BundleExpr& diff, long r_top, const R& ring) {
  if (diff.kind() != BundleExpr::Kind::VirtualDiff) {
    throw std::invalid_argument("c_top_virtual expects a virtual difference");
  }
  return c_top_virtual(diff.children()[0], diff.children()[1], r_top, ring);
}

/// Top Chern class of an honest bundle.
template <ChernRing R>
typename R::Element c_top(const BundleExpr& expr, const R& ring) {
  if (!expr.is_honest()) throw std::invalid_argument("c_top of a virtual bundle; use c_top_virtual");
  const long rank = expr.rank(ring.rank_of_universal());
  if (rank > ring.top_degree()) return ring.zero();
  return total_chern(expr, ring, static_cast<int>(rank))[static_cast<std::size_t>(rank)];
}

template <ChernRing R>
Series<R> total_chern(const BundleExpr& expr, const R& ring, int cap) {
  using Kind = BundleExpr::Kind;
  cap = std::min(cap, ring.top_degree());
  if (cap < 0) throw std::invalid_argument("negative degree cap");
  const auto top = static_cast<std::size_t>(cap);
  switch (expr.kind()) {
    case Kind::UniversalDual: {
      Series<R> out = detail::unit_series(ring, cap);
      for (std::size_t i = 1; i <= top; ++i) out[i] = ring.universal_chern(static_cast<int>(i));
      return out;
    }
    case Kind::Trivial:
      return detail::unit_series(ring, cap);
    case Kind::Dual: {
      Series<R> out = total_chern(expr.children()[0], ring, cap);
      for (std::size_t i = 1; i < out.size(); i += 2) out[i] = out[i] * BigInt(-1);
      return out;
    }
    case Kind::Sum: {
      Series<R> out = detail::unit_series(ring, cap);
      for (const BundleExpr& child : expr.children()) {
        out = detail::multiply_series(ring, out, total_chern(child, ring, cap));
      }
      return out;
    }
    case Kind::VirtualDiff:
      return detail::multiply_series(ring, total_chern(expr.children()[0], ring, cap),
                                     segre(expr.children()[1], ring, cap));
    case Kind::Twist: {
      const BundleExpr& child = expr.children()[0];
      if (!child.is_honest()) throw std::invalid_argument("cannot twist a virtual bundle");
      const long e = child.rank(ring.rank_of_universal());
      const Series<R> c = total_chern(child, ring, cap);
      const auto t = ring.line_class(expr.twist_class());
      std::vector<typename R::Element> t_powers;
      Series<R> out(top + 1, ring.zero());
      // c_i(E (x) L) = sum_j C(e-j, i-j) c_j(E) t^(i-j)
      for (std::size_t i = 0; i <= top && static_cast<long>(i) <= e; ++i) {
        auto acc = ring.zero();
        for (std::size_t j = 0; j <= i; ++j) {
          if (ring.is_zero(c[j])) continue;
          const BigInt coeff = binomial(e - static_cast<long>(j), static_cast<long>(i - j));
          if (coeff == 0) continue;
          acc = acc + c[j] * detail::power(ring, t_powers, t, static_cast<int>(i - j)) * coeff;
        }
        out[i] = acc;
      }
      return out;
    }
    case Kind::Sym: {
      const BundleExpr& child = expr.children()[0];
      if (!child.is_honest()) throw std::invalid_argument("Sym of a virtual bundle");
      const long e = child.rank(ring.rank_of_universal());
      Series<R> out = detail::unit_series(ring, cap);
      if (e == 0) return out;
      const Series<R> c = total_chern(child, ring, cap);
      const auto table = sym_chern(expr.parameter(), static_cast<int>(e), cap);
      for (std::size_t i = 1; i <= top && i < table.size(); ++i) {
        out[i] = evaluate_polynomial(ring, table[i], c);
      }
      return out;
    }
    case Kind::Pullback: {
      if constexpr (requires { ring.base(); ring.pullback(ring.base().one()); }) {
        const auto base_series = total_chern(expr.children()[0], ring.base(), std::min(cap, ring.base().top_degree()));
        Series<R> out(top + 1, ring.zero());
        for (std::size_t i = 0; i < base_series.size() && i <= top; ++i) {
          out[i] = ring.pullback(base_series[i]);
        }
        return out;
      } else {
        return total_chern(expr.children()[0], ring, cap);
      }
    }
  }
  throw std::logic_error("unhandled bundle expression kind");
}

}  // namespace schubfire
