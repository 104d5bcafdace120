#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "schubfire/bigint.hpp"
#include "schubfire/partition.hpp"
#include "schubfire/polynomial.hpp"

namespace schubfire {

/// The Grassmannian G(r+1, n+1) of P^r's in P^n together with its Schubert
/// basis and a lazily filled table of Littlewood-Richardson structure constants.
///
/// Instances are immutable apart from that table, whose rows are each filled
/// exactly once (std::call_once), so a context may be shared across threads.
class GrassCtx {
 public:
  /// One product sigma_i * sigma_j expanded as (basis index, coefficient).
  using ProductTerms = std::vector<std::pair<int, std::int64_t>>;

  /// Shared context for (r, n); throws std::invalid_argument unless 0 <= r < n.
  static std::shared_ptr<const GrassCtx> get(int r, int n);

  GrassCtx(int r, int n);
  GrassCtx(const GrassCtx&) = delete;
  GrassCtx& operator=(const GrassCtx&) = delete;

  int r() const { return r_; }
  int n() const { return n_; }
  /// Rank of the universal subbundle, r+1.
  int k() const { return r_ + 1; }
  int big_n() const { return n_ + 1; }
  const Box& box() const { return box_; }
  int dim() const { return box_.area(); }

  int basis_size() const { return static_cast<int>(basis_.size()); }
  const Partition& basis(int index) const { return basis_[static_cast<std::size_t>(index)]; }
  int weight(int index) const { return weights_[static_cast<std::size_t>(index)]; }
  /// Index of a partition in the basis, or nullopt if it leaves the box.
  std::optional<int> index_of(const Partition& lambda) const;
  int top_index() const { return basis_size() - 1; }

  /// sigma_i * sigma_j; empty when the weights overflow the top degree.
  const ProductTerms& product(int i, int j) const;

  bool same_as(const GrassCtx& other) const { return r_ == other.r_ && n_ == other.n_; }

 private:
  void fill_row(int i) const;

  int r_;
  int n_;
  Box box_;
  std::vector<Partition> basis_;
  std::vector<int> weights_;
  std::map<Partition, int> index_;
  mutable std::vector<std::vector<ProductTerms>> table_;
  mutable std::unique_ptr<std::once_flag[]> row_flags_;
};

using GrassCtxPtr = std::shared_ptr<const GrassCtx>;

/// An element of A*(G(r+1, n+1)) in the Schubert basis.
///
/// Coefficients are stored densely against the context basis; the public
/// surface (terms(), equality, serialization) only ever sees nonzero entries.
class ChowClass {
 public:
  explicit ChowClass(GrassCtxPtr ctx);

  static ChowClass zero(GrassCtxPtr ctx) { return ChowClass(std::move(ctx)); }
  static ChowClass one(GrassCtxPtr ctx);
  static ChowClass scalar(GrassCtxPtr ctx, const BigInt& value);
  /// sigma_lambda, or zero when lambda does not fit the box.
  static ChowClass schubert(GrassCtxPtr ctx, const Partition& lambda);

  const GrassCtx& ctx() const { return *ctx_; }
  const GrassCtxPtr& ctx_ptr() const { return ctx_; }

  BigInt coefficient(const Partition& lambda) const;
  const BigInt& coefficient_at(int index) const { return coeffs_[static_cast<std::size_t>(index)]; }
  /// Nonzero terms sorted by (degree, lex).
  std::vector<std::pair<Partition, BigInt>> terms() const;
  bool is_zero() const;
  /// Degree if the class is nonzero and homogeneous.
  std::optional<int> homogeneous_degree() const;
  ChowClass degree_part(int degree) const;

  ChowClass& operator+=(const ChowClass& other);
  ChowClass& operator-=(const ChowClass& other);
  ChowClass& operator*=(const BigInt& scalar);
  ChowClass& operator*=(const ChowClass& other);

  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator-(ChowClass a) { return a *= BigInt(-1); }
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(ChowClass a, const BigInt& s) { return a *= s; }
  friend ChowClass operator*(const BigInt& s, ChowClass a) { return a *= s; }
  friend bool operator==(const ChowClass& a, const ChowClass& b);

 private:
  void check_ctx(const ChowClass& other) const;
  std::vector<int> support() const;

  GrassCtxPtr ctx_;
  std::vector<BigInt> coeffs_;
};

/// c_i(U*) = sigma_(1^i), zero for i > k.
ChowClass chern_universal_dual(const GrassCtxPtr& ctx, int i);

/// Degree of the top-dimensional coefficient. Zero integrates to zero; any
/// other class not homogeneous of degree dim throws DegreeMismatch.
BigInt integral(const ChowClass& a);

/// Image in A*(G) of a symmetric polynomial in the Chern roots of U*: Schur
/// expansion followed by dropping Schur functions that leave the box. Throws
/// std::invalid_argument if the input is not symmetric in ctx.k() variables.
ChowClass schur_expand(const Polynomial& roots, const GrassCtxPtr& ctx);

/// Image of a polynomial in c_1..c_k (c_i = c_i(U*)) under c_i -> sigma_(1^i).
ChowClass evaluate_chern_polynomial(const Polynomial& chern, const GrassCtxPtr& ctx);

}  // namespace schubfire
