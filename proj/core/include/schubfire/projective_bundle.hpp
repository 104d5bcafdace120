#pragma once

#include <memory>
#include <vector>

#include "schubfire/bundle.hpp"
#include "schubfire/chow.hpp"

namespace schubfire {

/// P(E) -> G for an honest bundle E of rank e >= 1 on a Grassmannian, in the
/// convention where O(-1) is the tautological subbundle of pi^*E and
/// zeta = c_1(O(1)). The Chow ring is A(G)[zeta] / (sum_i c_i(E) zeta^(e-i)).
class PBCtx {
 public:
  static std::shared_ptr<const PBCtx> make(GrassCtxPtr base, BundleExpr bundle);

  PBCtx(GrassCtxPtr base, BundleExpr bundle);
  PBCtx(const PBCtx&) = delete;
  PBCtx& operator=(const PBCtx&) = delete;

  const GrassCtxPtr& base() const { return base_; }
  const BundleExpr& bundle() const { return bundle_; }
  int rank() const { return rank_; }
  /// dim G + e - 1.
  int dim() const { return base_->dim() + rank_ - 1; }
  /// c_0(E)..c_e(E).
  const std::vector<ChowClass>& chern() const { return chern_; }
  /// Coefficients of zeta^0..zeta^(e-1) in the reduced form of zeta^m, for
  /// e <= m <= 2e-2.
  const std::vector<ChowClass>& reduced_zeta_power(int m) const;

  bool same_as(const PBCtx& other) const { return this == &other; }

 private:
  GrassCtxPtr base_;
  BundleExpr bundle_;
  int rank_ = 0;
  std::vector<ChowClass> chern_;
  std::vector<std::vector<ChowClass>> reduced_;  // index m - e
};

using PBCtxPtr = std::shared_ptr<const PBCtx>;

/// sum_j coeffs[j] * zeta^j with base classes coeffs[j], 0 <= j < e.
class PBClass {
 public:
  explicit PBClass(PBCtxPtr ctx);

  static PBClass one(PBCtxPtr ctx);
  /// Reduced form of zeta^m.
  static PBClass zeta_power(PBCtxPtr ctx, int m);

  const PBCtx& ctx() const { return *ctx_; }
  const PBCtxPtr& ctx_ptr() const { return ctx_; }
  const std::vector<ChowClass>& coefficients() const { return coeffs_; }
  const ChowClass& coefficient(int j) const { return coeffs_[static_cast<std::size_t>(j)]; }
  bool is_zero() const;

  PBClass& operator+=(const PBClass& other);
  PBClass& operator-=(const PBClass& other);
  PBClass& operator*=(const BigInt& scalar);

  friend PBClass operator+(PBClass a, const PBClass& b) { return a += b; }
  friend PBClass operator-(PBClass a, const PBClass& b) { return a -= b; }
  friend PBClass operator*(const PBClass& a, const PBClass& b);
  friend PBClass operator*(PBClass a, const BigInt& s) { return a *= s; }
  friend PBClass operator*(const BigInt& s, PBClass a) { return a *= s; }
  friend bool operator==(const PBClass& a, const PBClass& b);

 private:
  friend PBClass pullback(const ChowClass& alpha, const PBCtxPtr& ctx);
  void check_ctx(const PBClass& other) const;

  PBCtxPtr ctx_;
  std::vector<ChowClass> coeffs_;
};

/// Product followed by reduction zeta^e = -sum_{i>=1} c_i(E) zeta^(e-i).
PBClass pb_mul(const PBClass& a, const PBClass& b);

/// pi_*: zeta^j pushes forward to s_{j-e+1}(E); on reduced forms only the
/// zeta^(e-1) coefficient survives.
ChowClass pushforward(const PBClass& a);

/// pi^*alpha, sitting in the zeta^0 slot.
PBClass pullback(const ChowClass& alpha, const PBCtxPtr& ctx);

/// A(P(E)) as a ChernRing. Universal classes are pulled back from the base.
class PBRing {
 public:
  using Element = PBClass;

  explicit PBRing(PBCtxPtr ctx) : ctx_(std::move(ctx)), base_(ctx_->base()) {}

  const PBCtxPtr& ctx() const { return ctx_; }
  const GrassRing& base() const { return base_; }
  Element pullback(const ChowClass& alpha) const { return schubfire::pullback(alpha, ctx_); }

  Element zero() const { return PBClass(ctx_); }
  Element one() const { return PBClass::one(ctx_); }
  int top_degree() const { return ctx_->dim(); }
  int rank_of_universal() const { return ctx_->base()->k(); }
  Element universal_chern(int i) const { return pullback(chern_universal_dual(ctx_->base(), i)); }
  Element line_class(const LineClass& t) const;
  bool is_zero(const Element& a) const { return a.is_zero(); }

 private:
  PBCtxPtr ctx_;
  GrassRing base_;
};

}  // namespace schubfire
