#include "schubfire/projective_bundle.hpp"

#include <algorithm>
#include <stdexcept>

#include "schubfire/errors.hpp"

namespace schubfire {

PBCtxPtr PBCtx::make(GrassCtxPtr base, BundleExpr bundle) {
  return std::make_shared<const PBCtx>(std::move(base), std::move(bundle));
}

PBCtx::PBCtx(GrassCtxPtr base, BundleExpr bundle) : base_(std::move(base)), bundle_(std::move(bundle)) {
  if (!bundle_.is_honest()) throw std::invalid_argument("projective bundle of a virtual bundle");
  const long e = bundle_.rank(base_->k());
  if (e < 1) throw std::invalid_argument("projective bundle needs rank >= 1");
  rank_ = static_cast<int>(e);

  const GrassRing ring(base_);
  const auto series = total_chern(bundle_, ring);
  chern_.reserve(static_cast<std::size_t>(rank_) + 1);
  for (int i = 0; i <= rank_; ++i) {
    chern_.push_back(i < static_cast<int>(series.size()) ? series[static_cast<std::size_t>(i)]
                                                          : ChowClass::zero(base_));
  }

  // zeta^e = -sum_{i=1}^{e} c_i zeta^(e-i); higher powers by shifting.
  std::vector<ChowClass> current(static_cast<std::size_t>(rank_), ChowClass::zero(base_));
  for (int i = 1; i <= rank_; ++i) current[static_cast<std::size_t>(rank_ - i)] = -chern_[static_cast<std::size_t>(i)];
  reduced_.push_back(current);
  for (int m = rank_ + 1; m <= 2 * rank_ - 2; ++m) {
    std::vector<ChowClass> next(static_cast<std::size_t>(rank_), ChowClass::zero(base_));
    const ChowClass& overflow = current.back();
    for (int j = rank_ - 1; j >= 1; --j) next[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)];
    if (!overflow.is_zero()) {
      for (int j = 0; j < rank_; ++j) next[static_cast<std::size_t>(j)] += overflow * reduced_.front()[static_cast<std::size_t>(j)];
    }
    reduced_.push_back(next);
    current = std::move(next);
  }
}

const std::vector<ChowClass>& PBCtx::reduced_zeta_power(int m) const {
  if (m < rank_ || m > std::max(rank_, 2 * rank_ - 2)) {
    throw std::out_of_range("reduced_zeta_power outside [e, 2e-2]");
  }
  return reduced_[static_cast<std::size_t>(m - rank_)];
}

PBClass::PBClass(PBCtxPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("PBClass needs a projective bundle context");
  coeffs_.assign(static_cast<std::size_t>(ctx_->rank()), ChowClass::zero(ctx_->base()));
}

PBClass PBClass::one(PBCtxPtr ctx) {
  PBClass out(std::move(ctx));
  out.coeffs_[0] = ChowClass::one(out.ctx_->base());
  return out;
}

PBClass PBClass::zeta_power(PBCtxPtr ctx, int m) {
  if (m < 0) throw std::invalid_argument("negative power of zeta");
  const int e = ctx->rank();
  PBClass out(ctx);
  if (m < e) {
    out.coeffs_[static_cast<std::size_t>(m)] = ChowClass::one(ctx->base());
    return out;
  }
  const int last_reduced = std::max(e, 2 * e - 2);
  if (m <= last_reduced) {
    out.coeffs_ = ctx->reduced_zeta_power(m);
    return out;
  }
  out = zeta_power(ctx, last_reduced);
  const PBClass zeta = zeta_power(ctx, 1);
  for (int i = last_reduced; i < m; ++i) out = out * zeta;
  return out;
}

bool PBClass::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void PBClass::check_ctx(const PBClass& other) const {
  if (!ctx_->same_as(*other.ctx_)) throw ContextMismatch("classes on different projective bundles");
}

PBClass& PBClass::operator+=(const PBClass& other) {
  check_ctx(other);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

PBClass& PBClass::operator-=(const PBClass& other) {
  check_ctx(other);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  return *this;
}

PBClass& PBClass::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

PBClass operator*(const PBClass& a, const PBClass& b) {
  a.check_ctx(b);
  const int e = a.ctx_->rank();
  const GrassCtxPtr& base = a.ctx_->base();
  std::vector<ChowClass> raw(static_cast<std::size_t>(2 * e - 1), ChowClass::zero(base));
  for (int i = 0; i < e; ++i) {
    const ChowClass& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = 0; j < e; ++j) {
      const ChowClass& bj = b.coeffs_[static_cast<std::size_t>(j)];
      if (bj.is_zero()) continue;
      raw[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  PBClass out(a.ctx_);
  for (int j = 0; j < e; ++j) out.coeffs_[static_cast<std::size_t>(j)] = std::move(raw[static_cast<std::size_t>(j)]);
  for (int m = e; m <= 2 * e - 2; ++m) {
    const ChowClass& c = raw[static_cast<std::size_t>(m)];
    if (c.is_zero()) continue;
    const auto& reduced = a.ctx_->reduced_zeta_power(m);
    for (int j = 0; j < e; ++j) {
      if (reduced[static_cast<std::size_t>(j)].is_zero()) continue;
      out.coeffs_[static_cast<std::size_t>(j)] += c * reduced[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

bool operator==(const PBClass& a, const PBClass& b) {
  return a.ctx_->same_as(*b.ctx_) && a.coeffs_ == b.coeffs_;
}

PBClass pb_mul(const PBClass& a, const PBClass& b) { return a * b; }

ChowClass pushforward(const PBClass& a) { return a.coefficient(a.ctx().rank() - 1); }

PBClass pullback(const ChowClass& alpha, const PBCtxPtr& ctx) {
  if (!alpha.ctx().same_as(*ctx->base())) throw ContextMismatch("pullback from a different base");
  PBClass out(ctx);
  out.coeffs_[0] = alpha;
  return out;
}

PBRing::Element PBRing::line_class(const LineClass& t) const {
  PBClass out = pullback(chern_universal_dual(ctx_->base(), 1) * BigInt(t.hyperplane));
  if (t.zeta != 0) out += PBClass::zeta_power(ctx_, 1) * BigInt(t.zeta);
  return out;
}

}  // namespace schubfire
