#include "schubfire/chow.hpp"

#include <stdexcept>
#include <string>

#include "schubfire/errors.hpp"
#include "schubfire/symmetric.hpp"

namespace schubfire {

GrassCtxPtr GrassCtx::get(int r, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, GrassCtxPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{r, n}];
  if (!slot) slot = std::make_shared<const GrassCtx>(r, n);
  return slot;
}

GrassCtx::GrassCtx(int r, int n) : r_(r), n_(n) {
  if (r < 0 || r >= n) {
    throw std::invalid_argument("Grassmannian needs 0 <= r < n (got r=" + std::to_string(r) +
                                ", n=" + std::to_string(n) + ")");
  }
  box_ = Box{r + 1, n - r};
  basis_ = box_partitions(box_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    weights_.push_back(basis_[i].weight());
    index_.emplace(basis_[i], static_cast<int>(i));
  }
  table_.resize(basis_.size());
  row_flags_ = std::make_unique<std::once_flag[]>(basis_.size());
}

std::optional<int> GrassCtx::index_of(const Partition& lambda) const {
  auto it = index_.find(lambda);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void GrassCtx::fill_row(int i) const {
  std::vector<ProductTerms> row(basis_.size());
  const Partition& lambda = basis_[static_cast<std::size_t>(i)];
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    if (weights_[static_cast<std::size_t>(i)] + weights_[j] > dim()) continue;
    for (const auto& [nu, c] : lr_multiply(lambda, basis_[j], box_)) {
      row[j].emplace_back(index_.at(nu), c);
    }
  }
  table_[static_cast<std::size_t>(i)] = std::move(row);
}

const GrassCtx::ProductTerms& GrassCtx::product(int i, int j) const {
  std::call_once(row_flags_[static_cast<std::size_t>(i)], [this, i] { fill_row(i); });
  return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

ChowClass::ChowClass(GrassCtxPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("ChowClass needs a Grassmannian context");
  coeffs_.resize(static_cast<std::size_t>(ctx_->basis_size()));
}

ChowClass ChowClass::one(GrassCtxPtr ctx) { return scalar(std::move(ctx), 1); }

ChowClass ChowClass::scalar(GrassCtxPtr ctx, const BigInt& value) {
  ChowClass out(std::move(ctx));
  out.coeffs_[0] = value;
  return out;
}

ChowClass ChowClass::schubert(GrassCtxPtr ctx, const Partition& lambda) {
  ChowClass out(std::move(ctx));
  if (auto idx = out.ctx_->index_of(lambda)) out.coeffs_[static_cast<std::size_t>(*idx)] = 1;
  return out;
}

BigInt ChowClass::coefficient(const Partition& lambda) const {
  auto idx = ctx_->index_of(lambda);
  return idx ? coeffs_[static_cast<std::size_t>(*idx)] : BigInt(0);
}

std::vector<std::pair<Partition, BigInt>> ChowClass::terms() const {
  std::vector<std::pair<Partition, BigInt>> out;
  // The basis is already sorted by (degree, lex).
  for (int i : support()) out.emplace_back(ctx_->basis(i), coeffs_[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<int> ChowClass::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool ChowClass::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

std::optional<int> ChowClass::homogeneous_degree() const {
  std::optional<int> degree;
  for (int i : support()) {
    if (degree && *degree != ctx_->weight(i)) return std::nullopt;
    degree = ctx_->weight(i);
  }
  return degree;
}

ChowClass ChowClass::degree_part(int degree) const {
  ChowClass out(ctx_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (ctx_->weight(static_cast<int>(i)) == degree) out.coeffs_[i] = coeffs_[i];
  }
  return out;
}

void ChowClass::check_ctx(const ChowClass& other) const {
  if (!ctx_->same_as(*other.ctx_)) throw ContextMismatch("Chow classes on different Grassmannians");
}

ChowClass& ChowClass::operator+=(const ChowClass& other) {
  check_ctx(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& other) {
  check_ctx(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

ChowClass& ChowClass::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

ChowClass& ChowClass::operator*=(const ChowClass& other) { return *this = *this * other; }

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  a.check_ctx(b);
  const GrassCtx& ctx = *a.ctx_;
  ChowClass out(a.ctx_);
  const std::vector<int> sa = a.support();
  if (sa.empty()) return out;
  const std::vector<int> sb = b.support();
  BigInt product;
  for (int i : sa) {
    const int wi = ctx.weight(i);
    for (int j : sb) {
      if (wi + ctx.weight(j) > ctx.dim()) break;  // support is sorted by weight
      const auto& terms = ctx.product(i, j);
      if (terms.empty()) continue;
      mpz_mul(product.get_mpz_t(), a.coeffs_[static_cast<std::size_t>(i)].get_mpz_t(),
              b.coeffs_[static_cast<std::size_t>(j)].get_mpz_t());
      for (const auto& [nu, c] : terms) {
        mpz_addmul_ui(out.coeffs_[static_cast<std::size_t>(nu)].get_mpz_t(), product.get_mpz_t(),
                      static_cast<unsigned long>(c));
      }
    }
  }
  return out;
}

bool operator==(const ChowClass& a, const ChowClass& b) {
  return a.ctx_->same_as(*b.ctx_) && a.coeffs_ == b.coeffs_;
}

ChowClass chern_universal_dual(const GrassCtxPtr& ctx, int i) {
  if (i < 0) throw std::invalid_argument("negative Chern class index");
  if (i > ctx->k()) return ChowClass::zero(ctx);
  return ChowClass::schubert(ctx, column(i));
}

BigInt integral(const ChowClass& a) {
  if (a.is_zero()) return 0;
  const auto degree = a.homogeneous_degree();
  if (!degree) throw DegreeMismatch("integral of a non-homogeneous class");
  if (*degree != a.ctx().dim()) {
    throw DegreeMismatch("integral of a class of degree " + std::to_string(*degree) +
                         " on a Grassmannian of dimension " + std::to_string(a.ctx().dim()));
  }
  return a.coefficient_at(a.ctx().top_index());
}

ChowClass schur_expand(const Polynomial& roots, const GrassCtxPtr& ctx) {
  if (roots.nvars() != ctx->k()) {
    throw std::invalid_argument("schur_expand: expected " + std::to_string(ctx->k()) +
                                " root variables");
  }
  ChowClass out(ctx);
  for (const auto& [lambda, c] : schur_coefficients(roots)) {
    if (lambda.weight() > ctx->dim()) continue;
    out += ChowClass::schubert(ctx, lambda) * c;
  }
  return out;
}

ChowClass evaluate_chern_polynomial(const Polynomial& chern, const GrassCtxPtr& ctx) {
  const int k = chern.nvars();
  std::vector<std::vector<ChowClass>> powers(static_cast<std::size_t>(k));
  ChowClass out(ctx);
  for (const auto& [a, c] : chern.terms()) {
    if (chern.degree_of(a) > ctx->dim()) continue;
    ChowClass term = ChowClass::scalar(ctx, c);
    for (int i = 0; i < k && !term.is_zero(); ++i) {
      const int exp = a[static_cast<std::size_t>(i)];
      if (exp == 0) continue;
      auto& table = powers[static_cast<std::size_t>(i)];
      if (table.empty()) table.push_back(ChowClass::one(ctx));
      while (static_cast<int>(table.size()) <= exp) {
        table.push_back(table.back() * chern_universal_dual(ctx, i + 1));
      }
      term *= table[static_cast<std::size_t>(exp)];
    }
    out += term;
  }
  return out;
}

}  // namespace schubfire
