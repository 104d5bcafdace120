#include "schubfire/limiting.hpp"

#include <cstdlib>
#include <string>

#include "schubfire/errors.hpp"
#include "schubfire/projective_bundle.hpp"

namespace schubfire {

void ProblemParams::validate() const {
  if (r < 0 || r >= n) throw std::invalid_argument("need 0 <= r < n");
  if (d < 1) throw std::invalid_argument("need d >= 1");
  if (k && (*k < 1 || *k > d - 1)) throw std::invalid_argument("need 1 <= k <= d - 1");
}

long expected_dim(int r, int n, int d) {
  ProblemParams{r, n, d, std::nullopt}.validate();
  return static_cast<long>(r + 1) * (n - r) - binomial_small(r + d, d);
}

long rank_cap() {
  constexpr long kDefault = 64;
  const char* env = std::getenv("SCHUBFIRE_RANK_CAP");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 1) return kDefault;
  return value;
}

void check_guardrail(int r, int d) {
  const BigInt rank = binomial(r + d, r);
  if (rank > rank_cap()) {
    throw GuardrailError("rank of Sym^" + std::to_string(d) + " U* is " + to_decimal(rank) +
                         ", above the cap of " + std::to_string(rank_cap()));
  }
}

ChowClass total_class(int r, int n, int d) {
  ProblemParams{r, n, d, std::nullopt}.validate();
  check_guardrail(r, d);
  const GrassRing ring(GrassCtx::get(r, n));
  return c_top(BundleExpr::sym(d, BundleExpr::universal_dual()), ring);
}

bool is_generically_empty(int r, int n, int d) { return total_class(r, n, d).is_zero(); }

ChowClass sigma_pb(int r, int n, int d, int k) {
  ProblemParams{r, n, d, k}.validate();
  check_guardrail(r, d);
  const int l = d - k;
  const RankTriple ranks = RankTriple::of(r, d, k);
  const GrassCtxPtr ctx = GrassCtx::get(r, n);
  const GrassRing base(ctx);
  const BundleExpr u = BundleExpr::universal_dual();
  if (ranks.r_d > ctx->dim()) return ChowClass::zero(ctx);

  const PBRing ring(PBCtx::make(ctx, BundleExpr::sym(l, u)));
  const BundleExpr taut = BundleExpr::line(LineClass::tautological());
  const BundleExpr sym_d = BundleExpr::pullback(BundleExpr::sym(d, u));
  const BundleExpr sym_k_twisted =
      BundleExpr::twist(BundleExpr::pullback(BundleExpr::sym(k, u)), LineClass::tautological());
  const BundleExpr sym_l = BundleExpr::pullback(BundleExpr::sym(l, u));

  const PBClass quotient_d = c_top_virtual(sym_d, sym_k_twisted, ranks.r_d - ranks.r_k, ring);
  const PBClass quotient_l = c_top_virtual(sym_l, taut, ranks.r_l - 1, ring);
  return c_top(BundleExpr::sym(k, u), base) * pushforward(quotient_d * quotient_l);
}

ChowClass sigma_direct(int r, int n, int d, int k) {
  ProblemParams{r, n, d, k}.validate();
  check_guardrail(r, d);
  return sigma_direct_in(GrassRing(GrassCtx::get(r, n)), r, d, k);
}

std::string to_string(Route route) {
  switch (route) {
    case Route::Direct:
      return "direct";
    case Route::ProjectiveBundle:
      return "pb";
    case Route::Both:
      return "both";
  }
  return {};
}

Route parse_route(const std::string& text) {
  if (text == "direct") return Route::Direct;
  if (text == "pb") return Route::ProjectiveBundle;
  if (text == "both") return Route::Both;
  throw std::invalid_argument("unknown route '" + text + "'");
}

SplitResult split(int r, int n, int d, int k, Route route) {
  const ProblemParams params{r, n, d, k};
  params.validate();
  check_guardrail(r, d);
  const int l = d - k;

  SplitResult result{params, expected_dim(r, n, d), total_class(r, n, d),
                     ChowClass::zero(GrassCtx::get(r, n)), ChowClass::zero(GrassCtx::get(r, n)),
                     std::nullopt, false, route, std::nullopt, SplitStatus::Ok};
  if (route == Route::ProjectiveBundle) {
    result.sigma_k = sigma_pb(r, n, d, k);
    result.sigma_l = sigma_pb(r, n, d, l);
  } else {
    result.sigma_k = sigma_direct(r, n, d, k);
    result.sigma_l = sigma_direct(r, n, d, l);
  }
  if (route == Route::Both) {
    result.routes_agree =
        sigma_pb(r, n, d, k) == result.sigma_k && sigma_pb(r, n, d, l) == result.sigma_l;
  }
  result.identity_ok = result.sigma_k + result.sigma_l == result.total;
  if (result.m == 0) {
    result.counts = SplitCounts{integral(result.total), integral(result.sigma_k),
                                integral(result.sigma_l)};
  } else if (result.m < 0) {
    result.status = SplitStatus::NegativeExpectedDimension;
  }
  return result;
}

bool verify_identity(int r, int n, int d, int k) {
  ProblemParams{r, n, d, k}.validate();
  return sigma_direct(r, n, d, k) + sigma_direct(r, n, d, d - k) == total_class(r, n, d);
}

}  // namespace schubfire
