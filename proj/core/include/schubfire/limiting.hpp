#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "schubfire/bigint.hpp"
#include "schubfire/bundle.hpp"
#include "schubfire/chow.hpp"

namespace schubfire {

/// P^r's on a degree-d hypersurface in P^n, optionally degenerating into
/// components K and L of degrees k and l = d - k.
struct ProblemParams {
  int r = 0;
  int n = 0;
  int d = 0;
  std::optional<int> k;

  int l() const { return d - k.value(); }
  /// Throws std::invalid_argument unless 0 <= r < n, d >= 1 and, when a split
  /// is present, 1 <= k <= d - 1.
  void validate() const;
};

/// m = (r+1)(n-r) - C(r+d, d); may be negative.
long expected_dim(int r, int n, int d);

/// Largest admissible rank of Sym^d U*: SCHUBFIRE_RANK_CAP if set, else 64.
long rank_cap();

/// Throws GuardrailError when C(r+d, r) exceeds rank_cap().
void check_guardrail(int r, int d);

/// c_top(Sym^d U*) on G(r+1, n+1).
ChowClass total_class(int r, int n, int d);

bool is_generically_empty(int r, int n, int d);

/// [sigma_K] through the projective bundle P(Sym^l U*):
///   c_top(Sym^k U*) * pi_*( c_top(pi^*Sym^d U* / (pi^*Sym^k U* (x) T))
///                          * c_top(pi^*Sym^l U* / T) ),
/// with T = O(-1) the tautological line subbundle.
ChowClass sigma_pb(int r, int n, int d, int k);

/// [sigma_K] written directly on the base:
///   c_{r_k}(Sym^k) * sum_{i,j,h} C(r_d-1-i, r_k-1+h) c_i(Sym^d) c_j(Sym^l)
///                                s_h(Sym^k) s_{r_d-r_k-h-i-j}(Sym^l),
/// over 0 <= i <= r_d - r_k, 0 <= j <= min(r_l - 1, r_d - r_k - i),
/// 0 <= h <= r_d - r_k - i - j. Generic over the ring so the same sum can be
/// evaluated on a Grassmannian or as a universal polynomial.
template <ChernRing R>
typename R::Element sigma_direct_in(const R& ring, int r, int d, int k) {
  ProblemParams{r, r + 1, d, k}.validate();
  const int l = d - k;
  const RankTriple ranks = RankTriple::of(r, d, k);
  const long span = ranks.r_d - ranks.r_k;
  const int cap = static_cast<int>(std::min<long>(span, ring.top_degree()));
  if (ranks.r_d > ring.top_degree()) return ring.zero();

  const BundleExpr u = BundleExpr::universal_dual();
  const BundleExpr sym_d = BundleExpr::sym(d, u);
  const BundleExpr sym_k = BundleExpr::sym(k, u);
  const BundleExpr sym_l = BundleExpr::sym(l, u);
  const auto c_d = total_chern(sym_d, ring, cap);
  const auto c_l = total_chern(sym_l, ring, cap);
  const auto s_k = segre(sym_k, ring, cap);
  const auto s_l = segre(sym_l, ring, cap);

  // Inner j-sum depends on i and h only through p = span - i - h.
  std::vector<typename R::Element> inner(static_cast<std::size_t>(cap) + 1, ring.zero());
  for (long p = 0; p <= cap; ++p) {
    auto acc = ring.zero();
    for (long j = 0; j <= std::min(ranks.r_l - 1, p); ++j) {
      const auto& cj = c_l[static_cast<std::size_t>(j)];
      const auto& sp = s_l[static_cast<std::size_t>(p - j)];
      if (ring.is_zero(cj) || ring.is_zero(sp)) continue;
      acc = acc + cj * sp;
    }
    inner[static_cast<std::size_t>(p)] = acc;
  }

  auto sum = ring.zero();
  for (long i = 0; i <= cap; ++i) {
    const auto& ci = c_d[static_cast<std::size_t>(i)];
    if (ring.is_zero(ci)) continue;
    for (long h = 0; h <= span - i; ++h) {
      const long p = span - i - h;
      if (p > cap) continue;
      const auto& sh = s_k[static_cast<std::size_t>(h)];
      const auto& in = inner[static_cast<std::size_t>(p)];
      if (ring.is_zero(sh) || ring.is_zero(in)) continue;
      sum = sum + ci * sh * in * binomial(ranks.r_d - 1 - i, ranks.r_k - 1 + h);
    }
  }
  return c_top(sym_k, ring) * sum;
}

ChowClass sigma_direct(int r, int n, int d, int k);

enum class Route { Direct, ProjectiveBundle, Both };

std::string to_string(Route route);
/// "direct" | "pb" | "both"; throws std::invalid_argument otherwise.
Route parse_route(const std::string& text);

enum class SplitStatus { Ok, NegativeExpectedDimension };

struct SplitCounts {
  BigInt total;
  BigInt count_k;
  BigInt count_l;
};

struct SplitResult {
  ProblemParams params;
  long m = 0;
  ChowClass total;
  ChowClass sigma_k;
  ChowClass sigma_l;
  /// Present exactly when m == 0.
  std::optional<SplitCounts> counts;
  bool identity_ok = false;
  Route route = Route::Direct;
  /// Set when route == Both: whether the two routes produced equal classes.
  std::optional<bool> routes_agree;
  SplitStatus status = SplitStatus::Ok;
};

/// Both limiting classes, the total class and the identity check. With
/// Route::Both the classes come from the direct route and the projective
/// bundle route is run as a cross-check.
SplitResult split(int r, int n, int d, int k, Route route = Route::Direct);

/// sigma_K + sigma_L == c_top(Sym^d U*) as classes.
bool verify_identity(int r, int n, int d, int k);

}  // namespace schubfire
