#include <gtest/gtest.h>

#include "oracles/root_ring.hpp"
#include "schubfire/errors.hpp"
#include "schubfire/bundle.hpp"
#include "schubfire/chow.hpp"
#include "schubfire/symmetric.hpp"

using schubfire::BigInt;
using schubfire::BundleExpr;
using schubfire::ChowClass;
using schubfire::GrassCtx;
using schubfire::GrassRing;
using schubfire::LineClass;
using schubfire::Partition;
using schubfire::Polynomial;
using schubfire::UniversalRing;

namespace {

// Universal polynomial in c1..c3 written with x = c1, y = c2, z = c3.
struct Xyz {
  UniversalRing ring{3, 6};
  Polynomial x = ring.universal_chern(1);
  Polynomial y = ring.universal_chern(2);
  Polynomial z = ring.universal_chern(3);
  Polynomial n(long v) const { return ring.one() * BigInt(v); }
};

oracle::RootPoly roots_of(const Polynomial& chern) {
  const Polynomial p = schubfire::from_elementary(chern);
  oracle::RootPoly out{p.nvars(), p.degree_cap(), {}};
  for (const auto& [e, c] : p.terms()) out.terms[e] = c;
  return out;
}

const BundleExpr kU = BundleExpr::universal_dual();

}  // namespace

TEST(BundleExpr, Ranks) {
  EXPECT_EQ(kU.rank(3), 3);
  EXPECT_EQ(BundleExpr::sym(2, kU).rank(3), 6);
  EXPECT_EQ(BundleExpr::sym(3, kU).rank(4), 20);
  EXPECT_EQ((BundleExpr::sym(2, kU) - kU).rank(3), 3);
  EXPECT_EQ((kU + BundleExpr::trivial(2)).rank(3), 5);
  EXPECT_EQ(BundleExpr::twist(kU, LineClass{0, 1}).rank(3), 3);
  EXPECT_FALSE((kU - kU).is_honest());
  EXPECT_TRUE(BundleExpr::dual(BundleExpr::sym(2, kU)).is_honest());
  EXPECT_THROW(BundleExpr::sym(0, kU), std::invalid_argument);
  EXPECT_THROW(BundleExpr::twist(kU - kU, LineClass{0, 1}), std::invalid_argument);
}

TEST(BundleExpr, RankTriple) {
  const auto t = schubfire::RankTriple::of(2, 4, 3);
  EXPECT_EQ(t.r_d, 15);
  EXPECT_EQ(t.r_k, 10);
  EXPECT_EQ(t.r_l, 3);
}

TEST(TotalChern, UniversalDualGenerators) {
  const auto ctx = GrassCtx::get(2, 4);
  const auto c = schubfire::total_chern(kU, GrassRing(ctx));
  ASSERT_EQ(c.size(), 7u);
  EXPECT_EQ(c[0], ChowClass::one(ctx));
  EXPECT_EQ(c[1], ChowClass::schubert(ctx, Partition({1})));
  EXPECT_EQ(c[2], ChowClass::schubert(ctx, Partition({1, 1})));
  EXPECT_EQ(c[3], ChowClass::schubert(ctx, Partition({1, 1, 1})));
  EXPECT_TRUE(c[4].is_zero());
}

TEST(TotalChern, SymSquareRankThree) {
  const Xyz v;
  const auto c = schubfire::total_chern(BundleExpr::sym(2, kU), v.ring);
  EXPECT_EQ(c[1], v.x * BigInt(4));
  EXPECT_EQ(c[2], (v.x * v.x + v.y) * BigInt(5));
  EXPECT_EQ(c[3], v.x * v.x * v.x * BigInt(2) + v.x * v.y * BigInt(11) + v.z * BigInt(7));
  EXPECT_EQ(c[6], v.z * (v.x * v.y - v.z) * BigInt(8));
}

TEST(SymChern, Tables) {
  const auto c = schubfire::sym_chern(2, 3, 6);
  const Polynomial ring = Polynomial::chern(3, 6);
  const Polynomial x = ring.variable(0), y = ring.variable(1), z = ring.variable(2);
  EXPECT_EQ(c[2], (x * x + y) * BigInt(5));
  EXPECT_EQ(c[6], z * (x * y - z) * BigInt(8));
  const auto id = schubfire::sym_chern(1, 3, 5);
  EXPECT_EQ(id[1], x);
  EXPECT_EQ(id[3], z);
  EXPECT_TRUE(id[4].is_zero());
}

TEST(SymChern, FirstChernScalesLinearly) {
  for (int e = 1; e <= 4; ++e) {
    for (int d = 1; d <= 3; ++d) {
      const auto c = schubfire::sym_chern(d, e, 1);
      const BigInt factor = BigInt(d) * schubfire::binomial(e + d - 1, d) / e;
      EXPECT_EQ(c[1], Polynomial::chern(e, 1).variable(0) * factor) << "e=" << e << " d=" << d;
    }
  }
}

TEST(SymChern, MatchesRootOracle) {
  // Sym^3 of a rank-2 bundle: roots 3a, 2a+b, a+2b, 3b
  const auto c = schubfire::sym_chern(3, 2, 4);
  const auto expected = oracle::chern_of_roots(2, 4, oracle::sym_roots_rank2(3));
  for (int i = 0; i <= 4; ++i) EXPECT_EQ(roots_of(c[static_cast<std::size_t>(i)]).terms, expected[static_cast<std::size_t>(i)].terms);
}

TEST(SymChern, GuardrailOnHugeTables) {
  EXPECT_THROW(schubfire::sym_chern(8, 6, 40), schubfire::GuardrailError);
}

TEST(Segre, UniversalDual) {
  const Xyz v;
  const auto s = schubfire::segre(kU, v.ring);
  EXPECT_EQ(s[1], v.x * BigInt(-1));
  EXPECT_EQ(s[2], v.x * v.x - v.y);
  EXPECT_EQ(s[3], v.x * v.y * BigInt(2) - v.x * v.x * v.x - v.z);
}

TEST(Segre, InverseOfChern) {
  const auto ctx = GrassCtx::get(2, 6);
  const GrassRing ring(ctx);
  for (const BundleExpr& e : {kU, BundleExpr::sym(2, kU), BundleExpr::sym(3, kU) - kU}) {
    const auto c = schubfire::total_chern(e, ring);
    const auto s = schubfire::segre(e, ring);
    for (int p = 0; p <= ctx->dim(); ++p) {
      ChowClass acc = ChowClass::zero(ctx);
      for (int i = 0; i <= p; ++i) acc += c[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(p - i)];
      EXPECT_EQ(acc, p == 0 ? ChowClass::one(ctx) : ChowClass::zero(ctx)) << e.to_string() << " p=" << p;
    }
  }
}

TEST(TotalChern, Whitney) {
  const UniversalRing ring(3, 8);
  const BundleExpr a = BundleExpr::sym(2, kU);
  const BundleExpr b = BundleExpr::twist(kU, LineClass{0, 2});
  const auto ca = schubfire::total_chern(a, ring);
  const auto cb = schubfire::total_chern(b, ring);
  const auto cab = schubfire::total_chern(a + b, ring);
  for (int p = 0; p <= 8; ++p) {
    Polynomial acc = ring.zero();
    for (int i = 0; i <= p; ++i) acc += ca[static_cast<std::size_t>(i)] * cb[static_cast<std::size_t>(p - i)];
    EXPECT_EQ(cab[static_cast<std::size_t>(p)], acc);
  }
}

TEST(TotalChern, Duality) {
  const UniversalRing ring(3, 6);
  const BundleExpr e = BundleExpr::sym(2, kU);
  const auto c = schubfire::total_chern(e, ring);
  const auto cd = schubfire::total_chern(BundleExpr::dual(e), ring);
  EXPECT_EQ(schubfire::total_chern(BundleExpr::dual(BundleExpr::dual(e)), ring), c);
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(cd[i], i % 2 ? c[i] * BigInt(-1) : c[i]);
}

TEST(TotalChern, TwistMatchesRoots) {
  // U* (x) O(1) on rank 2: roots x1 + (x1 + x2), x2 + (x1 + x2)
  const UniversalRing ring(2, 4);
  const auto c = schubfire::total_chern(BundleExpr::twist(kU, LineClass{0, 1}), ring);
  const auto expected = oracle::chern_of_roots(2, 4, {{2, 1}, {1, 2}});
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(roots_of(c[i]).terms, expected[i].terms);
  EXPECT_EQ(schubfire::total_chern(BundleExpr::twist(kU, LineClass{0, 0}), ring), schubfire::total_chern(kU, ring));
}

TEST(TotalChern, TrivialAndLine) {
  const UniversalRing ring(2, 3);
  const auto t = schubfire::total_chern(BundleExpr::trivial(4), ring);
  EXPECT_EQ(t[0], ring.one());
  for (std::size_t i = 1; i < t.size(); ++i) EXPECT_TRUE(t[i].is_zero());
  const auto l = schubfire::total_chern(BundleExpr::line(LineClass{0, 3}), ring);
  EXPECT_EQ(l[1], ring.universal_chern(1) * BigInt(3));
  EXPECT_TRUE(l[2].is_zero());
}

TEST(CTopVirtual, HonestAndTrivialCases) {
  const auto ctx = GrassCtx::get(2, 6);
  const GrassRing ring(ctx);
  const BundleExpr a = BundleExpr::sym(2, kU);
  EXPECT_EQ(schubfire::c_top_virtual(a, BundleExpr::trivial(0), 6, ring), schubfire::c_top(a, ring));
  EXPECT_EQ(schubfire::c_top_virtual(a, a, 0, ring), ChowClass::one(ctx));
  EXPECT_THROW(schubfire::c_top_virtual(a, kU, 4, ring), std::invalid_argument);
  EXPECT_THROW(schubfire::c_top(a - kU, ring), std::invalid_argument);
}

TEST(CTop, RankEmptiness) {
  const auto ctx = GrassCtx::get(2, 4);
  EXPECT_TRUE(schubfire::c_top(BundleExpr::sym(2, kU), GrassRing(ctx)).is_zero());
  const auto big = GrassCtx::get(2, 6);
  EXPECT_EQ(schubfire::c_top(BundleExpr::sym(2, kU), GrassRing(big)),
            ChowClass::schubert(big, Partition({3, 2, 1})) * BigInt(8));
}

TEST(Rings, RejectZetaOnBase) {
  EXPECT_THROW(GrassRing(GrassCtx::get(1, 3)).line_class(LineClass::tautological()), std::invalid_argument);
  EXPECT_THROW(UniversalRing(2, 3).line_class(LineClass{1, 0}), std::invalid_argument);
}
