#include <gtest/gtest.h>

#include <random>

#include "schubfire/errors.hpp"
#include "schubfire/bundle.hpp"
#include "schubfire/projective_bundle.hpp"

using schubfire::BigInt;
using schubfire::BundleExpr;
using schubfire::ChowClass;
using schubfire::GrassCtx;
using schubfire::GrassRing;
using schubfire::LineClass;
using schubfire::Partition;
using schubfire::PBClass;
using schubfire::PBCtx;
using schubfire::PBRing;

namespace {

const BundleExpr kU = BundleExpr::universal_dual();

ChowClass random_class(const schubfire::GrassCtxPtr& ctx, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> pick(0, ctx->basis_size() - 1);
  ChowClass out = ChowClass::zero(ctx);
  for (int t = 0; t < 3; ++t) out += ChowClass::schubert(ctx, ctx->basis(pick(rng))) * BigInt(coeff(rng));
  return out;
}

}  // namespace

TEST(PBCtx, Shape) {
  const auto base = GrassCtx::get(2, 5);
  const auto pb = PBCtx::make(base, BundleExpr::sym(2, kU));
  EXPECT_EQ(pb->rank(), 6);
  EXPECT_EQ(pb->dim(), base->dim() + 5);
  EXPECT_EQ(pb->chern().size(), 7u);
  EXPECT_THROW(PBCtx::make(base, BundleExpr::trivial(0)), std::invalid_argument);
  EXPECT_THROW(PBCtx::make(base, kU - kU), std::invalid_argument);
}

TEST(PBClass, Unit) {
  const auto pb = PBCtx::make(GrassCtx::get(1, 3), kU);
  const PBClass a = PBClass::zeta_power(pb, 1) + schubfire::pullback(ChowClass::schubert(pb->base(), Partition({1})), pb);
  EXPECT_EQ(PBClass::one(pb) * a, a);
  EXPECT_EQ(schubfire::pb_mul(a, PBClass::one(pb)), a);
}

TEST(PBClass, TrivialBundleRelation) {
  const auto pb = PBCtx::make(GrassCtx::get(1, 3), BundleExpr::trivial(3));
  EXPECT_TRUE((PBClass::zeta_power(pb, 2) * PBClass::zeta_power(pb, 1)).is_zero());
  EXPECT_FALSE(PBClass::zeta_power(pb, 2).is_zero());
}

TEST(PBClass, RankTwoRelation) {
  // (zeta + c1) * zeta = zeta^2 + c1 zeta = -c2
  const auto base = GrassCtx::get(1, 4);
  const auto pb = PBCtx::make(base, kU);
  const PBClass c1 = schubfire::pullback(pb->chern()[1], pb);
  const PBClass lhs = (PBClass::zeta_power(pb, 1) + c1) * PBClass::zeta_power(pb, 1);
  EXPECT_EQ(lhs, schubfire::pullback(pb->chern()[2] * BigInt(-1), pb));
  EXPECT_EQ(lhs.coefficients().size(), 2u);
  EXPECT_TRUE(lhs.coefficient(1).is_zero());
}

TEST(PBClass, PushforwardBasics) {
  const auto base = GrassCtx::get(2, 5);
  const auto pb = PBCtx::make(base, BundleExpr::sym(2, kU));
  const int e = pb->rank();
  std::mt19937 rng(2);
  const ChowClass alpha = random_class(base, rng);
  const PBClass up = schubfire::pullback(alpha, pb);
  EXPECT_EQ(schubfire::pushforward(up * PBClass::zeta_power(pb, e - 1)), alpha);
  EXPECT_TRUE(schubfire::pushforward(up * PBClass::zeta_power(pb, e - 2)).is_zero());
  EXPECT_EQ(schubfire::pushforward(PBClass::zeta_power(pb, e)), pb->chern()[1] * BigInt(-1));
}

TEST(PBClass, PullbackBasics) {
  const auto base = GrassCtx::get(1, 3);
  const auto pb = PBCtx::make(base, BundleExpr::sym(2, kU));
  EXPECT_TRUE(schubfire::pullback(ChowClass::zero(base), pb).is_zero());
  EXPECT_EQ(schubfire::pullback(ChowClass::one(base), pb), PBClass::one(pb));
  EXPECT_THROW(schubfire::pullback(ChowClass::one(GrassCtx::get(1, 4)), pb), schubfire::ContextMismatch);
}

TEST(PBClass, RelationKill) {
  const auto base = GrassCtx::get(2, 5);
  const auto pb = PBCtx::make(base, BundleExpr::sym(2, kU));
  const int e = pb->rank();
  PBClass rel(pb);
  for (int i = 0; i <= e; ++i) rel += schubfire::pullback(pb->chern()[static_cast<std::size_t>(i)], pb) * PBClass::zeta_power(pb, e - i);
  EXPECT_TRUE(rel.is_zero());
  EXPECT_TRUE(schubfire::pushforward(rel).is_zero());
}

TEST(PBClass, ProjectionFormula) {
  const auto base = GrassCtx::get(2, 5);
  const auto pb = PBCtx::make(base, BundleExpr::sym(2, kU) + kU);
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> power(0, 12);
  for (int trial = 0; trial < 15; ++trial) {
    const ChowClass alpha = random_class(base, rng);
    const PBClass a = schubfire::pullback(random_class(base, rng), pb) * PBClass::zeta_power(pb, power(rng)) +
                      PBClass::zeta_power(pb, power(rng));
    EXPECT_EQ(schubfire::pushforward(schubfire::pullback(alpha, pb) * a), alpha * schubfire::pushforward(a));
  }
}

TEST(PBClass, PushforwardGivesSegre) {
  for (const BundleExpr& bundle : {kU, BundleExpr::sym(2, kU), BundleExpr::dual(kU) + BundleExpr::trivial(1)}) {
    const auto base = GrassCtx::get(2, 6);
    const auto pb = PBCtx::make(base, bundle);
    const auto s = schubfire::segre(bundle, GrassRing(base));
    for (int i = 0; i <= base->dim(); ++i) {
      EXPECT_EQ(schubfire::pushforward(PBClass::zeta_power(pb, pb->rank() - 1 + i)), s[static_cast<std::size_t>(i)])
          << bundle.to_string() << " i=" << i;
    }
  }
}

TEST(PBRing, TautologicalLine) {
  const auto pb = PBCtx::make(GrassCtx::get(1, 3), BundleExpr::sym(2, kU));
  const PBRing ring(pb);
  const auto c = schubfire::total_chern(BundleExpr::line(LineClass::tautological()), ring);
  EXPECT_EQ(c[1], PBClass::zeta_power(pb, 1) * BigInt(-1));
  EXPECT_TRUE(c[2].is_zero());
}

TEST(PBRing, UniversalQuotientPushesToOne) {
  // c_2(pi^*U* / T) = zeta^2 + c1 zeta + c2 on P(U*) over G(3, n+1)
  const auto base = GrassCtx::get(2, 5);
  const auto pb = PBCtx::make(base, kU);
  const PBRing ring(pb);
  const BundleExpr quotient = BundleExpr::pullback(kU) - BundleExpr::line(LineClass::tautological());
  const PBClass q = schubfire::c_top_virtual(quotient, 2, ring);
  const PBClass expected = PBClass::zeta_power(pb, 2) + schubfire::pullback(pb->chern()[1], pb) * PBClass::zeta_power(pb, 1) +
                           schubfire::pullback(pb->chern()[2], pb);
  EXPECT_EQ(q, expected);
  EXPECT_EQ(schubfire::pushforward(q), ChowClass::one(base));
}

TEST(PBRing, MixedContextsRejected) {
  const auto base = GrassCtx::get(1, 3);
  const auto a = PBCtx::make(base, kU);
  const auto b = PBCtx::make(base, kU);
  EXPECT_THROW(PBClass::one(a) + PBClass::one(b), schubfire::ContextMismatch);
}
