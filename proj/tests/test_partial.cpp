#include <gtest/gtest.h>

#include "hpa/catalog.hpp"
#include "hpa/globalize.hpp"
#include "hpa/partial.hpp"

using namespace hpa;
using Q = Rational;

namespace {

Vec<Q> v(std::initializer_list<long> xs) {
  Vec<Q> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Partial (co)actions

TEST(PartialAction, ScalarOnSubgroupIsPartial) {
  auto s3 = symmetric_group_s3();
  auto fx = scalar_partial<Q>(s3, subset_by_name(s3, "A3"));
  ASSERT_TRUE(fx.action);
  EXPECT_TRUE(verify_partial_action(*fx.action).ok());
  EXPECT_FALSE(acts_globally(*fx.action));
  EXPECT_EQ(fx.expected.at("support_is_subgroup"), "true");
}

TEST(PartialAction, ScalarOnWholeGroupIsGlobal) {
  auto z3 = cyclic_group(3);
  auto fx = scalar_partial<Q>(z3, subset_by_name(z3, "G"));
  EXPECT_TRUE(acts_globally(*fx.action));
  EXPECT_TRUE(verify_global_action(*fx.action).ok());
}

TEST(PartialAction, NonSubgroupSupportFailsAxiom) {
  auto z4 = cyclic_group(4);
  auto fx = scalar_partial<Q>(z4, {0, 1}, false);
  auto r = verify_partial_action(*fx.action);
  EXPECT_FALSE(r.ok());
}

TEST(PartialAction, GlobalVerifierRejectsStrictlyPartial) {
  auto z2 = cyclic_group(2);
  auto fx = scalar_partial<Q>(z2, {z2.identity()});
  EXPECT_FALSE(verify_global_action(*fx.action).ok());
}

TEST(PartialCoaction, Example2AllAlphas) {
  for (long al : {0L, 1L, 2L, -3L}) {
    auto fx = example2<Q>(Q(al));
    EXPECT_TRUE(verify_partial_coaction(*fx.coaction).ok()) << al;
    EXPECT_FALSE(verify_global_coaction(*fx.coaction).ok()) << al;
  }
}

TEST(PartialCoaction, Example3AndExample1) {
  EXPECT_TRUE(verify_partial_coaction(*example3<Q>().coaction).ok());
  auto fx = example1<Q>(cyclic_group(4), {0, 2});
  EXPECT_TRUE(verify_partial_coaction(*fx.fixture.coaction).ok());
}

TEST(PartialCoaction, CorruptedEntryIsCaught) {
  auto co = *example2<Q>(Q(1)).coaction;
  co.coact[0][0] = Q(2);
  EXPECT_FALSE(verify_partial_coaction(co).ok());
}

TEST(Pairing, CanonicalPairingIsNondegenerate) {
  auto p = canonical_pairing(sweedler_h4<Q>());
  EXPECT_TRUE(verify_pairing(p).ok());
  EXPECT_TRUE(pairing_nondegenerate(p));
}

TEST(Conversion, RoundTripIsIdentity) {
  auto fx = example3<Q>();
  auto p = coaction_action_convert(*fx.coaction);
  EXPECT_TRUE(verify_partial_action(p).ok());
  EXPECT_EQ(p.hdim(), 4u);
  auto back = action_coaction_convert(p);
  EXPECT_EQ(back.coact, fx.coaction->coact);
}

TEST(Conversion, GlobalCoactionGivesGlobalAction) {
  auto t = translation_action<Q>(cyclic_group(3));
  auto co = comodule_from_action(t);
  EXPECT_TRUE(verify_global_coaction(co).ok());
  auto again = global_action_from_coaction(co);
  EXPECT_EQ(again.act, t.act);
}

TEST(InducedAction, UnitalIdealOfSwap) {
  auto t = translation_action<Q>(cyclic_group(2));
  auto ideal = unital_right_ideal(t.carrier, v({1, 0}));
  EXPECT_EQ(ideal.ideal.dim(), 1u);
  auto ind = induced_partial_action(t, v({1, 0}));
  EXPECT_TRUE(verify_partial_action(ind.action).ok());
  EXPECT_FALSE(acts_globally(ind.action));
}

TEST(InducedAction, RejectsNonIdempotentUnit) {
  auto t = translation_action<Q>(cyclic_group(2));
  EXPECT_THROW(induced_partial_action(t, v({2, 0})), PreconditionViolation);
}

TEST(InducedCoaction, FromGlobalizationRecoversExample2) {
  auto fx = example2<Q>(Q(2));
  auto res = enveloping_coaction(*fx.coaction);
  auto ind = induced_partial_coaction(res.global, res.a_unit);
  EXPECT_TRUE(verify_partial_coaction(ind.coaction).ok());
  EXPECT_EQ(ind.coaction.adim(), 1u);
}

// ---------------------------------------------------------------------------
// Globalization

TEST(EnvelopingCoaction, Example2DimensionAndBasis) {
  for (long al : {0L, 1L, 2L}) {
    auto res = enveloping_coaction(*example2<Q>(Q(al)).coaction);
    EXPECT_EQ(res.b.dim(), 2u);
    EXPECT_TRUE(res.b.contains(example2_idempotent<Q>(Q(al))));
    EXPECT_TRUE(res.certificate.ok());
    EXPECT_TRUE(verify_global_coaction(res.global).ok());
  }
}

TEST(EnvelopingCoaction, Example3IsFourDimensional) {
  auto res = enveloping_coaction(*example3<Q>().coaction);
  EXPECT_EQ(res.b.dim(), 4u);
  EXPECT_EQ(res.ambient.dim, 8u);
  EXPECT_TRUE(res.global.carrier.is_unital());
}

TEST(EnvelopingCoaction, Example1HasDimensionOfG) {
  auto s3 = symmetric_group_s3();
  auto fx = example1<Q>(s3, subset_by_name(s3, "A3"));
  auto res = enveloping_coaction(*fx.fixture.coaction);
  EXPECT_EQ(res.b.dim(), 6u);
  EXPECT_EQ(res.b, fx.candidate.image());
}

TEST(EnvelopingCoaction, AmbientCandidateFailsMinimality) {
  auto fx = example2<Q>(Q(1));
  auto full = Subspace<Q>::full(4);
  auto r = verify_globalization(*fx.coaction, full);
  EXPECT_FALSE(r.passed("right_ideal"));
  EXPECT_FALSE(r.passed("generated"));
}

TEST(EnvelopingCoaction, SeedMustBeSubalgebra) {
  auto fx = example2<Q>(Q(1));
  auto amb = trivial_comodule(fx.hopf, fx.carrier);
  auto seed = Subspace<Q>::span({v({0, 0, 1, 0})}, 4);  // x alone: x² = 0 is fine
  EXPECT_NO_THROW(comodule_generated(amb, seed));
  auto bad = Subspace<Q>::span({v({0, 1, 1, 0})}, 4);  // (c+x)² = 1 + cx + xc ∉ span
  EXPECT_THROW(comodule_generated(amb, bad), SeedNotSubalgebra);
}

TEST(EnvelopingAction, ScalarPartialDimensions) {
  auto z2 = cyclic_group(2);
  auto res = enveloping_action(*scalar_partial<Q>(z2, {z2.identity()}).action);
  EXPECT_EQ(res.b.dim(), 2u);
  EXPECT_TRUE(verify_global_action(res.global).ok());
  auto s3 = symmetric_group_s3();
  auto r3 = enveloping_action(*scalar_partial<Q>(s3, subset_by_name(s3, "A3")).action);
  EXPECT_EQ(r3.b.dim(), 2u);  // |S3 : A3|
}

TEST(EnvelopingAction, GlobalInputIsItsOwnGlobalization) {
  auto z3 = cyclic_group(3);
  auto fx = scalar_partial<Q>(z3, subset_by_name(z3, "G"));
  auto res = enveloping_action(*fx.action);
  EXPECT_EQ(res.b.dim(), 1u);
}

TEST(EnvelopingAction, InducedActionRecoversInput) {
  auto fx = example1<Q>(cyclic_group(4), {0, 2});
  auto p = coaction_action_convert(*fx.fixture.coaction);
  auto res = enveloping_action(p);
  auto ind = induced_partial_action(res.global, res.a_unit);
  EXPECT_EQ(ind.action.adim(), p.adim());
  EXPECT_TRUE(res.certificate.passed("induced_action"));
}

TEST(PsiCompatibility, Example2And3) {
  for (auto fx : {example2<Q>(Q(0)), example2<Q>(Q(1)), example3<Q>()}) {
    auto co = enveloping_coaction(*fx.coaction);
    auto act = enveloping_action(coaction_action_convert(*fx.coaction));
    auto r = psi_compatibility(co, act);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(co.b.dim(), act.b.dim());
  }
}

TEST(Globalization, WorksOverPrimeField) {
  ModP::Scope scope(5);
  auto res = enveloping_coaction(*example3<ModP>().coaction);
  EXPECT_EQ(res.b.dim(), 4u);
  auto r2 = enveloping_coaction(*example2<ModP>(ModP(3)).coaction);
  EXPECT_EQ(r2.b.dim(), 2u);
}

TEST(Globalization, SweedlerNeedsOddCharacteristic) {
  ModP::Scope scope(2);
  EXPECT_THROW(sweedler_h4<ModP>(), BadCharacteristic);
}
