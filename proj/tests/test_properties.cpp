// Randomised invariants. Generators are small hand-written samplers over a fixed seed.

#include <gtest/gtest.h>

#include <random>

#include "hpa/pipeline.hpp"

using namespace hpa;
using Q = Rational;

namespace {

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Q rational() {
    long num = integer(-6, 6);
    long den = integer(1, 4);
    return Q(num, den);
  }
  Vec<Q> vec(std::size_t n) {
    Vec<Q> v(n);
    for (auto& x : v) x = integer(0, 3) == 0 ? Q(0) : rational();
    return v;
  }
  Matrix<Q> matrix(std::size_t r, std::size_t c) {
    std::vector<Vec<Q>> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(vec(c));
    // duplicate a combination now and then so rank deficiency is exercised
    if (r > 1 && coin()) rows.back() = rows[0] + scaled(rows[1 % r], rational());
    return Matrix<Q>::from_rows(rows, c);
  }
  GroupTable group() {
    static const char* names[] = {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "S3"};
    return group_by_name(names[integer(0, 6)]);
  }
  std::vector<std::size_t> subset_with_identity(const GroupTable& g) {
    std::vector<std::size_t> s{g.identity()};
    for (std::size_t x = 0; x < g.order(); ++x)
      if (x != g.identity() && coin()) s.push_back(x);
    return s;
  }
  /// Subgroup generated by a random element.
  std::vector<std::size_t> cyclic_subgroup(const GroupTable& g) {
    auto x = static_cast<std::size_t>(integer(0, static_cast<long>(g.order()) - 1));
    std::vector<std::size_t> s{g.identity()};
    for (auto y = x; y != g.identity(); y = g.mul(y, x)) s.push_back(y);
    return s;
  }

 private:
  std::mt19937 rng_;
};

constexpr int kTrials = 25;

}  // namespace

// ---------------------------------------------------------------------------
// Exact linear algebra

TEST(LinalgProperty, RankNullity) {
  Gen g(11);
  for (int t = 0; t < kTrials; ++t) {
    auto r = static_cast<std::size_t>(g.integer(1, 6)), c = static_cast<std::size_t>(g.integer(1, 6));
    auto m = g.matrix(r, c);
    auto k = kernel(m);
    EXPECT_EQ(rank(m) + k.dim(), c);
    EXPECT_EQ(rank(m), rank(m.transpose()));
    for (const auto& w : k.basis_vectors()) EXPECT_TRUE(is_zero(std::span<const Q>(m.apply(w))));
  }
}

TEST(LinalgProperty, RrefIsIdempotentAndCanonical) {
  Gen g(12);
  for (int t = 0; t < kTrials; ++t) {
    auto m = g.matrix(4, 5);
    auto once = rref(m);
    EXPECT_EQ(rref(once.matrix).matrix, once.matrix);
    // shuffling rows and adding multiples preserves the row space
    auto rows = std::vector<Vec<Q>>{};
    for (std::size_t i = 0; i < 4; ++i) rows.push_back(m.row_vec(3 - i));
    rows[0] = rows[0] + scaled(rows[2], g.rational());
    EXPECT_EQ(Subspace<Q>::from_matrix(m), Subspace<Q>::span(rows, 5));
  }
}

TEST(LinalgProperty, SolveAndInvert) {
  Gen g(13);
  for (int t = 0; t < kTrials; ++t) {
    auto n = static_cast<std::size_t>(g.integer(1, 5));
    auto m = g.matrix(n, n);
    auto x = g.vec(n);
    auto b = m.apply(x);
    auto sol = solve(m, std::span<const Q>(b));
    ASSERT_TRUE(sol);
    EXPECT_EQ(m.apply(*sol), b);
    if (rank(m) == n) {
      EXPECT_EQ(m * invert_matrix(m), Matrix<Q>::identity(n));
      EXPECT_EQ(*sol, x);
    } else {
      EXPECT_THROW(invert_matrix(m), SingularMatrix);
    }
  }
}

TEST(LinalgProperty, SumIntersectionDimensionFormula) {
  Gen g(14);
  for (int t = 0; t < kTrials; ++t) {
    auto s = Subspace<Q>::from_matrix(g.matrix(3, 5));
    auto u = Subspace<Q>::from_matrix(g.matrix(3, 5));
    EXPECT_EQ(subspace_sum(s, u).dim() + subspace_intersect(s, u).dim(), s.dim() + u.dim());
    EXPECT_TRUE(subspace_sum(s, u).contains(s));
    EXPECT_TRUE(s.contains(subspace_intersect(s, u)));
  }
}

TEST(LinalgProperty, PrimeFieldRankNeverExceedsRationalRank) {
  Gen g(15);
  for (int t = 0; t < kTrials; ++t) {
    std::vector<std::vector<long>> ints(4, std::vector<long>(4));
    for (auto& row : ints)
      for (auto& x : row) x = g.integer(-5, 5);
    std::vector<Vec<Q>> rq;
    for (auto& row : ints) {
      Vec<Q> r;
      for (auto x : row) r.emplace_back(x);
      rq.push_back(r);
    }
    auto rank_q = rank(Matrix<Q>::from_rows(rq, 4));
    ModP::Scope scope(3);
    std::vector<Vec<ModP>> rp;
    for (auto& row : ints) {
      Vec<ModP> r;
      for (auto x : row) r.emplace_back(x);
      rp.push_back(r);
    }
    EXPECT_LE(rank(Matrix<ModP>::from_rows(rp, 4)), rank_q);
  }
}

// ---------------------------------------------------------------------------
// Hopf structure on random elements

TEST(HopfProperty, BialgebraAndAntipodeOnRandomElements) {
  Gen g(21);
  std::vector<HopfAlgebra<Q>> hs{sweedler_h4<Q>(), dual_hopf(sweedler_h4<Q>()), group_algebra<Q>(symmetric_group_s3()),
                                 function_algebra<Q>(cyclic_group(4))};
  for (const auto& h : hs) {
    std::size_t n = h.dim();
    const auto& a = h.algebra;
    const auto& c = h.coalgebra;
    for (int t = 0; t < kTrials; ++t) {
      auto x = g.vec(n), y = g.vec(n), z = g.vec(n);
      EXPECT_EQ(a.multiply(a.multiply(x, y), z), a.multiply(x, a.multiply(y, z)));
      auto dxy = c.comultiply(a.multiply(x, y));
      auto dxdy = tensor_multiply(a, a, std::span<const Q>(c.comultiply(x)), std::span<const Q>(c.comultiply(y)));
      EXPECT_EQ(dxy, dxdy);
      EXPECT_EQ(c.apply_counit(a.multiply(x, y)), c.apply_counit(x) * c.apply_counit(y));
      // S is an anti-homomorphism
      EXPECT_EQ(h.antipode.apply(a.multiply(x, y)), a.multiply(h.antipode.apply(y), h.antipode.apply(x)));
    }
  }
}

TEST(HopfProperty, JsonRoundTripPreservesStructure) {
  Gen g(22);
  for (int t = 0; t < 5; ++t) {
    auto grp = g.group();
    auto h = g.coin() ? group_algebra<Q>(grp) : function_algebra<Q>(grp);
    auto back = hopf_from_json<Q>(hopf_to_json(h));
    EXPECT_EQ(back.algebra.mult, h.algebra.mult);
    EXPECT_EQ(back.coalgebra.comult, h.coalgebra.comult);
    EXPECT_EQ(back.antipode, h.antipode);
    EXPECT_EQ(hopf_to_json(back), hopf_to_json(h));
  }
}

// ---------------------------------------------------------------------------
// Partial actions of groups on k

TEST(PartialProperty, ScalarSupportIsPartialIffSubgroup) {
  Gen g(31);
  for (int t = 0; t < kTrials; ++t) {
    auto grp = g.group();
    auto s = g.subset_with_identity(grp);
    auto fx = scalar_partial<Q>(grp, s, false);
    EXPECT_EQ(verify_partial_action(*fx.action).ok(), grp.is_subgroup(s)) << grp.name() << " " << join_indices(s);
  }
}

TEST(PartialProperty, ScalarGlobalizationHasIndexDimension) {
  Gen g(32);
  for (int t = 0; t < kTrials; ++t) {
    auto grp = g.group();
    auto n = g.cyclic_subgroup(grp);
    auto fx = scalar_partial<Q>(grp, n);
    auto res = enveloping_action(*fx.action);
    EXPECT_EQ(res.b.dim() * n.size(), grp.order()) << grp.name();
    EXPECT_TRUE(verify_global_action(res.global).ok());
    EXPECT_EQ(acts_globally(*fx.action), n.size() == grp.order());
  }
}

TEST(PartialProperty, ConversionRoundTrip) {
  Gen g(33);
  for (int t = 0; t < kTrials; ++t) {
    auto grp = g.group();
    auto fx = scalar_partial<Q>(grp, g.cyclic_subgroup(grp));
    auto x = action_coaction_convert(*fx.action);
    EXPECT_TRUE(verify_partial_coaction(x).ok());
    EXPECT_EQ(coaction_action_convert(x).act, fx.action->act);
  }
}

TEST(PartialProperty, Example2ForRandomAlpha) {
  Gen g(34);
  for (int t = 0; t < 10; ++t) {
    auto alpha = g.rational();
    auto fx = example2<Q>(alpha);
    auto co = enveloping_coaction(*fx.coaction);
    EXPECT_EQ(co.b.dim(), 2u);
    EXPECT_TRUE(is_idempotent(co.ambient, example2_idempotent<Q>(alpha)));
    auto act = enveloping_action(coaction_action_convert(*fx.coaction));
    EXPECT_TRUE(psi_compatibility(co, act).ok());
  }
}

// ---------------------------------------------------------------------------
// Duality on translation actions with a random central idempotent

TEST(DualityProperty, KernelVanishesIffUnitIsGlobal) {
  Gen g(41);
  for (int t = 0; t < 8; ++t) {
    auto grp = group_by_name(g.coin() ? "Z2" : "Z3");
    auto b = translation_action<Q>(grp);
    Vec<Q> au(grp.order(), Q(0));
    au[grp.identity()] = Q(1);
    for (std::size_t x = 0; x < grp.order(); ++x)
      if (g.coin()) au[x] = Q(1);
    auto dec = bm_phi_psi(b, au);
    EXPECT_TRUE(dec.report.ok());
    auto res = bm_restricted(dec, induced_partial_action(b, au).action);
    EXPECT_TRUE(res.report.ok());
    EXPECT_EQ(res.kernel, res.ideal_kernel);
    EXPECT_EQ(res.ideal_plus.dim() + res.ideal_kernel.dim(), res.partial.dim());
    bool global = au == b.carrier.one();
    EXPECT_EQ(res.kernel.is_zero(), global);
    EXPECT_EQ(res.acts_globally, global);
  }
}

// ---------------------------------------------------------------------------
// Reports

TEST(ReportProperty, JsonIsDeterministic) {
  for (const auto& id : {std::string("example2:1"), std::string("scalar:Z3:e")}) {
    auto b = Bundle<Q>::from_json(fixture_bundle<Q>(id));
    EXPECT_EQ(run_example(b).emit("json"), run_example(b).emit("json"));
  }
}

TEST(ReportProperty, GlobalizedBundleReloadsAndVerifies) {
  for (const auto& id : fixture_ids()) {
    auto b = Bundle<Q>::from_json(fixture_bundle<Q>(id));
    if (!b.partial_action && !b.partial_coaction) continue;
    auto r = run_globalize(b, b.partial_coaction ? "coaction" : "action");
    ASSERT_TRUE(r.ok()) << id;
    auto again = Bundle<Q>::from_json(r.data.at("bundle"));
    EXPECT_TRUE(run_verify(again).ok()) << id;
  }
}
