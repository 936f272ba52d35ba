#include <gtest/gtest.h>

#include "hpa/algebra.hpp"
#include "hpa/catalog.hpp"
#include "hpa/exactlin.hpp"
#include "hpa/field.hpp"

using namespace hpa;
using Q = Rational;

namespace {

Vec<Q> v(std::initializer_list<long> xs) {
  Vec<Q> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

Matrix<Q> rows(std::initializer_list<std::initializer_list<long>> rs, std::size_t cols) {
  std::vector<Vec<Q>> out;
  for (auto r : rs) out.push_back(v(r));
  return Matrix<Q>::from_rows(out, cols);
}

// span{x, x²} in k[x]/(x³): no unit.
Algebra<Q> nilpotent_algebra() {
  auto a = truncated_polynomials<Q>(3);
  return restrict_algebra(a, Subspace<Q>::span({a.basis(1), a.basis(2)}, 3));
}

}  // namespace

// ---------------------------------------------------------------------------
// Fields

TEST(Rational, ParsesAndNormalises) {
  EXPECT_EQ(Q::parse("2/4"), Q(1, 2));
  EXPECT_EQ(Q::parse("-3"), Q(-3));
  EXPECT_EQ(Q::parse("6/-4").str(), "-3/2");
  EXPECT_EQ(Q::parse("0/5").str(), "0");
}

TEST(Rational, RejectsZeroDenominatorAndGarbage) {
  EXPECT_THROW(Q::parse("1/0"), ParseError);
  EXPECT_THROW(Q::parse("abc"), ParseError);
  EXPECT_THROW(Q(1, 0), ParseError);
}

TEST(Rational, FieldOperations) {
  Q a(2, 3), b(-5, 7);
  EXPECT_EQ(a * b, Q(-10, 21));
  EXPECT_EQ(a + b, Q(-1, 21));
  EXPECT_EQ(a / a, Q(1));
  EXPECT_THROW(a / Q(0), DomainError);
}

TEST(ModP, ArithmeticModSeven) {
  ModP::Scope scope(7);
  ModP a = ModP::parse("3"), b = ModP::parse("5");
  EXPECT_EQ((a * b).value(), 1u);
  EXPECT_EQ((a + b).value(), 1u);
  EXPECT_EQ(ModP::parse("1/2").value(), 4u);
  EXPECT_EQ(ModP::parse("-1").value(), 6u);
  EXPECT_EQ(ModP::field_name(), "fp:7");
  EXPECT_THROW(ModP::parse("1/7"), ParseError);
}

TEST(ModP, RejectsComposite) {
  EXPECT_FALSE(ModP::is_prime(9));
  EXPECT_TRUE(ModP::is_prime(101));
  EXPECT_THROW(ModP::Scope(12), ParseError);
}

TEST(ModP, ScopeRestoresPreviousModulus) {
  ModP::Scope outer(5);
  {
    ModP::Scope inner(3);
    EXPECT_EQ(ModP::modulus(), 3u);
  }
  EXPECT_EQ(ModP::modulus(), 5u);
}

// ---------------------------------------------------------------------------
// Exact linear algebra

TEST(Rref, CanonicalForm) {
  auto m = rows({{2, 4, 2}, {1, 2, 3}, {3, 6, 5}}, 3);
  auto r = rref(m);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(r.matrix.row_vec(0), v({1, 2, 0}));
  EXPECT_EQ(r.matrix.row_vec(1), v({0, 0, 1}));
}

TEST(Subspace, EqualityIsBasisIndependent) {
  auto s = Subspace<Q>::span({v({1, 1, 0}), v({0, 1, 1})}, 3);
  auto t = Subspace<Q>::span({v({1, 2, 1}), v({1, 0, -1}), v({2, 2, 0})}, 3);
  EXPECT_EQ(s, t);
  EXPECT_TRUE(s.contains(v({3, 5, 2})));
  EXPECT_FALSE(s.contains(v({1, 0, 0})));
}

TEST(Subspace, CoordinatesRoundTrip) {
  auto s = Subspace<Q>::span({v({1, 1, 0, 2}), v({0, 1, 1, 0})}, 4);
  Vec<Q> w = v({2, 5, 3, 4});
  auto c = s.coordinates(w);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(s.combine(*c), w);
}

TEST(Subspace, SumAndIntersection) {
  auto s = Subspace<Q>::span({v({1, 0, 0}), v({0, 1, 0})}, 3);
  auto t = Subspace<Q>::span({v({0, 1, 0}), v({0, 0, 1})}, 3);
  EXPECT_EQ(subspace_sum(s, t).dim(), 3u);
  EXPECT_EQ(subspace_intersect(s, t), Subspace<Q>::span({v({0, 1, 0})}, 3));
}

TEST(Subspace, AmbientMismatchThrows) {
  auto s = Subspace<Q>::full(2);
  auto t = Subspace<Q>::full(3);
  EXPECT_THROW(subspace_sum(s, t), DimensionMismatch);
}

TEST(Kernel, NullspaceOfRankOneMatrix) {
  auto m = rows({{1, 2, 3}, {2, 4, 6}}, 3);
  auto k = kernel(m);
  EXPECT_EQ(k.dim(), 2u);
  for (const auto& w : k.basis_vectors()) EXPECT_TRUE(is_zero(std::span<const Q>(m.apply(w))));
}

TEST(Solve, ConsistentAndInconsistent) {
  auto m = rows({{1, 1}, {1, -1}}, 2);
  auto x = solve(m, std::span<const Q>(v({3, 1})));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, v({2, 1}));
  auto sing = rows({{1, 1}, {2, 2}}, 2);
  EXPECT_FALSE(solve(sing, std::span<const Q>(v({1, 0}))).has_value());
}

TEST(Invert, InverseAndSingular) {
  auto m = rows({{2, 1}, {1, 1}}, 2);
  EXPECT_EQ(m * invert_matrix(m), Matrix<Q>::identity(2));
  EXPECT_THROW(invert_matrix(rows({{1, 2}, {2, 4}}, 2)), SingularMatrix);
}

// ---------------------------------------------------------------------------
// Algebra core

TEST(Sweedler, PassesEveryAxiom) {
  auto h = sweedler_h4<Q>();
  auto r = verify_structure(h);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(h.dim(), 4u);
}

TEST(Sweedler, AntipodeHasOrderFour) {
  auto h = sweedler_h4<Q>();
  auto s2 = h.antipode * h.antipode;
  EXPECT_NE(s2, Matrix<Q>::identity(4));
  EXPECT_EQ(s2 * s2, Matrix<Q>::identity(4));
  EXPECT_EQ(h.antipode_inverse, s2 * h.antipode);
}

TEST(Sweedler, NegatedXAntipodeFails) {
  auto h = sweedler_h4<Q>();
  auto s = h.antipode;
  // S(x) = −x, hence S(cx) = S(x)S(c) = cx
  s(3, 2) = Q(0);
  s(2, 2) = Q(-1);
  s(2, 3) = Q(0);
  s(3, 3) = Q(1);
  auto bad = HopfAlgebra<Q>::make(h.algebra, h.coalgebra, s);
  auto r = verify_structure(bad);
  EXPECT_FALSE(r.passed("antipode"));
}

TEST(Sweedler, SelfDualDimension) {
  auto h = sweedler_h4<Q>();
  auto d = dual_hopf(h);
  EXPECT_TRUE(verify_structure(d).ok());
  auto dd = dual_hopf(d);
  EXPECT_EQ(dd.algebra.mult, h.algebra.mult);
  EXPECT_EQ(dd.coalgebra.comult, h.coalgebra.comult);
}

TEST(VerifyAlgebra, DetectsNonAssociativity) {
  auto a = truncated_polynomials<Q>(3);
  a.mult[1 * 3 + 1] = {{0, Q(1)}};  // x·x = 1 while x·x² = 0
  EXPECT_FALSE(verify_algebra(a).passed("associativity"));
}

TEST(VerifyAlgebra, FailureNamesTheBasisTuple) {
  auto a = truncated_polynomials<Q>(2);
  a.mult[0] = {};
  auto r = verify_algebra(a);
  ASSERT_FALSE(r.ok());
  bool detailed = false;
  for (const auto& c : r.failures()) detailed = detailed || !c.detail.empty();
  EXPECT_TRUE(detailed);
}

TEST(TensorProduct, DimensionAndUnit) {
  auto a = truncated_polynomials<Q>(2);
  auto b = group_algebra<Q>(cyclic_group(3)).algebra;
  auto t = tensor_product_algebra(a, b);
  EXPECT_EQ(t.dim, 6u);
  EXPECT_TRUE(verify_algebra(t).ok());
  EXPECT_EQ(t.one(), tensor_vectors<Q>(a.one(), b.one()));
}

TEST(EndAlgebra, MatrixUnitsMultiply) {
  auto e = end_algebra<Q>(3);
  auto e01 = end_coordinates(rows({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}, 3));
  auto e12 = end_coordinates(rows({{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}, 3));
  auto e02 = end_coordinates(rows({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}, 3));
  EXPECT_EQ(e.multiply(e01, e12), e02);
  EXPECT_TRUE(is_zero(std::span<const Q>(e.multiply(e12, e01))));
}

TEST(OppositeAlgebra, ReversesProducts) {
  auto e = end_algebra<Q>(2);
  auto op = opposite_algebra(e);
  auto a = e.basis(1), b = e.basis(2);
  EXPECT_EQ(op.multiply(a, b), e.multiply(b, a));
}

TEST(FindUnit, RecoversForgottenUnit) {
  auto a = group_algebra<Q>(symmetric_group_s3()).algebra;
  auto u = *a.unit;
  a.unit.reset();
  auto found = find_unit(a);
  ASSERT_TRUE(found);
  EXPECT_EQ(*found, u);
  EXPECT_FALSE(find_unit(nilpotent_algebra()).has_value());
}

TEST(RestrictAlgebra, IdealOfGroupAlgebra) {
  auto a = group_algebra<Q>(cyclic_group(2)).algebra;
  Vec<Q> e{Q(1, 2), Q(1, 2)};
  EXPECT_TRUE(is_idempotent(a, e));
  EXPECT_TRUE(is_central(a, e));
  auto ideal = principal_ideal(a, e, true);
  EXPECT_EQ(ideal.dim(), 1u);
  auto r = restrict_algebra(a, ideal);
  ASSERT_TRUE(r.unit);
  EXPECT_TRUE(verify_algebra(r).ok());
}

TEST(CheckIsomorphism, SwapOfFunctionAlgebra) {
  auto k2 = function_algebra<Q>(cyclic_group(2)).algebra;
  LinearMap<Q> swap(rows({{0, 1}, {1, 0}}, 2));
  EXPECT_TRUE(check_isomorphism(swap, k2, k2).ok());
  LinearMap<Q> collapse(rows({{1, 1}, {0, 0}}, 2));
  EXPECT_FALSE(check_isomorphism(collapse, k2, k2).ok());
}

TEST(SubalgebraGenerated, DualNumbersFromNilpotent) {
  auto a = truncated_polynomials<Q>(4);
  auto s = subalgebra_generated(a, Subspace<Q>::span({a.basis(2)}, 4), false);
  EXPECT_EQ(s.dim(), 1u);  // x²·x² = 0
  auto t = subalgebra_generated(a, Subspace<Q>::span({a.basis(1)}, 4), true);
  EXPECT_EQ(t.dim(), 4u);
}

// ---------------------------------------------------------------------------
// Catalog

TEST(Groups, CayleyValidation) {
  EXPECT_EQ(cyclic_group(5).order(), 5u);
  EXPECT_EQ(symmetric_group_s3().order(), 6u);
  EXPECT_THROW(GroupTable::from_cayley({{0, 1}, {0, 1}}, {}, "bad"), InvalidGroup);
  EXPECT_THROW(GroupTable::from_cayley({}, {}, "empty"), InvalidGroup);
  EXPECT_THROW(group_by_name("Q8"), ParseError);
  EXPECT_THROW(group_by_name("Z0"), InvalidGroup);
}

TEST(Groups, SubgroupPredicates) {
  auto s3 = symmetric_group_s3();
  auto a3 = subset_by_name(s3, "A3");
  EXPECT_EQ(a3.size(), 3u);
  EXPECT_TRUE(s3.is_normal_subgroup(a3));
  std::vector<std::size_t> transposition{s3.identity(), 1};
  EXPECT_TRUE(s3.is_subgroup(transposition));
  EXPECT_FALSE(s3.is_normal_subgroup(transposition));
}

TEST(Catalog, EveryHopfAlgebraVerifies) {
  for (const char* name : {"Z2", "Z3", "Z4", "S3"}) {
    auto g = group_by_name(name);
    EXPECT_TRUE(verify_structure(group_algebra<Q>(g)).ok()) << name;
    EXPECT_TRUE(verify_structure(function_algebra<Q>(g)).ok()) << name;
  }
}

TEST(Catalog, GroupAlgebraDualIsFunctionAlgebra) {
  auto g = symmetric_group_s3();
  auto d = dual_hopf(group_algebra<Q>(g));
  auto f = function_algebra<Q>(g);
  EXPECT_EQ(d.algebra.mult, f.algebra.mult);
  EXPECT_EQ(d.coalgebra.comult, f.coalgebra.comult);
}

TEST(Catalog, Example2FixtureShape) {
  auto fx = example2<Q>(Q(1));
  ASSERT_TRUE(fx.coaction);
  EXPECT_EQ(fx.carrier.dim, 1u);
  EXPECT_EQ(fx.hopf.dim(), 4u);
  EXPECT_EQ(fx.expected.at("globalization_dim"), "2");
  EXPECT_TRUE(is_idempotent(tensor_product_algebra(fx.carrier, fx.hopf.algebra), example2_idempotent<Q>(Q(1))));
}

TEST(Catalog, Example1RejectsNonNormal) {
  auto s3 = symmetric_group_s3();
  EXPECT_THROW(example1<Q>(s3, {s3.identity(), 1}), PreconditionViolation);
}

TEST(Catalog, Example1CosetBasis) {
  auto fx = example1<Q>(cyclic_group(4), {0, 2});
  EXPECT_EQ(fx.coset_reps, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(fx.coset_of, (std::vector<std::size_t>{0, 1, 0, 1}));
  EXPECT_EQ(fx.fixture.carrier.dim, 2u);
}

TEST(Catalog, ScalarPartialWithoutIdentityIsRejected) {
  auto z3 = cyclic_group(3);
  EXPECT_THROW(scalar_partial<Q>(z3, {1}), VerificationFailure);
  EXPECT_NO_THROW(scalar_partial<Q>(z3, {1}, false));
}

TEST(Catalog, UnitizationAddsUnit) {
  auto t = translation_action<Q>(cyclic_group(2));
  auto nil = nilpotent_algebra();
  auto triv = trivial_action(group_algebra<Q>(cyclic_group(2)), nil);
  EXPECT_FALSE(triv.carrier.is_unital());
  auto u = unitization(triv);
  EXPECT_TRUE(u.carrier.is_unital());
  EXPECT_EQ(u.adim(), nil.dim + 1);
  EXPECT_TRUE(verify_global_action(u).ok());
  EXPECT_EQ(unitization(t).adim(), 3u);
}
