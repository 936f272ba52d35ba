// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hpa/pipeline.hpp"

using namespace hpa;
using Q = Rational;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
  void expect(const VerificationReport& r, const std::string& what) {
    for (const auto& c : r.failures()) expect(false, what + "." + c.name);
  }
};

Vec<Q> v(std::initializer_list<long> xs) {
  Vec<Q> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

// Multiplicativity on every basis pair, checked entrywise here rather than through check_isomorphism.
bool multiplicative_on_pairs(const LinearMap<Q>& f, const Algebra<Q>& a, const Algebra<Q>& b, std::size_t& pairs) {
  pairs = 0;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j, ++pairs)
      if (f(a.multiply(a.basis(i), a.basis(j))) != b.multiply(f(a.basis(i)), f(a.basis(j)))) return false;
  return true;
}

Outcome criterion1() {
  Outcome o;
  for (long al : {0L, 1L, 2L}) {
    auto fx = example2<Q>(Q(al));
    auto res = enveloping_coaction(*fx.coaction);
    auto tag = "alpha=" + std::to_string(al);
    o.expect(res.b.dim() == 2, tag + " dim B");
    // f = ½(1+c+αcx) in A⊗H4 with A = k
    Vec<Q> f{Q(1, 2), Q(1, 2), Q(0), Q(al, 2)};
    o.expect(res.b == Subspace<Q>::span({v({1, 0, 0, 0}), f}, 4), tag + " B = <1,f>");
    o.expect(is_idempotent(res.ambient, f), tag + " f idempotent");
    o.expect(res.certificate, tag);
    for (const char* k : {"theta_in_b", "right_ideal", "generated"}) o.expect(res.certificate.passed(k), tag + " " + k);
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto fx = example3<Q>();
  auto res = enveloping_coaction(*fx.coaction);
  o.expect(res.b.dim() == 4, "dim B");
  std::vector<Vec<Q>> beta{v({1, 0, 0, 0, 0, 0, 0, 0}), v({0, 1, 0, 1, 0, 0, 0, 0}), v({0, 0, 0, 0, 1, 0, 0, 0}),
                           v({0, 0, 0, 0, 0, 1, 0, 1})};
  o.expect(res.b.basis_vectors() == beta, "canonical basis");
  auto rel = example3_relations(res);
  for (const char* k : {"g_squared_is_one", "y_squared_is_zero", "gy_equals_yg", "e_central_idempotent", "theta_a_is_eB",
                        "induced_coaction_on_eB"})
    o.expect(rel.find(k) != nullptr && rel.passed(k), k);
  o.expect(rel, "relations");
  return o;
}

Outcome criterion3() {
  Outcome o;
  struct Case {
    const char* g;
    const char* n;
  };
  for (auto c : {Case{"Z4", "0,2"}, Case{"S3", "A3"}}) {
    auto g = group_by_name(c.g);
    auto n = subset_by_name(g, c.n);
    auto fx = example1<Q>(g, n);
    std::string tag = std::string(c.g) + "/" + c.n;
    o.expect(example1_candidate(fx), tag + " candidate");
    auto res = enveloping_coaction(*fx.fixture.coaction);
    std::size_t order = g.order();
    o.expect(res.b.dim() == order, tag + " dim B = |G|");

    // Oracle: A = e_N·kG enumerated as span{e_N g}, B as span{e_N g ⊗ g}.
    Vec<Q> e_n(order, Q(0));
    for (auto x : n) e_n[x] = Q(1, static_cast<long>(n.size()));
    std::vector<Vec<Q>> translates;
    for (std::size_t x = 0; x < order; ++x) {
      Vec<Q> w(order, Q(0));
      for (std::size_t y = 0; y < order; ++y) w[g.mul(y, x)] += e_n[y];
      translates.push_back(w);
    }
    auto a_dim = Subspace<Q>::span(translates, order).dim();
    o.expect(a_dim == order / n.size(), tag + " oracle dim A");
    o.expect(fx.fixture.carrier.dim == a_dim && res.theta.image().dim() == a_dim, tag + " dim A, dim θ(A)");
    std::size_t m = a_dim;
    std::vector<Vec<Q>> oracle;
    for (std::size_t x = 0; x < order; ++x) {
      Vec<Q> w(m * order, Q(0));
      w[fx.coset_of[x] * order + x] = Q(1);
      oracle.push_back(w);
    }
    o.expect(res.b == Subspace<Q>::span(oracle, m * order), tag + " B = span{e_N g⊗g}");
    o.expect(fx.candidate.image() == res.b, tag + " candidate image = B");
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::vector<std::pair<std::string, HopfAlgebra<Q>>> hs{{"kZ2", group_algebra<Q>(cyclic_group(2))},
                                                       {"kZ3", group_algebra<Q>(cyclic_group(3))},
                                                       {"kZ4", group_algebra<Q>(cyclic_group(4))},
                                                       {"kS3", group_algebra<Q>(symmetric_group_s3())},
                                                       {"H4", sweedler_h4<Q>()}};
  for (const auto& [name, h] : hs) {
    auto lr = lambda_rho_iso(h);
    std::size_t nn = h.dim() * h.dim(), pairs = 0;
    o.expect(rank(lr.lambda.matrix) == nn && rank(lr.rho.matrix) == nn, name + " rank");
    o.expect(multiplicative_on_pairs(lr.lambda, lr.h_smash_dual, lr.end_h, pairs) && pairs == nn * nn,
             name + " lambda pairs");
    o.expect(multiplicative_on_pairs(lr.rho, lr.dual_smash_h, opposite_algebra(lr.end_h), pairs), name + " rho pairs");
    o.expect(lr.report, name);
  }
  return o;
}

struct Fixture5 {
  GroupTable g = cyclic_group(2);
  GlobalAction<Q> b = translation_action<Q>(g);
  Vec<Q> a_unit = v({1, 0});
};

Outcome criterion5() {
  Outcome o;
  Fixture5 f;
  auto dec = bm_phi_psi(f.b, f.a_unit);
  o.expect(dec.double_smash.dim == 8, "dim X = 8");
  auto id = Matrix<Q>::identity(8);
  o.expect(dec.phi.matrix * dec.psi.matrix == id, "ΦΨ = I");
  o.expect(dec.psi.matrix * dec.phi.matrix == id, "ΨΦ = I");
  std::size_t pairs = 0;
  o.expect(multiplicative_on_pairs(dec.phi, dec.double_smash, dec.target, pairs) && pairs == 64, "Φ on 64 pairs");
  o.expect(dec.report, "report");
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto z2 = cyclic_group(2);
  auto sp = scalar_partial<Q>(z2, {z2.identity()});
  auto glob = enveloping_action(*sp.action);
  auto dec = bm_phi_psi(glob.global, glob.a_unit);
  auto res = bm_restricted(dec, induced_partial_action(glob.global, glob.a_unit).action);
  o.expect(res.ideal_plus.dim() + res.ideal_kernel.dim() == res.partial.dim(), "dim sum");
  o.expect(res.kernel == res.ideal_kernel, "kernel = eFe ideal");
  o.expect(!res.kernel.is_zero(), "kernel nonzero");
  o.expect(!res.acts_globally, "partial action detected");
  // Oracle for the eFe ideal: products eFe·w over a basis of eXe, recomputed here.
  const auto& x = dec.double_smash;
  std::vector<Vec<Q>> prods;
  for (const auto& w : res.partial.basis_vectors()) prods.push_back(x.multiply(res.eFe, w));
  o.expect(Subspace<Q>::span(prods, x.dim) == res.kernel, "oracle eFe·eXe");

  // Global fixtures: 1_A = 1_B.
  std::vector<std::pair<std::string, GlobalAction<Q>>> globals{{"Z2", translation_action<Q>(z2)},
                                                              {"Z3", translation_action<Q>(cyclic_group(3))},
                                                              {"Z4", translation_action<Q>(cyclic_group(4))}};
  auto e2 = enveloping_coaction(*example2<Q>(Q(1)).coaction);
  globals.emplace_back("H4*", global_action_from_coaction(e2.global));
  for (const auto& [name, gb] : globals) {
    auto d = bm_phi_psi(gb, gb.carrier.one());
    auto r = bm_restricted(d, induced_partial_action(gb, gb.carrier.one()).action);
    o.expect(r.kernel.is_zero() && r.acts_globally, name + " global kernel zero");
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  Fixture5 f;
  auto dec = bm_phi_psi(f.b, f.a_unit);
  auto direct = eta(f.b.carrier, 2, std::span<const Q>(dec.phi(dec.e)));
  o.expect(direct == phi_e_closed_form(f.b, f.a_unit), "Z2 swap");
  auto e2 = enveloping_coaction(*example2<Q>(Q(1)).coaction);
  auto gb = global_action_from_coaction(e2.global);
  auto dh = bm_phi_psi(gb, e2.a_unit);
  auto dh_direct = eta(gb.carrier, gb.hdim(), std::span<const Q>(dh.phi(dh.e)));
  o.expect(dh_direct == phi_e_closed_form(gb, e2.a_unit), "H4 fixture");
  o.expect(!dh_direct.is_zero(), "H4 fixture nontrivial");
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto check = [&](const std::string& tag, const GlobalAction<Q>& b, const Vec<Q>& au) {
    auto dec = bm_phi_psi(b, au);
    auto res = bm_restricted(dec, induced_partial_action(b, au).action);
    auto m = endB_module(dec, res);
    o.expect(m.endo.dim() == res.partial.dim(), tag + " dims");
    o.expect(m.iso.matrix.rows() == m.iso.matrix.cols() && rank(m.iso.matrix) == res.partial.dim(), tag + " bijective");
    o.expect(m.report, tag);
  };
  Fixture5 f;
  check("Z2 swap", f.b, f.a_unit);
  auto z2 = cyclic_group(2);
  auto glob = enveloping_action(*scalar_partial<Q>(z2, {z2.identity()}).action);
  check("scalar Z2", glob.global, glob.a_unit);
  return o;
}

Outcome criterion9() {
  Outcome o;
  auto check = [&](const std::string& tag, const GroupTable& g, const Vec<Q>& au) {
    auto b = translation_action<Q>(g);
    auto dec = bm_phi_psi(b, au);
    auto res = bm_restricted(dec, induced_partial_action(b, au).action);
    auto cm = cohen_montgomery_group(dec, res, g);
    std::size_t n = g.order();
    o.expect(cm.matrix_alg.dim == b.adim() * n * n && rank(cm.phi_hat.matrix) == cm.matrix_alg.dim, tag + " Φ̂ bijective");
    o.expect(cm.s_m.dim() == res.partial.dim(), tag + " dim S(M)");
    o.expect(cm.report, tag);
  };
  Fixture5 f;
  check("Z2 swap", f.g, f.a_unit);
  check("Z3 on k^3", cyclic_group(3), v({1, 0, 0}));
  return o;
}

// Every nonzero entry replaced by 0 and by entry+1; a corruption is caught if
// any verifier reports a failure or construction rejects the data.
template <class Mutate, class Verify>
void sweep(Outcome& o, const std::string& tag, std::size_t& total, Mutate&& sites, Verify&& caught) {
  std::vector<std::function<void(Q&)>> edits{[](Q& x) { x = Q(0); }, [](Q& x) { x = x + Q(1); }};
  sites([&](auto locate, const std::string& where) {
    for (std::size_t k = 0; k < edits.size(); ++k) {
      ++total;
      if (!caught([&](auto& data) { edits[k](locate(data)); }))
        o.expect(false, tag + " uncaught " + where + (k == 0 ? " →0" : " +1"));
    }
  });
}

Outcome criterion10() {
  Outcome o;
  std::vector<std::pair<std::string, HopfAlgebra<Q>>> hs{{"kZ2", group_algebra<Q>(cyclic_group(2))},
                                                       {"kZ3", group_algebra<Q>(cyclic_group(3))},
                                                       {"kZ4", group_algebra<Q>(cyclic_group(4))},
                                                       {"kS3", group_algebra<Q>(symmetric_group_s3())},
                                                       {"kZ2*", function_algebra<Q>(cyclic_group(2))},
                                                       {"kS3*", function_algebra<Q>(symmetric_group_s3())},
                                                       {"H4", sweedler_h4<Q>()},
                                                       {"H4*", dual_hopf(sweedler_h4<Q>())}};
  for (const auto& [name, h] : hs) o.expect(verify_structure(h), name);

  for (const auto& id : fixture_ids()) {
    auto b = Bundle<Q>::from_json(fixture_bundle<Q>(id));
    o.expect(run_verify(b).checks, id);
  }
  auto z2 = cyclic_group(2);
  o.expect(verify_global_action(regular_action_on_dual(sweedler_h4<Q>())), "H4 on H4*");
  o.expect(verify_global_action(unitization(translation_action<Q>(z2))), "unitization");

  std::size_t total = 0;
  const auto h4 = sweedler_h4<Q>();
  auto hopf_caught = [&](auto edit) {
    auto c = h4;
    edit(c);
    try {
      c = HopfAlgebra<Q>::make(c.algebra, c.coalgebra, c.antipode);
    } catch (const SingularMatrix&) {
      return true;
    }
    return !verify_structure(c).ok();
  };
  sweep(o, "H4", total,
        [&](auto visit) {
          std::size_t n = h4.dim();
          for (std::size_t i = 0; i < n * n; ++i)
            for (std::size_t p = 0; p < h4.algebra.mult[i].size(); ++p)
              visit([i, p](HopfAlgebra<Q>& x) -> Q& { return x.algebra.mult[i][p].second; },
                    "mult[" + std::to_string(i) + "," + std::to_string(h4.algebra.mult[i][p].first) + "]");
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t p = 0; p < h4.coalgebra.comult[i].size(); ++p)
              visit([i, p](HopfAlgebra<Q>& x) -> Q& { return x.coalgebra.comult[i][p].second; },
                    "comult[" + std::to_string(i) + "," + std::to_string(h4.coalgebra.comult[i][p].first) + "]");
          for (std::size_t i = 0; i < n; ++i) {
            if (!h4.coalgebra.counit[i].is_zero())
              visit([i](HopfAlgebra<Q>& x) -> Q& { return x.coalgebra.counit[i]; }, "counit[" + std::to_string(i) + "]");
            if (!(*h4.algebra.unit)[i].is_zero())
              visit([i](HopfAlgebra<Q>& x) -> Q& { return (*x.algebra.unit)[i]; }, "unit[" + std::to_string(i) + "]");
            for (std::size_t j = 0; j < n; ++j)
              if (!h4.antipode(i, j).is_zero())
                visit([i, j](HopfAlgebra<Q>& x) -> Q& { return x.antipode(i, j); },
                      "antipode[" + std::to_string(i) + "," + std::to_string(j) + "]");
          }
        },
        hopf_caught);

  const auto co = *example2<Q>(Q(0)).coaction;
  auto co_caught = [&](auto edit) {
    auto c = co;
    edit(c);
    return !verify_partial_coaction(c).ok();
  };
  sweep(o, "example2", total,
        [&](auto visit) {
          for (std::size_t j = 0; j < co.coact.size(); ++j)
            for (std::size_t t = 0; t < co.coact[j].size(); ++t)
              if (!co.coact[j][t].is_zero())
                visit([j, t](PartialCoaction<Q>& x) -> Q& { return x.coact[j][t]; },
                      "coact[" + std::to_string(j) + "][" + std::to_string(t) + "]");
        },
        co_caught);
  o.note = std::to_string(total) + " corruptions swept" + (o.note.empty() ? "" : "; " + o.note);
  return o;
}

Outcome criterion11() {
  Outcome o;
  std::vector<std::pair<std::string, ExampleFixture<Q>>> fx;
  fx.emplace_back("ex1 Z4", example1<Q>(cyclic_group(4), {0, 2}).fixture);
  auto s3 = symmetric_group_s3();
  fx.emplace_back("ex1 S3", example1<Q>(s3, subset_by_name(s3, "A3")).fixture);
  for (long al : {0L, 1L, 2L}) fx.emplace_back("ex2 alpha=" + std::to_string(al), example2<Q>(Q(al)));
  fx.emplace_back("ex3", example3<Q>());
  for (const auto& [name, f] : fx) {
    const auto& x = *f.coaction;
    auto p = coaction_action_convert(x);
    o.expect(verify_partial_action(p), name + " converted action");
    auto back = action_coaction_convert(p);
    o.expect(back.coact == x.coact, name + " roundtrip");
    if (name.rfind("ex1", 0) == 0) continue;
    auto co = enveloping_coaction(x);
    auto act = enveloping_action(p);
    o.expect(co.b.dim() == act.b.dim(), name + " equal dims");
    o.expect(psi_compatibility(co, act), name + " Ψ");
  }
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"example2 globalization", criterion1},
      {"example3 globalization and relations", criterion2},
      {"example1 coset globalization", criterion3},
      {"lambda/rho isomorphisms", criterion4},
      {"Blattner-Montgomery core", criterion5},
      {"decomposition and kernel", criterion6},
      {"Phi(e) closed form", criterion7},
      {"End_B realization", criterion8},
      {"Cohen-Montgomery group case", criterion9},
      {"axiom property suite and fault sweep", criterion10},
      {"conversion round-trip and Psi-compatibility", criterion11},
  };
  int failed = 0;
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %-45s %6lld ms%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                static_cast<long long>(ms), o.note.empty() ? "" : "  ", o.note.c_str());
    failed += o.ok ? 0 : 1;
  }
  auto total = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d of %zu criteria passed in %lld ms\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
              static_cast<long long>(total));
  return failed == 0 ? 0 : 1;
}
