#pragma once

// Command pipelines shared by the hpa tool and the tests: each takes a typed
// bundle and returns a Report with every verified identity.

#include <cstddef>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "hpa/bundle.hpp"
#include "hpa/catalog.hpp"
#include "hpa/duality.hpp"
#include "hpa/globalize.hpp"

namespace hpa {

// ---------------------------------------------------------------------------
// Fixture registry

inline std::vector<std::string> fixture_ids() {
  return {"example1:Z4:0,2@v1", "example1:S3:A3@v1", "example2:0@v1", "example2:1@v1", "example2:2@v1",
          "example3@v1",        "scalar:Z2:e@v1",    "scalar:Z3:e@v1", "scalar:S3:A3@v1", "translation:Z2@v1",
          "translation:Z3@v1"};
}

inline std::string fixture_file_stem(const std::string& id) {
  std::string s = id;
  for (char& c : s)
    if (c == ':' || c == ',' || c == '@' || c == '/') c = '_';
  return s;
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

inline std::string strip_version(const std::string& id) {
  auto at = id.find('@');
  if (at == std::string::npos) return id;
  if (id.substr(at) != "@v1") throw ParseError("unknown fixture version in '" + id + "'");
  return id.substr(0, at);
}

}  // namespace detail

/// Built-in fixture as a bundle; HPA_FIXTURE_DIR/<stem>.json takes precedence.
template <ExactField K>
json fixture_bundle(const std::string& id) {
  if (const char* dir = std::getenv("HPA_FIXTURE_DIR")) {
    auto path = std::filesystem::path(dir) / (fixture_file_stem(id) + ".json");
    if (std::filesystem::exists(path)) return load_json_file(path.string());
    auto bare = std::filesystem::path(dir) / (fixture_file_stem(detail::strip_version(id)) + ".json");
    if (std::filesystem::exists(bare)) return load_json_file(bare.string());
  }
  auto parts = detail::split(detail::strip_version(id), ':');
  json b;
  b["field"] = K::field_name();
  b["meta"]["id"] = id;
  b["meta"]["family"] = parts[0];
  auto put_coaction = [&](const ExampleFixture<K>& fx) {
    b["hopf"] = hopf_to_json(fx.hopf);
    b["algebra"] = algebra_to_json(fx.carrier);
    b["partial_coaction"] = coaction_to_json<K>(*fx.coaction);
    for (const auto& [k, v] : fx.expected) b["meta"]["expected"][k] = v;
  };
  if (parts[0] == "example1" && parts.size() == 3) {
    auto g = group_by_name(parts[1]);
    auto n = subset_by_name(g, parts[2]);
    auto fx = example1<K>(g, n);
    put_coaction(fx.fixture);
    b["group"] = group_to_json(g);
    b["meta"]["subgroup"] = n;
  } else if (parts[0] == "example2" && parts.size() == 2) {
    put_coaction(example2<K>(K::parse(parts[1])));
    b["meta"]["alpha"] = parts[1];
  } else if (parts[0] == "example3" && parts.size() == 1) {
    put_coaction(example3<K>());
  } else if (parts[0] == "scalar" && parts.size() == 3) {
    auto g = group_by_name(parts[1]);
    auto fx = scalar_partial<K>(g, subset_by_name(g, parts[2]), /*verify=*/false);
    b["hopf"] = hopf_to_json(fx.hopf);
    b["algebra"] = algebra_to_json(fx.carrier);
    b["partial_action"] = action_to_json<K>(*fx.action);
    b["group"] = group_to_json(g);
  } else if (parts[0] == "translation" && parts.size() == 2) {
    auto g = group_by_name(parts[1]);
    auto t = translation_action<K>(g);
    b["hopf"] = hopf_to_json(t.hopf);
    b["algebra"] = algebra_to_json(t.carrier);
    b["global_action"] = action_to_json<K>(t);
    b["a_unit"] = io::to_json<K>(unit_vector<K>(g.order(), g.identity()));
    b["group"] = group_to_json(g);
  } else {
    throw ParseError("unknown fixture id '" + id + "'");
  }
  return b;
}

// ---------------------------------------------------------------------------
// Pipelines

template <ExactField K>
Report run_verify(const Bundle<K>& b) {
  Report r{"verify", {}, json::object()};
  bool any = false;
  if (b.hopf) {
    r.checks.merge("hopf", verify_structure(*b.hopf));
    r.data["dims"]["hopf"] = b.hopf->dim();
    any = true;
  }
  if (b.algebra) {
    r.checks.merge("algebra", verify_algebra(*b.algebra));
    r.data["dims"]["algebra"] = b.algebra->dim;
    any = true;
  }
  if (b.partial_action) r.checks.merge("partial_action", verify_partial_action(b.action(true)));
  if (b.partial_coaction) r.checks.merge("partial_coaction", verify_partial_coaction(b.coaction(true)));
  if (b.global_action) r.checks.merge("global_action", verify_global_action(b.action(false)));
  if (b.global_coaction) r.checks.merge("global_coaction", verify_global_coaction(b.coaction(false)));
  if (b.a_unit) r.checks.add("a_unit_idempotent", is_idempotent(*b.algebra, *b.a_unit));
  if (!any) throw ShapeError("bundle has nothing to verify (no 'hopf' or 'algebra')");
  return r;
}

/// Verifies the input part of a bundle and returns false (with failures recorded) if it is invalid.
template <ExactField K>
bool verify_inputs(const Bundle<K>& b, Report& r) {
  auto v = run_verify(b);
  r.checks.merge("input", v.checks);
  return v.ok();
}

template <ExactField K>
Report run_globalize(const Bundle<K>& b, const std::string& mode) {
  Report r{"globalize --mode " + mode, {}, json::object()};
  if (mode != "action" && mode != "coaction") throw ParseError("globalize mode must be action or coaction");
  bool action = mode == "action";
  if (action)
    (void)b.action(true);
  else
    (void)b.coaction(true);
  if (!verify_inputs(b, r)) return r;
  json out;
  out["field"] = K::field_name();
  if (action) {
    auto p = PartialAction<K>{b.action(true)};
    auto res = enveloping_action(p);
    r.checks.merge("certificate", res.certificate);
    r.data["dims"] = {{"a", p.adim()}, {"ambient", res.ambient.dim}, {"b", res.b.dim()}};
    r.data["b_basis"] = subspace_to_json(res.b);
    r.data["b_unital"] = res.global.carrier.is_unital();
    out["hopf"] = hopf_to_json(res.global.hopf);
    out["algebra"] = algebra_to_json(res.global.carrier);
    out["global_action"] = action_to_json<K>(res.global);
    out["a_unit"] = io::to_json<K>(res.a_unit);
  } else {
    auto p = PartialCoaction<K>{b.coaction(true)};
    auto res = enveloping_coaction(p);
    r.checks.merge("certificate", res.certificate);
    r.data["dims"] = {{"a", p.adim()}, {"ambient", res.ambient.dim}, {"b", res.b.dim()}};
    r.data["b_basis"] = subspace_to_json(res.b);
    r.data["b_unital"] = res.global.carrier.is_unital();
    out["hopf"] = hopf_to_json(res.global.hopf);
    out["algebra"] = algebra_to_json(res.global.carrier);
    out["global_coaction"] = coaction_to_json<K>(res.global);
    out["a_unit"] = io::to_json<K>(res.a_unit);
  }
  r.data["bundle"] = out;
  return r;
}

template <ExactField K>
Report run_smash(const Bundle<K>& b, bool partial) {
  Report r{partial ? "smash --partial" : "smash --global", {}, json::object()};
  (void)b.action(partial);
  if (!verify_inputs(b, r)) return r;
  if (partial) {
    PartialAction<K> p{b.action(true)};
    try {
      auto s = partial_smash(p);
      r.checks.add("associativity", true);
      r.checks.add("generator_description", partial_smash_generators(p) == s.carrier);
      r.checks.merge("structure", verify_algebra(s.structure));
      r.data["dims"] = {{"ambient", s.ambient.dim}, {"carrier", s.carrier.dim()}};
      r.data["carrier_basis"] = subspace_to_json(s.carrier);
      r.data["e"] = io::to_json<K>(s.e);
      r.data["algebra"] = algebra_to_json(s.structure);
    } catch (const AssociativityFailure& e) {
      r.checks.add("associativity", false, e.what());
    }
  } else {
    GlobalAction<K> g{b.action(false)};
    bool unitized = !g.carrier.is_unital();
    if (unitized) g = unitization(g);
    auto s = smash_product(g);
    r.checks.merge("structure", verify_algebra(s));
    r.data["unitized"] = unitized;
    r.data["dims"] = {{"b", g.adim()}, {"smash", s.dim}};
    r.data["algebra"] = algebra_to_json(s);
  }
  return r;
}

/// Global action and 1_A from a bundle, passing non-unital algebras through unitization.
template <ExactField K>
std::pair<GlobalAction<K>, Vec<K>> duality_input(const Bundle<K>& b, Report& r) {
  GlobalAction<K> g{b.action(false)};
  Vec<K> a_unit;
  if (b.a_unit) a_unit = *b.a_unit;
  bool unitized = !g.carrier.is_unital();
  if (unitized) {
    if (!b.a_unit) throw ShapeError("bundle: missing key 'a_unit' for a non-unital algebra");
    g = unitization(g);
    a_unit.insert(a_unit.begin(), K(0));
  } else if (!b.a_unit) {
    a_unit = g.carrier.one();
  }
  r.data["unitized"] = unitized;
  return {std::move(g), std::move(a_unit)};
}

template <ExactField K>
Report run_duality(const Bundle<K>& b, bool group_case) {
  Report r{group_case ? "duality cm" : "duality bm", {}, json::object()};
  (void)b.action(false);
  if (!verify_inputs(b, r)) return r;
  auto [g, a_unit] = duality_input(b, r);
  auto dec = bm_phi_psi(g, a_unit);
  r.checks.merge("maps", dec.report);
  auto induced = induced_partial_action(g, a_unit);
  auto res = bm_restricted(dec, induced.action);
  r.checks.merge("restricted", res.report);
  auto& d = r.data["dims"];
  d["b"] = g.adim();
  d["double_smash"] = dec.double_smash.dim;
  d["partial_double_smash"] = res.partial.dim();
  d["ideal_eEe"] = res.ideal_plus.dim();
  d["ideal_eFe"] = res.ideal_kernel.dim();
  d["kernel"] = res.kernel.dim();
  r.data["E"] = io::to_json<K>(dec.E);
  r.data["F"] = io::to_json<K>(dec.F);
  r.data["e"] = io::to_json<K>(dec.e);
  r.data["kernel_basis"] = subspace_to_json(res.kernel);
  r.data["actions_coincide"] = res.acts_globally;
  if (!group_case) {
    auto m = endB_module(dec, res);
    r.checks.merge("endB", m.report);
    d["module"] = m.module.dim();
    d["endB"] = m.endo.dim();
    return r;
  }
  if (!b.group) throw ShapeError("bundle: missing key 'group' for duality cm");
  auto cm = cohen_montgomery_group(dec, res, *b.group);
  r.checks.merge("cm", cm.report);
  for (const auto& [k, v] : cm.dims) d[k] = v;
  for (const auto& [k, v] : cm.printed_e) r.data["printed_E_formula"][k] = v;
  return r;
}

template <ExactField K>
Report run_convert(const Bundle<K>& b) {
  Report r{"convert", {}, json::object()};
  if (!b.partial_action && !b.partial_coaction) throw ShapeError("bundle: missing key 'partial_action' or 'partial_coaction'");
  if (!verify_inputs(b, r)) return r;
  json out;
  out["field"] = K::field_name();
  if (b.partial_coaction) {
    PartialCoaction<K> x{b.coaction(true)};
    auto p = coaction_action_convert(x);
    auto back = action_coaction_convert(p);
    r.checks.add("roundtrip_identity", back.coact == x.coact && back.hopf.algebra.mult == x.hopf.algebra.mult);
    out["hopf"] = hopf_to_json(p.hopf);
    out["algebra"] = algebra_to_json(p.carrier);
    out["partial_action"] = action_to_json<K>(p);
  } else {
    PartialAction<K> p{b.action(true)};
    auto x = action_coaction_convert(p);
    auto back = coaction_action_convert(x);
    r.checks.add("roundtrip_identity", back.act == p.act && back.hopf.algebra.mult == p.hopf.algebra.mult);
    out["hopf"] = hopf_to_json(x.hopf);
    out["algebra"] = algebra_to_json(x.carrier);
    out["partial_coaction"] = coaction_to_json<K>(x);
  }
  r.data["bundle"] = out;
  return r;
}

// ---------------------------------------------------------------------------
// Fixture-specific checks

/// Relations of the four-dimensional globalization of k[x] ⊆ H4, with
/// g = 1⊗c + 1⊗cx and y = x⊗1 in A⊗H4.
template <ExactField K>
VerificationReport example3_relations(const EnvelopingCoactionResult<K>& res) {
  VerificationReport r;
  const auto& amb = res.ambient;
  std::size_t dim = amb.dim;
  Vec<K> one = unit_vector<K>(dim, 0), g(dim, K(0)), y = unit_vector<K>(dim, 4);
  g[1] = K(1);
  g[3] = K(1);
  auto gy = amb.multiply(g, y);
  r.add("generators_in_b", res.b.contains(one) && res.b.contains(g) && res.b.contains(y));
  r.add("b_spanned_by_1_g_y_gy", Subspace<K>::span({one, g, y, gy}, dim) == res.b);
  r.add("g_squared_is_one", amb.multiply(g, g) == one);
  r.add("y_squared_is_zero", is_zero(std::span<const K>(amb.multiply(y, y))));
  r.add("gy_equals_yg", gy == amb.multiply(y, g));
  K half = K(1) / K(2);
  auto e = scaled(one + g, half);
  auto b_alg = restrict_algebra(amb, res.b, "b");
  auto e_b = *res.b.coordinates(e);
  r.add("e_central_idempotent", is_idempotent(b_alg, e_b) && is_central(b_alg, e_b));
  std::vector<Vec<K>> eb;
  for (const auto& v : res.b.basis_vectors()) eb.push_back(amb.multiply(e, v));
  auto ideal = Subspace<K>::span(eb, dim);
  r.add("theta_a_is_eB", ideal == res.theta.image() && ideal.dim() == 2,
        "dim eB = " + std::to_string(ideal.dim()));

  // kZ₂⊗k[Y]/(Y²) on t^i⊗Y^j (index 2i+j) ↦ g^i y^j
  auto z2 = group_algebra<K>(cyclic_group(2));
  auto target = tensor_product_algebra(z2.algebra, truncated_polynomials<K>(2));
  std::vector<Vec<K>> images{one, y, g, gy};
  Matrix<K> m(res.b.dim(), 4);
  for (std::size_t k = 0; k < 4; ++k) m.set_column(k, *res.b.coordinates(images[k]));
  r.merge("kz2_tensor_dual_numbers", check_isomorphism(LinearMap<K>(m), target, b_alg));

  // ρ(1_B) = 1_B⊗1, ρ(g) = g⊗c + 1_B⊗cx, ρ(y) = y⊗1
  auto delta = res.ambient_coaction.matrix();
  std::size_t n = 4;
  auto h = [&](std::size_t i) { return unit_vector<K>(n, i); };
  r.add("rho_one", delta.apply(one) == tensor_vectors<K>(one, h(0)));
  r.add("rho_g", delta.apply(g) == tensor_vectors<K>(g, h(1)) + tensor_vectors<K>(one, h(3)));
  r.add("rho_y", delta.apply(y) == tensor_vectors<K>(y, h(0)));

  // (e⊗1)ρ(v) = ½(v⊗1 + v⊗c + v⊗cx) for v ∈ {e, ey}
  auto e1 = tensor_vectors<K>(e, h(0));
  auto sym = [&](const Vec<K>& v) {
    return scaled(tensor_vectors<K>(v, h(0)) + tensor_vectors<K>(v, h(1)) + tensor_vectors<K>(v, h(3)), half);
  };
  const auto& h4 = res.ambient_coaction.hopf.algebra;
  auto ey = amb.multiply(e, y);
  bool induced = true;
  for (const auto& v : {e, ey})
    if (tensor_multiply(amb, h4, std::span<const K>(e1), std::span<const K>(delta.apply(v))) != sym(v)) induced = false;
  r.add("induced_coaction_on_eB", induced);
  return r;
}

/// The candidate v ↦ (e_N⊗1)Δv for the coset example, checked as a globalization.
template <ExactField K>
VerificationReport example1_candidate(const NormalSubgroupFixture<K>& fx) {
  VerificationReport r;
  const auto& co = *fx.fixture.coaction;
  auto amb = trivial_comodule(co.hopf, co.carrier);
  const auto& cand = fx.candidate;
  r.merge("candidate", verify_globalization(co, cand.image()));
  r.add("candidate_injective", cand.injective());
  r.merge("candidate_map", check_algebra_morphism(cand, co.hopf.algebra, amb.carrier, false));
  // δ∘Φ = (Φ⊗I)Δ
  auto lhs = amb.matrix() * cand.matrix;
  Matrix<K> rhs(lhs.rows(), lhs.cols());
  std::size_t n = co.hdim();
  for (std::size_t v = 0; v < n; ++v) {
    auto dv = densify(co.hopf.delta(v), n * n);
    rhs.set_column(v, tensor_apply(cand.matrix, Matrix<K>::identity(n), std::span<const K>(dv)));
  }
  r.add("candidate_comodule_map", lhs == rhs);
  return r;
}

/// Every pipeline applicable to the bundle, plus checks for the named examples.
template <ExactField K>
Report run_example(const Bundle<K>& b) {
  std::string family = b.raw.contains("meta") ? b.raw["meta"].value("family", std::string()) : std::string();
  Report r{"examples run", {}, json::object()};
  if (!verify_inputs(b, r)) return r;
  auto& d = r.data["dims"];
  if (b.partial_coaction) {
    PartialCoaction<K> x{b.coaction(true)};
    auto co = enveloping_coaction(x);
    r.checks.merge("coaction_globalization", co.certificate);
    d["a"] = x.adim();
    d["b_coaction"] = co.b.dim();
    r.data["b_basis"] = subspace_to_json(co.b);
    auto p = coaction_action_convert(x);
    auto back = action_coaction_convert(p);
    r.checks.add("conversion_roundtrip", back.coact == x.coact);
    auto act = enveloping_action(p);
    r.checks.merge("action_globalization", act.certificate);
    d["b_action"] = act.b.dim();
    r.checks.merge("psi_compatibility", psi_compatibility(co, act));
    if (family == "example3") r.checks.merge("example3", example3_relations(co));
    if (family == "example2") {
      auto alpha = K::parse(b.raw["meta"].value("alpha", std::string("0")));
      auto f = example2_idempotent<K>(alpha);
      r.checks.add("example2.f_idempotent", is_idempotent(co.ambient, f));
      r.checks.add("example2.b_is_1_f", Subspace<K>::span({co.ambient.one(), f}, 4) == co.b);
    }
    if (family == "example1" && b.group) {
      std::vector<std::size_t> n = b.raw["meta"]["subgroup"].template get<std::vector<std::size_t>>();
      auto fx = example1<K>(*b.group, n);
      r.checks.merge("example1", example1_candidate(fx));
      r.checks.add("example1.dims", x.adim() * n.size() == b.group->order() && co.b.dim() == b.group->order());
    }
  }
  if (b.partial_action) {
    PartialAction<K> p{b.action(true)};
    auto act = enveloping_action(p);
    r.checks.merge("action_globalization", act.certificate);
    d["a"] = p.adim();
    d["b_action"] = act.b.dim();
    auto s = partial_smash(p);
    d["partial_smash"] = s.carrier.dim();
    r.checks.add("partial_smash_generators", partial_smash_generators(p) == s.carrier);
    auto x = action_coaction_convert(p);
    r.checks.add("conversion_roundtrip", coaction_action_convert(x).act == p.act);
    if (act.global.carrier.is_unital()) {
      auto dec = bm_phi_psi(act.global, act.a_unit);
      r.checks.merge("bm", dec.report);
      auto induced = induced_partial_action(act.global, act.a_unit);
      auto res = bm_restricted(dec, induced.action);
      r.checks.merge("bm_restricted", res.report);
      auto m = endB_module(dec, res);
      r.checks.merge("endB", m.report);
      d["partial_double_smash"] = res.partial.dim();
      d["kernel"] = res.kernel.dim();
      d["endB"] = m.endo.dim();
      if (b.group) {
        auto cm = cohen_montgomery_group(dec, res, *b.group);
        r.checks.merge("cm", cm.report);
        d["s_m"] = cm.s_m.dim();
      }
    }
  }
  if (b.global_action) {
    auto gr = run_duality(b, b.group.has_value());
    r.checks.merge("duality", gr.checks);
    for (const auto& [k, v] : gr.data["dims"].items()) d[k] = v;
  }
  return r;
}

}  // namespace hpa
