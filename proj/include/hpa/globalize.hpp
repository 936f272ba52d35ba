#pragma once

// Enveloping actions and enveloping coactions of partial (co)actions.
//
// Hom_k(H, A) is modelled as A⊗H* with the convolution product; the function
// k ↦ Σ aₗ fₗ(k) is the tensor Σ aₗ⊗fₗ.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hpa/algebra.hpp"
#include "hpa/errors.hpp"
#include "hpa/exactlin.hpp"
#include "hpa/partial.hpp"
#include "hpa/report.hpp"

namespace hpa {

template <ExactField K>
struct EnvelopingActionResult {
  Algebra<K> ambient;              // A⊗H*
  GlobalAction<K> ambient_action;  // h▷(a⊗f) = a⊗f(·h)
  Subspace<K> b;
  LinearMap<K> phi;        // A → ambient
  GlobalAction<K> global;  // H acting on B, canonical basis of b
  Vec<K> a_unit;           // φ(1_A) in B coordinates
  VerificationReport certificate;
};

template <ExactField K>
struct EnvelopingCoactionResult {
  Algebra<K> ambient;                  // A⊗H
  GlobalCoaction<K> ambient_coaction;  // I⊗Δ
  Subspace<K> b;
  LinearMap<K> theta;        // ρ̄ : A → ambient
  GlobalCoaction<K> global;  // coaction on B, canonical basis of b
  Vec<K> a_unit;             // θ(1_A) in B coordinates
  VerificationReport certificate;
};

// ---------------------------------------------------------------------------
// Ambient structures

/// A⊗H* with the convolution product and the H-action h▷(a⊗f) = a⊗(h⇀f).
template <ExactField K>
GlobalAction<K> hom_model_action(const HopfAlgebra<K>& h, const Algebra<K>& a) {
  auto reg = regular_action_on_dual(h);
  auto amb = tensor_product_algebra(a, reg.carrier);
  std::size_t n = h.dim(), d = a.dim;
  auto act = ActionData<K>::tabulate(n, d * n, [&](std::size_t i, std::size_t x) {
    Vec<K> v(d * n, K(0));
    const auto& f = reg.basis_act(i, x % n);
    for (std::size_t k = 0; k < n; ++k) v[(x / n) * n + k] = f[k];
    return v;
  });
  return make_global_action(h, std::move(amb), std::move(act));
}

/// A⊗H with the trivial coaction δ = I⊗Δ.
template <ExactField K>
GlobalCoaction<K> trivial_comodule(const HopfAlgebra<K>& h, const Algebra<K>& a) {
  auto amb = tensor_product_algebra(a, h.algebra);
  std::size_t n = h.dim(), d = a.dim;
  std::vector<Vec<K>> coact;
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t k = 0; k < n; ++k) {
      Vec<K> v(d * n * n, K(0));
      for (const auto& [x, c] : h.delta(k)) v[l * n * n + x] += c;
      coact.push_back(std::move(v));
    }
  return make_global_coaction(h, std::move(amb), std::move(coact));
}

/// φ(a) = Σᵢ (hᵢ·a)⊗hᵢ*, the function k ↦ k·a.
template <ExactField K>
LinearMap<K> phi_embed(const ActionData<K>& p) {
  std::size_t n = p.hdim(), d = p.adim();
  Matrix<K> m(d * n, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const auto& v = p.basis_act(i, j);
      for (std::size_t l = 0; l < d; ++l) m(l * n + i, j) = v[l];
    }
  return LinearMap<K>(std::move(m));
}

/// Evaluation at 1_H, A⊗H* → A.
template <ExactField K>
Matrix<K> evaluate_at_one(const HopfAlgebra<K>& h, std::size_t adim) {
  std::size_t n = h.dim();
  Matrix<K> m(adim, adim * n);
  for (std::size_t l = 0; l < adim; ++l)
    for (std::size_t k = 0; k < n; ++k) m(l, l * n + k) = h.one()[k];
  return m;
}

/// (I⊗hⱼ*)t for t in V⊗H.
template <ExactField K>
Vec<K> right_contraction(std::span<const K> t, std::size_t n, std::size_t j) {
  std::size_t d = t.size() / n;
  Vec<K> v(d, K(0));
  for (std::size_t l = 0; l < d; ++l) v[l] = t[l * n + j];
  return v;
}

template <ExactField K>
bool coaction_stable(const CoactionData<K>& c, const Subspace<K>& v) {
  auto rho = c.matrix();
  for (const auto& x : v.basis_vectors()) {
    auto t = rho.apply(x);
    for (std::size_t j = 0; j < c.hdim(); ++j)
      if (!v.contains(right_contraction<K>(t, c.hdim(), j))) return false;
  }
  return true;
}

template <ExactField K>
bool action_stable(const ActionData<K>& p, const Subspace<K>& v) {
  for (const auto& x : v.basis_vectors())
    for (std::size_t i = 0; i < p.hdim(); ++i)
      if (!v.contains(p.act_basis(i, x))) return false;
  return true;
}

/// Smallest comodule subalgebra containing the subalgebra seed.
template <ExactField K>
Subspace<K> comodule_generated(const CoactionData<K>& ambient, const Subspace<K>& seed) {
  if (seed.ambient_dim() != ambient.adim()) throw DimensionMismatch("seed is not inside the comodule");
  if (!is_product_closed(ambient.carrier, seed)) throw SeedNotSubalgebra("seed is not closed under the product");
  auto rho = ambient.matrix();
  std::vector<Vec<K>> gens;
  for (const auto& s : seed.basis_vectors()) {
    auto t = rho.apply(s);
    for (std::size_t j = 0; j < ambient.hdim(); ++j) gens.push_back(right_contraction<K>(t, ambient.hdim(), j));
  }
  auto v = closure_bilinear<K>(gens, ambient.adim(), ambient.carrier.product_fn());
  if (!coaction_stable(ambient, v)) throw VerificationFailure("generated subalgebra is not coaction-stable");
  return v;
}

/// Global action on B in its canonical basis.
template <ExactField K>
GlobalAction<K> restrict_action(const ActionData<K>& amb, const Subspace<K>& b, const std::string& stem = "b") {
  auto alg = restrict_algebra(amb.carrier, b, stem);
  auto basis = b.basis_vectors();
  auto act = ActionData<K>::tabulate(amb.hdim(), b.dim(), [&](std::size_t i, std::size_t j) {
    auto c = b.coordinates(amb.act_basis(i, basis[j]));
    if (!c) throw VerificationFailure("subspace is not stable under the action");
    return *c;
  });
  return make_global_action(amb.hopf, std::move(alg), std::move(act));
}

template <ExactField K>
GlobalCoaction<K> restrict_coaction(const CoactionData<K>& amb, const Subspace<K>& b, const std::string& stem = "b") {
  auto alg = restrict_algebra(amb.carrier, b, stem);
  auto rho = amb.matrix();
  std::size_t n = amb.hdim(), d = b.dim();
  std::vector<Vec<K>> coact;
  for (const auto& x : b.basis_vectors()) {
    auto t = rho.apply(x);
    Vec<K> out(d * n, K(0));
    for (std::size_t k = 0; k < n; ++k) {
      auto c = b.coordinates(right_contraction<K>(t, n, k));
      if (!c) throw VerificationFailure("subspace is not stable under the coaction");
      for (std::size_t l = 0; l < d; ++l) out[l * n + k] = (*c)[l];
    }
    coact.push_back(std::move(out));
  }
  return make_global_coaction(amb.hopf, std::move(alg), std::move(coact));
}

// ---------------------------------------------------------------------------
// Certificates

/// Conditions of an enveloping action for candidate B ⊆ A⊗H* with φ as above.
template <ExactField K>
VerificationReport verify_enveloping_action(const ActionData<K>& p, const GlobalAction<K>& amb,
                                            const Subspace<K>& b) {
  VerificationReport r;
  const auto& a = p.carrier;
  const auto& alg = amb.carrier;
  std::size_t d = p.adim();
  auto phi = phi_embed(p);
  std::vector<Vec<K>> img(d);
  for (std::size_t j = 0; j < d; ++j) img[j] = phi.image_of_basis(j);
  auto phi_a = Subspace<K>::span(img, alg.dim);

  bool inj = evaluate_at_one(p.hopf, d) * phi.matrix == Matrix<K>::identity(d);
  r.add("phi_injective", inj, inj ? "" : "evaluation at 1 does not invert φ");
  r.merge("phi", check_algebra_morphism(phi, a, alg, false));

  AxiomScan in_b("phi_in_b");
  for (std::size_t j = 0; j < d; ++j)
    if (!b.contains(img[j])) in_b.fail_once(a.label(j));
  in_b.record(r);

  AxiomScan ideal("right_ideal");
  for (std::size_t j = 0; j < d; ++j)
    for (const auto& y : b.basis_vectors())
      if (!phi_a.contains(alg.multiply(img[j], y))) ideal.fail_once(a.label(j));
  ideal.record(r);

  // φ(h·a) = φ(1_A)(h▷φ(a))
  AxiomScan induced("induced_action");
  if (a.unit) {
    auto one = phi(*a.unit);
    for (std::size_t i = 0; i < p.hdim(); ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (phi(p.basis_act(i, j)) != alg.multiply(one, amb.act_basis(i, img[j])))
          induced.fail_once(tuple_label({p.hopf.label(i), a.label(j)}));
  } else {
    induced.fail_once("carrier has no unit");
  }
  induced.record(r);

  r.add("b_product_closed", is_product_closed(alg, b));
  r.add("b_h_stable", action_stable(amb, b));

  std::vector<Vec<K>> orbit;
  for (std::size_t i = 0; i < p.hdim(); ++i)
    for (std::size_t j = 0; j < d; ++j) orbit.push_back(amb.act_basis(i, img[j]));
  bool gen = Subspace<K>::span(orbit, alg.dim) == b;
  r.add("b_generated", gen, gen ? "" : "B ≠ H▷φ(A)");
  return r;
}

/// Conditions (1)–(3) of an enveloping coaction for candidate B ⊆ A⊗H with θ = ρ̄.
template <ExactField K>
VerificationReport verify_enveloping_coaction(const CoactionData<K>& p, const GlobalCoaction<K>& amb,
                                              const Subspace<K>& b) {
  VerificationReport r;
  const auto& a = p.carrier;
  const auto& alg = amb.carrier;
  std::size_t d = p.adim(), n = p.hdim();
  LinearMap<K> theta(p.matrix());
  auto theta_a = theta.image();

  r.add("theta_injective", theta.injective());
  r.merge("theta", check_algebra_morphism(theta, a, alg, false));
  r.add("b_product_closed", is_product_closed(alg, b));
  r.add("b_comodule", coaction_stable(amb, b));

  AxiomScan in_b("theta_in_b");
  for (std::size_t j = 0; j < d; ++j)
    if (!b.contains(p.coact[j])) in_b.fail_once(a.label(j));
  in_b.record(r);

  AxiomScan ideal("right_ideal");
  if (a.unit) {
    auto one = theta(*a.unit);
    for (const auto& y : b.basis_vectors())
      if (!theta_a.contains(alg.multiply(one, y))) ideal.fail_once(format_vector<K>(y));
    for (std::size_t j = 0; j < d; ++j)
      if (alg.multiply(one, p.coact[j]) != p.coact[j] || alg.multiply(p.coact[j], one) != p.coact[j])
        ideal.fail_once(a.label(j));
  } else {
    ideal.fail_once("carrier has no unit");
  }
  ideal.record(r);

  bool gen = false;
  std::string why;
  try {
    gen = comodule_generated(amb, theta_a) == b;
    if (!gen) why = "B differs from the comodule algebra generated by θ(A)";
  } catch (const Error& e) {
    why = e.what();
  }
  r.add("generated", gen, why);

  // (θ⊗I)ρ̄(a) = (θ(1)⊗1_H)·δ(θ(a))
  AxiomScan square("commuting_square");
  if (a.unit) {
    auto one_one = tensor_vectors<K>(theta(*a.unit), p.hopf.one());
    auto delta = amb.matrix();
    for (std::size_t j = 0; j < d; ++j) {
      auto lhs = tensor_apply(theta.matrix, Matrix<K>::identity(n), std::span<const K>(p.coact[j]));
      auto rhs = tensor_multiply(alg, p.hopf.algebra, std::span<const K>(one_one),
                                 std::span<const K>(delta.apply(p.coact[j])));
      if (lhs != rhs) square.fail_once(a.label(j));
    }
  } else {
    square.fail_once("carrier has no unit");
  }
  square.record(r);
  return r;
}

/// Candidate B given inside A⊗H* (action) and checked against every condition.
template <ExactField K>
VerificationReport verify_globalization(const ActionData<K>& p, const Subspace<K>& b) {
  return verify_enveloping_action(p, hom_model_action(p.hopf, p.carrier), b);
}

/// Candidate B given inside A⊗H (coaction) and checked against every condition.
template <ExactField K>
VerificationReport verify_globalization(const CoactionData<K>& p, const Subspace<K>& b) {
  return verify_enveloping_coaction(p, trivial_comodule(p.hopf, p.carrier), b);
}

template <ExactField K>
VerificationReport verify_globalization(const ActionData<K>& p, const EnvelopingActionResult<K>& res) {
  return verify_enveloping_action(p, res.ambient_action, res.b);
}

template <ExactField K>
VerificationReport verify_globalization(const CoactionData<K>& p, const EnvelopingCoactionResult<K>& res) {
  return verify_enveloping_coaction(p, res.ambient_coaction, res.b);
}

// ---------------------------------------------------------------------------
// Constructions

template <ExactField K>
EnvelopingActionResult<K> enveloping_action(const PartialAction<K>& p) {
  auto amb = hom_model_action(p.hopf, p.carrier);
  auto phi = phi_embed(p);
  std::vector<Vec<K>> orbit;
  for (std::size_t i = 0; i < p.hdim(); ++i)
    for (std::size_t j = 0; j < p.adim(); ++j) orbit.push_back(amb.act_basis(i, phi.image_of_basis(j)));
  auto b = Subspace<K>::span(orbit, amb.adim());
  auto cert = verify_enveloping_action(p, amb, b);
  require<K>(cert, "enveloping action certificate");
  auto global = restrict_action(amb, b);
  auto a_unit = *b.coordinates(phi(p.carrier.one()));
  return {amb.carrier, std::move(amb), std::move(b), std::move(phi), std::move(global), std::move(a_unit),
          std::move(cert)};
}

template <ExactField K>
EnvelopingCoactionResult<K> enveloping_coaction(const PartialCoaction<K>& p) {
  auto amb = trivial_comodule(p.hopf, p.carrier);
  LinearMap<K> theta(p.matrix());
  auto b = comodule_generated(amb, theta.image());
  auto cert = verify_enveloping_coaction(p, amb, b);
  require<K>(cert, "enveloping coaction certificate");
  auto global = restrict_coaction(amb, b);
  auto a_unit = *b.coordinates(theta(p.carrier.one()));
  return {amb.carrier, std::move(amb), std::move(b), std::move(theta), std::move(global), std::move(a_unit),
          std::move(cert)};
}

/// The identification A⊗H → A⊗H** (a⊗h ↦ a⊗ev_h) carries the coaction-side B onto
/// the B′ built from the converted action of H*.
template <ExactField K>
VerificationReport psi_compatibility(const EnvelopingCoactionResult<K>& co, const EnvelopingActionResult<K>& act) {
  VerificationReport r;
  std::size_t dim = co.ambient.dim;
  bool same_ambient = act.ambient.dim == dim && act.ambient.mult == co.ambient.mult;
  r.add("ambient_identified", same_ambient, same_ambient ? "" : "A⊗H and A⊗H** differ");
  if (!same_ambient) return r;
  auto psi = Matrix<K>::identity(dim);
  std::vector<Vec<K>> moved;
  for (const auto& x : co.b.basis_vectors()) moved.push_back(psi.apply(x));
  auto image = Subspace<K>::span(moved, dim);
  r.add("equal_dims", co.b.dim() == act.b.dim(),
        std::to_string(co.b.dim()) + " vs " + std::to_string(act.b.dim()));
  r.add("bijection", image == act.b);
  return r;
}

}  // namespace hpa
