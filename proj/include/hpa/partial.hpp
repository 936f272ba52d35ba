#pragma once

// Partial and global (co)actions of a finite-dimensional Hopf algebra on an
// algebra, their axiom verifiers, induced structures on idempotent-generated
// right ideals, and conversion across the canonical pairing ⟨h*, k⟩ = h*(k).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hpa/algebra.hpp"
#include "hpa/errors.hpp"
#include "hpa/exactlin.hpp"
#include "hpa/report.hpp"

namespace hpa {

/// Left action tensor: act[i·dim(A)+j] is hᵢ·aⱼ.
template <ExactField K>
struct ActionData {
  HopfAlgebra<K> hopf;
  Algebra<K> carrier;
  std::vector<Vec<K>> act;

  [[nodiscard]] std::size_t hdim() const { return hopf.dim(); }
  [[nodiscard]] std::size_t adim() const { return carrier.dim; }

  void validate_shape() const {
    hopf.validate_shape();
    carrier.validate_shape();
    if (act.size() != hdim() * adim()) throw ShapeError("action tensor must have dim(H)·dim(A) entries");
    for (const auto& v : act)
      if (v.size() != adim()) throw ShapeError("action value has wrong length");
  }

  [[nodiscard]] const Vec<K>& basis_act(std::size_t i, std::size_t j) const { return act[i * adim() + j]; }

  /// hᵢ·a for a general a.
  [[nodiscard]] Vec<K> act_basis(std::size_t i, std::span<const K> a) const {
    Vec<K> out(adim(), K(0));
    for (std::size_t j = 0; j < adim(); ++j)
      if (!a[j].is_zero()) axpy(out, a[j], std::span<const K>(basis_act(i, j)));
    return out;
  }
  /// h·a for general h and a.
  [[nodiscard]] Vec<K> apply(std::span<const K> h, std::span<const K> a) const {
    Vec<K> out(adim(), K(0));
    for (std::size_t i = 0; i < hdim(); ++i)
      if (!h[i].is_zero()) axpy(out, h[i], std::span<const K>(act_basis(i, a)));
    return out;
  }
  [[nodiscard]] Vec<K> apply(const Vec<K>& h, const Vec<K>& a) const {
    return apply(std::span<const K>(h), std::span<const K>(a));
  }
  /// Matrix of a ↦ hᵢ·a.
  [[nodiscard]] Matrix<K> operator_matrix(std::size_t i) const {
    Matrix<K> m(adim(), adim());
    for (std::size_t j = 0; j < adim(); ++j) m.set_column(j, std::span<const K>(basis_act(i, j)));
    return m;
  }

  static std::vector<Vec<K>> tabulate(std::size_t hdim, std::size_t adim,
                                      const std::function<Vec<K>(std::size_t, std::size_t)>& f) {
    std::vector<Vec<K>> act;
    act.reserve(hdim * adim);
    for (std::size_t i = 0; i < hdim; ++i)
      for (std::size_t j = 0; j < adim; ++j) act.push_back(f(i, j));
    return act;
  }
};

/// A partial H-module algebra (unital carrier).
template <ExactField K>
struct PartialAction : ActionData<K> {};

/// An H-module algebra (carrier possibly non-unital).
template <ExactField K>
struct GlobalAction : ActionData<K> {};

/// Right coaction tensor: coact[j] is ρ̄(aⱼ) in A⊗H (index l·dim(H)+k).
template <ExactField K>
struct CoactionData {
  HopfAlgebra<K> hopf;
  Algebra<K> carrier;
  std::vector<Vec<K>> coact;

  [[nodiscard]] std::size_t hdim() const { return hopf.dim(); }
  [[nodiscard]] std::size_t adim() const { return carrier.dim; }

  void validate_shape() const {
    hopf.validate_shape();
    carrier.validate_shape();
    if (coact.size() != adim()) throw ShapeError("coaction tensor needs one entry per carrier basis element");
    for (const auto& v : coact)
      if (v.size() != adim() * hdim()) throw ShapeError("coaction value has wrong length");
  }

  /// Matrix of ρ̄: A → A⊗H.
  [[nodiscard]] Matrix<K> matrix() const { return Matrix<K>::from_columns(coact, adim() * hdim()); }
  [[nodiscard]] Vec<K> apply(std::span<const K> a) const { return matrix().apply(a); }
};

template <ExactField K>
struct PartialCoaction : CoactionData<K> {};

template <ExactField K>
struct GlobalCoaction : CoactionData<K> {};

/// Bilinear form ⟨h1ᵢ, h2ⱼ⟩ = form(i, j) between two Hopf algebras.
template <ExactField K>
struct PairingData {
  HopfAlgebra<K> h1;
  HopfAlgebra<K> h2;
  Matrix<K> form;
};

// ---------------------------------------------------------------------------
// Verifiers (diagnostic, never throw on axiom failure)

template <ExactField K>
VerificationReport verify_partial_action(const ActionData<K>& p) {
  p.validate_shape();
  const auto& h = p.hopf;
  const auto& a = p.carrier;
  std::size_t n = p.hdim(), d = p.adim();
  VerificationReport r;
  if (!a.unit) {
    r.add("carrier_unital", false, "partial actions need a unital carrier");
    return r;
  }
  const auto& one = *a.unit;

  AxiomScan mult("multiplicativity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        auto lhs = p.act_basis(i, std::span<const K>(densify(a.product(j, k), d)));
        Vec<K> rhs(d, K(0));
        for (const auto& [x, c] : h.delta(i))
          axpy(rhs, c, std::span<const K>(a.multiply(p.basis_act(x / n, j), p.basis_act(x % n, k))));
        if (lhs != rhs) mult.fail_once(tuple_label({h.label(i), a.label(j), a.label(k)}));
      }
  mult.record(r);

  AxiomScan unit("unit");
  for (std::size_t j = 0; j < d; ++j)
    if (p.apply(h.one(), a.basis(j)) != a.basis(j)) unit.fail_once(a.label(j));
  unit.record(r);

  // h·(g·a) = Σ (h₁·1_A)((h₂g)·a)
  AxiomScan comp("partial_composition");
  std::vector<Vec<K>> h_on_one(n);
  for (std::size_t q = 0; q < n; ++q) h_on_one[q] = p.act_basis(q, std::span<const K>(one));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t j = 0; j < d; ++j) {
        auto lhs = p.act_basis(i, std::span<const K>(p.basis_act(g, j)));
        Vec<K> rhs(d, K(0));
        for (const auto& [x, c] : h.delta(i)) {
          auto h2g = densify(h.algebra.product(x % n, g), n);
          axpy(rhs, c, std::span<const K>(a.multiply(h_on_one[x / n], p.apply(h2g, a.basis(j)))));
        }
        if (lhs != rhs) comp.fail_once(tuple_label({h.label(i), h.label(g), a.label(j)}));
      }
  comp.record(r);
  return r;
}

template <ExactField K>
VerificationReport verify_global_action(const ActionData<K>& p) {
  p.validate_shape();
  const auto& h = p.hopf;
  const auto& a = p.carrier;
  std::size_t n = p.hdim(), d = p.adim();
  VerificationReport r;

  AxiomScan module("module");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t j = 0; j < d; ++j) {
        auto lhs = p.apply(densify(h.algebra.product(i, g), n), a.basis(j));
        auto rhs = p.act_basis(i, std::span<const K>(p.basis_act(g, j)));
        if (lhs != rhs) module.fail_once(tuple_label({h.label(i), h.label(g), a.label(j)}));
      }
  module.record(r);

  AxiomScan unit("unit");
  for (std::size_t j = 0; j < d; ++j)
    if (p.apply(h.one(), a.basis(j)) != a.basis(j)) unit.fail_once(a.label(j));
  unit.record(r);

  AxiomScan meas("measuring");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        auto lhs = p.act_basis(i, std::span<const K>(densify(a.product(j, k), d)));
        Vec<K> rhs(d, K(0));
        for (const auto& [x, c] : h.delta(i))
          axpy(rhs, c, std::span<const K>(a.multiply(p.basis_act(x / n, j), p.basis_act(x % n, k))));
        if (lhs != rhs) meas.fail_once(tuple_label({h.label(i), a.label(j), a.label(k)}));
      }
  meas.record(r);

  if (a.unit) {
    AxiomScan unit_a("unit_preserved");
    for (std::size_t i = 0; i < n; ++i)
      if (p.act_basis(i, std::span<const K>(*a.unit)) != scaled(*a.unit, h.epsilon(i))) unit_a.fail_once(h.label(i));
    unit_a.record(r);
  }
  return r;
}

namespace detail {

template <ExactField K>
Vec<K> counit_leg(const CoactionData<K>& p, std::span<const K> t) {
  Matrix<K> eps(1, p.hdim());
  for (std::size_t i = 0; i < p.hdim(); ++i) eps(0, i) = p.hopf.epsilon(i);
  return tensor_apply(Matrix<K>::identity(p.adim()), eps, t);
}

}  // namespace detail

template <ExactField K>
VerificationReport verify_partial_coaction(const CoactionData<K>& p) {
  p.validate_shape();
  const auto& a = p.carrier;
  const auto& h = p.hopf;
  std::size_t d = p.adim(), n = p.hdim();
  VerificationReport r;
  if (!a.unit) {
    r.add("carrier_unital", false, "partial coactions need a unital carrier");
    return r;
  }
  auto ah = tensor_product_algebra(a, h.algebra);
  auto rho = p.matrix();

  AxiomScan mult("multiplicativity");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto lhs = rho.apply(std::span<const K>(densify(a.product(i, j), d)));
      auto rhs = ah.multiply(p.coact[i], p.coact[j]);
      if (lhs != rhs) mult.fail_once(tuple_label({a.label(i), a.label(j)}));
    }
  mult.record(r);

  AxiomScan counit("counit");
  for (std::size_t j = 0; j < d; ++j)
    if (detail::counit_leg(p, std::span<const K>(p.coact[j])) != a.basis(j)) counit.fail_once(a.label(j));
  counit.record(r);

  // (ρ̄⊗I)ρ̄(a) = (ρ̄(1_A)⊗1_H)·((I⊗Δ)ρ̄(a))
  AxiomScan coassoc("partial_coassociativity");
  auto id_h = Matrix<K>::identity(n);
  auto id_a = Matrix<K>::identity(d);
  auto dm = comult_matrix(h.coalgebra);
  auto rho_one = rho.apply(std::span<const K>(*a.unit));
  auto rho_one_1 = tensor_vectors<K>(rho_one, h.one());
  for (std::size_t j = 0; j < d; ++j) {
    auto lhs = tensor_apply(rho, id_h, std::span<const K>(p.coact[j]));
    auto iddelta = tensor_apply(id_a, dm, std::span<const K>(p.coact[j]));
    auto rhs = tensor_multiply(ah, h.algebra, std::span<const K>(rho_one_1), std::span<const K>(iddelta));
    if (lhs != rhs) coassoc.fail_once(a.label(j));
  }
  coassoc.record(r);
  return r;
}

template <ExactField K>
VerificationReport verify_global_coaction(const CoactionData<K>& p) {
  p.validate_shape();
  const auto& a = p.carrier;
  const auto& h = p.hopf;
  std::size_t d = p.adim(), n = p.hdim();
  VerificationReport r;
  auto ah = tensor_product_algebra(a, h.algebra);
  auto rho = p.matrix();

  AxiomScan mult("multiplicativity");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto lhs = rho.apply(std::span<const K>(densify(a.product(i, j), d)));
      if (lhs != ah.multiply(p.coact[i], p.coact[j])) mult.fail_once(tuple_label({a.label(i), a.label(j)}));
    }
  mult.record(r);

  AxiomScan counit("counit");
  for (std::size_t j = 0; j < d; ++j)
    if (detail::counit_leg(p, std::span<const K>(p.coact[j])) != a.basis(j)) counit.fail_once(a.label(j));
  counit.record(r);

  AxiomScan coassoc("coassociativity");
  auto dm = comult_matrix(h.coalgebra);
  for (std::size_t j = 0; j < d; ++j) {
    auto lhs = tensor_apply(rho, Matrix<K>::identity(n), std::span<const K>(p.coact[j]));
    auto rhs = tensor_apply(Matrix<K>::identity(d), dm, std::span<const K>(p.coact[j]));
    if (lhs != rhs) coassoc.fail_once(a.label(j));
  }
  coassoc.record(r);

  if (a.unit) {
    bool ok = rho.apply(std::span<const K>(*a.unit)) == tensor_vectors<K>(*a.unit, h.one());
    r.add("unit_preserved", ok, ok ? "" : "ρ(1) ≠ 1⊗1");
  }
  return r;
}

/// Pairing axioms (i)–(iv) plus nondegeneracy.
template <ExactField K>
VerificationReport verify_pairing(const PairingData<K>& p) {
  const auto& h1 = p.h1;
  const auto& h2 = p.h2;
  std::size_t n1 = h1.dim(), n2 = h2.dim();
  VerificationReport r;
  if (p.form.rows() != n1 || p.form.cols() != n2) throw ShapeError("pairing form must be dim(H1)×dim(H2)");
  auto pair = [&](std::span<const K> x, std::span<const K> y) {
    K s(0);
    for (std::size_t i = 0; i < n1; ++i)
      if (!x[i].is_zero())
        for (std::size_t j = 0; j < n2; ++j)
          if (!y[j].is_zero()) s += x[i] * y[j] * p.form(i, j);
    return s;
  };
  // ⟨x, y⟩ on tensor squares, x ∈ H1⊗H1, y ∈ H2⊗H2
  auto pair2 = [&](std::span<const K> x, std::size_t nx, std::span<const K> y, std::size_t ny) {
    K s(0);
    for (std::size_t u = 0; u < x.size(); ++u) {
      if (x[u].is_zero()) continue;
      for (std::size_t v = 0; v < y.size(); ++v) {
        if (y[v].is_zero()) continue;
        s += x[u] * y[v] * p.form(u / nx, v / ny) * p.form(u % nx, v % ny);
      }
    }
    return s;
  };
  AxiomScan ax1("pairing_product_h1"), ax2("pairing_product_h2"), ax3("pairing_unit_h2"), ax4("pairing_unit_h1");
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t k = 0; k < n1; ++k)
      for (std::size_t f = 0; f < n2; ++f) {
        auto hk = densify(h1.algebra.product(i, k), n1);
        auto df = densify(h2.delta(f), n2 * n2);
        auto ik = tensor_vectors<K>(h1.basis(i), h1.basis(k));
        if (pair(std::span<const K>(hk), std::span<const K>(h2.basis(f))) !=
            pair2(std::span<const K>(ik), n1, std::span<const K>(df), n2))
          ax1.fail_once(tuple_label({h1.label(i), h1.label(k), h2.label(f)}));
      }
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t f = 0; f < n2; ++f)
      for (std::size_t g = 0; g < n2; ++g) {
        auto fg = densify(h2.algebra.product(f, g), n2);
        auto dh = densify(h1.delta(i), n1 * n1);
        auto fgt = tensor_vectors<K>(h2.basis(f), h2.basis(g));
        if (pair(std::span<const K>(h1.basis(i)), std::span<const K>(fg)) !=
            pair2(std::span<const K>(dh), n1, std::span<const K>(fgt), n2))
          ax2.fail_once(tuple_label({h1.label(i), h2.label(f), h2.label(g)}));
      }
  for (std::size_t i = 0; i < n1; ++i)
    if (pair(std::span<const K>(h1.basis(i)), std::span<const K>(h2.one())) != h1.epsilon(i)) ax3.fail_once(h1.label(i));
  for (std::size_t f = 0; f < n2; ++f)
    if (pair(std::span<const K>(h1.one()), std::span<const K>(h2.basis(f))) != h2.epsilon(f)) ax4.fail_once(h2.label(f));
  ax1.record(r);
  ax2.record(r);
  ax3.record(r);
  ax4.record(r);
  return r;
}

template <ExactField K>
bool pairing_nondegenerate(const PairingData<K>& p) {
  auto rk = rank(p.form);
  return rk == p.h1.dim() && rk == p.h2.dim();
}

/// The pairing of H* with H, ⟨hᵢ*, hⱼ⟩ = δᵢⱼ.
template <ExactField K>
PairingData<K> canonical_pairing(const HopfAlgebra<K>& h) {
  return {dual_hopf(h), h, Matrix<K>::identity(h.dim())};
}

// ---------------------------------------------------------------------------
// Verified constructors

template <ExactField K>
PartialAction<K> make_partial_action(HopfAlgebra<K> h, Algebra<K> a, std::vector<Vec<K>> act) {
  PartialAction<K> p{{std::move(h), std::move(a), std::move(act)}};
  require<K>(verify_partial_action(p), "partial action");
  return p;
}

template <ExactField K>
GlobalAction<K> make_global_action(HopfAlgebra<K> h, Algebra<K> a, std::vector<Vec<K>> act) {
  GlobalAction<K> p{{std::move(h), std::move(a), std::move(act)}};
  require<K>(verify_global_action(p), "global action");
  return p;
}

template <ExactField K>
PartialCoaction<K> make_partial_coaction(HopfAlgebra<K> h, Algebra<K> a, std::vector<Vec<K>> coact) {
  PartialCoaction<K> p{{std::move(h), std::move(a), std::move(coact)}};
  require<K>(verify_partial_coaction(p), "partial coaction");
  return p;
}

template <ExactField K>
GlobalCoaction<K> make_global_coaction(HopfAlgebra<K> h, Algebra<K> a, std::vector<Vec<K>> coact) {
  GlobalCoaction<K> p{{std::move(h), std::move(a), std::move(coact)}};
  require<K>(verify_global_coaction(p), "global coaction");
  return p;
}

/// Reads a verified global structure as a partial one.
template <ExactField K>
PartialAction<K> as_partial(const GlobalAction<K>& g) {
  return PartialAction<K>{static_cast<const ActionData<K>&>(g)};
}
template <ExactField K>
PartialCoaction<K> as_partial(const GlobalCoaction<K>& g) {
  return PartialCoaction<K>{static_cast<const CoactionData<K>&>(g)};
}

// ---------------------------------------------------------------------------
// Induced structures

/// The right ideal unit_a·B with its canonical basis, as a unital algebra.
template <ExactField K>
struct UnitalIdeal {
  Subspace<K> ideal;
  Algebra<K> algebra;
};

template <ExactField K>
UnitalIdeal<K> unital_right_ideal(const Algebra<K>& b, const Vec<K>& unit_a) {
  if (unit_a.size() != b.dim) throw DimensionMismatch("idempotent has wrong length");
  auto ideal = principal_ideal(b, unit_a, /*left_side=*/false);
  for (const auto& x : ideal.basis_vectors())
    for (std::size_t i = 0; i < b.dim; ++i)
      if (!ideal.contains(std::span<const K>(b.multiply(x, b.basis(i)))))
        throw NotRightIdeal("unit_a·B is not closed under right multiplication");
  if (!ideal.contains(std::span<const K>(unit_a))) throw NotUnitOnA("unit_a does not lie in unit_a·B");
  for (const auto& x : ideal.basis_vectors())
    if (b.multiply(x, unit_a) != x || b.multiply(unit_a, x) != x)
      throw NotUnitOnA("unit_a is not a two-sided unit on unit_a·B");
  Algebra<K> alg;
  alg.dim = ideal.dim();
  alg.labels = Algebra<K>::default_labels("a", ideal.dim());
  alg.mult.assign(alg.dim * alg.dim, {});
  auto basis = ideal.basis_vectors();
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t j = 0; j < alg.dim; ++j)
      alg.mult[i * alg.dim + j] = sparsify<K>(*ideal.coordinates(std::span<const K>(b.multiply(basis[i], basis[j]))));
  alg.unit = *ideal.coordinates(std::span<const K>(unit_a));
  return {std::move(ideal), std::move(alg)};
}

template <ExactField K>
struct InducedAction {
  PartialAction<K> action;
  Subspace<K> ideal;  // A inside B
};

/// h·a = 1_A(h▷a) on A = 1_A·B.
template <ExactField K>
InducedAction<K> induced_partial_action(const GlobalAction<K>& b, const Vec<K>& unit_a) {
  auto [ideal, alg] = unital_right_ideal(b.carrier, unit_a);
  auto basis = ideal.basis_vectors();
  auto act = ActionData<K>::tabulate(b.hdim(), ideal.dim(), [&](std::size_t i, std::size_t j) {
    auto v = b.carrier.multiply(unit_a, b.act_basis(i, std::span<const K>(basis[j])));
    return *ideal.coordinates(std::span<const K>(v));
  });
  auto p = make_partial_action(b.hopf, std::move(alg), std::move(act));
  return {std::move(p), std::move(ideal)};
}

template <ExactField K>
struct InducedCoaction {
  PartialCoaction<K> coaction;
  Subspace<K> ideal;
};

/// ρ̄(a) = (1_A⊗1_H)ρ(a) on A = 1_A·B.
template <ExactField K>
InducedCoaction<K> induced_partial_coaction(const GlobalCoaction<K>& b, const Vec<K>& unit_a) {
  auto [ideal, alg] = unital_right_ideal(b.carrier, unit_a);
  std::size_t n = b.hdim(), db = b.adim(), d = ideal.dim();
  auto rho = b.matrix();
  std::vector<Vec<K>> coact;
  for (const auto& x : ideal.basis_vectors()) {
    auto t = rho.apply(std::span<const K>(x));
    Vec<K> out(d * n, K(0));
    for (std::size_t k = 0; k < n; ++k) {
      Vec<K> leg(db, K(0));
      for (std::size_t l = 0; l < db; ++l) leg[l] = t[l * n + k];
      auto cut = b.carrier.multiply(unit_a, leg);
      auto c = *ideal.coordinates(std::span<const K>(cut));
      for (std::size_t l = 0; l < d; ++l) out[l * n + k] = c[l];
    }
    coact.push_back(std::move(out));
  }
  auto p = make_partial_coaction(b.hopf, std::move(alg), std::move(coact));
  return {std::move(p), std::move(ideal)};
}

// ---------------------------------------------------------------------------
// Conversion across the canonical pairing

/// Coaction of H on A → action of H* on A: hᵢ*·a = Σ a^[0] hᵢ*(a^[1]).
template <ExactField K>
ActionData<K> coaction_to_action_data(const CoactionData<K>& x) {
  x.validate_shape();
  std::size_t n = x.hdim(), d = x.adim();
  auto act = ActionData<K>::tabulate(n, d, [&](std::size_t i, std::size_t j) {
    Vec<K> v(d, K(0));
    for (std::size_t l = 0; l < d; ++l) v[l] = x.coact[j][l * n + i];
    return v;
  });
  return {dual_hopf(x.hopf), x.carrier, std::move(act)};
}

/// Action of H′ on A → coaction of H′* on A: ρ̄(a) = Σᵢ (hᵢ·a)⊗hᵢ*.
template <ExactField K>
CoactionData<K> action_to_coaction_data(const ActionData<K>& p) {
  p.validate_shape();
  std::size_t n = p.hdim(), d = p.adim();
  std::vector<Vec<K>> coact;
  for (std::size_t j = 0; j < d; ++j) {
    Vec<K> v(d * n, K(0));
    for (std::size_t i = 0; i < n; ++i) {
      const auto& hij = p.basis_act(i, j);
      for (std::size_t l = 0; l < d; ++l) v[l * n + i] = hij[l];
    }
    coact.push_back(std::move(v));
  }
  return {dual_hopf(p.hopf), p.carrier, std::move(coact)};
}

template <ExactField K>
PartialAction<K> coaction_action_convert(const PartialCoaction<K>& x) {
  auto d = coaction_to_action_data(x);
  return make_partial_action(std::move(d.hopf), std::move(d.carrier), std::move(d.act));
}

template <ExactField K>
PartialCoaction<K> action_coaction_convert(const PartialAction<K>& p) {
  auto d = action_to_coaction_data(p);
  return make_partial_coaction(std::move(d.hopf), std::move(d.carrier), std::move(d.coact));
}

template <ExactField K>
GlobalAction<K> global_action_from_coaction(const GlobalCoaction<K>& x) {
  auto d = coaction_to_action_data(x);
  return make_global_action(std::move(d.hopf), std::move(d.carrier), std::move(d.act));
}

/// δ(b) = Σᵢ (hᵢ▷b)⊗hᵢ*: an H-module algebra is an H*-comodule algebra.
template <ExactField K>
GlobalCoaction<K> comodule_from_action(const GlobalAction<K>& b) {
  auto d = action_to_coaction_data(b);
  return make_global_coaction(std::move(d.hopf), std::move(d.carrier), std::move(d.coact));
}

// ---------------------------------------------------------------------------
// Regular actions between H and H*

/// H on H*: (h⇀f)(k) = f(kh), so hᵢ⇀hⱼ* = Σₖ (hₖhᵢ)[j] hₖ*.
template <ExactField K>
GlobalAction<K> regular_action_on_dual(const HopfAlgebra<K>& h) {
  std::size_t n = h.dim();
  std::vector<Vec<K>> act(n * n, Vec<K>(n, K(0)));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [j, c] : h.algebra.product(k, i)) act[i * n + j][k] += c;
  auto hd = dual_hopf(h);
  return make_global_action(h, std::move(hd.algebra), std::move(act));
}

/// H* on H: f⇀k = Σ k₁f(k₂), so hⱼ*⇀h_c = Σ over (p, j) in Δh_c of h_p.
template <ExactField K>
GlobalAction<K> regular_action_on_hopf(const HopfAlgebra<K>& h) {
  std::size_t n = h.dim();
  std::vector<Vec<K>> act(n * n, Vec<K>(n, K(0)));
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& [x, v] : h.delta(c)) act[(x % n) * n + c][x / n] += v;
  return make_global_action(dual_hopf(h), h.algebra, std::move(act));
}

/// h·1_A = ε(h)1_A for every basis h: the partial action is a global one.
template <ExactField K>
bool acts_globally(const ActionData<K>& p) {
  const auto& one = p.carrier.one();
  for (std::size_t i = 0; i < p.hdim(); ++i)
    if (p.act_basis(i, std::span<const K>(one)) != scaled(one, p.hopf.epsilon(i))) return false;
  return true;
}

}  // namespace hpa
