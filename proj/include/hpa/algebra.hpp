#pragma once

// Finite-dimensional algebras, coalgebras and Hopf algebras given by exact
// structure constants, with axiom verification and the standard constructions.
//
// Tensor products always use row-major basis order: bᵢ⊗cⱼ ↦ i·dim(C) + j.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hpa/errors.hpp"
#include "hpa/exactlin.hpp"
#include "hpa/field.hpp"
#include "hpa/report.hpp"

namespace hpa {

/// Associative algebra on basis b₀…b_{dim−1}; mult[i·dim+j] holds bᵢbⱼ.
/// The unit is optional so that non-unital module algebras can be represented.
template <ExactField K>
struct Algebra {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<SparseVec<K>> mult;
  std::optional<Vec<K>> unit;

  using ProductFn = std::function<Vec<K>(std::size_t, std::size_t)>;

  static Algebra from_products(std::size_t dim, std::vector<std::string> labels, const ProductFn& f,
                               std::optional<Vec<K>> unit) {
    Algebra a;
    a.dim = dim;
    a.labels = labels.empty() ? default_labels("b", dim) : std::move(labels);
    a.mult.resize(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        auto v = f(i, j);
        if (v.size() != dim) throw DimensionMismatch("product vector has wrong length");
        a.mult[i * dim + j] = sparsify<K>(v);
      }
    a.unit = std::move(unit);
    a.validate_shape();
    return a;
  }

  static std::vector<std::string> default_labels(const std::string& stem, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
    return out;
  }

  void validate_shape() const {
    if (labels.size() != dim) throw ShapeError("algebra: label count differs from dim");
    if (mult.size() != dim * dim) throw ShapeError("algebra: mult tensor must have dim² entries");
    for (const auto& s : mult)
      for (const auto& [k, c] : s)
        if (k >= dim) throw ShapeError("algebra: product index out of range");
    if (unit && unit->size() != dim) throw ShapeError("algebra: unit vector has wrong length");
  }

  [[nodiscard]] bool is_unital() const { return unit.has_value(); }
  [[nodiscard]] const Vec<K>& one() const {
    if (!unit) throw NonUnitalAlgebra("algebra has no unit");
    return *unit;
  }
  [[nodiscard]] Vec<K> basis(std::size_t i) const { return unit_vector<K>(dim, i); }
  [[nodiscard]] const SparseVec<K>& product(std::size_t i, std::size_t j) const { return mult[i * dim + j]; }

  [[nodiscard]] Vec<K> multiply(std::span<const K> a, std::span<const K> b) const {
    if (a.size() != dim || b.size() != dim) throw DimensionMismatch("multiply: operand length mismatch");
    Vec<K> out(dim, K(0));
    for (std::size_t i = 0; i < dim; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (b[j].is_zero()) continue;
        axpy(out, a[i] * b[j], product(i, j));
      }
    }
    return out;
  }
  [[nodiscard]] Vec<K> multiply(const Vec<K>& a, const Vec<K>& b) const {
    return multiply(std::span<const K>(a), std::span<const K>(b));
  }

  /// Matrix of x ↦ a·x.
  [[nodiscard]] Matrix<K> left_multiplication(std::span<const K> a) const {
    Matrix<K> m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) m.set_column(j, multiply(a, std::span<const K>(basis(j))));
    return m;
  }
  /// Matrix of x ↦ x·a.
  [[nodiscard]] Matrix<K> right_multiplication(std::span<const K> a) const {
    Matrix<K> m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) m.set_column(j, multiply(std::span<const K>(basis(j)), a));
    return m;
  }

  [[nodiscard]] BilinearProduct<K> product_fn() const {
    return [this](std::span<const K> a, std::span<const K> b) { return multiply(a, b); };
  }

  std::string label(std::size_t i) const { return i < labels.size() ? labels[i] : std::to_string(i); }
};

/// Coalgebra on basis b₀…; comult[i] holds Δbᵢ with pair (j,k) at j·dim+k.
template <ExactField K>
struct Coalgebra {
  std::size_t dim = 0;
  std::vector<SparseVec<K>> comult;
  Vec<K> counit;

  void validate_shape() const {
    if (comult.size() != dim) throw ShapeError("coalgebra: comult needs one entry per basis element");
    for (const auto& s : comult)
      for (const auto& [k, c] : s)
        if (k >= dim * dim) throw ShapeError("coalgebra: comult index out of range");
    if (counit.size() != dim) throw ShapeError("coalgebra: counit has wrong length");
  }

  [[nodiscard]] Vec<K> comultiply(std::span<const K> v) const {
    Vec<K> out(dim * dim, K(0));
    for (std::size_t i = 0; i < dim; ++i)
      if (!v[i].is_zero()) axpy(out, v[i], comult[i]);
    return out;
  }
  [[nodiscard]] K apply_counit(std::span<const K> v) const {
    K s(0);
    for (std::size_t i = 0; i < dim; ++i)
      if (!v[i].is_zero()) s += v[i] * counit[i];
    return s;
  }
};

template <ExactField K>
struct LinearMap {
  std::size_t domain_dim = 0;
  std::size_t codomain_dim = 0;
  Matrix<K> matrix;  // codomain_dim × domain_dim

  LinearMap() = default;
  explicit LinearMap(Matrix<K> m) : domain_dim(m.cols()), codomain_dim(m.rows()), matrix(std::move(m)) {}

  [[nodiscard]] Vec<K> operator()(std::span<const K> v) const { return matrix.apply(v); }
  [[nodiscard]] Vec<K> operator()(const Vec<K>& v) const { return matrix.apply(std::span<const K>(v)); }
  [[nodiscard]] Vec<K> image_of_basis(std::size_t i) const { return matrix.column(i); }
  [[nodiscard]] Subspace<K> image() const { return Subspace<K>::from_matrix(matrix.transpose()); }
  [[nodiscard]] Subspace<K> kernel() const { return hpa::kernel(matrix); }
  [[nodiscard]] bool injective() const { return rank(matrix) == domain_dim; }
};

template <ExactField K>
LinearMap<K> compose(const LinearMap<K>& outer, const LinearMap<K>& inner) {
  return LinearMap<K>(outer.matrix * inner.matrix);
}

/// Finite-dimensional Hopf algebra; antipode_inverse is computed on construction.
template <ExactField K>
struct HopfAlgebra {
  Algebra<K> algebra;
  Coalgebra<K> coalgebra;
  Matrix<K> antipode;
  Matrix<K> antipode_inverse;

  /// Assembles the data and inverts the antipode (SingularMatrix on failure).
  static HopfAlgebra make(Algebra<K> a, Coalgebra<K> c, Matrix<K> s) {
    HopfAlgebra h{std::move(a), std::move(c), std::move(s), {}};
    h.validate_shape();
    h.antipode_inverse = invert_matrix(h.antipode);
    return h;
  }

  void validate_shape() const {
    algebra.validate_shape();
    coalgebra.validate_shape();
    if (coalgebra.dim != algebra.dim) throw ShapeError("hopf: algebra and coalgebra dims differ");
    if (!algebra.unit) throw ShapeError("hopf: algebra must be unital");
    if (antipode.rows() != dim() || antipode.cols() != dim()) throw ShapeError("hopf: antipode must be dim×dim");
  }

  [[nodiscard]] std::size_t dim() const { return algebra.dim; }
  [[nodiscard]] const Vec<K>& one() const { return algebra.one(); }
  [[nodiscard]] const SparseVec<K>& delta(std::size_t i) const { return coalgebra.comult[i]; }
  [[nodiscard]] const K& epsilon(std::size_t i) const { return coalgebra.counit[i]; }
  [[nodiscard]] Vec<K> basis(std::size_t i) const { return algebra.basis(i); }
  [[nodiscard]] std::string label(std::size_t i) const { return algebra.label(i); }
};

// ---------------------------------------------------------------------------
// Tensor helpers

/// Product in A⊗B of two vectors given in row-major tensor coordinates.
template <ExactField K>
Vec<K> tensor_multiply(const Algebra<K>& a, const Algebra<K>& b, std::span<const K> u, std::span<const K> v) {
  std::size_t db = b.dim;
  Vec<K> out(a.dim * db, K(0));
  for (std::size_t x = 0; x < u.size(); ++x) {
    if (u[x].is_zero()) continue;
    std::size_t i = x / db, j = x % db;
    for (std::size_t y = 0; y < v.size(); ++y) {
      if (v[y].is_zero()) continue;
      std::size_t k = y / db, l = y % db;
      K c = u[x] * v[y];
      for (const auto& [p, cp] : a.product(i, k))
        for (const auto& [q, cq] : b.product(j, l)) out[p * db + q] += c * cp * cq;
    }
  }
  return out;
}

/// (f⊗g)(t) for t in V⊗W coordinates; f: V→V', g: W→W' as matrices.
template <ExactField K>
Vec<K> tensor_apply(const Matrix<K>& f, const Matrix<K>& g, std::span<const K> t) {
  std::size_t dv = f.cols(), dw = g.cols(), dv2 = f.rows(), dw2 = g.rows();
  if (t.size() != dv * dw) throw DimensionMismatch("tensor_apply: length mismatch");
  Vec<K> out(dv2 * dw2, K(0));
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (t[x].is_zero()) continue;
    std::size_t i = x / dw, j = x % dw;
    for (std::size_t p = 0; p < dv2; ++p) {
      if (f(p, i).is_zero()) continue;
      for (std::size_t q = 0; q < dw2; ++q)
        if (!g(q, j).is_zero()) out[p * dw2 + q] += t[x] * f(p, i) * g(q, j);
    }
  }
  return out;
}

template <ExactField K>
Vec<K> tensor_vectors(std::span<const K> u, std::span<const K> v) {
  Vec<K> out(u.size() * v.size(), K(0));
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) out[i * v.size() + j] = u[i] * v[j];
  }
  return out;
}

/// Matrix of the comultiplication H → H⊗H.
template <ExactField K>
Matrix<K> comult_matrix(const Coalgebra<K>& c) {
  Matrix<K> m(c.dim * c.dim, c.dim);
  for (std::size_t i = 0; i < c.dim; ++i)
    for (const auto& [k, v] : c.comult[i]) m(k, i) = v;
  return m;
}

inline std::string tuple_label(std::initializer_list<std::string> parts) {
  std::string s = "(";
  bool first = true;
  for (const auto& p : parts) {
    if (!first) s += ", ";
    s += p;
    first = false;
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Verification

template <ExactField K>
VerificationReport verify_algebra(const Algebra<K>& a) {
  a.validate_shape();
  VerificationReport r;
  AxiomScan assoc("associativity");
  std::size_t n = a.dim;
  for (std::size_t i = 0; i < n && assoc.ok(); ++i)
    for (std::size_t j = 0; j < n && assoc.ok(); ++j) {
      const auto& ij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec<K> left(n, K(0)), right(n, K(0));
        for (const auto& [l, c] : ij) axpy(left, c, a.product(l, k));
        for (const auto& [l, c] : a.product(j, k)) axpy(right, c, a.product(i, l));
        if (left != right) {
          assoc.fail_once(tuple_label({a.label(i), a.label(j), a.label(k)}));
          break;
        }
      }
    }
  assoc.record(r);
  if (a.unit) {
    AxiomScan unit("unit");
    for (std::size_t i = 0; i < n; ++i) {
      auto bi = a.basis(i);
      if (a.multiply(*a.unit, bi) != bi || a.multiply(bi, *a.unit) != bi) unit.fail_once(a.label(i));
    }
    unit.record(r);
  }
  return r;
}

template <ExactField K>
VerificationReport verify_coalgebra(const Coalgebra<K>& c, const std::vector<std::string>& labels) {
  c.validate_shape();
  VerificationReport r;
  std::size_t n = c.dim;
  auto id = Matrix<K>::identity(n);
  auto dm = comult_matrix(c);
  Matrix<K> eps(1, n);
  for (std::size_t i = 0; i < n; ++i) eps(0, i) = c.counit[i];
  AxiomScan coassoc("coassociativity"), counit("counit");
  for (std::size_t i = 0; i < n; ++i) {
    auto d = densify(c.comult[i], n * n);
    auto left = tensor_apply(dm, id, std::span<const K>(d));
    auto right = tensor_apply(id, dm, std::span<const K>(d));
    if (left != right) coassoc.fail_once(labels.at(i));
    auto bi = unit_vector<K>(n, i);
    if (tensor_apply(eps, id, std::span<const K>(d)) != bi || tensor_apply(id, eps, std::span<const K>(d)) != bi)
      counit.fail_once(labels.at(i));
  }
  coassoc.record(r);
  counit.record(r);
  return r;
}

/// One entry per axiom group; failures name the first offending basis tuple.
template <ExactField K>
VerificationReport verify_structure(const HopfAlgebra<K>& h) {
  h.validate_shape();
  const auto& a = h.algebra;
  const auto& c = h.coalgebra;
  std::size_t n = h.dim();
  VerificationReport r = verify_algebra(a);
  r.merge("", verify_coalgebra(c, a.labels));

  AxiomScan bialg("bialgebra");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto prod = densify(a.product(i, j), n);
      auto lhs = c.comultiply(std::span<const K>(prod));
      auto di = densify(c.comult[i], n * n), dj = densify(c.comult[j], n * n);
      auto rhs = tensor_multiply(a, a, std::span<const K>(di), std::span<const K>(dj));
      if (lhs != rhs || c.apply_counit(std::span<const K>(prod)) != c.counit[i] * c.counit[j])
        bialg.fail_once(tuple_label({a.label(i), a.label(j)}));
    }
  const auto& one = *a.unit;
  if (c.comultiply(std::span<const K>(one)) != tensor_vectors<K>(one, one) || c.apply_counit(std::span<const K>(one)) != K(1))
    bialg.fail_once("(1)");
  bialg.record(r);

  AxiomScan anti("antipode");
  for (std::size_t i = 0; i < n; ++i) {
    Vec<K> left(n, K(0)), right(n, K(0));
    for (const auto& [x, coeff] : c.comult[i]) {
      std::size_t p = x / n, q = x % n;
      auto sp = h.antipode.column(p), sq = h.antipode.column(q);
      axpy(left, coeff, std::span<const K>(a.multiply(std::span<const K>(sp), std::span<const K>(a.basis(q)))));
      axpy(right, coeff, std::span<const K>(a.multiply(std::span<const K>(a.basis(p)), std::span<const K>(sq))));
    }
    auto expected = scaled(one, c.counit[i]);
    if (left != expected || right != expected) anti.fail_once(a.label(i));
  }
  anti.record(r);
  bool inv_ok = h.antipode_inverse.rows() == n && h.antipode_inverse * h.antipode == Matrix<K>::identity(n) &&
                h.antipode * h.antipode_inverse == Matrix<K>::identity(n);
  r.add("antipode_inverse", inv_ok, inv_ok ? "" : "S⁻¹·S ≠ id");
  return r;
}

template <ExactField K>
void require(const VerificationReport& r, const std::string& what) {
  if (!r.ok()) {
    auto f = r.failures().front();
    throw VerificationFailure(what + ": " + f.name + " " + f.detail);
  }
}

// ---------------------------------------------------------------------------
// Constructions

inline std::string dual_label(const std::string& l) {
  if (l.size() > 1 && l.back() == '*') return l.substr(0, l.size() - 1);
  return l + "*";
}

/// H* on the dual basis: product = Δᵀ, coproduct = mᵀ, unit ε, counit ev₁, antipode Sᵀ.
template <ExactField K>
HopfAlgebra<K> dual_hopf(const HopfAlgebra<K>& h) {
  std::size_t n = h.dim();
  Algebra<K> a;
  a.dim = n;
  for (const auto& l : h.algebra.labels) a.labels.push_back(dual_label(l));
  a.mult.assign(n * n, {});
  std::vector<Vec<K>> dense(n * n, Vec<K>(n, K(0)));
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [x, c] : h.delta(k)) dense[x][k] += c;
  for (std::size_t x = 0; x < n * n; ++x) a.mult[x] = sparsify<K>(dense[x]);
  a.unit = h.coalgebra.counit;

  Coalgebra<K> c;
  c.dim = n;
  c.comult.assign(n, {});
  std::vector<Vec<K>> dcom(n, Vec<K>(n * n, K(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, v] : h.algebra.product(i, j)) dcom[k][i * n + j] += v;
  for (std::size_t k = 0; k < n; ++k) c.comult[k] = sparsify<K>(dcom[k]);
  c.counit = h.one();

  HopfAlgebra<K> d{std::move(a), std::move(c), h.antipode.transpose(), h.antipode_inverse.transpose()};
  d.validate_shape();
  return d;
}

template <ExactField K>
Algebra<K> tensor_product_algebra(const Algebra<K>& a, const Algebra<K>& b) {
  Algebra<K> t;
  t.dim = a.dim * b.dim;
  for (const auto& la : a.labels)
    for (const auto& lb : b.labels) t.labels.push_back(la + "⊗" + lb);
  t.mult.assign(t.dim * t.dim, {});
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        for (std::size_t l = 0; l < b.dim; ++l) {
          SparseVec<K> s;
          for (const auto& [p, cp] : a.product(i, k))
            for (const auto& [q, cq] : b.product(j, l)) s.emplace_back(p * b.dim + q, cp * cq);
          std::sort(s.begin(), s.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
          t.mult[(i * b.dim + j) * t.dim + (k * b.dim + l)] = std::move(s);
        }
  if (a.unit && b.unit) t.unit = tensor_vectors<K>(*a.unit, *b.unit);
  return t;
}

/// End_k(kⁿ) on matrix units e_{i,j} (index i·n+j) with e_{i,j}e_{k,l} = δ_{j,k}e_{i,l}.
template <ExactField K>
Algebra<K> end_algebra(std::size_t n) {
  if (n == 0) throw PreconditionViolation("end_algebra: n must be ≥ 1");
  Algebra<K> e;
  e.dim = n * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e.labels.push_back("e" + std::to_string(i) + "," + std::to_string(j));
  e.mult.assign(e.dim * e.dim, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) e.mult[(i * n + j) * e.dim + (j * n + l)] = {{i * n + l, K(1)}};
  Vec<K> one(e.dim, K(0));
  for (std::size_t i = 0; i < n; ++i) one[i * n + i] = K(1);
  e.unit = std::move(one);
  return e;
}

/// M_n(B) = B ⊗ End(kⁿ) on basis b_s E_{i,j}.
template <ExactField K>
Algebra<K> matrix_algebra(const Algebra<K>& b, std::size_t n) {
  return tensor_product_algebra(b, end_algebra<K>(n));
}

/// Coordinates in End(kⁿ) of the endomorphism with matrix t.
template <ExactField K>
Vec<K> end_coordinates(const Matrix<K>& t) {
  std::size_t n = t.rows();
  Vec<K> v(n * n, K(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v[i * n + j] = t(i, j);
  return v;
}

template <ExactField K>
Matrix<K> end_matrix(std::span<const K> coords, std::size_t n) {
  Matrix<K> t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) = coords[i * n + j];
  return t;
}

template <ExactField K>
Algebra<K> opposite_algebra(const Algebra<K>& a) {
  Algebra<K> o = a;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) o.mult[i * a.dim + j] = a.product(j, i);
  return o;
}

/// A unit of a, solved from the unit equations, if one exists.
template <ExactField K>
std::optional<Vec<K>> find_unit(const Algebra<K>& a) {
  std::size_t n = a.dim;
  if (n == 0) return Vec<K>{};
  Matrix<K> m(2 * n * n, n);
  Vec<K> rhs(2 * n * n, K(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [k, c] : a.product(i, j)) m((2 * j) * n + k, i) += c;      // u·bⱼ
      for (const auto& [k, c] : a.product(j, i)) m((2 * j + 1) * n + k, i) += c;  // bⱼ·u
    }
  for (std::size_t j = 0; j < n; ++j) {
    rhs[(2 * j) * n + j] = K(1);
    rhs[(2 * j + 1) * n + j] = K(1);
  }
  return solve(m, std::span<const K>(rhs));
}

/// Algebra structure induced on a product-closed subspace (canonical basis).
template <ExactField K>
Algebra<K> restrict_algebra(const Algebra<K>& a, const Subspace<K>& v, const std::string& stem = "v") {
  std::size_t d = v.dim();
  auto basis = v.basis_vectors();
  Algebra<K> r;
  r.dim = d;
  r.labels = Algebra<K>::default_labels(stem, d);
  r.mult.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto p = a.multiply(basis[i], basis[j]);
      auto coords = v.coordinates(std::span<const K>(p));
      if (!coords) throw PreconditionViolation("restrict_algebra: subspace is not closed under the product");
      r.mult[i * d + j] = sparsify<K>(*coords);
    }
  if (a.unit) {
    if (auto c = v.coordinates(std::span<const K>(*a.unit))) r.unit = *c;
  }
  if (!r.unit) r.unit = find_unit(r);
  return r;
}

template <ExactField K>
bool is_product_closed(const Algebra<K>& a, const Subspace<K>& v) {
  auto basis = v.basis_vectors();
  for (const auto& x : basis)
    for (const auto& y : basis)
      if (!v.contains(std::span<const K>(a.multiply(x, y)))) return false;
  return true;
}

template <ExactField K>
bool is_idempotent(const Algebra<K>& a, const Vec<K>& e) {
  return a.multiply(e, e) == e;
}

template <ExactField K>
bool is_central(const Algebra<K>& a, const Vec<K>& z) {
  for (std::size_t i = 0; i < a.dim; ++i) {
    auto bi = a.basis(i);
    if (a.multiply(z, bi) != a.multiply(bi, z)) return false;
  }
  return true;
}

/// Span of {x·v} (left) or {v·x} (right) over basis x of a.
template <ExactField K>
Subspace<K> principal_ideal(const Algebra<K>& a, const Vec<K>& v, bool left_side) {
  std::vector<Vec<K>> gens;
  for (std::size_t i = 0; i < a.dim; ++i)
    gens.push_back(left_side ? a.multiply(a.basis(i), v) : a.multiply(v, a.basis(i)));
  return Subspace<K>::span(gens, a.dim);
}

/// Multiplicativity on all basis pairs plus unit preservation when both are unital.
template <ExactField K>
VerificationReport check_algebra_morphism(const LinearMap<K>& f, const Algebra<K>& a, const Algebra<K>& b,
                                          bool check_unit = true) {
  if (f.domain_dim != a.dim || f.codomain_dim != b.dim) throw DimensionMismatch("morphism shape differs from algebras");
  VerificationReport r;
  AxiomScan mult("multiplicative");
  std::vector<Vec<K>> img(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) img[i] = f.image_of_basis(i);
  for (std::size_t i = 0; i < a.dim && mult.ok(); ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      auto lhs = f(densify(a.product(i, j), a.dim));
      if (lhs != b.multiply(img[i], img[j])) {
        mult.fail_once(tuple_label({a.label(i), a.label(j)}));
        break;
      }
    }
  mult.record(r);
  if (check_unit && a.unit && b.unit) {
    bool ok = f(*a.unit) == *b.unit;
    r.add("unit", ok, ok ? "" : "f(1) ≠ 1");
  }
  return r;
}

template <ExactField K>
VerificationReport check_isomorphism(const LinearMap<K>& f, const Algebra<K>& a, const Algebra<K>& b) {
  auto r = check_algebra_morphism(f, a, b);
  bool bij = a.dim == b.dim && rank(f.matrix) == a.dim;
  r.add("bijective", bij, bij ? "" : "rank " + std::to_string(rank(f.matrix)) + " for dims " +
                                         std::to_string(a.dim) + "→" + std::to_string(b.dim));
  return r;
}

/// Delegates to closure_bilinear with a's product.
template <ExactField K>
Subspace<K> subalgebra_generated(const Algebra<K>& a, const Subspace<K>& seed, bool include_unit) {
  if (seed.ambient_dim() != a.dim) throw DimensionMismatch("seed is not inside the algebra");
  std::optional<Vec<K>> unit;
  if (include_unit) unit = a.one();
  return closure_bilinear<K>(seed.basis_vectors(), a.dim, a.product_fn(), unit);
}

}  // namespace hpa
