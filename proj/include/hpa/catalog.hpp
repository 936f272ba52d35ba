#pragma once

// Concrete objects: finite groups by Cayley table, group and function
// algebras, the Sweedler algebra H4, unitization, and named fixtures.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hpa/algebra.hpp"
#include "hpa/errors.hpp"
#include "hpa/partial.hpp"

namespace hpa {

/// Finite group given by its Cayley table; validated on construction.
class GroupTable {
 public:
  static GroupTable from_cayley(std::vector<std::vector<std::size_t>> cayley, std::vector<std::string> labels,
                                std::string name) {
    GroupTable g;
    g.n_ = cayley.size();
    g.cayley_ = std::move(cayley);
    g.labels_ = std::move(labels);
    g.name_ = std::move(name);
    if (g.n_ == 0) throw InvalidGroup("empty Cayley table");
    if (g.labels_.empty())
      for (std::size_t i = 0; i < g.n_; ++i) g.labels_.push_back("g" + std::to_string(i));
    if (g.labels_.size() != g.n_) throw InvalidGroup("label count differs from group order");
    for (const auto& row : g.cayley_) {
      if (row.size() != g.n_) throw InvalidGroup("Cayley table is not square");
      for (auto v : row)
        if (v >= g.n_) throw InvalidGroup("Cayley table entry out of range");
    }
    for (std::size_t a = 0; a < g.n_; ++a)
      for (std::size_t b = 0; b < g.n_; ++b)
        for (std::size_t c = 0; c < g.n_; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw InvalidGroup("Cayley table is not associative");
    std::optional<std::size_t> id;
    for (std::size_t e = 0; e < g.n_ && !id; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < g.n_ && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
      if (ok) id = e;
    }
    if (!id) throw InvalidGroup("Cayley table has no identity");
    g.identity_ = *id;
    g.inverse_.assign(g.n_, g.n_);
    for (std::size_t a = 0; a < g.n_; ++a)
      for (std::size_t b = 0; b < g.n_; ++b)
        if (g.mul(a, b) == g.identity_ && g.mul(b, a) == g.identity_) g.inverse_[a] = b;
    for (auto v : g.inverse_)
      if (v == g.n_) throw InvalidGroup("some element has no inverse");
    return g;
  }

  [[nodiscard]] std::size_t order() const { return n_; }
  [[nodiscard]] std::size_t mul(std::size_t a, std::size_t b) const { return cayley_[a][b]; }
  [[nodiscard]] std::size_t identity() const { return identity_; }
  [[nodiscard]] std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& cayley() const { return cayley_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::string& label(std::size_t a) const { return labels_[a]; }
  [[nodiscard]] const std::string& name() const { return name_; }

  [[nodiscard]] bool is_subgroup(const std::vector<std::size_t>& s) const {
    std::set<std::size_t> set(s.begin(), s.end());
    if (!set.count(identity_)) return false;
    for (auto a : set) {
      if (a >= n_ || !set.count(inverse_[a])) return false;
      for (auto b : set)
        if (!set.count(mul(a, b))) return false;
    }
    return true;
  }
  [[nodiscard]] bool is_normal_subgroup(const std::vector<std::size_t>& s) const {
    if (!is_subgroup(s)) return false;
    std::set<std::size_t> set(s.begin(), s.end());
    for (std::size_t g = 0; g < n_; ++g)
      for (auto x : set)
        if (!set.count(mul(mul(g, x), inverse_[g]))) return false;
    return true;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> cayley_;
  std::vector<std::string> labels_;
  std::string name_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

inline GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidGroup("cyclic group of order 0");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return GroupTable::from_cayley(std::move(t), std::move(labels), "Z" + std::to_string(n));
}

/// S₃ on the permutations of {0,1,2} in lexicographic order; (στ)(i) = σ(τ(i)).
inline GroupTable symmetric_group_s3() {
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::string> labels = {"e", "(23)", "(12)", "(123)", "(132)", "(13)"};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return GroupTable::from_cayley(std::move(t), std::move(labels), "S3");
}

/// "Z<n>" or "S3".
inline GroupTable group_by_name(const std::string& name) {
  if (name == "S3") return symmetric_group_s3();
  if (name.size() > 1 && name[0] == 'Z') {
    std::size_t n = 0;
    try {
      n = std::stoul(name.substr(1));
    } catch (const std::exception&) {
      throw ParseError("bad group name: " + name);
    }
    return cyclic_group(n);
  }
  throw ParseError("unknown group: " + name);
}

/// Comma-separated element indices, or one of "e", "G", "A3" (S3 only).
inline std::vector<std::size_t> subset_by_name(const GroupTable& g, const std::string& spec) {
  if (spec == "e") return {g.identity()};
  if (spec == "G") {
    std::vector<std::size_t> all(g.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }
  if (spec == "A3") {
    if (g.name() != "S3") throw ParseError("A3 names a subgroup of S3 only");
    return {0, 3, 4};
  }
  std::vector<std::size_t> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw ParseError("bad subset element: '" + item + "'");
    }
    if (out.back() >= g.order()) throw ParseError("subset element out of range: " + item);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// kG: Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹.
template <ExactField K>
HopfAlgebra<K> group_algebra(const GroupTable& g) {
  std::size_t n = g.order();
  auto alg = Algebra<K>::from_products(
      n, g.labels(), [&](std::size_t a, std::size_t b) { return unit_vector<K>(n, g.mul(a, b)); },
      unit_vector<K>(n, g.identity()));
  Coalgebra<K> c;
  c.dim = n;
  for (std::size_t a = 0; a < n; ++a) c.comult.push_back({{a * n + a, K(1)}});
  c.counit.assign(n, K(1));
  Matrix<K> s(n, n);
  for (std::size_t a = 0; a < n; ++a) s(g.inverse(a), a) = K(1);
  return HopfAlgebra<K>::make(std::move(alg), std::move(c), std::move(s));
}

/// kG* on the basis p_h: p_g p_h = δ_{g,h} p_g, Δp_g = Σ_{st=g} p_s⊗p_t, S(p_g) = p_{g⁻¹}.
template <ExactField K>
HopfAlgebra<K> function_algebra(const GroupTable& g) {
  std::size_t n = g.order();
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back(l + "*");
  auto alg = Algebra<K>::from_products(
      n, labels, [&](std::size_t a, std::size_t b) { return a == b ? unit_vector<K>(n, a) : zeros<K>(n); },
      Vec<K>(n, K(1)));
  Coalgebra<K> c;
  c.dim = n;
  c.comult.assign(n, {});
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) c.comult[g.mul(s, t)].emplace_back(s * n + t, K(1));
  c.counit = unit_vector<K>(n, g.identity());
  Matrix<K> anti(n, n);
  for (std::size_t a = 0; a < n; ++a) anti(g.inverse(a), a) = K(1);
  return HopfAlgebra<K>::make(std::move(alg), std::move(c), std::move(anti));
}

/// Sweedler's H4 on {1, c, x, cx}: c² = 1, x² = 0, xc = −cx,
/// Δc = c⊗c, Δx = x⊗1 + c⊗x, ε(c) = 1, ε(x) = 0, S(c) = c, S(x) = −cx.
template <ExactField K>
HopfAlgebra<K> sweedler_h4() {
  if (K(2).is_zero()) throw BadCharacteristic("H4 requires characteristic ≠ 2");
  enum { one = 0, c = 1, x = 2, cx = 3 };
  const K p(1), m(-1);
  std::vector<std::vector<std::pair<std::size_t, K>>> table = {
      // 1·*
      {{one, p}}, {{c, p}}, {{x, p}}, {{cx, p}},
      // c·*
      {{c, p}}, {{one, p}}, {{cx, p}}, {{x, p}},
      // x·*
      {{x, p}}, {{cx, m}}, {}, {},
      // cx·*
      {{cx, p}}, {{x, m}}, {}, {},
  };
  Algebra<K> a;
  a.dim = 4;
  a.labels = {"1", "c", "x", "cx"};
  a.mult.assign(table.begin(), table.end());
  a.unit = unit_vector<K>(4, one);

  Coalgebra<K> co;
  co.dim = 4;
  co.comult = {
      {{one * 4 + one, p}},
      {{c * 4 + c, p}},
      {{c * 4 + x, p}, {x * 4 + one, p}},
      {{one * 4 + cx, p}, {cx * 4 + c, p}},
  };
  co.counit = {K(1), K(1), K(0), K(0)};

  Matrix<K> s(4, 4);
  s(one, one) = p;
  s(c, c) = p;
  s(cx, x) = m;
  s(x, cx) = p;
  return HopfAlgebra<K>::make(std::move(a), std::move(co), std::move(s));
}

/// The one-dimensional algebra k.
template <ExactField K>
Algebra<K> ground_algebra() {
  return Algebra<K>::from_products(1, {"1"}, [](std::size_t, std::size_t) { return Vec<K>{K(1)}; }, Vec<K>{K(1)});
}

/// Truncated polynomials k[x]/(x^n) on {1, x, …, x^{n−1}}; unital or not.
template <ExactField K>
Algebra<K> truncated_polynomials(std::size_t n, bool with_unit = true) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
  return Algebra<K>::from_products(
      n, labels, [n](std::size_t i, std::size_t j) { return i + j < n ? unit_vector<K>(n, i + j) : zeros<K>(n); },
      with_unit ? std::optional<Vec<K>>(unit_vector<K>(n, 0)) : std::nullopt);
}

/// h▷b = ε(h)b.
template <ExactField K>
GlobalAction<K> trivial_action(const HopfAlgebra<K>& h, const Algebra<K>& b) {
  auto act = ActionData<K>::tabulate(h.dim(), b.dim, [&](std::size_t i, std::size_t j) {
    return scaled(b.basis(j), h.epsilon(i));
  });
  return make_global_action(h, b, std::move(act));
}

/// k^G = functions on G (basis δ_x) with left translation g▷δ_x = δ_{gx}.
/// For Z₂ this is k×k with the swap.
template <ExactField K>
GlobalAction<K> translation_action(const GroupTable& g) {
  std::size_t n = g.order();
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back("δ" + l);
  auto b = Algebra<K>::from_products(
      n, labels, [&](std::size_t a, std::size_t c) { return a == c ? unit_vector<K>(n, a) : zeros<K>(n); },
      Vec<K>(n, K(1)));
  auto act = ActionData<K>::tabulate(n, n, [&](std::size_t h, std::size_t x) { return unit_vector<K>(n, g.mul(h, x)); });
  return make_global_action(group_algebra<K>(g), std::move(b), std::move(act));
}

/// B̃ = k × B with h▷(λ, a) = (ε(h)λ, h▷a); index 0 is (1, 0), index i+1 is (0, bᵢ).
template <ExactField K>
GlobalAction<K> unitization(const GlobalAction<K>& b) {
  require<K>(verify_global_action(b), "unitization input");
  std::size_t d = b.adim(), n = b.hdim();
  std::vector<std::string> labels = {"1~"};
  for (const auto& l : b.carrier.labels) labels.push_back(l);
  auto embed = [d](std::span<const K> v) {
    Vec<K> out(d + 1, K(0));
    for (std::size_t i = 0; i < d; ++i) out[i + 1] = v[i];
    return out;
  };
  auto alg = Algebra<K>::from_products(
      d + 1, labels,
      [&](std::size_t i, std::size_t j) {
        if (i == 0) return unit_vector<K>(d + 1, j);
        if (j == 0) return unit_vector<K>(d + 1, i);
        return embed(std::span<const K>(densify(b.carrier.product(i - 1, j - 1), d)));
      },
      unit_vector<K>(d + 1, 0));
  auto act = ActionData<K>::tabulate(n, d + 1, [&](std::size_t i, std::size_t j) {
    if (j == 0) return scaled(unit_vector<K>(d + 1, 0), b.hopf.epsilon(i));
    return embed(std::span<const K>(b.basis_act(i, j - 1)));
  });
  return make_global_action(b.hopf, std::move(alg), std::move(act));
}

// ---------------------------------------------------------------------------
// Fixtures

inline std::string join_indices(const std::vector<std::size_t>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

template <ExactField K>
struct ExampleFixture {
  std::string id;
  HopfAlgebra<K> hopf;
  Algebra<K> carrier;
  std::optional<PartialAction<K>> action;
  std::optional<PartialCoaction<K>> coaction;
  /// Expected outputs keyed by quantity name.
  std::map<std::string, std::string> expected;
};

/// A = e_N kG on the coset basis {e_N t}, t the least element of each coset Nt.
template <ExactField K>
struct NormalSubgroupFixture {
  ExampleFixture<K> fixture;
  GroupTable group;
  std::vector<std::size_t> subgroup;
  std::vector<std::size_t> coset_reps;
  std::vector<std::size_t> coset_of;  // g ↦ index of its coset
  Vec<K> e_n;                         // e_N inside kG
  LinearMap<K> candidate;             // v ↦ (e_N⊗1)Δv, kG → A⊗kG
};

template <ExactField K>
NormalSubgroupFixture<K> example1(const GroupTable& g, const std::vector<std::size_t>& n_subgroup) {
  if (!g.is_normal_subgroup(n_subgroup)) throw PreconditionViolation("example1: N is not a normal subgroup");
  long order_n = static_cast<long>(n_subgroup.size());
  if (!invertible_integer<K>(order_n)) throw BadCharacteristic("example1: char k divides |N|");
  std::size_t n = g.order();
  std::vector<std::size_t> coset_of(n, n), reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset_of[x] != n) continue;
    for (auto m : n_subgroup) coset_of[g.mul(m, x)] = reps.size();
    reps.push_back(x);
  }
  std::size_t d = reps.size();
  std::vector<std::string> labels;
  for (auto t : reps) labels.push_back("eN" + g.label(t));
  auto carrier = Algebra<K>::from_products(
      d, labels, [&](std::size_t i, std::size_t j) { return unit_vector<K>(d, coset_of[g.mul(reps[i], reps[j])]); },
      unit_vector<K>(d, coset_of[g.identity()]));
  auto h = group_algebra<K>(g);
  K inv_n = K(1) / K(order_n);
  std::vector<Vec<K>> coact;
  for (std::size_t i = 0; i < d; ++i) {
    Vec<K> v(d * n, K(0));
    for (auto m : n_subgroup) v[i * n + g.mul(m, reps[i])] += inv_n;
    coact.push_back(std::move(v));
  }
  auto co = make_partial_coaction(h, carrier, std::move(coact));

  Vec<K> e_n(n, K(0));
  for (auto m : n_subgroup) e_n[m] += inv_n;
  Matrix<K> cand(d * n, n);
  for (std::size_t x = 0; x < n; ++x) cand(coset_of[x] * n + x, x) = K(1);

  ExampleFixture<K> fx{"example1:" + g.name() + ":" + join_indices(n_subgroup), h, carrier, std::nullopt, co, {}};
  fx.expected["carrier_dim"] = std::to_string(d);
  fx.expected["globalization_dim"] = std::to_string(n);
  return {std::move(fx), g, n_subgroup, std::move(reps), std::move(coset_of), std::move(e_n), LinearMap<K>(std::move(cand))};
}

/// f = ½(1 + c + α·cx) in H4.
template <ExactField K>
Vec<K> example2_idempotent(const K& alpha) {
  K half = K(1) / K(2);
  return {half, half, K(0), half * alpha};
}

/// k with ρ̄(λ) = λf, f = ½(1 + c + α·cx).
template <ExactField K>
ExampleFixture<K> example2(const K& alpha) {
  auto h = sweedler_h4<K>();
  auto carrier = ground_algebra<K>();
  auto co = make_partial_coaction(h, carrier, {example2_idempotent(alpha)});
  ExampleFixture<K> fx{"example2:" + alpha.str(), h, carrier, std::nullopt, co, {}};
  fx.expected["globalization_dim"] = "2";
  return fx;
}

/// k[x] ⊆ H4 on {1, x}: ρ̄(1) = ½(1⊗1 + 1⊗c + 1⊗cx), ρ̄(x) = (x⊗1)ρ̄(1).
template <ExactField K>
ExampleFixture<K> example3() {
  auto h = sweedler_h4<K>();
  auto carrier = truncated_polynomials<K>(2);
  K half = K(1) / K(2);
  Vec<K> r1(8, K(0)), rx(8, K(0));
  for (std::size_t k : {0u, 1u, 3u}) {
    r1[0 * 4 + k] = half;
    rx[1 * 4 + k] = half;
  }
  auto co = make_partial_coaction(h, carrier, {r1, rx});
  ExampleFixture<K> fx{"example3", h, carrier, std::nullopt, co, {}};
  fx.expected["globalization_dim"] = "4";
  return fx;
}

/// k with g·1 = [g ∈ S].
template <ExactField K>
ExampleFixture<K> scalar_partial(const GroupTable& g, const std::vector<std::size_t>& support, bool verify = true) {
  auto h = group_algebra<K>(g);
  auto carrier = ground_algebra<K>();
  std::set<std::size_t> s(support.begin(), support.end());
  auto act = ActionData<K>::tabulate(g.order(), 1, [&](std::size_t x, std::size_t) {
    return Vec<K>{s.count(x) ? K(1) : K(0)};
  });
  ExampleFixture<K> fx{"scalar:" + g.name() + ":" + join_indices(support), h, carrier, std::nullopt, std::nullopt, {}};
  if (verify) {
    fx.action = make_partial_action(h, carrier, std::move(act));
  } else {
    fx.action = PartialAction<K>{{h, carrier, std::move(act)}};
  }
  fx.expected["support_is_subgroup"] = g.is_subgroup(support) ? "true" : "false";
  return fx;
}

}  // namespace hpa
