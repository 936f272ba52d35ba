#pragma once

// JSON bundles of structure constants and report emission.
//
// Scalars are strings "p/q" (or integers). Sparse tensors are lists of
// quadruples: mult [i, j, k, c] means bᵢbⱼ has coefficient c on b_k; comult
// [i, j, k, c] means Δhᵢ has c on hⱼ⊗h_k; actions [h, a, b, c] mean h·a has c
// on b; coactions [a, b, h, c] mean ρ̄(a) has c on b⊗h.

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hpa/algebra.hpp"
#include "hpa/catalog.hpp"
#include "hpa/errors.hpp"
#include "hpa/exactlin.hpp"
#include "hpa/field.hpp"
#include "hpa/partial.hpp"
#include "hpa/report.hpp"

namespace hpa {

using json = nlohmann::json;

struct FieldSpec {
  long characteristic = 0;  // 0 for the rationals

  static FieldSpec parse(const std::string& s) {
    if (s == "q" || s == "Q") return {};
    if (s.rfind("fp:", 0) == 0) {
      long p = 0;
      try {
        std::size_t used = 0;
        p = std::stol(s.substr(3), &used);
        if (used != s.size() - 3) throw ParseError("bad prime in field spec: " + s);
      } catch (const std::logic_error&) {
        throw ParseError("bad prime in field spec: " + s);
      }
      if (p < 2 || !ModP::is_prime(static_cast<std::uint64_t>(p))) throw ParseError("field characteristic is not prime: " + s);
      return {p};
    }
    throw ParseError("unknown field spec '" + s + "' (expected q or fp:<p>)");
  }
  [[nodiscard]] std::string str() const { return characteristic == 0 ? "q" : "fp:" + std::to_string(characteristic); }
};

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open bundle: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON in " + path + ": " + e.what());
  }
}

namespace io {

inline const json& need(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key) || j.at(key).is_null())
    throw ShapeError(where + ": missing key '" + key + "'");
  return j.at(key);
}

inline std::size_t index(const json& j, std::size_t bound, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(where + ": index must be a non-negative integer");
  auto v = j.get<std::size_t>();
  if (v >= bound) throw ShapeError(where + ": index " + std::to_string(v) + " out of range");
  return v;
}

template <ExactField K>
K scalar(const json& j, const std::string& where) {
  if (j.is_number_integer()) return K(j.get<long>());
  if (j.is_string()) {
    try {
      return K::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": scalar must be a string \"p/q\" or an integer");
}

template <ExactField K>
Vec<K> vector(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  if (j.size() != n) throw ShapeError(where + ": expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  Vec<K> v;
  v.reserve(n);
  for (const auto& x : j) v.push_back(scalar<K>(x, where));
  return v;
}

template <ExactField K>
json to_json(const K& x) {
  return x.str();
}

template <ExactField K>
json to_json(std::span<const K> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

template <ExactField K>
json to_json(const Vec<K>& v) {
  return to_json<K>(std::span<const K>(v));
}

struct Quad {
  std::size_t i, j, k;
};

/// Reads quadruples into dense per-slot vectors: slot(i, j) gets c at position k.
template <ExactField K>
std::vector<Vec<K>> quads(const json& j, std::size_t b0, std::size_t b1, std::size_t b2, std::size_t len,
                          const std::function<std::pair<std::size_t, std::size_t>(Quad)>& place,
                          std::size_t slots, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a list of quadruples");
  std::vector<Vec<K>> out(slots, Vec<K>(len, K(0)));
  for (const auto& q : j) {
    if (!q.is_array() || q.size() != 4) throw ShapeError(where + ": entries must be [i, j, k, c]");
    Quad t{index(q[0], b0, where), index(q[1], b1, where), index(q[2], b2, where)};
    auto [slot, pos] = place(t);
    out[slot][pos] += scalar<K>(q[3], where);
  }
  return out;
}

inline std::vector<std::string> labels(const json& j, std::size_t n, const std::string& stem) {
  if (!j.is_object() || !j.contains("labels")) return Algebra<Rational>::default_labels(stem, n);
  const auto& l = j.at("labels");
  if (!l.is_array() || l.size() != n) throw ShapeError(stem + ": labels must list dim entries");
  std::vector<std::string> out;
  for (const auto& x : l) out.push_back(x.get<std::string>());
  return out;
}

inline std::size_t dim(const json& j, const std::string& where) {
  const auto& d = need(j, "dim", where);
  if (!d.is_number_integer() || d.get<long long>() < 0) throw ParseError(where + ": dim must be a non-negative integer");
  return d.get<std::size_t>();
}

}  // namespace io

// ---------------------------------------------------------------------------
// Loading

template <ExactField K>
Algebra<K> algebra_from_json(const json& j, const std::string& where = "algebra") {
  std::size_t n = io::dim(j, where);
  auto dense = io::quads<K>(
      io::need(j, "mult", where), n, n, n, n, [n](io::Quad q) { return std::pair{q.i * n + q.j, q.k}; }, n * n,
      where + ".mult");
  Algebra<K> a;
  a.dim = n;
  a.labels = io::labels(j, n, where == "algebra" ? "a" : "h");
  for (auto& v : dense) a.mult.push_back(sparsify<K>(v));
  if (j.contains("unit") && !j.at("unit").is_null()) a.unit = io::vector<K>(j.at("unit"), n, where + ".unit");
  a.validate_shape();
  return a;
}

template <ExactField K>
HopfAlgebra<K> hopf_from_json(const json& j) {
  auto a = algebra_from_json<K>(j, "hopf");
  if (!a.unit) throw ShapeError("hopf: missing key 'unit'");
  std::size_t n = a.dim;
  auto dense = io::quads<K>(
      io::need(j, "comult", "hopf"), n, n, n, n * n, [n](io::Quad q) { return std::pair{q.i, q.j * n + q.k}; }, n,
      "hopf.comult");
  Coalgebra<K> c;
  c.dim = n;
  for (auto& v : dense) c.comult.push_back(sparsify<K>(v));
  c.counit = io::vector<K>(io::need(j, "counit", "hopf"), n, "hopf.counit");
  auto s = io::vector<K>(io::need(j, "antipode", "hopf"), n * n, "hopf.antipode");
  Matrix<K> sm(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col) sm(r, col) = s[r * n + col];
  try {
    return HopfAlgebra<K>::make(std::move(a), std::move(c), std::move(sm));
  } catch (const SingularMatrix&) {
    throw ShapeError("hopf: antipode is not invertible");
  }
}

template <ExactField K>
std::vector<Vec<K>> action_from_json(const json& j, std::size_t hdim, std::size_t adim, const std::string& where) {
  return io::quads<K>(
      j, hdim, adim, adim, adim, [adim](io::Quad q) { return std::pair{q.i * adim + q.j, q.k}; }, hdim * adim, where);
}

template <ExactField K>
std::vector<Vec<K>> coaction_from_json(const json& j, std::size_t hdim, std::size_t adim, const std::string& where) {
  return io::quads<K>(
      j, adim, adim, hdim, adim * hdim, [hdim](io::Quad q) { return std::pair{q.i, q.j * hdim + q.k}; }, adim, where);
}

inline GroupTable group_from_json(const json& j) {
  const auto& t = io::need(j, "cayley", "group");
  if (!t.is_array()) throw ParseError("group.cayley must be a square table");
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : t) {
    if (!row.is_array() || row.size() != t.size()) throw ShapeError("group.cayley must be square");
    std::vector<std::size_t> r;
    for (const auto& x : row) r.push_back(io::index(x, t.size(), "group.cayley"));
    table.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = io::labels(j, t.size(), "g");
  return GroupTable::from_cayley(table, labels, j.value("name", std::string("G")));
}

/// Typed view of a bundle for one field.
template <ExactField K>
struct Bundle {
  json raw;
  std::optional<HopfAlgebra<K>> hopf;
  std::optional<Algebra<K>> algebra;
  std::optional<std::vector<Vec<K>>> partial_action, partial_coaction, global_action, global_coaction;
  std::optional<Vec<K>> a_unit;
  std::optional<GroupTable> group;

  static Bundle from_json(const json& j) {
    if (!j.is_object()) throw ParseError("bundle must be a JSON object");
    Bundle b;
    b.raw = j;
    if (j.contains("hopf")) b.hopf = hopf_from_json<K>(j.at("hopf"));
    if (j.contains("algebra")) b.algebra = algebra_from_json<K>(j.at("algebra"));
    auto tensor = [&](const char* key, bool co) -> std::optional<std::vector<Vec<K>>> {
      if (!j.contains(key)) return std::nullopt;
      if (!b.hopf) throw ShapeError(std::string(key) + " requires key 'hopf'");
      if (!b.algebra) throw ShapeError(std::string(key) + " requires key 'algebra'");
      return co ? coaction_from_json<K>(j.at(key), b.hopf->dim(), b.algebra->dim, key)
                : action_from_json<K>(j.at(key), b.hopf->dim(), b.algebra->dim, key);
    };
    b.partial_action = tensor("partial_action", false);
    b.partial_coaction = tensor("partial_coaction", true);
    b.global_action = tensor("global_action", false);
    b.global_coaction = tensor("global_coaction", true);
    if (j.contains("a_unit")) {
      if (!b.algebra) throw ShapeError("a_unit requires key 'algebra'");
      b.a_unit = io::vector<K>(j.at("a_unit"), b.algebra->dim, "a_unit");
    }
    if (j.contains("group")) b.group = group_from_json(j.at("group"));
    return b;
  }

  [[nodiscard]] const HopfAlgebra<K>& need_hopf() const {
    if (!hopf) throw ShapeError("bundle: missing key 'hopf'");
    return *hopf;
  }
  [[nodiscard]] const Algebra<K>& need_algebra() const {
    if (!algebra) throw ShapeError("bundle: missing key 'algebra'");
    return *algebra;
  }
  [[nodiscard]] ActionData<K> action(bool partial) const {
    const auto& t = partial ? partial_action : global_action;
    if (!t) throw ShapeError(std::string("bundle: missing key '") + (partial ? "partial_action" : "global_action") + "'");
    return {need_hopf(), need_algebra(), *t};
  }
  [[nodiscard]] CoactionData<K> coaction(bool partial) const {
    const auto& t = partial ? partial_coaction : global_coaction;
    if (!t) throw ShapeError(std::string("bundle: missing key '") + (partial ? "partial_coaction" : "global_coaction") + "'");
    return {need_hopf(), need_algebra(), *t};
  }
};

// ---------------------------------------------------------------------------
// Writing

template <ExactField K>
json algebra_to_json(const Algebra<K>& a) {
  json j;
  j["dim"] = a.dim;
  j["labels"] = a.labels;
  json m = json::array();
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k)
      for (const auto& [x, c] : a.product(i, k)) m.push_back({i, k, x, c.str()});
  j["mult"] = m;
  j["unit"] = a.unit ? io::to_json<K>(*a.unit) : json(nullptr);
  return j;
}

template <ExactField K>
json hopf_to_json(const HopfAlgebra<K>& h) {
  auto j = algebra_to_json(h.algebra);
  std::size_t n = h.dim();
  json c = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [x, v] : h.delta(i)) c.push_back({i, x / n, x % n, v.str()});
  j["comult"] = c;
  j["counit"] = io::to_json<K>(h.coalgebra.counit);
  json s = json::array();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col) s.push_back(h.antipode(r, col).str());
  j["antipode"] = s;
  return j;
}

template <ExactField K>
json action_to_json(const ActionData<K>& p) {
  json a = json::array();
  for (std::size_t i = 0; i < p.hdim(); ++i)
    for (std::size_t j = 0; j < p.adim(); ++j) {
      const auto& v = p.basis_act(i, j);
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) a.push_back({i, j, k, v[k].str()});
    }
  return a;
}

template <ExactField K>
json coaction_to_json(const CoactionData<K>& p) {
  std::size_t n = p.hdim();
  json a = json::array();
  for (std::size_t i = 0; i < p.adim(); ++i)
    for (std::size_t x = 0; x < p.coact[i].size(); ++x)
      if (!p.coact[i][x].is_zero()) a.push_back({i, x / n, x % n, p.coact[i][x].str()});
  return a;
}

inline json group_to_json(const GroupTable& g) {
  json j;
  j["name"] = g.name();
  j["labels"] = g.labels();
  j["cayley"] = g.cayley();
  return j;
}

template <ExactField K>
json subspace_to_json(const Subspace<K>& s) {
  json b = json::array();
  for (const auto& v : s.basis_vectors()) b.push_back(io::to_json<K>(v));
  return b;
}

inline json checks_to_json(const VerificationReport& r) {
  json a = json::array();
  for (const auto& c : r.checks()) {
    json x;
    x["name"] = c.name;
    x["passed"] = c.passed;
    if (!c.detail.empty()) x["detail"] = c.detail;
    a.push_back(x);
  }
  return a;
}

/// Report document: sorted keys, checks in computation order.
struct Report {
  std::string command;
  VerificationReport checks;
  json data = json::object();

  [[nodiscard]] bool ok() const { return checks.ok(); }

  [[nodiscard]] json to_json() const {
    json j;
    j["command"] = command;
    j["checks"] = checks_to_json(checks);
    j["data"] = data;
    j["ok"] = ok();
    return j;
  }

  [[nodiscard]] std::string emit(const std::string& format) const {
    if (format == "json") return to_json().dump(2) + "\n";
    std::ostringstream os;
    os << command << "\n";
    if (data.contains("dims"))
      for (const auto& [k, v] : data.at("dims").items()) os << "  dim " << k << " = " << v.dump() << "\n";
    for (const auto& c : checks.checks()) {
      os << "  " << (c.passed ? "pass " : "FAIL ") << c.name;
      if (!c.passed && !c.detail.empty()) os << "  " << c.detail;
      os << "\n";
    }
    auto bad = checks.failures().size();
    if (bad == 0)
      os << "OK\n";
    else
      os << "FAILED " << bad << " of " << checks.checks().size() << "\n";
    return os.str();
  }
};

}  // namespace hpa
