#pragma once

// Dense exact linear algebra over an ExactField: reduced row-echelon forms,
// canonical subspaces, solving, inversion and bilinear closure.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hpa/errors.hpp"
#include "hpa/field.hpp"

namespace hpa {

template <ExactField K>
using Vec = std::vector<K>;

/// Sparse coordinate vector: (index, nonzero coefficient), sorted by index.
template <ExactField K>
using SparseVec = std::vector<std::pair<std::size_t, K>>;

template <ExactField K>
Vec<K> zeros(std::size_t n) {
  return Vec<K>(n, K(0));
}

template <ExactField K>
Vec<K> unit_vector(std::size_t n, std::size_t i) {
  Vec<K> v(n, K(0));
  v.at(i) = K(1);
  return v;
}

template <ExactField K>
bool is_zero(std::span<const K> v) {
  return std::all_of(v.begin(), v.end(), [](const K& x) { return x.is_zero(); });
}

template <ExactField K>
SparseVec<K> sparsify(std::span<const K> v) {
  SparseVec<K> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

template <ExactField K>
Vec<K> densify(const SparseVec<K>& s, std::size_t n) {
  Vec<K> v(n, K(0));
  for (const auto& [i, c] : s) v.at(i) = c;
  return v;
}

/// y += c·x
template <ExactField K>
void axpy(Vec<K>& y, const K& c, std::span<const K> x) {
  if (c.is_zero()) return;
  if (x.size() != y.size()) throw DimensionMismatch("axpy: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += c * x[i];
}

template <ExactField K>
void axpy(Vec<K>& y, const K& c, const SparseVec<K>& x) {
  if (c.is_zero()) return;
  for (const auto& [i, xi] : x) y.at(i) += c * xi;
}

template <ExactField K>
Vec<K> operator+(Vec<K> a, const Vec<K>& b) {
  axpy(a, K(1), std::span<const K>(b));
  return a;
}

template <ExactField K>
Vec<K> operator-(Vec<K> a, const Vec<K>& b) {
  axpy(a, K(-1), std::span<const K>(b));
  return a;
}

template <ExactField K>
Vec<K> scaled(Vec<K> v, const K& c) {
  for (auto& x : v) x *= c;
  return v;
}

/// Dense row-major matrix. As a linear map, column j holds the image of basis j.
template <ExactField K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<K>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionMismatch("from_rows: row length mismatch");
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
  }
  static Matrix from_columns(const std::vector<Vec<K>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw DimensionMismatch("from_columns: column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const K> row(std::size_t r) const {
    return std::span<const K>(data_).subspan(r * cols_, cols_);
  }
  [[nodiscard]] Vec<K> row_vec(std::size_t r) const {
    auto s = row(r);
    return Vec<K>(s.begin(), s.end());
  }
  [[nodiscard]] Vec<K> column(std::size_t c) const {
    Vec<K> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_column(std::size_t c, std::span<const K> v) {
    if (v.size() != rows_) throw DimensionMismatch("set_column: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  [[nodiscard]] Vec<K> apply(std::span<const K> v) const {
    if (v.size() != cols_) throw DimensionMismatch("apply: vector length mismatch");
    Vec<K> out(rows_, K(0));
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c].is_zero()) continue;
      for (std::size_t r = 0; r < rows_; ++r)
        if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

  [[nodiscard]] bool is_zero() const { return hpa::is_zero(std::span<const K>(data_)); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec<K> data_;
};

template <ExactField K>
struct RrefResult {
  Matrix<K> matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Unique reduced row-echelon form by Gauss–Jordan elimination.
template <ExactField K>
RrefResult<K> rref(Matrix<K> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    K inv = K(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      K f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

template <ExactField K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).rank;
}

/// Subspace of K^n held as a canonical RREF basis (equal subspaces compare equal).
template <ExactField K>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Canonical span of the given vectors.
  static Subspace span(const std::vector<Vec<K>>& vectors, std::size_t ambient_dim) {
    for (const auto& v : vectors)
      if (v.size() != ambient_dim) throw DimensionMismatch("span: vector length differs from ambient dimension");
    return from_matrix(Matrix<K>::from_rows(vectors, ambient_dim));
  }
  static Subspace full(std::size_t n) { return from_matrix(Matrix<K>::identity(n)); }

  /// Row space of m.
  static Subspace from_matrix(const Matrix<K>& m) {
    auto red = rref(m);
    Subspace s(m.cols());
    s.basis_ = Matrix<K>(red.rank, m.cols());
    for (std::size_t r = 0; r < red.rank; ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) s.basis_(r, c) = red.matrix(r, c);
    s.pivots_ = std::move(red.pivot_cols);
    return s;
  }

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
  [[nodiscard]] const Matrix<K>& basis() const { return basis_; }
  [[nodiscard]] Vec<K> basis_vector(std::size_t i) const { return basis_.row_vec(i); }
  [[nodiscard]] std::vector<Vec<K>> basis_vectors() const {
    std::vector<Vec<K>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
    return out;
  }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Coordinates of v in the canonical basis, or nullopt when v ∉ this subspace.
  [[nodiscard]] std::optional<Vec<K>> coordinates(std::span<const K> v) const {
    if (v.size() != ambient_) throw DimensionMismatch("coordinates: vector length differs from ambient dimension");
    Vec<K> coords(dim());
    Vec<K> rest(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
      coords[i] = v[pivots_[i]];
      axpy(rest, -coords[i], basis_.row(i));
    }
    if (!hpa::is_zero(std::span<const K>(rest))) return std::nullopt;
    return coords;
  }
  [[nodiscard]] bool contains(std::span<const K> v) const { return coordinates(v).has_value(); }
  [[nodiscard]] bool contains(const Subspace& other) const {
    check_same_ambient(other);
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  /// Linear combination of basis vectors with the given coordinates.
  [[nodiscard]] Vec<K> combine(std::span<const K> coords) const {
    if (coords.size() != dim()) throw DimensionMismatch("combine: coordinate length mismatch");
    Vec<K> v(ambient_, K(0));
    for (std::size_t i = 0; i < dim(); ++i) axpy(v, coords[i], basis_.row(i));
    return v;
  }

  [[nodiscard]] bool is_zero() const { return dim() == 0; }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  void check_same_ambient(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw DimensionMismatch("subspaces live in different ambient spaces");
  }

 private:
  std::size_t ambient_ = 0;
  Matrix<K> basis_;
  std::vector<std::size_t> pivots_;
};

template <ExactField K>
Subspace<K> span(const std::vector<Vec<K>>& vectors, std::size_t ambient_dim) {
  return Subspace<K>::span(vectors, ambient_dim);
}

template <ExactField K>
Subspace<K> subspace_sum(const Subspace<K>& s, const Subspace<K>& t) {
  s.check_same_ambient(t);
  auto vs = s.basis_vectors();
  auto vt = t.basis_vectors();
  vs.insert(vs.end(), vt.begin(), vt.end());
  return Subspace<K>::span(vs, s.ambient_dim());
}

/// Null space {x : m·x = 0} as a subspace of K^cols.
template <ExactField K>
Subspace<K> kernel(const Matrix<K>& m) {
  auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivot_cols) is_pivot[p] = true;
  std::vector<Vec<K>> gens;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<K> v(m.cols(), K(0));
    v[free] = K(1);
    for (std::size_t r = 0; r < red.rank; ++r) v[red.pivot_cols[r]] = -red.matrix(r, free);
    gens.push_back(std::move(v));
  }
  return Subspace<K>::span(gens, m.cols());
}

/// Intersection via the kernel of [Sᵀ | −Tᵀ].
template <ExactField K>
Subspace<K> subspace_intersect(const Subspace<K>& s, const Subspace<K>& t) {
  s.check_same_ambient(t);
  std::size_t n = s.ambient_dim(), ds = s.dim(), dt = t.dim();
  Matrix<K> m(n, ds + dt);
  for (std::size_t i = 0; i < ds; ++i)
    for (std::size_t r = 0; r < n; ++r) m(r, i) = s.basis()(i, r);
  for (std::size_t j = 0; j < dt; ++j)
    for (std::size_t r = 0; r < n; ++r) m(r, ds + j) = -t.basis()(j, r);
  auto ker = kernel(m);
  std::vector<Vec<K>> gens;
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    auto x = ker.basis().row(k);
    gens.push_back(s.combine(x.subspan(0, ds)));
  }
  return Subspace<K>::span(gens, n);
}

/// Some solution of m·x = b, or nullopt when the system is inconsistent.
template <ExactField K>
std::optional<Vec<K>> solve(const Matrix<K>& m, std::span<const K> b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
  Matrix<K> aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto red = rref(std::move(aug));
  if (!red.pivot_cols.empty() && red.pivot_cols.back() == m.cols()) return std::nullopt;
  Vec<K> x(m.cols(), K(0));
  for (std::size_t r = 0; r < red.rank; ++r) x[red.pivot_cols[r]] = red.matrix(r, m.cols());
  return x;
}

/// Two-sided inverse; throws SingularMatrix when rank < n.
template <ExactField K>
Matrix<K> invert_matrix(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("invert_matrix: matrix is not square");
  std::size_t n = m.rows();
  Matrix<K> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = K(1);
  }
  auto red = rref(std::move(aug));
  if (red.rank < n || red.pivot_cols[n - 1] != n - 1)
    throw SingularMatrix("matrix of size " + std::to_string(n) + " is singular");
  Matrix<K> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.matrix(r, n + c);
  return inv;
}

template <ExactField K>
using BilinearProduct = std::function<Vec<K>(std::span<const K>, std::span<const K>)>;

/// Smallest subspace containing seed (and unit, if given) closed under product.
/// Each round multiplies every ordered pair of current basis vectors.
template <ExactField K>
Subspace<K> closure_bilinear(const std::vector<Vec<K>>& seed, std::size_t ambient_dim,
                             const BilinearProduct<K>& product,
                             const std::optional<Vec<K>>& unit = std::nullopt) {
  auto gens = seed;
  if (unit) gens.push_back(*unit);
  auto current = Subspace<K>::span(gens, ambient_dim);
  for (std::size_t round = 0; round <= ambient_dim; ++round) {
    auto basis = current.basis_vectors();
    std::vector<Vec<K>> next = basis;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        auto p = product(basis[i], basis[j]);
        if (!current.contains(p)) next.push_back(std::move(p));
      }
    if (next.size() == basis.size()) return current;
    current = Subspace<K>::span(next, ambient_dim);
  }
  return current;
}

template <ExactField K>
std::string format_vector(std::span<const K> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace hpa
