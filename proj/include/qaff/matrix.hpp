#pragma once

// Sparse matrices over an arbitrary exact scalar ring, plus the dense
// field-scalar elimination used for nullspaces and intertwiner solves.
// Row-major storage: each row is a sorted (col, value) list.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qaff/laurent.hpp"

namespace qaff {

template <class S>
class SparseMat {
 public:
  using Entry = std::pair<int, S>;

  SparseMat() = default;
  SparseMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  static SparseMat identity(int n, const S& one = S(1)) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.data_[i].push_back({i, one});
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Entry>& row(int i) const { return data_[i]; }

  bool is_zero() const {
    for (const auto& r : data_)
      if (!r.empty()) return false;
    return true;
  }

  int nnz() const {
    int c = 0;
    for (const auto& r : data_) c += static_cast<int>(r.size());
    return c;
  }

  void set(int i, int j, S v) {
    auto& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const Entry& e, int c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
      if (scalar_is_zero(v)) r.erase(it);
      else it->second = std::move(v);
    } else if (!scalar_is_zero(v)) {
      r.insert(it, {j, std::move(v)});
    }
  }

  void add_to(int i, int j, const S& v) {
    if (scalar_is_zero(v)) return;
    auto& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const Entry& e, int c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
      it->second += v;
      if (scalar_is_zero(it->second)) r.erase(it);
    } else {
      r.insert(it, {j, v});
    }
  }

  S get(int i, int j) const {
    const auto& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const Entry& e, int c) { return e.first < c; });
    if (it != r.end() && it->first == j) return it->second;
    return S();
  }

  SparseMat operator-() const {
    SparseMat m = *this;
    for (auto& r : m.data_)
      for (auto& [j, v] : r) v = -v;
    return m;
  }

  SparseMat operator+(const SparseMat& o) const {
    check_shape(o);
    SparseMat m = *this;
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : o.data_[i]) m.add_to(i, j, v);
    return m;
  }

  SparseMat operator-(const SparseMat& o) const { return *this + (-o); }

  SparseMat operator*(const SparseMat& o) const {
    if (cols_ != o.rows_) fail(errc::internal_fault, "matrix shape mismatch in product");
    SparseMat m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
      // gather into a dense-ish accumulator keyed by column
      std::vector<std::pair<int, S>> acc;
      for (const auto& [k, a] : data_[i]) {
        for (const auto& [j, b] : o.data_[k]) {
          auto it = std::lower_bound(acc.begin(), acc.end(), j,
                                     [](const auto& e, int c) { return e.first < c; });
          if (it != acc.end() && it->first == j) it->second += a * b;
          else acc.insert(it, {j, a * b});
        }
      }
      for (auto& [j, v] : acc)
        if (!scalar_is_zero(v)) m.data_[i].push_back({j, std::move(v)});
    }
    return m;
  }

  SparseMat scaled(const S& s) const {
    SparseMat m(rows_, cols_);
    if (scalar_is_zero(s)) return m;
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) {
        S w = v * s;
        if (!scalar_is_zero(w)) m.data_[i].push_back({j, std::move(w)});
      }
    return m;
  }

  SparseMat transposed() const {
    SparseMat m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) m.data_[j].push_back({i, v});
    return m;
  }

  bool operator==(const SparseMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

  // Kronecker product; index (i1,i2) -> i1*o.rows + i2.
  SparseMat kron(const SparseMat& o) const {
    SparseMat m(rows_ * o.rows_, cols_ * o.cols_);
    for (int i1 = 0; i1 < rows_; ++i1)
      for (const auto& [j1, a] : data_[i1])
        for (int i2 = 0; i2 < o.rows_; ++i2)
          for (const auto& [j2, b] : o.data_[i2])
            m.data_[i1 * o.rows_ + i2].push_back({j1 * o.cols_ + j2, a * b});
    for (auto& r : m.data_)
      std::sort(r.begin(), r.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
    return m;
  }

  std::vector<S> apply(const std::vector<S>& x) const {
    std::vector<S> y(rows_, S());
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) y[i] += v * x[j];
    return y;
  }

  template <class F>
  auto map(F&& f) const {
    using T = decltype(f(std::declval<const S&>()));
    SparseMat<T> m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) {
        T w = f(v);
        if (!scalar_is_zero(w)) m.set(i, j, std::move(w));
      }
    return m;
  }

  void for_each(const std::function<void(int, int, const S&)>& f) const {
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) f(i, j, v);
  }

 private:
  void check_shape(const SparseMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::internal_fault, "matrix shape mismatch");
  }

  int rows_ = 0, cols_ = 0;
  std::vector<std::vector<Entry>> data_;
};

// Flip operator P on V (x) V as an N^2 x N^2 permutation matrix.
template <class S>
SparseMat<S> flip_matrix(int n, const S& one = S(1)) {
  SparseMat<S> m(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i * n + j, j * n + i, one);
  return m;
}

// Dense Gaussian elimination over a field scalar. Returns a basis of the
// right nullspace of `m` (each vector has cols() components).
template <class S>
std::vector<std::vector<S>> nullspace(const SparseMat<S>& m) {
  int R = m.rows(), C = m.cols();
  std::vector<std::vector<S>> a(R, std::vector<S>(C, S()));
  for (int i = 0; i < R; ++i)
    for (const auto& [j, v] : m.row(i)) a[i][j] = v;

  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int p = -1;
    for (int i = r; i < R; ++i)
      if (!scalar_is_zero(a[i][c])) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    S inv = S(1) / a[r][c];
    for (int j = c; j < C; ++j) a[r][j] = a[r][j] * inv;
    for (int i = 0; i < R; ++i) {
      if (i == r || scalar_is_zero(a[i][c])) continue;
      S f = a[i][c];
      for (int j = c; j < C; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(C, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<S>> basis;
  for (int c = 0; c < C; ++c) {
    if (is_pivot[c]) continue;
    std::vector<S> v(C, S());
    v[c] = S(1);
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = -a[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class S>
int rank(const SparseMat<S>& m) {
  return m.cols() - static_cast<int>(nullspace(m).size());
}

}  // namespace qaff
