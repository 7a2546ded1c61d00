#include "pqhopf/linalg.hpp"

#include <stdexcept>

namespace pqhopf {

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vec& v) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix matmul(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem aik = a(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
    }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Vec apply(const Field& f, const Matrix& a, const Vec& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("apply: shape mismatch");
  Vec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Elem acc = f.zero();
    for (std::size_t j = 0; j < a.cols(); ++j) acc = f.add(acc, f.mul(a(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

Elem trace(const Field& f, const Matrix& a) {
  Elem acc = f.zero();
  for (std::size_t i = 0; i < a.rows() && i < a.cols(); ++i) acc = f.add(acc, a(i, i));
  return acc;
}

Elem trace_of_product(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw std::invalid_argument("trace_of_product: shape mismatch");
  Elem acc = f.zero();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) acc = f.add(acc, f.mul(a(i, k), b(k, i)));
  return acc;
}

Elem dot(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Elem acc = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

std::vector<std::size_t> rref(const Field& f, Matrix& a) {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pr = row;
    while (pr < a.rows() && f.is_zero(a(pr, col))) ++pr;
    if (pr == a.rows()) continue;
    if (pr != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pr, c), a(row, c));

    const Elem scale = f.inv(a(row, col));
    support.clear();
    for (std::size_t c = col; c < a.cols(); ++c) {
      if (f.is_zero(a(row, c))) continue;
      a(row, c) = f.mul(a(row, c), scale);
      support.push_back(c);
    }
    // the systems built here are sparse, so only touch the pivot row's support
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      const Elem factor = a(r, col);
      if (f.is_zero(factor)) continue;
      for (std::size_t c : support) a(r, c) = f.sub(a(r, c), f.mul(factor, a(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<Vec> nullspace(const Field& f, Matrix a) {
  const auto pivots = rref(f, a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(a.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(a(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve(const Field& f, const Matrix& a, const Vec& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto pivots = rref(f, aug);
  SolveResult result;
  result.nullity = a.cols();
  for (auto c : pivots) {
    if (c == a.cols()) return result;  // inconsistent
    --result.nullity;
  }
  Vec x(a.cols(), f.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  result.solution = std::move(x);
  return result;
}

}  // namespace pqhopf
