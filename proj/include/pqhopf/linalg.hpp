#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pqhopf/ffield.hpp"

namespace pqhopf {

using Vec = std::vector<Elem>;

/// Dense row-major matrix of field codes. The field travels separately;
/// every operation that needs arithmetic takes it as an argument.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(const Field& f, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  void set_column(std::size_t c, const Vec& v);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix matmul(const Field& f, const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Vec apply(const Field& f, const Matrix& a, const Vec& v);
Elem trace(const Field& f, const Matrix& a);
/// Tr(A*B) without forming the product.
Elem trace_of_product(const Field& f, const Matrix& a, const Matrix& b);
Elem dot(const Field& f, const Vec& a, const Vec& b);

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row. Pivots are chosen as the first row with a nonzero entry in
/// the leftmost remaining column.
std::vector<std::size_t> rref(const Field& f, Matrix& a);

/// Basis of {v : A v = 0}, one vector per free column (free column set to 1).
std::vector<Vec> nullspace(const Field& f, Matrix a);

struct SolveResult {
  std::optional<Vec> solution;  ///< particular solution, free variables = 0
  std::size_t nullity = 0;
};

/// Solves A x = b.
SolveResult solve(const Field& f, const Matrix& a, const Vec& b);

}  // namespace pqhopf
