#pragma once

#include <optional>
#include <vector>

#include "lk/field.hpp"

namespace lk {

// Dense exact matrix over one FieldSpec, row-major.
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols, const FieldSpecPtr& field);
  static Matrix identity(std::size_t n, const FieldSpecPtr& field);
  static Matrix from_rows(const std::vector<std::vector<FieldElement>>& rows);
  static Matrix column(const std::vector<FieldElement>& entries);
  static Matrix diagonal(const std::vector<FieldElement>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpecPtr& field() const { return field_; }

  FieldElement& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const FieldElement& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const FieldElement& c) const;
  Matrix transpose() const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  FieldElement trace() const;
  std::vector<FieldElement> column_vector(std::size_t j) const;
  std::vector<FieldElement> row_vector(std::size_t i) const;

private:
  std::size_t rows_, cols_;
  FieldSpecPtr field_;
  std::vector<FieldElement> e_;
};

struct Echelon {
  Matrix rref;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form by exact Gauss-Jordan elimination. Pivot choice is
// deterministic: within each column, the first nonzero entry top to bottom.
Echelon reduced_echelon(const Matrix& m);

// Canonical subspace of K^ambient: the reduced echelon basis of its row span.
// Equality of subspaces is entry-wise equality of these canonical bases.
class Subspace {
public:
  static Subspace span_of_rows(const Matrix& rows);
  static Subspace span_of_columns(const Matrix& m);
  static Subspace zero(std::size_t ambient, const FieldSpecPtr& field);
  static Subspace full(std::size_t ambient, const FieldSpecPtr& field);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return ambient_; }
  const FieldSpecPtr& field() const { return field_; }
  const Matrix& basis() const { return basis_; }

  bool contains(const std::vector<FieldElement>& v) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  friend Subspace operator+(const Subspace& u, const Subspace& w);
  static Subspace intersect(const Subspace& u, const Subspace& w);

private:
  Subspace(std::size_t ambient, FieldSpecPtr field, Matrix basis)
      : ambient_(ambient), field_(std::move(field)), basis_(std::move(basis)) {}

  std::size_t ambient_;
  FieldSpecPtr field_;
  Matrix basis_;
};

struct RankKernelInverse {
  std::size_t rank;
  Subspace kernel;                // right kernel {x : Ax = 0}
  std::optional<Matrix> inverse;  // present only for square full-rank input
};

RankKernelInverse rank_kernel_inverse(const Matrix& a);

// A particular exact solution X of A X = B, or nullopt when inconsistent.
// Free variables are set to zero, so the result is deterministic.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

// Leftmost nonzero column; errors with DegenerateBasis on the zero matrix.
std::vector<FieldElement> first_nonzero_column(const Matrix& m);

// Primitive idempotents of a multiplicity-free matrix by Lagrange
// interpolation: E_i = prod_{j != i} (A - theta_j I) / (theta_i - theta_j).
// Requires as many pairwise distinct eigenvalues as rows and that A is
// annihilated by prod (x - theta_i).
std::vector<Matrix> lagrange_idempotents(const Matrix& a,
                                         const std::vector<FieldElement>& eigenvalues);

}  // namespace lk
