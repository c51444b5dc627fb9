#include "lk/linalg.hpp"

#include <algorithm>

namespace lk {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorKind::ShapeMismatch, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                       " vs " + std::to_string(b.rows()) + "x" +
                                       std::to_string(b.cols()));
  }
  if (!same_field(a.field(), b.field())) {
    fail(ErrorKind::MismatchedField, a.field()->describe() + " vs " + b.field()->describe());
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpecPtr& field)
    : rows_(rows), cols_(cols), field_(field), e_(rows * cols, FieldElement::zero(field)) {}

Matrix Matrix::identity(std::size_t n, const FieldSpecPtr& field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(field);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<FieldElement>>& rows) {
  if (rows.empty() || rows[0].empty()) fail(ErrorKind::ShapeMismatch, "empty row list");
  Matrix m(rows.size(), rows[0].size(), rows[0][0].field());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) fail(ErrorKind::ShapeMismatch, "ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::column(const std::vector<FieldElement>& entries) {
  if (entries.empty()) fail(ErrorKind::ShapeMismatch, "empty column");
  Matrix m(entries.size(), 1, entries[0].field());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = entries[i];
  return m;
}

Matrix Matrix::diagonal(const std::vector<FieldElement>& entries) {
  if (entries.empty()) fail(ErrorKind::ShapeMismatch, "empty diagonal");
  Matrix m(entries.size(), entries.size(), entries[0].field());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_shape(*this, o);
  Matrix out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += o.e_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_shape(*this, o);
  Matrix out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] -= o.e_[i];
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) {
    fail(ErrorKind::ShapeMismatch, "product of " + std::to_string(rows_) + "x" +
                                       std::to_string(cols_) + " and " + std::to_string(o.rows_) +
                                       "x" + std::to_string(o.cols_));
  }
  if (!same_field(field_, o.field_)) {
    fail(ErrorKind::MismatchedField, field_->describe() + " vs " + o.field_->describe());
  }
  Matrix out(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElement& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += aik * o.at(k, j);
    }
  }
  return out;
}

Matrix Matrix::scaled(const FieldElement& c) const {
  Matrix out = *this;
  for (auto& x : out.e_) x *= c;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !same_field(field_, o.field_)) return false;
  return e_ == o.e_;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

FieldElement Matrix::trace() const {
  if (rows_ != cols_) fail(ErrorKind::ShapeMismatch, "trace of non-square matrix");
  FieldElement t = FieldElement::zero(field_);
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::vector<FieldElement> Matrix::column_vector(std::size_t j) const {
  std::vector<FieldElement> v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

std::vector<FieldElement> Matrix::row_vector(std::size_t i) const {
  std::vector<FieldElement> v;
  v.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

Echelon reduced_echelon(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(row, j));
    }
    FieldElement inv = a.at(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      FieldElement factor = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= factor * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return Echelon{std::move(a), pivots.size(), std::move(pivots)};
}

Subspace Subspace::span_of_rows(const Matrix& rows) {
  Echelon e = reduced_echelon(rows);
  Matrix basis(e.rank ? e.rank : 0, rows.cols(), rows.field());
  for (std::size_t i = 0; i < e.rank; ++i) {
    for (std::size_t j = 0; j < rows.cols(); ++j) basis.at(i, j) = e.rref.at(i, j);
  }
  return Subspace(rows.cols(), rows.field(), std::move(basis));
}

Subspace Subspace::span_of_columns(const Matrix& m) { return span_of_rows(m.transpose()); }

Subspace Subspace::zero(std::size_t ambient, const FieldSpecPtr& field) {
  return Subspace(ambient, field, Matrix(0, ambient, field));
}

Subspace Subspace::full(std::size_t ambient, const FieldSpecPtr& field) {
  return Subspace(ambient, field, Matrix::identity(ambient, field));
}

bool Subspace::contains(const std::vector<FieldElement>& v) const {
  if (v.size() != ambient_) fail(ErrorKind::ShapeMismatch, "vector/ambient mismatch");
  Matrix stacked(basis_.rows() + 1, ambient_, field_);
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    for (std::size_t j = 0; j < ambient_; ++j) stacked.at(i, j) = basis_.at(i, j);
  }
  for (std::size_t j = 0; j < ambient_; ++j) stacked.at(basis_.rows(), j) = v[j];
  return reduced_echelon(stacked).rank == dim();
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && same_field(field_, o.field_) && basis_ == o.basis_;
}

Subspace operator+(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient() || !same_field(u.field(), w.field())) {
    fail(ErrorKind::ShapeMismatch, "subspace sum in different ambient spaces");
  }
  Matrix stacked(u.dim() + w.dim(), u.ambient(), u.field());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::size_t j = 0; j < u.ambient(); ++j) stacked.at(i, j) = u.basis().at(i, j);
  }
  for (std::size_t i = 0; i < w.dim(); ++i) {
    for (std::size_t j = 0; j < u.ambient(); ++j) stacked.at(u.dim() + i, j) = w.basis().at(i, j);
  }
  if (stacked.rows() == 0) return Subspace::zero(u.ambient(), u.field());
  return Subspace::span_of_rows(stacked);
}

Subspace Subspace::intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient() || !same_field(u.field(), w.field())) {
    fail(ErrorKind::ShapeMismatch, "subspace intersection in different ambient spaces");
  }
  if (u.dim() == 0 || w.dim() == 0) return zero(u.ambient(), u.field());
  // v lies in both row spans iff v = alpha U = beta W; solve U^T alpha = W^T beta,
  // i.e. the kernel of the stacked system [U^T | -W^T].
  std::size_t a = u.dim(), b = w.dim();
  Matrix system(u.ambient(), a + b, u.field());
  for (std::size_t i = 0; i < u.ambient(); ++i) {
    for (std::size_t j = 0; j < a; ++j) system.at(i, j) = u.basis().at(j, i);
    for (std::size_t j = 0; j < b; ++j) system.at(i, a + j) = -w.basis().at(j, i);
  }
  Subspace ker = rank_kernel_inverse(system).kernel;
  if (ker.dim() == 0) return zero(u.ambient(), u.field());
  Matrix vectors(ker.dim(), u.ambient(), u.field());
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    for (std::size_t j = 0; j < a; ++j) {
      const FieldElement& alpha = ker.basis().at(r, j);
      if (alpha.is_zero()) continue;
      for (std::size_t c = 0; c < u.ambient(); ++c) {
        vectors.at(r, c) += alpha * u.basis().at(j, c);
      }
    }
  }
  return span_of_rows(vectors);
}

RankKernelInverse rank_kernel_inverse(const Matrix& a) {
  Echelon e = reduced_echelon(a);

  // Kernel basis from the free columns of the reduced form.
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Subspace kernel = Subspace::zero(a.cols(), a.field());
  if (!free_cols.empty()) {
    Matrix basis(free_cols.size(), a.cols(), a.field());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
      std::size_t fc = free_cols[k];
      basis.at(k, fc) = FieldElement::one(a.field());
      for (std::size_t r = 0; r < e.rank; ++r) {
        basis.at(k, e.pivot_cols[r]) = -e.rref.at(r, fc);
      }
    }
    kernel = Subspace::span_of_rows(basis);
  }

  std::optional<Matrix> inverse;
  if (a.rows() == a.cols() && e.rank == a.rows()) {
    // Gauss-Jordan on [A | I].
    Matrix aug(a.rows(), 2 * a.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
      aug.at(i, a.cols() + i) = FieldElement::one(a.field());
    }
    Echelon solved = reduced_echelon(aug);
    Matrix inv(a.rows(), a.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) inv.at(i, j) = solved.rref.at(i, a.cols() + j);
    }
    inverse = std::move(inv);
  }
  return RankKernelInverse{e.rank, std::move(kernel), std::move(inverse)};
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) fail(ErrorKind::ShapeMismatch, "solve_linear row mismatch");
  if (!same_field(a.field(), b.field())) {
    fail(ErrorKind::MismatchedField, a.field()->describe() + " vs " + b.field()->describe());
  }
  Matrix aug(a.rows(), a.cols() + b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
  }
  Echelon e = reduced_echelon(aug);
  // Inconsistent iff some pivot lands in the augmented block.
  for (auto c : e.pivot_cols) {
    if (c >= a.cols()) return std::nullopt;
  }
  Matrix x(a.cols(), b.cols(), a.field());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      x.at(e.pivot_cols[r], j) = e.rref.at(r, a.cols() + j);
    }
  }
  return x;
}

std::vector<FieldElement> first_nonzero_column(const Matrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (!m.at(i, j).is_zero()) return m.column_vector(j);
    }
  }
  fail(ErrorKind::DegenerateBasis, "zero matrix has no nonzero column");
}

std::vector<Matrix> lagrange_idempotents(const Matrix& a,
                                         const std::vector<FieldElement>& eigenvalues) {
  if (a.rows() != a.cols()) fail(ErrorKind::ShapeMismatch, "idempotents of non-square matrix");
  if (eigenvalues.size() != a.rows()) {
    fail(ErrorKind::ShapeMismatch, "need one eigenvalue per row");
  }
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    for (std::size_t j = i + 1; j < eigenvalues.size(); ++j) {
      if (eigenvalues[i] == eigenvalues[j]) {
        fail(ErrorKind::NotMultiplicityFree, "repeated eigenvalue " + eigenvalues[i].str());
      }
    }
  }
  Matrix id = Matrix::identity(a.rows(), a.field());
  Matrix annihilator = id;
  for (const auto& theta : eigenvalues) annihilator = annihilator * (a - id.scaled(theta));
  if (!annihilator.is_zero()) {
    fail(ErrorKind::NotMultiplicityFree,
         "matrix is not annihilated by its claimed eigenvalue polynomial");
  }
  std::vector<Matrix> out;
  out.reserve(eigenvalues.size());
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    Matrix e = id;
    FieldElement denom = FieldElement::one(a.field());
    for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
      if (j == i) continue;
      e = e * (a - id.scaled(eigenvalues[j]));
      denom *= eigenvalues[i] - eigenvalues[j];
    }
    if (e.is_zero()) {
      // Annihilation alone cannot rule this out: a proper divisor of the
      // claimed polynomial may already kill A, leaving phantom eigenvalues.
      fail(ErrorKind::NotMultiplicityFree,
           eigenvalues[i].str() + " is not an eigenvalue of the matrix");
    }
    out.push_back(e.scaled(denom.inverse()));
  }
  return out;
}

}  // namespace lk
