#include "wq/field_matrix.hpp"

#include <string>
#include <utility>

#include "wq/errors.hpp"

namespace wq {

FieldMatrix::FieldMatrix(std::size_t dim, std::vector<RationalFunction> row_major)
    : dim_(dim), entries_(std::move(row_major)) {
  if (entries_.size() != dim * dim)
    throw DimensionMismatch("FieldMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
                            std::to_string(entries_.size()));
}

FieldMatrix FieldMatrix::identity(std::size_t dim) {
  FieldMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

FieldMatrix FieldMatrix::diagonal(const std::vector<RationalFunction>& diag) {
  FieldMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

FieldMatrix FieldMatrix::inverted_t() const {
  FieldMatrix m(dim_);
  for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k].inverted_t();
  return m;
}

bool FieldMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("matrix product of dimensions " + std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()));
  const std::size_t n = a.dim();
  FieldMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RationalFunction acc;
      for (std::size_t k = 0; k < n; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      c(i, j) = std::move(acc);
    }
  return c;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrix difference of unequal dimensions");
  FieldMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

Elimination eliminate(const FieldMatrix& a) {
  const std::size_t n = a.dim();
  FieldMatrix work = a;
  FieldMatrix inv = FieldMatrix::identity(n);
  RationalFunction det = 1;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (work(r, col).is_zero()) continue;
      if (pivot == n || work(r, col).complexity() < work(pivot, col).complexity()) pivot = r;
    }
    if (pivot == n) throw SingularMatrix("matrix is singular (column " + std::to_string(col + 1) + ")");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
      det = -det;
    }
    const RationalFunction p = work(col, col);
    det *= p;
    const RationalFunction p_inv = RationalFunction(1) / p;
    for (std::size_t j = 0; j < n; ++j) {
      if (!work(col, j).is_zero()) work(col, j) *= p_inv;
      if (!inv(col, j).is_zero()) inv(col, j) *= p_inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const RationalFunction f = work(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!work(col, j).is_zero()) work(r, j) -= f * work(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return {std::move(inv), std::move(det)};
}

FieldMatrix inverse(const FieldMatrix& a) { return eliminate(a).inverse; }

RationalFunction determinant(const FieldMatrix& a) {
  try {
    return eliminate(a).determinant;
  } catch (const SingularMatrix&) {
    return {};
  }
}

std::optional<EntryDiff> first_difference(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("comparing matrices of unequal dimensions");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(a(i, j) == b(i, j))) return EntryDiff{i, j};
  return std::nullopt;
}

}  // namespace wq
