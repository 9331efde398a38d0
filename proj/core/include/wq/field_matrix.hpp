#pragma once

#include <cstddef>
#include <vector>

#include "wq/rational_function.hpp"

namespace wq {

/// Dense square matrix over Q(t), row-major, zero-based indices.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  explicit FieldMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  FieldMatrix(std::size_t dim, std::vector<RationalFunction> row_major);

  static FieldMatrix identity(std::size_t dim);
  static FieldMatrix diagonal(const std::vector<RationalFunction>& diag);

  std::size_t dim() const { return dim_; }
  const RationalFunction& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  RationalFunction& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

  FieldMatrix transpose() const;
  /// Entrywise f(t) -> f(1/t).
  FieldMatrix inverted_t() const;
  bool is_diagonal() const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<RationalFunction> entries_;
};

/// Throws DimensionMismatch.
FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);

struct Elimination {
  FieldMatrix inverse;
  RationalFunction determinant;
};

/// Gauss-Jordan elimination; pivots on the entry of lowest complexity in the
/// column. Throws SingularMatrix when the determinant vanishes.
Elimination eliminate(const FieldMatrix& a);
FieldMatrix inverse(const FieldMatrix& a);
/// Zero for singular input (never throws SingularMatrix).
RationalFunction determinant(const FieldMatrix& a);

/// First (row, col) where a and b differ, if any.
struct EntryDiff {
  std::size_t row;
  std::size_t col;
};
std::optional<EntryDiff> first_difference(const FieldMatrix& a, const FieldMatrix& b);

}  // namespace wq
