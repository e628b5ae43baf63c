#pragma once

#include <cstddef>
#include <vector>

#include "gtrim/polynomial.hpp"

namespace gtrim {

template <CoefficientField K>
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, FieldSpec field,
             MonomialOrder order = MonomialOrder::Grevlex);

  static PolyMatrix identity(std::size_t n, FieldSpec field,
                             MonomialOrder order = MonomialOrder::Grevlex);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const FieldSpec& field() const { return field_; }
  MonomialOrder order() const { return order_; }

  Polynomial<K>& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Polynomial<K>& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  /// entry(i,j) = -entry(j,i) and zero diagonal.
  bool is_skew_symmetric() const;
  /// Set by callers that construct skew matrices; checked on assignment.
  bool skew_flag() const { return skew_; }
  void mark_skew();

  PolyMatrix transposed() const;
  /// Removes row r and column c.
  PolyMatrix minor(std::size_t r, std::size_t c) const;
  /// Removes rows and columns listed in `drop` (sorted, distinct).
  PolyMatrix principal_submatrix_without(const std::vector<std::size_t>& drop) const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  FieldSpec field_;
  MonomialOrder order_;
  bool skew_ = false;
  std::vector<Polynomial<K>> entries_;
};

/// Cofactor expansion along the sparsest row or column. Throws
/// InvalidArgument for a non-square matrix.
template <CoefficientField K>
Polynomial<K> matrix_det(const PolyMatrix<K>& m);

/// Fraction-free (Bareiss) elimination with exact polynomial division.
template <CoefficientField K>
Polynomial<K> matrix_det_bareiss(const PolyMatrix<K>& m);

extern template class PolyMatrix<Zp>;
extern template class PolyMatrix<Rational>;

}  // namespace gtrim
