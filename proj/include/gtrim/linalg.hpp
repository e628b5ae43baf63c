#pragma once

// Dense exact linear algebra over a coefficient field. Row reduction comes
// in two flavours: a plain serial reference and an OpenMP kernel that
// eliminates the rows below/above a pivot concurrently. Both use the same
// pivoting rule (leftmost column, topmost row) and produce identical output.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gtrim/field.hpp"

namespace gtrim {

enum class Exec { Serial, Parallel };

template <CoefficientField K>
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, FieldSpec field)
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols, K::zero(field)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<K> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const K> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  DenseMatrix transposed() const;
  /// Appends a row; its length must equal cols().
  void push_row(std::span<const K> values);

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  FieldSpec field_;
  std::vector<K> data_;
};

/// Reduced row echelon form. `pivots[i]` is the pivot column of row i for
/// i < rank; rows at and past `rank` are zero.
template <CoefficientField K>
struct Echelon {
  DenseMatrix<K> rref;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

template <CoefficientField K>
Echelon<K> row_reduce(DenseMatrix<K> m, Exec exec = Exec::Parallel);

template <CoefficientField K>
std::size_t rank(const DenseMatrix<K>& m, Exec exec = Exec::Parallel) {
  return row_reduce(m, exec).rank();
}

/// Basis of {v : m v = 0}, one vector per free column in ascending order.
template <CoefficientField K>
std::vector<std::vector<K>> kernel_basis(const DenseMatrix<K>& m, Exec exec = Exec::Parallel);

/// Incrementally built row space with coordinate tracking.
///
/// Each inserted vector may carry a tag vector; stored rows keep the tag
/// combination that produced them, so `reduce` can report how a vector in the
/// span decomposes over the tagged inputs. Rows are stored in semi-echelon
/// form: row k is zero at the pivots of rows 0..k-1, so reducing against the
/// rows in insertion order clears every pivot column.
template <CoefficientField K>
class SpanBuilder {
 public:
  SpanBuilder(std::size_t dim, std::size_t tag_dim, FieldSpec field)
      : dim_(dim), tag_dim_(tag_dim), field_(field) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  struct Reduction {
    std::vector<K> residual;
    /// Tag combination of the span element that was subtracted.
    std::vector<K> tag;
    bool in_span() const;
  };

  Reduction reduce(std::span<const K> v) const;
  bool contains(std::span<const K> v) const { return reduce(v).in_span(); }
  /// Returns true when v was independent of the current span (and added).
  bool insert(std::span<const K> v, std::span<const K> tag = {});

 private:
  struct Row {
    std::size_t pivot;
    std::vector<K> values;
    std::vector<K> tag;
  };

  std::size_t dim_;
  std::size_t tag_dim_;
  FieldSpec field_;
  std::vector<Row> rows_;
};

template <CoefficientField K>
bool is_zero_vector(std::span<const K> v) {
  for (const auto& c : v) {
    if (!c.is_zero()) return false;
  }
  return true;
}

extern template class DenseMatrix<Zp>;
extern template class DenseMatrix<Rational>;
extern template class SpanBuilder<Zp>;
extern template class SpanBuilder<Rational>;

}  // namespace gtrim
