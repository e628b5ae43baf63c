#include "gtrim/linalg.hpp"

#include <utility>

#include "gtrim/errors.hpp"

namespace gtrim {

template <CoefficientField K>
DenseMatrix<K> DenseMatrix<K>::transposed() const {
  DenseMatrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

template <CoefficientField K>
void DenseMatrix<K>::push_row(std::span<const K> values) {
  if (values.size() != cols_) throw InvalidArgument("row length does not match column count");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

namespace {

// Below this many entries the OpenMP fork/join costs more than it saves.
constexpr std::size_t kParallelThreshold = 64 * 64;

template <CoefficientField K>
void eliminate_row(DenseMatrix<K>& m, std::size_t target, std::size_t pivot_row,
                   std::size_t pivot_col) {
  const K factor = m(target, pivot_col);
  if (factor.is_zero()) return;
  auto dst = m.row(target);
  auto src = m.row(pivot_row);
  for (std::size_t c = pivot_col; c < m.cols(); ++c) {
    if (!src[c].is_zero()) dst[c] -= factor * src[c];
  }
}

}  // namespace

template <CoefficientField K>
Echelon<K> row_reduce(DenseMatrix<K> m, Exec exec) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows();
  const bool parallel = exec == Exec::Parallel && rows * m.cols() >= kParallelThreshold;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < rows; ++col) {
    std::size_t pr = rank;
    while (pr < rows && m(pr, col).is_zero()) ++pr;
    if (pr == rows) continue;
    if (pr != rank) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pr, c), m(rank, c));
    }
    const K inv = m(rank, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (!m(rank, c).is_zero()) m(rank, c) *= inv;
    }
    if (parallel) {
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(rows); ++r) {
        if (static_cast<std::size_t>(r) != rank) {
          eliminate_row(m, static_cast<std::size_t>(r), rank, col);
        }
      }
    } else {
      for (std::size_t r = 0; r < rows; ++r) {
        if (r != rank) eliminate_row(m, r, rank, col);
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  return Echelon<K>{std::move(m), std::move(pivots)};
}

template <CoefficientField K>
std::vector<std::vector<K>> kernel_basis(const DenseMatrix<K>& m, Exec exec) {
  const Echelon<K> e = row_reduce(m, exec);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(m.cols(), K::zero(m.field()));
    v[free] = K::one(m.field());
    for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivots[i]] = -e.rref(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <CoefficientField K>
bool SpanBuilder<K>::Reduction::in_span() const {
  return is_zero_vector<K>(residual);
}

template <CoefficientField K>
typename SpanBuilder<K>::Reduction SpanBuilder<K>::reduce(std::span<const K> v) const {
  if (v.size() != dim_) throw InvalidArgument("vector length does not match span dimension");
  Reduction out{std::vector<K>(v.begin(), v.end()), std::vector<K>(tag_dim_, K::zero(field_))};
  for (const Row& row : rows_) {
    const K c = out.residual[row.pivot];
    if (c.is_zero()) continue;
    for (std::size_t i = row.pivot; i < dim_; ++i) {
      if (!row.values[i].is_zero()) out.residual[i] -= c * row.values[i];
    }
    for (std::size_t i = 0; i < tag_dim_; ++i) {
      if (!row.tag[i].is_zero()) out.tag[i] += c * row.tag[i];
    }
  }
  return out;
}

template <CoefficientField K>
bool SpanBuilder<K>::insert(std::span<const K> v, std::span<const K> tag) {
  if (!tag.empty() && tag.size() != tag_dim_) {
    throw InvalidArgument("tag length does not match tag dimension");
  }
  Reduction red = reduce(v);
  std::size_t pivot = 0;
  while (pivot < dim_ && red.residual[pivot].is_zero()) ++pivot;
  if (pivot == dim_) return false;
  // residual = v - span_part, so its tag is tag(v) - red.tag.
  std::vector<K> row_tag(tag_dim_, K::zero(field_));
  for (std::size_t i = 0; i < tag_dim_; ++i) {
    row_tag[i] = (tag.empty() ? K::zero(field_) : tag[i]) - red.tag[i];
  }
  const K inv = red.residual[pivot].inverse();
  for (auto& c : red.residual) {
    if (!c.is_zero()) c *= inv;
  }
  for (auto& c : row_tag) {
    if (!c.is_zero()) c *= inv;
  }
  rows_.push_back(Row{pivot, std::move(red.residual), std::move(row_tag)});
  return true;
}

template class DenseMatrix<Zp>;
template class DenseMatrix<Rational>;
template class SpanBuilder<Zp>;
template class SpanBuilder<Rational>;
template Echelon<Zp> row_reduce(DenseMatrix<Zp>, Exec);
template Echelon<Rational> row_reduce(DenseMatrix<Rational>, Exec);
template std::vector<std::vector<Zp>> kernel_basis(const DenseMatrix<Zp>&, Exec);
template std::vector<std::vector<Rational>> kernel_basis(const DenseMatrix<Rational>&, Exec);

}  // namespace gtrim
