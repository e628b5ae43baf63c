#include "gtrim/poly_matrix.hpp"

#include <algorithm>

namespace gtrim {

template <CoefficientField K>
PolyMatrix<K>::PolyMatrix(std::size_t rows, std::size_t cols, FieldSpec field, MonomialOrder order)
    : rows_(rows), cols_(cols), field_(field), order_(order),
      entries_(rows * cols, Polynomial<K>(field, order)) {}

template <CoefficientField K>
PolyMatrix<K> PolyMatrix<K>::identity(std::size_t n, FieldSpec field, MonomialOrder order) {
  PolyMatrix m(n, n, field, order);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial<K>::constant(1, field, order);
  return m;
}

template <CoefficientField K>
bool PolyMatrix<K>::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (!((*this)(i, j) == -(*this)(j, i))) return false;
    }
  }
  return true;
}

template <CoefficientField K>
void PolyMatrix<K>::mark_skew() {
  if (!is_skew_symmetric()) throw InvalidArgument("matrix is not skew-symmetric");
  skew_ = true;
}

template <CoefficientField K>
PolyMatrix<K> PolyMatrix<K>::transposed() const {
  PolyMatrix t(cols_, rows_, field_, order_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

template <CoefficientField K>
PolyMatrix<K> PolyMatrix<K>::minor(std::size_t r, std::size_t c) const {
  PolyMatrix out(rows_ - 1, cols_ - 1, field_, order_);
  for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
      if (j == c) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

template <CoefficientField K>
PolyMatrix<K> PolyMatrix<K>::principal_submatrix_without(
    const std::vector<std::size_t>& drop) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);
  }
  PolyMatrix out(keep.size(), keep.size(), field_, order_);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) out(i, j) = (*this)(keep[i], keep[j]);
  }
  out.skew_ = skew_;
  return out;
}

namespace {

template <CoefficientField K>
Polynomial<K> cofactor_det(const PolyMatrix<K>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial<K>::constant(1, m.field(), m.order());
  if (n == 1) return m(0, 0);

  // Pick the line (row or column) with the most zero entries.
  std::size_t best = 0, best_zeros = 0;
  bool by_row = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rz = 0, cz = 0;
    for (std::size_t j = 0; j < n; ++j) {
      rz += m(i, j).is_zero();
      cz += m(j, i).is_zero();
    }
    if (rz == n || cz == n) return Polynomial<K>(m.field(), m.order());
    if (rz > best_zeros) { best = i; best_zeros = rz; by_row = true; }
    if (cz > best_zeros) { best = i; best_zeros = cz; by_row = false; }
  }

  Polynomial<K> det(m.field(), m.order());
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t r = by_row ? best : j;
    const std::size_t c = by_row ? j : best;
    if (m(r, c).is_zero()) continue;
    Polynomial<K> term = m(r, c) * cofactor_det(m.minor(r, c));
    if ((r + c) % 2 == 1) term = -term;
    det += term;
  }
  return det;
}

}  // namespace

template <CoefficientField K>
Polynomial<K> matrix_det(const PolyMatrix<K>& m) {
  if (!m.is_square()) throw InvalidArgument("determinant of a non-square matrix");
  return cofactor_det(m);
}

template <CoefficientField K>
Polynomial<K> matrix_det_bareiss(const PolyMatrix<K>& input) {
  if (!input.is_square()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return Polynomial<K>::constant(1, input.field(), input.order());
  PolyMatrix<K> a = input;
  Polynomial<K> prev = Polynomial<K>::constant(1, input.field(), input.order());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return Polynomial<K>(input.field(), input.order());
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = divide_exact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      }
      a(i, k) = Polynomial<K>(input.field(), input.order());
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

template class PolyMatrix<Zp>;
template class PolyMatrix<Rational>;
template Polynomial<Zp> matrix_det(const PolyMatrix<Zp>&);
template Polynomial<Rational> matrix_det(const PolyMatrix<Rational>&);
template Polynomial<Zp> matrix_det_bareiss(const PolyMatrix<Zp>&);
template Polynomial<Rational> matrix_det_bareiss(const PolyMatrix<Rational>&);

}  // namespace gtrim
