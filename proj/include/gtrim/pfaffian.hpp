#pragma once

// The Pfaffian family: the Hankel-shaped matrices U_m, their determinants
// d_m, the (2m+1)x(2m+1) skew matrices V_m, and the grade-3 Gorenstein
// ideals g_m generated by the sub-maximal Pfaffians of V_m.

#include <cstddef>
#include <string>
#include <vector>

#include "gtrim/ideal.hpp"
#include "gtrim/poly_matrix.hpp"

namespace gtrim {

/// m x m, row i (1-based) has x, z, y in columns m-i, m-i+1, m-i+2.
template <CoefficientField K>
PolyMatrix<K> build_U(int m, FieldSpec field, MonomialOrder order = MonomialOrder::Grevlex);

enum class DetMethod { Determinant, Recurrence, ClosedForm };

/// d_m for m >= -1, with d_{-1} = 0 and d_0 = 1.
///   Determinant: det(U_m) by cofactor expansion
///   Recurrence:  d_m = (-1)^(m-1) z d_{m-1} + xy d_{m-2}
///   ClosedForm:  sum_j C(m-j, j) (-1)^floor((m-2j)/2) x^j y^j z^(m-2j)
template <CoefficientField K>
Polynomial<K> d_poly(int m, DetMethod method, FieldSpec field,
                     MonomialOrder order = MonomialOrder::Grevlex);

/// Skew block matrix [[O, Ox, U], [-Ox^T, 0, yO], [-U, -yO^T, O]].
template <CoefficientField K>
PolyMatrix<K> build_V(int m, FieldSpec field, MonomialOrder order = MonomialOrder::Grevlex);

/// Pfaffian of an even skew matrix by first-row expansion,
///   Pf(M) = sum_{j>=2} (-1)^j M[1,j] Pf(M without rows/cols 1 and j).
template <CoefficientField K>
Polynomial<K> pfaffian(const PolyMatrix<K>& m);

/// Pfaffian of V with row and column i (1-based) removed. V must be skew of
/// odd size.
template <CoefficientField K>
Polynomial<K> sub_pfaffian(const PolyMatrix<K>& v, std::size_t i);

/// [x^m, x^(m-1) d_1, ..., x d_(m-1), d_m, y d_(m-1), ..., y^m]; m >= 2.
template <CoefficientField K>
std::vector<Polynomial<K>> canonical_generators(int m, FieldSpec field,
                                                MonomialOrder order = MonomialOrder::Grevlex);

/// The ideal of the 2m+1 sub-maximal Pfaffians of V_m.
template <CoefficientField K>
Ideal<K> gorenstein_ideal(int m, FieldSpec field, MonomialOrder order = MonomialOrder::Grevlex);

/// Closed form of the Hilbert function of Q/g_m for m >= 2:
///   sum_{i=0}^{m-2} C(i+2,2) (t^i + t^(2m-2-i)) + C(m+1,2) t^(m-1).
HilbertData gorenstein_hilbert_formula(int m);

/// Which canonical generator of g_m is trimmed.
struct TrimChoice {
  enum class Kind { Xpow, Ypow, Dm, Xi, Yi };

  int m = 2;
  Kind kind = Kind::Xpow;
  int i = 0;  // only for Xi / Yi, 1 <= i <= m-1

  static TrimChoice xpow(int m) { return {m, Kind::Xpow, 0}; }
  static TrimChoice ypow(int m) { return {m, Kind::Ypow, 0}; }
  static TrimChoice dm(int m) { return {m, Kind::Dm, 0}; }
  static TrimChoice xi(int m, int i) { return {m, Kind::Xi, i}; }
  static TrimChoice yi(int m, int i) { return {m, Kind::Yi, i}; }

  /// Parses x0, y0, d, xI, yI. Throws InvalidArgument.
  static TrimChoice parse(int m, const std::string& token);
  /// All 2m+1 selectors in canonical generator order.
  static std::vector<TrimChoice> all(int m);

  /// Throws InvalidArgument for m < 2 or i outside 1..m-1.
  void validate() const;
  /// Position in canonical_generators(m).
  std::size_t index() const;
  std::string token() const;
  bool interior() const { return kind == Kind::Xi || kind == Kind::Yi; }
  bool y_side() const { return kind == Kind::Ypow || kind == Kind::Yi; }
  /// The x-side selector mirrored by x <-> y (Dm maps to itself).
  TrimChoice mirrored() const;

  friend bool operator==(const TrimChoice&, const TrimChoice&) = default;
};

/// n g + (remaining canonical generators), g selected by `choice`.
template <CoefficientField K>
Ideal<K> trim_gm(const TrimChoice& choice, FieldSpec field,
                 MonomialOrder order = MonomialOrder::Grevlex);

template <CoefficientField K>
Polynomial<K> trimmed_generator(const TrimChoice& choice, FieldSpec field,
                                MonomialOrder order = MonomialOrder::Grevlex);

template <CoefficientField K>
struct PfaffianFamily {
  int m;
  PolyMatrix<K> U;
  PolyMatrix<K> V;
  Polynomial<K> d;
  std::vector<Polynomial<K>> pfaffians;
  /// Canonical generators for m >= 2; the Pfaffians themselves for m = 1.
  std::vector<Polynomial<K>> canonical_gens;
};

template <CoefficientField K>
PfaffianFamily<K> build_family(int m, FieldSpec field, MonomialOrder order = MonomialOrder::Grevlex);

}  // namespace gtrim
