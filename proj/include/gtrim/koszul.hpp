#pragma once

// Koszul complex on x, y, z over an artinian graded quotient R = Q/a and its
// homology algebra A = H(K^R).
//
// Conventions: e_x, e_y, e_z have internal degree 1, so K_{i,D} is spanned by
// (standard monomial of degree D-i) * e_S with |S| = i. The differential is
//   d(e_S) = sum_{j in S} (-1)^{#(k in S, k < j)} x_j e_{S \ j},
// e.g. d(e_xy) = x e_y - y e_x and d(e_xyz) = x e_yz - y e_xz + z e_xy.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gtrim/ideal.hpp"
#include "gtrim/linalg.hpp"
#include "gtrim/pfaffian.hpp"

namespace gtrim {

/// Exterior basis word as a bit set: bit 0 = e_x, bit 1 = e_y, bit 2 = e_z.
using Word = std::uint8_t;
inline constexpr Word kE1 = 0, kEx = 1, kEy = 2, kEz = 4, kExy = 3, kExz = 5, kEyz = 6, kExyz = 7;

int word_degree(Word w);
/// "1", "e_x", "e_xy", ...
std::string word_name(Word w);
/// Words of exterior degree i in basis order: e_x, e_y, e_z; e_xy, e_xz, e_yz.
std::span<const Word> words_of_degree(int i);
/// Position of w in words_of_degree(word_degree(w)).
std::size_t word_rank(Word w);
/// Sign of e_a * e_b = sign * e_{a|b}; 0 when a and b overlap.
int wedge_sign(Word a, Word b);

template <CoefficientField K>
class KoszulElement {
 public:
  KoszulElement(int exterior_degree, FieldSpec field, MonomialOrder order = MonomialOrder::Grevlex);
  /// coeff * e_w.
  static KoszulElement single(Word w, Polynomial<K> coeff);

  int exterior_degree() const { return degree_; }
  const FieldSpec& field() const { return field_; }
  MonomialOrder order() const { return order_; }
  const std::map<Word, Polynomial<K>>& components() const { return components_; }
  /// Zero polynomial when absent.
  Polynomial<K> component(Word w) const;
  bool is_zero() const { return components_.empty(); }

  /// Adds p * e_w; throws InvalidArgument when |w| differs from the degree.
  void add(Word w, const Polynomial<K>& p);

  KoszulElement operator+(const KoszulElement& o) const;
  KoszulElement operator-(const KoszulElement& o) const;
  KoszulElement operator-() const;
  KoszulElement scaled(const K& c) const;
  /// Coefficients multiplied by a polynomial.
  KoszulElement times(const Polynomial<K>& f) const;
  /// The automorphism x <-> y, e_x <-> e_y.
  KoszulElement swapped_xy() const;

  friend bool operator==(const KoszulElement& a, const KoszulElement& b) {
    return a.degree_ == b.degree_ && a.components_ == b.components_;
  }

  std::string to_string() const;

 private:
  int degree_;
  FieldSpec field_;
  MonomialOrder order_;
  std::map<Word, Polynomial<K>> components_;
};

/// Product in the exterior algebra over Q (no reduction).
template <CoefficientField K>
KoszulElement<K> wedge(const KoszulElement<K>& a, const KoszulElement<K>& b);

/// Koszul differential over Q (no reduction).
template <CoefficientField K>
KoszulElement<K> koszul_differential(const KoszulElement<K>& u);

/// Coefficients replaced by their normal forms modulo `ideal`.
template <CoefficientField K>
KoszulElement<K> reduce_mod(const KoszulElement<K>& u, const Ideal<K>& ideal);

/// d(u) = 0 in K^R where R = Q/ideal.
template <CoefficientField K>
bool is_cycle(const Ideal<K>& ideal, const KoszulElement<K>& u);

/// Matrices of the differential in every (exterior, internal) degree.
template <CoefficientField K>
class KoszulComplex {
 public:
  /// Throws NotPrimary when the ideal is not n-primary.
  explicit KoszulComplex(const Ideal<K>& ideal);
  explicit KoszulComplex(std::shared_ptr<const QuotientRing<K>> ring);

  const QuotientRing<K>& ring() const { return *ring_; }
  /// Internal degrees run over 0..max_internal_degree().
  int max_internal_degree() const { return ring_->top_degree() + 3; }
  std::size_t dim(int i, int internal_degree) const;
  /// d_i : K_{i,D} -> K_{i-1,D}; rows dim(i-1,D), columns dim(i,D). i in 1..3.
  const DenseMatrix<K>& differential(int i, int internal_degree) const;

  /// Coordinates of u (after reduction mod the ideal), split by internal degree.
  std::map<int, std::vector<K>> to_vectors(const KoszulElement<K>& u) const;
  KoszulElement<K> from_vector(int i, int internal_degree, std::span<const K> v) const;

 private:
  std::shared_ptr<const QuotientRing<K>> ring_;
  // [i-1][D] for i = 1..3
  std::array<std::vector<DenseMatrix<K>>, 3> diff_;
};

template <CoefficientField K>
struct HomologyClass {
  KoszulElement<K> rep;
  int internal_degree;
  /// rep as a vector of K_{i,D}.
  std::vector<K> vector;
};

/// A = H(K^R) with a k-basis of cycle representatives in every degree.
///
/// For each (i, D) the boundaries are inserted into a SpanBuilder first, then
/// the kernel basis vectors of d_i in order; a kernel vector that is
/// independent of everything before it becomes a basis class. The classes of
/// A_i are ordered by internal degree, then by that scan.
template <CoefficientField K>
class HomologyAlgebra {
 public:
  explicit HomologyAlgebra(KoszulComplex<K> complex, Exec exec = Exec::Parallel);
  explicit HomologyAlgebra(const Ideal<K>& ideal, Exec exec = Exec::Parallel)
      : HomologyAlgebra(KoszulComplex<K>(ideal), exec) {}

  const KoszulComplex<K>& complex() const { return complex_; }
  const QuotientRing<K>& ring() const { return complex_.ring(); }
  const std::vector<HomologyClass<K>>& basis(int i) const;
  std::size_t rank(int i) const { return basis(i).size(); }
  std::array<std::size_t, 4> ranks() const;
  /// Basis of the boundary subspace of K_{i,D}.
  const std::vector<std::vector<K>>& boundary_basis(int i, int internal_degree) const;

  /// Coordinates of [u] in basis(|u|). Throws NotACycle.
  std::vector<K> class_coordinates(const KoszulElement<K>& u) const;
  bool is_boundary(const KoszulElement<K>& u) const;
  /// Coordinates of [u][v] in basis(|u|+|v|). Throws InvalidArgument when
  /// |u|+|v| > 3 and NotACycle for non-cycles.
  std::vector<K> multiply(const KoszulElement<K>& u, const KoszulElement<K>& v) const;
  /// Product of basis classes a in A_i and b in A_j.
  std::vector<K> multiply_basis(int i, std::size_t a, int j, std::size_t b) const;

 private:
  struct Slot {
    std::vector<std::vector<K>> boundary;
    SpanBuilder<K> solver;
    std::size_t first_class = 0;
    std::size_t class_count = 0;
  };

  const Slot& slot(int i, int internal_degree) const;

  KoszulComplex<K> complex_;
  // [i][D]
  std::array<std::vector<Slot>, 4> slots_;
  std::array<std::vector<HomologyClass<K>>, 4> basis_;
};

template <CoefficientField K>
KoszulComplex<K> build_complex(const QuotientRing<K>& ring) {
  return KoszulComplex<K>(std::make_shared<const QuotientRing<K>>(ring));
}

template <CoefficientField K>
std::vector<KoszulElement<K>> homology_basis(const HomologyAlgebra<K>& h, int i) {
  std::vector<KoszulElement<K>> out;
  for (const auto& c : h.basis(i)) out.push_back(c.rep);
  return out;
}

template <CoefficientField K>
std::vector<K> multiply(const HomologyAlgebra<K>& h, const KoszulElement<K>& u,
                        const KoszulElement<K>& v) {
  return h.multiply(u, v);
}

struct TorInvariants {
  int p = 0;
  int q = 0;
  int r = 0;
  int mu = 0;
  int type_rank = 0;
  std::array<std::size_t, 4> ranks{};
  friend bool operator==(const TorInvariants&, const TorInvariants&) = default;
};

/// p = rank A_1*A_1, q = rank A_1*A_2, r = rank of delta: A_2 -> Hom(A_1, A_3).
/// mu comes from the ideal's minimal generators, type_rank from A_3.
template <CoefficientField K>
TorInvariants invariants(const HomologyAlgebra<K>& h);

/// Rank of f |-> (e |-> e f) from A_2 to Hom_k(A_1, A_3).
template <CoefficientField K>
int delta_rank(const HomologyAlgebra<K>& h);

struct TorClass {
  enum class Tag { CompleteIntersection, Gorenstein, B, G, H, T, Unclassified };

  Tag tag = Tag::Unclassified;
  TorInvariants inv;

  bool gorenstein() const { return tag == Tag::CompleteIntersection || tag == Tag::Gorenstein; }
  /// "G", "H", "B", "T", "Gorenstein", "CompleteIntersection", "Unclassified".
  std::string name() const;
  /// With parameters: "G(3)", "H(3,2)", "Gorenstein(7)", "B".
  std::string label() const;
};

/// Decision table, first match wins:
///   type 1, mu 3 -> CompleteIntersection; type 1 -> Gorenstein(mu);
///   (1,1,2) -> B; (3,0,0) -> T; p=0, q=1, r>=2 -> G(r); r=q -> H(p,q);
///   otherwise Unclassified.
TorClass classify_invariants(const TorInvariants& inv);

/// Throws NotInSquare when the ideal has a generator of degree < 2.
template <CoefficientField K>
TorClass classify(const HomologyAlgebra<K>& h);

/// The A_1 cycle basis written down for each kind of trimmed generator
/// (y-side selectors by the x <-> y symmetry). m >= 3. Every element is
/// checked to be a cycle modulo trim_gm(choice).
template <CoefficientField K>
std::vector<KoszulElement<K>> prop43_cycles(const TrimChoice& choice, FieldSpec field,
                                            MonomialOrder order = MonomialOrder::Grevlex);

/// The extra degree-2 cycle whose class annihilates A_1:
///   g = x^m:          y^(m-1) e_yz
///   g = x^(m-i) d_i:  y^(m-i) d_(i-1) e_xy + (-1)^(i-1) y^(m-i-1) d_i e_yz
///   g = d_m:          d_(m-1) e_xy
template <CoefficientField K>
KoszulElement<K> prop43_special_cycle(const TrimChoice& choice, FieldSpec field,
                                      MonomialOrder order = MonomialOrder::Grevlex);

/// g e_xy, g e_xz, g e_yz for the trimmed generator g.
template <CoefficientField K>
std::array<KoszulElement<K>, 3> trimmed_generator_cycles(const TrimChoice& choice, FieldSpec field,
                                                         MonomialOrder order = MonomialOrder::Grevlex);

/// [e][f] = 0 for every basis class e of A_1. f must be a degree-2 cycle.
template <CoefficientField K>
bool annihilates_A1(const HomologyAlgebra<K>& h, const KoszulElement<K>& f);

/// delta([f]) = 0, i.e. the same as annihilates_A1.
template <CoefficientField K>
bool in_delta_kernel(const HomologyAlgebra<K>& h, const KoszulElement<K>& f) {
  return annihilates_A1(h, f);
}

extern template class KoszulElement<Zp>;
extern template class KoszulElement<Rational>;
extern template class KoszulComplex<Zp>;
extern template class KoszulComplex<Rational>;
extern template class HomologyAlgebra<Zp>;
extern template class HomologyAlgebra<Rational>;

}  // namespace gtrim
