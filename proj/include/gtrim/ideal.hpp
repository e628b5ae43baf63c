#pragma once

// Homogeneous ideals of k[x,y,z] and their artinian quotients.
//
// An Ideal is an immutable generator list; its reduced Gröbner basis is
// computed on first use under std::call_once and shared between copies, so
// concurrent readers never see a partially built basis.

#include <cstddef>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "gtrim/linalg.hpp"
#include "gtrim/polynomial.hpp"

namespace gtrim {

template <CoefficientField K>
class Ideal {
 public:
  /// Drops zero generators. Throws NonHomogeneous for a non-homogeneous
  /// generator and FieldMismatch when a generator lives in another field.
  Ideal(std::vector<Polynomial<K>> generators, FieldSpec field,
        MonomialOrder order = MonomialOrder::Grevlex);

  /// n = (x, y, z).
  static Ideal maximal(FieldSpec field, MonomialOrder order = MonomialOrder::Grevlex);

  const std::vector<Polynomial<K>>& generators() const { return generators_; }
  const FieldSpec& field() const { return field_; }
  MonomialOrder order() const { return order_; }

  /// Reduced Gröbner basis, computed once.
  const std::vector<Polynomial<K>>& groebner_basis() const;

  Polynomial<K> normal_form(const Polynomial<K>& f) const;
  bool contains(const Polynomial<K>& f) const { return normal_form(f).is_zero(); }
  bool is_unit() const;
  /// Finite colength: every variable has a pure power among the leading
  /// monomials of the Gröbner basis.
  bool is_n_primary() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial<K>> basis;
  };

  std::vector<Polynomial<K>> generators_;
  FieldSpec field_;
  MonomialOrder order_;
  std::shared_ptr<Cache> cache_;
};

/// Per-degree k-dimensions h_0, ..., h_top of Q/I.
struct HilbertData {
  std::vector<long> coefficients;
  long total() const;
  friend bool operator==(const HilbertData&, const HilbertData&) = default;
};

template <CoefficientField K>
struct SocleData {
  /// Normal-form representatives.
  std::vector<Polynomial<K>> basis;
  std::size_t type_rank = 0;
};

template <CoefficientField K>
struct MinimalGenerators {
  std::vector<Polynomial<K>> generators;
  std::size_t mu = 0;
};

/// Q/I for an n-primary homogeneous ideal, with the standard-monomial basis
/// in every degree and multiplication-by-variable tables.
template <CoefficientField K>
class QuotientRing {
 public:
  /// Throws NotPrimary unless `ideal` has finite colength.
  explicit QuotientRing(Ideal<K> ideal);

  const Ideal<K>& ideal() const { return ideal_; }
  const FieldSpec& field() const { return ideal_.field(); }
  MonomialOrder order() const { return ideal_.order(); }
  /// Highest degree with a non-zero component; -1 for the zero ring.
  int top_degree() const { return static_cast<int>(std_monomials_.size()) - 1; }
  std::size_t dim(int degree) const;
  std::size_t total_dim() const;
  /// Standard monomials of a degree, descending in the monomial order.
  const std::vector<Monomial>& std_monomials(int degree) const;
  /// Position of a standard monomial within its degree; throws otherwise.
  std::size_t index_of(const Monomial& m) const;

  Polynomial<K> normal_form(const Polynomial<K>& f) const { return ideal_.normal_form(f); }
  /// Coordinates of the degree-d part of NF(f) in the standard basis.
  std::vector<K> coordinates(const Polynomial<K>& f, int degree) const;
  Polynomial<K> from_coordinates(int degree, std::span<const K> coords) const;
  /// Matrix of multiplication by variable v from degree d to d+1
  /// (rows dim(d+1), columns dim(d)).
  const DenseMatrix<K>& multiplication(int variable, int degree) const;

 private:
  Ideal<K> ideal_;
  std::vector<std::vector<Monomial>> std_monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  // [variable][degree]
  std::vector<std::vector<DenseMatrix<K>>> mult_;
};

/// Ideal carrying the reduced Gröbner basis as its generators.
template <CoefficientField K>
Ideal<K> groebner_basis(const Ideal<K>& ideal);

template <CoefficientField K>
Polynomial<K> normal_form(const Polynomial<K>& f, const Ideal<K>& ideal) {
  return ideal.normal_form(f);
}

template <CoefficientField K>
bool contains(const Ideal<K>& ideal, const Polynomial<K>& f) {
  return ideal.contains(f);
}

template <CoefficientField K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b);

/// (x g, y g, z g). Throws InvalidArgument for g = 0.
template <CoefficientField K>
Ideal<K> scale_by_maximal(const Polynomial<K>& g);

/// Replaces gens[index] by x, y, z times it.
template <CoefficientField K>
Ideal<K> trim(const std::vector<Polynomial<K>>& gens, std::size_t index);

template <CoefficientField K>
bool is_n_primary(const Ideal<K>& ideal) {
  return ideal.is_n_primary();
}

template <CoefficientField K>
HilbertData hilbert_function(const Ideal<K>& ideal);

/// Keeps a generator iff its image in I/nI is independent of the ones kept
/// so far, scanning by ascending degree then input order.
template <CoefficientField K>
MinimalGenerators<K> minimal_generators(const Ideal<K>& ideal);

template <CoefficientField K>
SocleData<K> socle_basis(const QuotientRing<K>& ring);

template <CoefficientField K>
SocleData<K> socle_basis(const Ideal<K>& ideal) {
  return socle_basis(QuotientRing<K>(ideal));
}

/// (I : n) = I + lifts of the socle of Q/I.
template <CoefficientField K>
Ideal<K> colon_by_maximal(const Ideal<K>& ideal);

template <CoefficientField K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b);

/// Smallest degree of a non-zero generator; -1 for the zero ideal.
template <CoefficientField K>
int initial_degree(const Ideal<K>& ideal);

extern template class Ideal<Zp>;
extern template class Ideal<Rational>;
extern template class QuotientRing<Zp>;
extern template class QuotientRing<Rational>;

}  // namespace gtrim
