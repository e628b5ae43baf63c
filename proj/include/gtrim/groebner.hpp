#pragma once

#include <vector>

#include "gtrim/polynomial.hpp"

namespace gtrim {

/// Full reduction of f by `basis` (every term, not only the leading one).
/// With a Gröbner basis the result is the unique normal form.
template <CoefficientField K>
Polynomial<K> reduce_by(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis);

/// Buchberger's algorithm with the coprime-leading-monomial and chain
/// criteria, taking S-pairs in order of increasing lcm degree. Returns the
/// reduced basis: monic, inter-reduced, sorted by descending leading monomial.
/// All inputs must share field and order.
template <CoefficientField K>
std::vector<Polynomial<K>> reduced_groebner_basis(const std::vector<Polynomial<K>>& generators);

template <CoefficientField K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g);

}  // namespace gtrim
