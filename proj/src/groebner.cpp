#include "gtrim/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace gtrim {

template <CoefficientField K>
Polynomial<K> reduce_by(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis) {
  std::vector<Term<K>> remainder;
  Polynomial<K> rest = f;
  while (!rest.is_zero()) {
    const Term<K> lt = rest.leading_term();
    const Polynomial<K>* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && g.leading_monomial().divides(lt.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(lt);
      rest -= Polynomial<K>::term(lt.coeff, lt.mono, f.field(), f.order());
      continue;
    }
    const K c = lt.coeff / divisor->leading_coeff();
    rest -= divisor->mul_term(c, lt.mono / divisor->leading_monomial());
  }
  return Polynomial<K>::from_terms(std::move(remainder), f.field(), f.order());
}

template <CoefficientField K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(f.leading_coeff().inverse(), l / f.leading_monomial()) -
         g.mul_term(g.leading_coeff().inverse(), l / g.leading_monomial());
}

namespace {

struct Pair {
  int degree;
  std::size_t i;
  std::size_t j;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

template <CoefficientField K>
bool chain_criterion(const std::vector<Polynomial<K>>& basis, const std::set<Pair>& pending,
                     std::size_t i, std::size_t j, const Monomial& l) {
  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    const int d = lcm(basis[a].leading_monomial(), basis[b].leading_monomial()).degree();
    return pending.count(Pair{d, a, b}) > 0;
  };
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k == i || k == j) continue;
    if (!basis[k].leading_monomial().divides(l)) continue;
    if (!is_pending(i, k) && !is_pending(j, k)) return true;
  }
  return false;
}

}  // namespace

template <CoefficientField K>
std::vector<Polynomial<K>> reduced_groebner_basis(const std::vector<Polynomial<K>>& generators) {
  std::vector<Polynomial<K>> basis;
  for (const auto& g : generators) {
    if (!g.is_zero()) basis.push_back(g.monic());
  }
  if (basis.empty()) return basis;
  for (const auto& g : basis) require_same_field(g.field(), basis.front().field());

  std::set<Pair> pending;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const int d = lcm(basis[i].leading_monomial(), basis[j].leading_monomial()).degree();
      pending.insert(Pair{d, i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs(j);

  while (!pending.empty()) {
    const Pair pr = *pending.begin();
    pending.erase(pending.begin());
    const auto& f = basis[pr.i];
    const auto& g = basis[pr.j];
    if (coprime(f.leading_monomial(), g.leading_monomial())) continue;
    const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    if (chain_criterion(basis, pending, pr.i, pr.j, l)) continue;
    Polynomial<K> h = reduce_by(s_polynomial(f, g), basis);
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
    add_pairs(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  const MonomialOrder order = basis.front().order();
  std::sort(basis.begin(), basis.end(), [order](const auto& a, const auto& b) {
    return mono_cmp(a.leading_monomial(), b.leading_monomial(), order) < 0;
  });
  std::vector<Polynomial<K>> minimal;
  for (const auto& g : basis) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const auto& h) {
      return h.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant) minimal.push_back(g);
  }

  // Inter-reduce tails.
  std::vector<Polynomial<K>> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<K>> others;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.push_back(minimal[k]);
    }
    const Term<K>& lt = minimal[i].leading_term();
    Polynomial<K> lead = Polynomial<K>::term(lt.coeff, lt.mono, lt.coeff.field(), order);
    reduced.push_back((lead + reduce_by(minimal[i] - lead, others)).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [order](const auto& a, const auto& b) {
    return mono_cmp(a.leading_monomial(), b.leading_monomial(), order) > 0;
  });
  return reduced;
}

template Polynomial<Zp> reduce_by(const Polynomial<Zp>&, const std::vector<Polynomial<Zp>>&);
template Polynomial<Rational> reduce_by(const Polynomial<Rational>&,
                                        const std::vector<Polynomial<Rational>>&);
template Polynomial<Zp> s_polynomial(const Polynomial<Zp>&, const Polynomial<Zp>&);
template Polynomial<Rational> s_polynomial(const Polynomial<Rational>&,
                                           const Polynomial<Rational>&);
template std::vector<Polynomial<Zp>> reduced_groebner_basis(const std::vector<Polynomial<Zp>>&);
template std::vector<Polynomial<Rational>> reduced_groebner_basis(
    const std::vector<Polynomial<Rational>>&);

}  // namespace gtrim
