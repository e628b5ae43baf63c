#include "gtrim/ideal.hpp"

#include <algorithm>
#include <numeric>

#include "gtrim/groebner.hpp"

namespace gtrim {

template <CoefficientField K>
Ideal<K>::Ideal(std::vector<Polynomial<K>> generators, FieldSpec field, MonomialOrder order)
    : field_(field), order_(order), cache_(std::make_shared<Cache>()) {
  if (!K::accepts(field_)) {
    throw FieldMismatch("coefficient type cannot represent " + field_.to_string());
  }
  for (auto& g : generators) {
    require_same_field(g.field(), field_);
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) {
      throw NonHomogeneous("generator '" + g.to_string() + "' is not homogeneous");
    }
    generators_.push_back(g.order() == order_ ? std::move(g) : g.with_order(order_));
  }
}

template <CoefficientField K>
Ideal<K> Ideal<K>::maximal(FieldSpec field, MonomialOrder order) {
  std::vector<Polynomial<K>> gens;
  for (int v = 0; v < 3; ++v) gens.push_back(Polynomial<K>::variable(v, field, order));
  return Ideal(std::move(gens), field, order);
}

template <CoefficientField K>
const std::vector<Polynomial<K>>& Ideal<K>::groebner_basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = reduced_groebner_basis(generators_); });
  return cache_->basis;
}

template <CoefficientField K>
Polynomial<K> Ideal<K>::normal_form(const Polynomial<K>& f) const {
  require_same_field(f.field(), field_);
  const Polynomial<K> g = f.order() == order_ ? f : f.with_order(order_);
  return reduce_by(g, groebner_basis());
}

template <CoefficientField K>
bool Ideal<K>::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().leading_monomial().is_one();
}

template <CoefficientField K>
bool Ideal<K>::is_n_primary() const {
  std::array<bool, 3> found{false, false, false};
  for (const auto& g : groebner_basis()) {
    const Monomial& lm = g.leading_monomial();
    for (std::size_t v = 0; v < 3; ++v) {
      if (lm.exp[(v + 1) % 3] == 0 && lm.exp[(v + 2) % 3] == 0) found[v] = true;
    }
  }
  return found[0] && found[1] && found[2];
}

long HilbertData::total() const {
  return std::accumulate(coefficients.begin(), coefficients.end(), 0L);
}

template <CoefficientField K>
QuotientRing<K>::QuotientRing(Ideal<K> ideal) : ideal_(std::move(ideal)) {
  if (!ideal_.is_n_primary()) {
    throw NotPrimary("ideal is not n-primary: the quotient is not finite-dimensional");
  }
  const auto& gb = ideal_.groebner_basis();
  for (int d = 0;; ++d) {
    std::vector<Monomial> standard;
    for (const Monomial& m : monomials_of_degree(d, ideal_.order())) {
      const bool divisible = std::any_of(gb.begin(), gb.end(), [&](const Polynomial<K>& g) {
        return g.leading_monomial().divides(m);
      });
      if (!divisible) standard.push_back(m);
    }
    // Once a degree has no standard monomials, no higher degree has any.
    if (standard.empty()) break;
    for (std::size_t i = 0; i < standard.size(); ++i) index_.emplace(standard[i], i);
    std_monomials_.push_back(std::move(standard));
  }

  const int top = top_degree();
  mult_.resize(3);
  for (int v = 0; v < 3; ++v) {
    for (int d = 0; d <= top; ++d) {
      DenseMatrix<K> m(dim(d + 1), dim(d), field());
      for (std::size_t c = 0; c < dim(d); ++c) {
        const auto prod = Polynomial<K>::monomial(std_monomials_[d][c] * Monomial::variable(v),
                                                  field(), order());
        const auto coords = coordinates(prod, d + 1);
        for (std::size_t r = 0; r < coords.size(); ++r) m(r, c) = coords[r];
      }
      mult_[v].push_back(std::move(m));
    }
  }
}

template <CoefficientField K>
std::size_t QuotientRing<K>::dim(int degree) const {
  if (degree < 0 || degree > top_degree()) return 0;
  return std_monomials_[static_cast<std::size_t>(degree)].size();
}

template <CoefficientField K>
std::size_t QuotientRing<K>::total_dim() const {
  std::size_t n = 0;
  for (const auto& s : std_monomials_) n += s.size();
  return n;
}

template <CoefficientField K>
const std::vector<Monomial>& QuotientRing<K>::std_monomials(int degree) const {
  static const std::vector<Monomial> empty;
  if (degree < 0 || degree > top_degree()) return empty;
  return std_monomials_[static_cast<std::size_t>(degree)];
}

template <CoefficientField K>
std::size_t QuotientRing<K>::index_of(const Monomial& m) const {
  const auto it = index_.find(m);
  if (it == index_.end()) throw InvalidArgument(m.to_string() + " is not a standard monomial");
  return it->second;
}

template <CoefficientField K>
std::vector<K> QuotientRing<K>::coordinates(const Polynomial<K>& f, int degree) const {
  std::vector<K> out(dim(degree), K::zero(field()));
  const Polynomial<K> nf = normal_form(f);
  for (const auto& t : nf.terms()) {
    if (t.mono.degree() == degree) out[index_of(t.mono)] = t.coeff;
  }
  return out;
}

template <CoefficientField K>
Polynomial<K> QuotientRing<K>::from_coordinates(int degree, std::span<const K> coords) const {
  std::vector<Term<K>> terms;
  const auto& basis = std_monomials(degree);
  for (std::size_t i = 0; i < coords.size() && i < basis.size(); ++i) {
    if (!coords[i].is_zero()) terms.push_back({coords[i], basis[i]});
  }
  return Polynomial<K>::from_terms(std::move(terms), field(), order());
}

template <CoefficientField K>
const DenseMatrix<K>& QuotientRing<K>::multiplication(int variable, int degree) const {
  return mult_.at(static_cast<std::size_t>(variable)).at(static_cast<std::size_t>(degree));
}

template <CoefficientField K>
Ideal<K> groebner_basis(const Ideal<K>& ideal) {
  return Ideal<K>(ideal.groebner_basis(), ideal.field(), ideal.order());
}

template <CoefficientField K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
  require_same_field(a.field(), b.field());
  if (a.order() != b.order()) throw InvalidArgument("ideal_sum: monomial orders differ");
  std::vector<Polynomial<K>> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal<K>(std::move(gens), a.field(), a.order());
}

template <CoefficientField K>
Ideal<K> scale_by_maximal(const Polynomial<K>& g) {
  if (g.is_zero()) throw InvalidArgument("scale_by_maximal: zero polynomial");
  std::vector<Polynomial<K>> gens;
  for (int v = 0; v < 3; ++v) gens.push_back(g.mul_term(K::one(g.field()), Monomial::variable(v)));
  return Ideal<K>(std::move(gens), g.field(), g.order());
}

template <CoefficientField K>
Ideal<K> trim(const std::vector<Polynomial<K>>& gens, std::size_t index) {
  if (index >= gens.size()) {
    throw InvalidArgument("trim: index " + std::to_string(index) + " out of range for " +
                          std::to_string(gens.size()) + " generators");
  }
  const Ideal<K> scaled = scale_by_maximal(gens[index]);
  std::vector<Polynomial<K>> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i == index) {
      out.insert(out.end(), scaled.generators().begin(), scaled.generators().end());
    } else {
      out.push_back(gens[i]);
    }
  }
  return Ideal<K>(std::move(out), gens[index].field(), gens[index].order());
}

template <CoefficientField K>
HilbertData hilbert_function(const Ideal<K>& ideal) {
  const QuotientRing<K> ring(ideal);
  HilbertData h;
  for (int d = 0; d <= ring.top_degree(); ++d) h.coefficients.push_back(static_cast<long>(ring.dim(d)));
  return h;
}

namespace {

template <CoefficientField K>
std::vector<K> monomial_coordinates(const Polynomial<K>& f, int degree,
                                    const std::unordered_map<Monomial, std::size_t, MonomialHash>& idx) {
  std::vector<K> v(idx.size(), K::zero(f.field()));
  for (const auto& t : f.terms()) {
    if (t.mono.degree() == degree) v[idx.at(t.mono)] = t.coeff;
  }
  return v;
}

}  // namespace

template <CoefficientField K>
MinimalGenerators<K> minimal_generators(const Ideal<K>& ideal) {
  std::vector<std::size_t> order(ideal.generators().size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto& gens = ideal.generators();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return gens[a].degree() < gens[b].degree(); });

  MinimalGenerators<K> out;
  std::size_t pos = 0;
  while (pos < order.size()) {
    const int d = gens[order[pos]].degree();
    std::unordered_map<Monomial, std::size_t, MonomialHash> idx;
    const auto monos = monomials_of_degree(d, ideal.order());
    for (std::size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], i);

    // (n I)_d is spanned by t*g with deg g < d and deg t = d - deg g >= 1.
    SpanBuilder<K> span(monos.size(), 0, ideal.field());
    for (const auto& g : gens) {
      if (g.degree() >= d) continue;
      for (const Monomial& t : monomials_of_degree(d - g.degree(), ideal.order())) {
        span.insert(monomial_coordinates(g.mul_term(K::one(ideal.field()), t), d, idx));
      }
    }
    for (; pos < order.size() && gens[order[pos]].degree() == d; ++pos) {
      const auto& g = gens[order[pos]];
      if (span.insert(monomial_coordinates(g, d, idx))) out.generators.push_back(g);
    }
  }
  out.mu = out.generators.size();
  return out;
}

template <CoefficientField K>
SocleData<K> socle_basis(const QuotientRing<K>& ring) {
  SocleData<K> out;
  for (int d = 0; d <= ring.top_degree(); ++d) {
    const std::size_t n = ring.dim(d), up = ring.dim(d + 1);
    DenseMatrix<K> stacked(3 * up, n, ring.field());
    for (int v = 0; v < 3; ++v) {
      const auto& m = ring.multiplication(v, d);
      for (std::size_t r = 0; r < up; ++r) {
        for (std::size_t c = 0; c < n; ++c) stacked(static_cast<std::size_t>(v) * up + r, c) = m(r, c);
      }
    }
    for (const auto& vec : kernel_basis(stacked)) {
      out.basis.push_back(ring.from_coordinates(d, vec));
    }
  }
  out.type_rank = out.basis.size();
  return out;
}

template <CoefficientField K>
Ideal<K> colon_by_maximal(const Ideal<K>& ideal) {
  const SocleData<K> socle = socle_basis(QuotientRing<K>(ideal));
  std::vector<Polynomial<K>> gens = ideal.generators();
  gens.insert(gens.end(), socle.basis.begin(), socle.basis.end());
  return Ideal<K>(std::move(gens), ideal.field(), ideal.order());
}

template <CoefficientField K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b) {
  if (!(a.field() == b.field())) return false;
  if (a.order() != b.order()) {
    return ideal_equal(a, Ideal<K>(b.generators(), b.field(), a.order()));
  }
  return a.groebner_basis() == b.groebner_basis();
}

template <CoefficientField K>
int initial_degree(const Ideal<K>& ideal) {
  int d = -1;
  for (const auto& g : ideal.generators()) {
    if (d < 0 || g.degree() < d) d = g.degree();
  }
  return d;
}

#define GTRIM_INSTANTIATE_IDEAL(K)                                                  \
  template class Ideal<K>;                                                          \
  template class QuotientRing<K>;                                                   \
  template Ideal<K> groebner_basis(const Ideal<K>&);                                \
  template Ideal<K> ideal_sum(const Ideal<K>&, const Ideal<K>&);                    \
  template Ideal<K> scale_by_maximal(const Polynomial<K>&);                         \
  template Ideal<K> trim(const std::vector<Polynomial<K>>&, std::size_t);           \
  template HilbertData hilbert_function(const Ideal<K>&);                           \
  template MinimalGenerators<K> minimal_generators(const Ideal<K>&);                \
  template SocleData<K> socle_basis(const QuotientRing<K>&);                        \
  template Ideal<K> colon_by_maximal(const Ideal<K>&);                              \
  template bool ideal_equal(const Ideal<K>&, const Ideal<K>&);                      \
  template int initial_degree(const Ideal<K>&);

GTRIM_INSTANTIATE_IDEAL(Zp)
GTRIM_INSTANTIATE_IDEAL(Rational)

}  // namespace gtrim
