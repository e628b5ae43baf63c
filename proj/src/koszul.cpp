#include "gtrim/koszul.hpp"

#include <algorithm>
#include <bit>
#include <exception>

namespace gtrim {

namespace {

constexpr std::array<Word, 1> kWords0{kE1};
constexpr std::array<Word, 3> kWords1{kEx, kEy, kEz};
constexpr std::array<Word, 3> kWords2{kExy, kExz, kEyz};
constexpr std::array<Word, 1> kWords3{kExyz};

std::size_t binom3(int i) { return (i == 0 || i == 3) ? 1 : (i == 1 || i == 2) ? 3 : 0; }

}  // namespace

int word_degree(Word w) { return std::popcount(static_cast<unsigned>(w)); }

std::string word_name(Word w) {
  if (w == kE1) return "1";
  std::string s = "e_";
  for (int v = 0; v < 3; ++v) {
    if (w & (1u << v)) s += static_cast<char>('x' + v);
  }
  return s;
}

std::span<const Word> words_of_degree(int i) {
  switch (i) {
    case 0: return kWords0;
    case 1: return kWords1;
    case 2: return kWords2;
    case 3: return kWords3;
    default: return {};
  }
}

std::size_t word_rank(Word w) {
  const auto words = words_of_degree(word_degree(w));
  return static_cast<std::size_t>(std::find(words.begin(), words.end(), w) - words.begin());
}

int wedge_sign(Word a, Word b) {
  if (a & b) return 0;
  // Each generator of b has to move past the generators of a that are larger.
  int inversions = 0;
  for (int v = 0; v < 3; ++v) {
    if (!(b & (1u << v))) continue;
    for (int u = v + 1; u < 3; ++u) {
      if (a & (1u << u)) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// KoszulElement

template <CoefficientField K>
KoszulElement<K>::KoszulElement(int exterior_degree, FieldSpec field, MonomialOrder order)
    : degree_(exterior_degree), field_(field), order_(order) {
  if (exterior_degree < 0 || exterior_degree > 3) {
    throw InvalidArgument("exterior degree must lie in 0..3");
  }
}

template <CoefficientField K>
KoszulElement<K> KoszulElement<K>::single(Word w, Polynomial<K> coeff) {
  KoszulElement out(word_degree(w), coeff.field(), coeff.order());
  out.add(w, coeff);
  return out;
}

template <CoefficientField K>
Polynomial<K> KoszulElement<K>::component(Word w) const {
  const auto it = components_.find(w);
  return it == components_.end() ? Polynomial<K>(field_, order_) : it->second;
}

template <CoefficientField K>
void KoszulElement<K>::add(Word w, const Polynomial<K>& p) {
  if (w > kExyz || word_degree(w) != degree_) {
    throw InvalidArgument("word " + word_name(w) + " does not have exterior degree " +
                          std::to_string(degree_));
  }
  require_same_field(p.field(), field_);
  if (p.is_zero()) return;
  const Polynomial<K> q = p.order() == order_ ? p : p.with_order(order_);
  auto it = components_.find(w);
  if (it == components_.end()) {
    components_.emplace(w, q);
    return;
  }
  it->second = it->second + q;
  if (it->second.is_zero()) components_.erase(it);
}

template <CoefficientField K>
KoszulElement<K> KoszulElement<K>::operator+(const KoszulElement& o) const {
  if (o.degree_ != degree_) throw InvalidArgument("adding elements of different exterior degree");
  KoszulElement out = *this;
  for (const auto& [w, p] : o.components_) out.add(w, p);
  return out;
}

template <CoefficientField K>
KoszulElement<K> KoszulElement<K>::operator-() const {
  KoszulElement out(degree_, field_, order_);
  for (const auto& [w, p] : components_) out.components_.emplace(w, -p);
  return out;
}

template <CoefficientField K>
KoszulElement<K> KoszulElement<K>::operator-(const KoszulElement& o) const {
  return *this + (-o);
}

template <CoefficientField K>
KoszulElement<K> KoszulElement<K>::scaled(const K& c) const {
  KoszulElement out(degree_, field_, order_);
  for (const auto& [w, p] : components_) out.add(w, p.scaled(c));
  return out;
}

template <CoefficientField K>
KoszulElement<K> KoszulElement<K>::times(const Polynomial<K>& f) const {
  KoszulElement out(degree_, field_, order_);
  for (const auto& [w, p] : components_) out.add(w, p * f);
  return out;
}

template <CoefficientField K>
KoszulElement<K> KoszulElement<K>::swapped_xy() const {
  KoszulElement out(degree_, field_, order_);
  for (const auto& [w, p] : components_) {
    const Word x = w & kEx, y = w & kEy;
    const Word image = static_cast<Word>((w & kEz) | (x << 1) | (y >> 1));
    // e_y e_x = -e_x e_y
    const bool flip = x && y;
    const Polynomial<K> q = p.swapped_xy();
    out.add(image, flip ? -q : q);
  }
  return out;
}

template <CoefficientField K>
std::string KoszulElement<K>::to_string() const {
  if (components_.empty()) return "0";
  std::string s;
  for (const auto& [w, p] : components_) {
    if (!s.empty()) s += " + ";
    const bool compound = p.size() > 1;
    s += compound ? "(" + p.to_string() + ")" : p.to_string();
    if (w != kE1) s += "*" + word_name(w);
  }
  return s;
}

template <CoefficientField K>
KoszulElement<K> wedge(const KoszulElement<K>& a, const KoszulElement<K>& b) {
  require_same_field(a.field(), b.field());
  const int deg = a.exterior_degree() + b.exterior_degree();
  if (deg > 3) throw InvalidArgument("wedge product beyond exterior degree 3");
  KoszulElement<K> out(deg, a.field(), a.order());
  for (const auto& [wa, pa] : a.components()) {
    for (const auto& [wb, pb] : b.components()) {
      const int s = wedge_sign(wa, wb);
      if (s == 0) continue;
      const Polynomial<K> prod = pa * pb;
      out.add(static_cast<Word>(wa | wb), s > 0 ? prod : -prod);
    }
  }
  return out;
}

template <CoefficientField K>
KoszulElement<K> koszul_differential(const KoszulElement<K>& u) {
  const int i = u.exterior_degree();
  if (i == 0) return KoszulElement<K>(0, u.field(), u.order());
  KoszulElement<K> out(i - 1, u.field(), u.order());
  for (const auto& [w, p] : u.components()) {
    int position = 0;
    for (int v = 0; v < 3; ++v) {
      if (!(w & (1u << v))) continue;
      const Polynomial<K> t = p * Polynomial<K>::variable(v, u.field(), u.order());
      out.add(static_cast<Word>(w & ~(1u << v)), position % 2 == 0 ? t : -t);
      ++position;
    }
  }
  return out;
}

template <CoefficientField K>
KoszulElement<K> reduce_mod(const KoszulElement<K>& u, const Ideal<K>& ideal) {
  KoszulElement<K> out(u.exterior_degree(), u.field(), ideal.order());
  for (const auto& [w, p] : u.components()) out.add(w, ideal.normal_form(p));
  return out;
}

template <CoefficientField K>
bool is_cycle(const Ideal<K>& ideal, const KoszulElement<K>& u) {
  return reduce_mod(koszul_differential(u), ideal).is_zero();
}

// ---------------------------------------------------------------------------
// KoszulComplex

template <CoefficientField K>
KoszulComplex<K>::KoszulComplex(const Ideal<K>& ideal)
    : KoszulComplex(std::make_shared<const QuotientRing<K>>(ideal)) {}

template <CoefficientField K>
KoszulComplex<K>::KoszulComplex(std::shared_ptr<const QuotientRing<K>> ring) : ring_(std::move(ring)) {
  const QuotientRing<K>& R = *ring_;
  const int top = R.top_degree();
  for (int i = 1; i <= 3; ++i) {
    auto& mats = diff_[static_cast<std::size_t>(i - 1)];
    for (int D = 0; D <= max_internal_degree(); ++D) {
      const int src = D - i;  // degree of coefficients in K_{i,D}
      DenseMatrix<K> m(dim(i - 1, D), dim(i, D), R.field());
      if (src >= 0 && src < top) {
        const std::size_t n_src = R.dim(src), n_dst = R.dim(src + 1);
        for (Word w : words_of_degree(i)) {
          const std::size_t col0 = word_rank(w) * n_src;
          int position = 0;
          for (int v = 0; v < 3; ++v) {
            if (!(w & (1u << v))) continue;
            const bool negative = position++ % 2 == 1;
            const Word target = static_cast<Word>(w & ~(1u << v));
            const std::size_t row0 = word_rank(target) * n_dst;
            const DenseMatrix<K>& mult = R.multiplication(v, src);
            for (std::size_t b = 0; b < n_src; ++b) {
              for (std::size_t r = 0; r < n_dst; ++r) {
                const K& c = mult(r, b);
                if (c.is_zero()) continue;
                if (negative) {
                  m(row0 + r, col0 + b) -= c;
                } else {
                  m(row0 + r, col0 + b) += c;
                }
              }
            }
          }
        }
      }
      mats.push_back(std::move(m));
    }
  }
}

template <CoefficientField K>
std::size_t KoszulComplex<K>::dim(int i, int internal_degree) const {
  if (i < 0 || i > 3) return 0;
  return binom3(i) * ring_->dim(internal_degree - i);
}

template <CoefficientField K>
const DenseMatrix<K>& KoszulComplex<K>::differential(int i, int internal_degree) const {
  if (i < 1 || i > 3 || internal_degree < 0 || internal_degree > max_internal_degree()) {
    throw InvalidArgument("no differential in degree (" + std::to_string(i) + ", " +
                          std::to_string(internal_degree) + ")");
  }
  return diff_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(internal_degree)];
}

template <CoefficientField K>
std::map<int, std::vector<K>> KoszulComplex<K>::to_vectors(const KoszulElement<K>& u) const {
  require_same_field(u.field(), ring_->field());
  const int i = u.exterior_degree();
  std::map<int, std::vector<K>> out;
  for (const auto& [w, p] : u.components()) {
    const Polynomial<K> nf = ring_->normal_form(p);
    for (const auto& t : nf.terms()) {
      const int src = t.mono.degree();
      const int D = src + i;
      auto it = out.find(D);
      if (it == out.end()) it = out.emplace(D, std::vector<K>(dim(i, D), K::zero(ring_->field()))).first;
      it->second[word_rank(w) * ring_->dim(src) + ring_->index_of(t.mono)] += t.coeff;
    }
  }
  return out;
}

template <CoefficientField K>
KoszulElement<K> KoszulComplex<K>::from_vector(int i, int internal_degree, std::span<const K> v) const {
  if (v.size() != dim(i, internal_degree)) throw InvalidArgument("vector length does not match K_{i,D}");
  KoszulElement<K> out(i, ring_->field(), ring_->order());
  const int src = internal_degree - i;
  const std::size_t n = ring_->dim(src);
  for (Word w : words_of_degree(i)) {
    out.add(w, ring_->from_coordinates(src, v.subspan(word_rank(w) * n, n)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// HomologyAlgebra

template <CoefficientField K>
HomologyAlgebra<K>::HomologyAlgebra(KoszulComplex<K> complex, Exec exec) : complex_(std::move(complex)) {
  const int maxD = complex_.max_internal_degree();
  const FieldSpec field = complex_.ring().field();
  const std::size_t per_i = static_cast<std::size_t>(maxD + 1);
  for (auto& s : slots_) {
    s.reserve(per_i);
    for (std::size_t D = 0; D < per_i; ++D) s.push_back(Slot{{}, SpanBuilder<K>(0, 0, field)});
  }
  std::array<std::vector<std::vector<std::vector<K>>>, 4> classes;
  for (auto& c : classes) c.resize(per_i);

  auto compute = [&](int i, int D) {
    const std::size_t n = complex_.dim(i, D);
    Slot& slot = slots_[static_cast<std::size_t>(i)][static_cast<std::size_t>(D)];
    if (n == 0) return;
    // Inner kernels run serially; the parallelism is across (i, D).
    if (i < 3 && complex_.dim(i + 1, D) > 0) {
      const auto ech = row_reduce(complex_.differential(i + 1, D).transposed(), Exec::Serial);
      for (std::size_t r = 0; r < ech.rank(); ++r) {
        const auto row = ech.rref.row(r);
        slot.boundary.emplace_back(row.begin(), row.end());
      }
    }
    std::vector<std::vector<K>> kernel;
    if (i == 0) {
      for (std::size_t c = 0; c < n; ++c) {
        std::vector<K> e(n, K::zero(field));
        e[c] = K::one(field);
        kernel.push_back(std::move(e));
      }
    } else {
      kernel = kernel_basis(complex_.differential(i, D), Exec::Serial);
    }

    SpanBuilder<K> scan(n, 0, field);
    for (const auto& b : slot.boundary) scan.insert(b);
    auto& found = classes[static_cast<std::size_t>(i)][static_cast<std::size_t>(D)];
    for (auto& k : kernel) {
      if (scan.insert(k)) found.push_back(std::move(k));
    }

    SpanBuilder<K> solver(n, found.size(), field);
    for (const auto& b : slot.boundary) solver.insert(b);
    for (std::size_t c = 0; c < found.size(); ++c) {
      std::vector<K> tag(found.size(), K::zero(field));
      tag[c] = K::one(field);
      solver.insert(found[c], tag);
    }
    slot.solver = std::move(solver);
    slot.class_count = found.size();
  };

  const int jobs = 4 * (maxD + 1);
  if (exec == Exec::Parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (int job = 0; job < jobs; ++job) {
      try {
        compute(job % 4, job / 4);
      } catch (...) {
#pragma omp critical(gtrim_homology_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (int job = 0; job < jobs; ++job) compute(job % 4, job / 4);
  }

  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t D = 0; D < per_i; ++D) {
      Slot& slot = slots_[i][D];
      slot.first_class = basis_[i].size();
      for (auto& v : classes[i][D]) {
        auto rep = complex_.from_vector(static_cast<int>(i), static_cast<int>(D), v);
        basis_[i].push_back(HomologyClass<K>{std::move(rep), static_cast<int>(D), std::move(v)});
      }
    }
  }
}

template <CoefficientField K>
const std::vector<HomologyClass<K>>& HomologyAlgebra<K>::basis(int i) const {
  if (i < 0 || i > 3) throw InvalidArgument("homological degree must lie in 0..3");
  return basis_[static_cast<std::size_t>(i)];
}

template <CoefficientField K>
std::array<std::size_t, 4> HomologyAlgebra<K>::ranks() const {
  return {basis_[0].size(), basis_[1].size(), basis_[2].size(), basis_[3].size()};
}

template <CoefficientField K>
const typename HomologyAlgebra<K>::Slot& HomologyAlgebra<K>::slot(int i, int internal_degree) const {
  return slots_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(internal_degree));
}

template <CoefficientField K>
const std::vector<std::vector<K>>& HomologyAlgebra<K>::boundary_basis(int i, int internal_degree) const {
  static const std::vector<std::vector<K>> empty;
  if (i < 0 || i > 3 || internal_degree < 0 || internal_degree > complex_.max_internal_degree()) {
    return empty;
  }
  return slot(i, internal_degree).boundary;
}

namespace {

template <CoefficientField K>
std::vector<K> matrix_times(const DenseMatrix<K>& m, const std::vector<K>& v) {
  std::vector<K> out(m.rows(), K::zero(m.field()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

}  // namespace

template <CoefficientField K>
std::vector<K> HomologyAlgebra<K>::class_coordinates(const KoszulElement<K>& u) const {
  const int i = u.exterior_degree();
  const FieldSpec field = complex_.ring().field();
  std::vector<K> coords(basis_[static_cast<std::size_t>(i)].size(), K::zero(field));
  for (const auto& [D, v] : complex_.to_vectors(u)) {
    if (D > complex_.max_internal_degree()) continue;
    if (i > 0 && !is_zero_vector<K>(matrix_times(complex_.differential(i, D), v))) {
      throw NotACycle("element " + u.to_string() + " is not a cycle");
    }
    const Slot& s = slot(i, D);
    const auto red = s.solver.reduce(v);
    if (!red.in_span()) throw NotACycle("element " + u.to_string() + " is not a cycle");
    for (std::size_t c = 0; c < s.class_count; ++c) coords[s.first_class + c] = red.tag[c];
  }
  return coords;
}

template <CoefficientField K>
bool HomologyAlgebra<K>::is_boundary(const KoszulElement<K>& u) const {
  const auto coords = class_coordinates(u);
  return is_zero_vector<K>(coords);
}

template <CoefficientField K>
std::vector<K> HomologyAlgebra<K>::multiply(const KoszulElement<K>& u, const KoszulElement<K>& v) const {
  if (u.exterior_degree() + v.exterior_degree() > 3) {
    throw InvalidArgument("product lands in homological degree " +
                          std::to_string(u.exterior_degree() + v.exterior_degree()));
  }
  class_coordinates(u);
  class_coordinates(v);
  return class_coordinates(wedge(u, v));
}

template <CoefficientField K>
std::vector<K> HomologyAlgebra<K>::multiply_basis(int i, std::size_t a, int j, std::size_t b) const {
  if (i + j > 3) throw InvalidArgument("product lands in homological degree " + std::to_string(i + j));
  return class_coordinates(wedge(basis(i).at(a).rep, basis(j).at(b).rep));
}

// ---------------------------------------------------------------------------
// Invariants and classification

namespace {

template <CoefficientField K>
int rank_of_rows(const std::vector<std::vector<K>>& rows, std::size_t cols, FieldSpec field) {
  if (rows.empty() || cols == 0) return 0;
  DenseMatrix<K> m(0, cols, field);
  for (const auto& r : rows) m.push_row(r);
  return static_cast<int>(rank(m, Exec::Serial));
}

// products[a][k] = [e_a][f_k] in A_3 for e_a in A_1, f_k in A_2.
template <CoefficientField K>
std::vector<std::vector<std::vector<K>>> products_12(const HomologyAlgebra<K>& h) {
  const std::size_t n1 = h.rank(1), n2 = h.rank(2);
  std::vector<std::vector<std::vector<K>>> out(n1, std::vector<std::vector<K>>(n2));
  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t k = 0; k < n2; ++k) out[a][k] = h.multiply_basis(1, a, 2, k);
  }
  return out;
}

template <CoefficientField K>
int delta_rank_from(const std::vector<std::vector<std::vector<K>>>& prod, std::size_t n1,
                    std::size_t n2, std::size_t n3, FieldSpec field) {
  std::vector<std::vector<K>> rows;
  for (std::size_t k = 0; k < n2; ++k) {
    std::vector<K> row;
    row.reserve(n1 * n3);
    for (std::size_t a = 0; a < n1; ++a) row.insert(row.end(), prod[a][k].begin(), prod[a][k].end());
    rows.push_back(std::move(row));
  }
  return rank_of_rows(rows, n1 * n3, field);
}

}  // namespace

template <CoefficientField K>
TorInvariants invariants(const HomologyAlgebra<K>& h) {
  const FieldSpec field = h.ring().field();
  TorInvariants inv;
  inv.ranks = h.ranks();
  const std::size_t n1 = inv.ranks[1], n2 = inv.ranks[2], n3 = inv.ranks[3];

  std::vector<std::vector<K>> p_rows;
  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t b = a + 1; b < n1; ++b) p_rows.push_back(h.multiply_basis(1, a, 1, b));
  }
  inv.p = rank_of_rows(p_rows, n2, field);

  const auto prod = products_12(h);
  std::vector<std::vector<K>> q_rows;
  for (const auto& by_k : prod) {
    for (const auto& v : by_k) q_rows.push_back(v);
  }
  inv.q = rank_of_rows(q_rows, n3, field);
  inv.r = delta_rank_from(prod, n1, n2, n3, field);

  inv.mu = static_cast<int>(minimal_generators(h.ring().ideal()).mu);
  inv.type_rank = static_cast<int>(n3);
  return inv;
}

template <CoefficientField K>
int delta_rank(const HomologyAlgebra<K>& h) {
  return delta_rank_from(products_12(h), h.rank(1), h.rank(2), h.rank(3), h.ring().field());
}

std::string TorClass::name() const {
  switch (tag) {
    case Tag::CompleteIntersection: return "CompleteIntersection";
    case Tag::Gorenstein: return "Gorenstein";
    case Tag::B: return "B";
    case Tag::G: return "G";
    case Tag::H: return "H";
    case Tag::T: return "T";
    case Tag::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

std::string TorClass::label() const {
  switch (tag) {
    case Tag::Gorenstein: return "Gorenstein(" + std::to_string(inv.mu) + ")";
    case Tag::G: return "G(" + std::to_string(inv.r) + ")";
    case Tag::H: return "H(" + std::to_string(inv.p) + "," + std::to_string(inv.q) + ")";
    default: return name();
  }
}

TorClass classify_invariants(const TorInvariants& inv) {
  using Tag = TorClass::Tag;
  Tag tag = Tag::Unclassified;
  if (inv.type_rank == 1 && inv.mu == 3) {
    tag = Tag::CompleteIntersection;
  } else if (inv.type_rank == 1) {
    tag = Tag::Gorenstein;
  } else if (inv.p == 1 && inv.q == 1 && inv.r == 2) {
    tag = Tag::B;
  } else if (inv.p == 3 && inv.q == 0 && inv.r == 0) {
    tag = Tag::T;
  } else if (inv.p == 0 && inv.q == 1 && inv.r >= 2) {
    tag = Tag::G;
  } else if (inv.r == inv.q) {
    tag = Tag::H;
  }
  return TorClass{tag, inv};
}

template <CoefficientField K>
TorClass classify(const HomologyAlgebra<K>& h) {
  const auto& ideal = h.ring().ideal();
  const int d0 = initial_degree(ideal);
  if (d0 >= 0 && d0 < 2) {
    throw NotInSquare("ideal has a generator of degree " + std::to_string(d0) +
                      ", so it is not contained in n^2");
  }
  return classify_invariants(invariants(h));
}

// ---------------------------------------------------------------------------
// Explicit cycles for trimmed Gorenstein ideals

namespace {

template <CoefficientField K>
struct CycleKit {
  int m;
  FieldSpec field;
  MonomialOrder order;
  std::vector<Polynomial<K>> d;  // d[j] = d_j for 0 <= j <= m

  CycleKit(int m_, FieldSpec f, MonomialOrder o) : m(m_), field(f), order(o) {
    for (int j = 0; j <= m; ++j) d.push_back(d_poly<K>(j, DetMethod::Recurrence, field, order));
  }

  Polynomial<K> pow(int v, int e) const {
    Monomial mono;
    mono.exp[static_cast<std::size_t>(v)] = e;
    return Polynomial<K>::monomial(mono, field, order);
  }
  Polynomial<K> x(int e) const { return pow(0, e); }
  Polynomial<K> y(int e) const { return pow(1, e); }
  KoszulElement<K> e(Word w, const Polynomial<K>& p) const { return KoszulElement<K>::single(w, p); }

  // x^(m-j-1) d_j e_x
  KoszulElement<K> x_side(int j) const { return e(kEx, x(m - j - 1) * d[static_cast<std::size_t>(j)]); }
  // y^(m-j-1) d_j e_y
  KoszulElement<K> y_side(int j) const { return e(kEy, y(m - j - 1) * d[static_cast<std::size_t>(j)]); }
  // (-1)^(m-1) d_(m-1) e_z + x d_(m-2) e_y, with boundary d_m
  KoszulElement<K> dm_lift() const {
    const auto& a = d[static_cast<std::size_t>(m - 1)];
    KoszulElement<K> out = e(kEz, (m - 1) % 2 == 0 ? a : -a);
    out.add(kEy, x(1) * d[static_cast<std::size_t>(m - 2)]);
    return out;
  }
};

void require_explicit_family(const TrimChoice& choice) {
  choice.validate();
  if (choice.m < 3) throw InvalidArgument("explicit cycles are only written down for m >= 3");
}

template <CoefficientField K>
std::vector<KoszulElement<K>> x_side_cycles(const TrimChoice& c, FieldSpec field, MonomialOrder order) {
  const CycleKit<K> kit(c.m, field, order);
  const int m = c.m;
  std::vector<KoszulElement<K>> out;
  switch (c.kind) {
    case TrimChoice::Kind::Xpow:
      out.push_back(kit.e(kEx, kit.x(m)));
      for (int j = 1; j <= m - 1; ++j) out.push_back(kit.x_side(j));
      for (int j = 0; j <= m - 1; ++j) out.push_back(kit.y_side(j));
      out.push_back(kit.dm_lift());
      break;
    case TrimChoice::Kind::Xi:
      for (int j = 0; j <= m - 1; ++j) {
        if (j != c.i) out.push_back(kit.x_side(j));
      }
      for (int j = 0; j <= m - 1; ++j) out.push_back(kit.y_side(j));
      out.push_back(kit.dm_lift());
      break;
    case TrimChoice::Kind::Dm:
      for (int j = 0; j <= m - 1; ++j) out.push_back(kit.x_side(j));
      for (int j = 0; j <= m - 1; ++j) out.push_back(kit.y_side(j));
      out.push_back(kit.e(kEz, kit.d[static_cast<std::size_t>(m)]));
      break;
    default:
      throw InvalidArgument("not an x-side selector");
  }
  return out;
}

template <CoefficientField K>
KoszulElement<K> x_side_special(const TrimChoice& c, FieldSpec field, MonomialOrder order) {
  const CycleKit<K> kit(c.m, field, order);
  const int m = c.m;
  switch (c.kind) {
    case TrimChoice::Kind::Xpow:
      return kit.e(kEyz, kit.y(m - 1));
    case TrimChoice::Kind::Xi: {
      const int i = c.i;
      KoszulElement<K> f = kit.e(kExy, kit.y(m - i) * kit.d[static_cast<std::size_t>(i - 1)]);
      const auto t = kit.y(m - i - 1) * kit.d[static_cast<std::size_t>(i)];
      f.add(kEyz, (i - 1) % 2 == 0 ? t : -t);
      return f;
    }
    case TrimChoice::Kind::Dm:
      return kit.e(kExy, kit.d[static_cast<std::size_t>(m - 1)]);
    default:
      throw InvalidArgument("not an x-side selector");
  }
}

template <CoefficientField K>
void require_cycle(const Ideal<K>& ideal, const KoszulElement<K>& u) {
  if (!is_cycle(ideal, u)) throw NotACycle("expected cycle " + u.to_string() + " has non-zero boundary");
}

}  // namespace

template <CoefficientField K>
std::vector<KoszulElement<K>> prop43_cycles(const TrimChoice& choice, FieldSpec field, MonomialOrder order) {
  require_explicit_family(choice);
  std::vector<KoszulElement<K>> out;
  if (choice.y_side()) {
    for (const auto& u : x_side_cycles<K>(choice.mirrored(), field, order)) out.push_back(u.swapped_xy());
  } else {
    out = x_side_cycles<K>(choice, field, order);
  }
  const Ideal<K> ideal = trim_gm<K>(choice, field, order);
  for (const auto& u : out) require_cycle(ideal, u);
  return out;
}

template <CoefficientField K>
KoszulElement<K> prop43_special_cycle(const TrimChoice& choice, FieldSpec field, MonomialOrder order) {
  require_explicit_family(choice);
  KoszulElement<K> f = choice.y_side() ? x_side_special<K>(choice.mirrored(), field, order).swapped_xy()
                                       : x_side_special<K>(choice, field, order);
  require_cycle(trim_gm<K>(choice, field, order), f);
  return f;
}

template <CoefficientField K>
std::array<KoszulElement<K>, 3> trimmed_generator_cycles(const TrimChoice& choice, FieldSpec field,
                                                         MonomialOrder order) {
  const Polynomial<K> g = trimmed_generator<K>(choice, field, order);
  return {KoszulElement<K>::single(kExy, g), KoszulElement<K>::single(kExz, g),
          KoszulElement<K>::single(kEyz, g)};
}

template <CoefficientField K>
bool annihilates_A1(const HomologyAlgebra<K>& h, const KoszulElement<K>& f) {
  if (f.exterior_degree() != 2) throw InvalidArgument("expected an element of exterior degree 2");
  h.class_coordinates(f);
  for (const auto& e : h.basis(1)) {
    if (!is_zero_vector<K>(h.class_coordinates(wedge(e.rep, f)))) return false;
  }
  return true;
}

#define GTRIM_INSTANTIATE_KOSZUL(K)                                                                  \
  template class KoszulElement<K>;                                                                   \
  template class KoszulComplex<K>;                                                                   \
  template class HomologyAlgebra<K>;                                                                 \
  template KoszulElement<K> wedge(const KoszulElement<K>&, const KoszulElement<K>&);                 \
  template KoszulElement<K> koszul_differential(const KoszulElement<K>&);                            \
  template KoszulElement<K> reduce_mod(const KoszulElement<K>&, const Ideal<K>&);                    \
  template bool is_cycle(const Ideal<K>&, const KoszulElement<K>&);                                  \
  template TorInvariants invariants(const HomologyAlgebra<K>&);                                      \
  template int delta_rank(const HomologyAlgebra<K>&);                                                \
  template TorClass classify(const HomologyAlgebra<K>&);                                             \
  template std::vector<KoszulElement<K>> prop43_cycles(const TrimChoice&, FieldSpec, MonomialOrder); \
  template KoszulElement<K> prop43_special_cycle(const TrimChoice&, FieldSpec, MonomialOrder);       \
  template std::array<KoszulElement<K>, 3> trimmed_generator_cycles(const TrimChoice&, FieldSpec,    \
                                                                    MonomialOrder);                  \
  template bool annihilates_A1(const HomologyAlgebra<K>&, const KoszulElement<K>&);

GTRIM_INSTANTIATE_KOSZUL(Zp)
GTRIM_INSTANTIATE_KOSZUL(Rational)

}  // namespace gtrim
