#include "gtrim/pfaffian.hpp"

#include <cctype>

namespace gtrim {

namespace {

void require_positive(int m, const char* what) {
  if (m < 1) throw InvalidArgument(std::string(what) + ": m must be >= 1, got " + std::to_string(m));
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <CoefficientField K>
Polynomial<K> var(int v, FieldSpec field, MonomialOrder order) {
  return Polynomial<K>::variable(v, field, order);
}

template <CoefficientField K>
Polynomial<K> power(int v, int e, FieldSpec field, MonomialOrder order) {
  Monomial mono;
  mono.exp[static_cast<std::size_t>(v)] = e;
  return Polynomial<K>::monomial(mono, field, order);
}

}  // namespace

template <CoefficientField K>
PolyMatrix<K> build_U(int m, FieldSpec field, MonomialOrder order) {
  require_positive(m, "build_U");
  PolyMatrix<K> u(static_cast<std::size_t>(m), static_cast<std::size_t>(m), field, order);
  for (int i = 1; i <= m; ++i) {
    const int cols[3] = {m - i, m - i + 1, m - i + 2};
    const int vars[3] = {0, 2, 1};  // x, z, y
    for (int k = 0; k < 3; ++k) {
      if (cols[k] >= 1 && cols[k] <= m) {
        u(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(cols[k] - 1)) =
            var<K>(vars[k], field, order);
      }
    }
  }
  return u;
}

template <CoefficientField K>
Polynomial<K> d_poly(int m, DetMethod method, FieldSpec field, MonomialOrder order) {
  if (m < -1) throw InvalidArgument("d_poly: m must be >= -1");
  if (m == -1) return Polynomial<K>(field, order);
  if (m == 0) return Polynomial<K>::constant(1, field, order);
  switch (method) {
    case DetMethod::Determinant:
      return matrix_det(build_U<K>(m, field, order));
    case DetMethod::Recurrence: {
      Polynomial<K> prev2(field, order);
      Polynomial<K> prev1 = Polynomial<K>::constant(1, field, order);
      const Polynomial<K> z = var<K>(2, field, order);
      const Polynomial<K> xy = var<K>(0, field, order) * var<K>(1, field, order);
      for (int k = 1; k <= m; ++k) {
        Polynomial<K> zk = z * prev1;
        if ((k - 1) % 2 == 1) zk = -zk;
        Polynomial<K> next = zk + xy * prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(next);
      }
      return prev1;
    }
    case DetMethod::ClosedForm: {
      std::vector<Term<K>> terms;
      for (int j = 0; 2 * j <= m; ++j) {
        long long c = binomial(m - j, j);
        if (((m - 2 * j) / 2) % 2 == 1) c = -c;
        terms.push_back({K::from_integer(c, field), Monomial(j, j, m - 2 * j)});
      }
      return Polynomial<K>::from_terms(std::move(terms), field, order);
    }
  }
  throw InvalidArgument("d_poly: unknown method");
}

template <CoefficientField K>
PolyMatrix<K> build_V(int m, FieldSpec field, MonomialOrder order) {
  require_positive(m, "build_V");
  const auto n = static_cast<std::size_t>(2 * m + 1);
  const auto mm = static_cast<std::size_t>(m);
  const PolyMatrix<K> u = build_U<K>(m, field, order);
  PolyMatrix<K> v(n, n, field, order);
  auto set = [&](std::size_t i, std::size_t j, const Polynomial<K>& p) {
    v(i, j) = p;
    v(j, i) = -p;
  };
  // Ox: column block m with x in the last row of the top block.
  set(mm - 1, mm, var<K>(0, field, order));
  // yO: row m with y in the first column of the right block.
  set(mm, mm + 1, var<K>(1, field, order));
  for (std::size_t i = 0; i < mm; ++i) {
    for (std::size_t j = 0; j < mm; ++j) {
      if (!u(i, j).is_zero()) set(i, mm + 1 + j, u(i, j));
    }
  }
  v.mark_skew();
  return v;
}

namespace {

template <CoefficientField K>
Polynomial<K> pfaffian_rec(const PolyMatrix<K>& m, std::vector<std::size_t>& live) {
  if (live.empty()) return Polynomial<K>::constant(1, m.field(), m.order());
  const std::size_t first = live.front();
  Polynomial<K> acc(m.field(), m.order());
  for (std::size_t pos = 1; pos < live.size(); ++pos) {
    const std::size_t j = live[pos];
    if (m(first, j).is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(live.size() - 2);
    for (std::size_t k = 1; k < live.size(); ++k) {
      if (k != pos) rest.push_back(live[k]);
    }
    Polynomial<K> term = m(first, j) * pfaffian_rec(m, rest);
    // 1-based column index pos+1; sign (-1)^(pos+1).
    if (pos % 2 == 0) term = -term;
    acc += term;
  }
  return acc;
}

}  // namespace

template <CoefficientField K>
Polynomial<K> pfaffian(const PolyMatrix<K>& m) {
  if (!m.is_skew_symmetric()) throw InvalidArgument("pfaffian: matrix is not skew-symmetric");
  if (m.rows() % 2 == 1) throw InvalidArgument("pfaffian: odd-sized matrix");
  std::vector<std::size_t> live(m.rows());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  return pfaffian_rec(m, live);
}

template <CoefficientField K>
Polynomial<K> sub_pfaffian(const PolyMatrix<K>& v, std::size_t i) {
  if (!v.is_skew_symmetric()) throw InvalidArgument("sub_pfaffian: matrix is not skew-symmetric");
  if (v.rows() % 2 == 0) throw InvalidArgument("sub_pfaffian: matrix size must be odd");
  if (i < 1 || i > v.rows()) throw InvalidArgument("sub_pfaffian: index out of range");
  return pfaffian(v.principal_submatrix_without({i - 1}));
}

template <CoefficientField K>
std::vector<Polynomial<K>> canonical_generators(int m, FieldSpec field, MonomialOrder order) {
  if (m < 2) throw InvalidArgument("canonical_generators: m must be >= 2");
  std::vector<Polynomial<K>> d;
  for (int i = 0; i <= m; ++i) d.push_back(d_poly<K>(i, DetMethod::Recurrence, field, order));
  std::vector<Polynomial<K>> out;
  for (int i = 0; i <= m - 1; ++i) out.push_back(power<K>(0, m - i, field, order) * d[i]);
  out.push_back(d[static_cast<std::size_t>(m)]);
  for (int i = m - 1; i >= 0; --i) out.push_back(power<K>(1, m - i, field, order) * d[i]);
  return out;
}

template <CoefficientField K>
Ideal<K> gorenstein_ideal(int m, FieldSpec field, MonomialOrder order) {
  require_positive(m, "gorenstein_ideal");
  const PolyMatrix<K> v = build_V<K>(m, field, order);
  std::vector<Polynomial<K>> pf;
  for (std::size_t i = 1; i <= v.rows(); ++i) pf.push_back(sub_pfaffian(v, i));
  return Ideal<K>(std::move(pf), field, order);
}

TrimChoice TrimChoice::parse(int m, const std::string& token) {
  TrimChoice c{m, Kind::Xpow, 0};
  if (token == "x0") {
    c.kind = Kind::Xpow;
  } else if (token == "y0") {
    c.kind = Kind::Ypow;
  } else if (token == "d") {
    c.kind = Kind::Dm;
  } else if (token.size() >= 2 && (token[0] == 'x' || token[0] == 'y')) {
    for (std::size_t k = 1; k < token.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(token[k]))) {
        throw InvalidArgument("bad trim selector '" + token + "'");
      }
    }
    if (token.size() > 6) throw InvalidArgument("bad trim selector '" + token + "'");
    c.kind = token[0] == 'x' ? Kind::Xi : Kind::Yi;
    c.i = std::stoi(token.substr(1));
  } else {
    throw InvalidArgument("bad trim selector '" + token + "' (expected x0, y0, d, xI or yI)");
  }
  c.validate();
  return c;
}

std::vector<TrimChoice> TrimChoice::all(int m) {
  if (m < 2) throw InvalidArgument("trim selectors need m >= 2");
  std::vector<TrimChoice> out{xpow(m)};
  for (int i = 1; i <= m - 1; ++i) out.push_back(xi(m, i));
  out.push_back(dm(m));
  for (int i = m - 1; i >= 1; --i) out.push_back(yi(m, i));
  out.push_back(ypow(m));
  return out;
}

void TrimChoice::validate() const {
  if (m < 2) {
    throw InvalidArgument("trimming g_m needs m >= 2 (g_1 = n is not contained in n^2)");
  }
  if (interior() && (i < 1 || i > m - 1)) {
    throw InvalidArgument("selector " + token() + " needs 1 <= I <= " + std::to_string(m - 1));
  }
}

std::size_t TrimChoice::index() const {
  validate();
  switch (kind) {
    case Kind::Xpow: return 0;
    case Kind::Xi: return static_cast<std::size_t>(i);
    case Kind::Dm: return static_cast<std::size_t>(m);
    case Kind::Yi: return static_cast<std::size_t>(2 * m - i);
    case Kind::Ypow: return static_cast<std::size_t>(2 * m);
  }
  return 0;
}

std::string TrimChoice::token() const {
  switch (kind) {
    case Kind::Xpow: return "x0";
    case Kind::Ypow: return "y0";
    case Kind::Dm: return "d";
    case Kind::Xi: return "x" + std::to_string(i);
    case Kind::Yi: return "y" + std::to_string(i);
  }
  return "?";
}

TrimChoice TrimChoice::mirrored() const {
  switch (kind) {
    case Kind::Xpow: return ypow(m);
    case Kind::Ypow: return xpow(m);
    case Kind::Dm: return dm(m);
    case Kind::Xi: return yi(m, i);
    case Kind::Yi: return xi(m, i);
  }
  return *this;
}

template <CoefficientField K>
Polynomial<K> trimmed_generator(const TrimChoice& choice, FieldSpec field, MonomialOrder order) {
  return canonical_generators<K>(choice.m, field, order).at(choice.index());
}

template <CoefficientField K>
Ideal<K> trim_gm(const TrimChoice& choice, FieldSpec field, MonomialOrder order) {
  return trim(canonical_generators<K>(choice.m, field, order), choice.index());
}

template <CoefficientField K>
PfaffianFamily<K> build_family(int m, FieldSpec field, MonomialOrder order) {
  require_positive(m, "build_family");
  PolyMatrix<K> v = build_V<K>(m, field, order);
  std::vector<Polynomial<K>> pf;
  for (std::size_t i = 1; i <= v.rows(); ++i) pf.push_back(sub_pfaffian(v, i));
  std::vector<Polynomial<K>> gens = m >= 2 ? canonical_generators<K>(m, field, order) : pf;
  return PfaffianFamily<K>{m,
                           build_U<K>(m, field, order),
                           std::move(v),
                           d_poly<K>(m, DetMethod::Determinant, field, order),
                           std::move(pf),
                           std::move(gens)};
}

HilbertData gorenstein_hilbert_formula(int m) {
  if (m < 2) throw InvalidArgument("Hilbert formula needs m >= 2, got " + std::to_string(m));
  std::vector<long> h(static_cast<std::size_t>(2 * m - 1), 0);
  for (int i = 0; i <= m - 2; ++i) {
    const long c = static_cast<long>(binomial(i + 2, 2));
    h[static_cast<std::size_t>(i)] += c;
    h[static_cast<std::size_t>(2 * m - 2 - i)] += c;
  }
  h[static_cast<std::size_t>(m - 1)] += static_cast<long>(binomial(m + 1, 2));
  return HilbertData{std::move(h)};
}

#define GTRIM_INSTANTIATE_PFAFFIAN(K)                                                        \
  template PolyMatrix<K> build_U(int, FieldSpec, MonomialOrder);                             \
  template Polynomial<K> d_poly(int, DetMethod, FieldSpec, MonomialOrder);                   \
  template PolyMatrix<K> build_V(int, FieldSpec, MonomialOrder);                             \
  template Polynomial<K> pfaffian(const PolyMatrix<K>&);                                     \
  template Polynomial<K> sub_pfaffian(const PolyMatrix<K>&, std::size_t);                    \
  template std::vector<Polynomial<K>> canonical_generators(int, FieldSpec, MonomialOrder);   \
  template Ideal<K> gorenstein_ideal(int, FieldSpec, MonomialOrder);                         \
  template Polynomial<K> trimmed_generator(const TrimChoice&, FieldSpec, MonomialOrder);     \
  template Ideal<K> trim_gm(const TrimChoice&, FieldSpec, MonomialOrder);                    \
  template PfaffianFamily<K> build_family(int, FieldSpec, MonomialOrder);

GTRIM_INSTANTIATE_PFAFFIAN(Zp)
GTRIM_INSTANTIATE_PFAFFIAN(Rational)

}  // namespace gtrim
