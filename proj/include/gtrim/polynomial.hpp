#pragma once

// Sparse polynomials in x, y, z. Terms are kept strictly descending in the
// polynomial's monomial order with no zero coefficients; the zero polynomial
// has no terms.

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gtrim/errors.hpp"
#include "gtrim/field.hpp"
#include "gtrim/monomial.hpp"

namespace gtrim {

template <CoefficientField K>
struct Term {
  K coeff;
  Monomial mono;
};

template <CoefficientField K>
class Polynomial {
 public:
  using Scalar = K;
  using TermType = Term<K>;

  explicit Polynomial(FieldSpec field = K::default_field(),
                      MonomialOrder order = MonomialOrder::Grevlex)
      : field_(field), order_(order) {
    if (!K::accepts(field_)) {
      throw FieldMismatch("coefficient type cannot represent " + field_.to_string());
    }
  }

  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(std::vector<TermType> terms, FieldSpec field,
                               MonomialOrder order = MonomialOrder::Grevlex) {
    Polynomial p(field, order);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }
  static Polynomial constant(long long c, FieldSpec field,
                             MonomialOrder order = MonomialOrder::Grevlex) {
    return term(K::from_integer(c, field), Monomial{}, field, order);
  }
  static Polynomial term(const K& c, const Monomial& m, FieldSpec field,
                         MonomialOrder order = MonomialOrder::Grevlex) {
    Polynomial p(field, order);
    if (!c.is_zero()) p.terms_.push_back({c, m});
    return p;
  }
  static Polynomial monomial(const Monomial& m, FieldSpec field,
                             MonomialOrder order = MonomialOrder::Grevlex) {
    return term(K::one(field), m, field, order);
  }
  /// v = 0, 1, 2 for x, y, z.
  static Polynomial variable(int v, FieldSpec field, MonomialOrder order = MonomialOrder::Grevlex) {
    return monomial(Monomial::variable(v), field, order);
  }

  const FieldSpec& field() const { return field_; }
  MonomialOrder order() const { return order_; }
  const std::vector<TermType>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Preconditions for the leading_* accessors: non-zero.
  const TermType& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const K& leading_coeff() const { return terms_.front().coeff; }

  /// Largest total degree; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const TermType& t) { return t.mono.degree() == terms_.front().mono.degree(); });
  }
  bool is_normalized() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].coeff.is_zero()) return false;
      if (i > 0 && mono_cmp(terms_[i - 1].mono, terms_[i].mono, order_) <= 0) return false;
    }
    return true;
  }
  /// Coefficient of m (zero if absent).
  K coefficient(const Monomial& m) const {
    for (const auto& t : terms_) {
      if (t.mono == m) return t.coeff;
    }
    return K::zero(field_);
  }

  Polynomial operator+(const Polynomial& o) const { return merge(o, false); }
  Polynomial operator-(const Polynomial& o) const { return merge(o, true); }
  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  Polynomial operator*(const Polynomial& o) const {
    require_same_field(field_, o.field_);
    if (is_zero() || o.is_zero()) return Polynomial(field_, order_);
    std::vector<TermType> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
      for (const auto& b : o.terms_) prod.push_back({a.coeff * b.coeff, a.mono * b.mono});
    }
    return from_terms(std::move(prod), field_, order_);
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const K& c) const {
    if (c.is_zero()) return Polynomial(field_, order_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
  }
  /// c * m * this. Multiplying by a monomial preserves the term order.
  Polynomial mul_term(const K& c, const Monomial& m) const {
    if (c.is_zero()) return Polynomial(field_, order_);
    Polynomial r(*this);
    for (auto& t : r.terms_) {
      t.coeff = t.coeff * c;
      t.mono = t.mono * m;
    }
    return r;
  }
  /// Divides by the leading coefficient.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
  }
  /// Exchanges x and y.
  Polynomial swapped_xy() const {
    std::vector<TermType> ts = terms_;
    for (auto& t : ts) t.mono = t.mono.swapped_xy();
    return from_terms(std::move(ts), field_, order_);
  }
  Polynomial with_order(MonomialOrder order) const { return from_terms(terms_, field_, order); }
  /// Terms of total degree d.
  Polynomial homogeneous_part(int d) const {
    Polynomial r(field_, order_);
    for (const auto& t : terms_) {
      if (t.mono.degree() == d) r.terms_.push_back(t);
    }
    return r;
  }

  /// Same terms, same field; the order is not compared.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(a.field_ == b.field_) || a.terms_.size() != b.terms_.size()) return false;
    if (a.order_ == b.order_) {
      for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) {
          return false;
        }
      }
      return true;
    }
    return a == b.with_order(a.order_);
  }

  /// Text form, e.g. "2*x*y*z - z^3".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      std::string c = t.coeff.to_string();
      const bool negative = !c.empty() && c.front() == '-';
      if (negative) c.erase(0, 1);
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (t.mono.is_one()) {
        out += c;
      } else if (c == "1") {
        out += t.mono.to_string();
      } else {
        out += c + "*" + t.mono.to_string();
      }
    }
    return out;
  }

  /// Rebuilds the invariant in place.
  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [this](const TermType& a, const TermType& b) {
      return mono_cmp(a.mono, b.mono, order_) > 0;
    });
    std::vector<TermType> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = out.back().coeff + t.coeff;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](const TermType& t) { return t.coeff.is_zero(); });
    terms_ = std::move(out);
  }

 private:
  Polynomial merge(const Polynomial& o, bool subtract) const {
    require_same_field(field_, o.field_);
    if (o.order_ != order_) return merge(o.with_order(order_), subtract);
    Polynomial r(field_, order_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      if (i == terms_.size()) {
        r.terms_.push_back({subtract ? -o.terms_[j].coeff : o.terms_[j].coeff, o.terms_[j].mono});
        ++j;
        continue;
      }
      const auto c = mono_cmp(terms_[i].mono, o.terms_[j].mono, order_);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back({subtract ? -o.terms_[j].coeff : o.terms_[j].coeff, o.terms_[j].mono});
        ++j;
      } else {
        K s = subtract ? terms_[i].coeff - o.terms_[j].coeff : terms_[i].coeff + o.terms_[j].coeff;
        if (!s.is_zero()) r.terms_.push_back({std::move(s), terms_[i].mono});
        ++i;
        ++j;
      }
    }
    return r;
  }

  FieldSpec field_;
  MonomialOrder order_;
  std::vector<TermType> terms_;
};

namespace detail {

template <CoefficientField K>
class PolyParser {
 public:
  PolyParser(std::string_view text, FieldSpec field, MonomialOrder order)
      : text_(text), field_(field), order_(order) {}

  Polynomial<K> parse() {
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    std::vector<Term<K>> terms;
    bool first = true;
    while (pos_ < text_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term<K> t = parse_term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip();
    }
    return Polynomial<K>::from_terms(std::move(terms), field_, order_);
  }

 private:
  Term<K> parse_term() {
    Term<K> t{K::one(field_), Monomial{}};
    while (true) {
      skip();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff = t.coeff * parse_number();
      } else if (c == 'x' || c == 'y' || c == 'z') {
        ++pos_;
        const auto v = static_cast<std::size_t>(c - 'x');
        int e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          e = parse_exponent();
        }
        t.mono.exp[v] += e;
      } else {
        fail("expected a coefficient or one of x, y, z");
      }
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return t;
  }

  K parse_number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string lit(text_.substr(start, pos_ - start));
    skip();
    if (peek() == '/') {
      ++pos_;
      skip();
      const std::size_t dstart = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (dstart == pos_) fail("expected a denominator");
      const K num = K::from_decimal(lit, field_);
      const K den = K::from_decimal(text_.substr(dstart, pos_ - dstart), field_);
      if (den.is_zero()) fail("zero denominator");
      return num * den.inverse();
    }
    return K::from_decimal(lit, field_);
  }

  int parse_exponent() {
    const std::size_t start = pos_;
    long long e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + (peek() - '0');
      if (e > 100000) fail("exponent too large");
      ++pos_;
    }
    if (start == pos_) fail("expected an exponent");
    return static_cast<int>(e);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  std::string_view text_;
  FieldSpec field_;
  MonomialOrder order_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the text format: terms joined by + or -, each an optional
/// coefficient and '*'-separated powers of x, y, z. Whitespace is ignored.
template <CoefficientField K>
Polynomial<K> parse_polynomial(std::string_view text, FieldSpec field = K::default_field(),
                               MonomialOrder order = MonomialOrder::Grevlex) {
  return detail::PolyParser<K>(text, field, order).parse();
}

template <CoefficientField K>
Polynomial<K> poly_add(const Polynomial<K>& f, const Polynomial<K>& g) { return f + g; }

template <CoefficientField K>
Polynomial<K> poly_mul(const Polynomial<K>& f, const Polynomial<K>& g) { return f * g; }

/// Exact quotient f / g; throws InvalidArgument if g does not divide f.
template <CoefficientField K>
Polynomial<K> divide_exact(const Polynomial<K>& f, const Polynomial<K>& g) {
  if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
  Polynomial<K> quotient(f.field(), f.order());
  Polynomial<K> rest = f.with_order(f.order());
  const Polynomial<K> divisor = g.with_order(f.order());
  const K lc_inv = divisor.leading_coeff().inverse();
  while (!rest.is_zero()) {
    const auto& lt = rest.leading_term();
    if (!divisor.leading_monomial().divides(lt.mono)) {
      throw InvalidArgument("polynomial division is not exact");
    }
    const K c = lt.coeff * lc_inv;
    const Monomial m = lt.mono / divisor.leading_monomial();
    quotient += Polynomial<K>::term(c, m, f.field(), f.order());
    rest -= divisor.mul_term(c, m);
  }
  return quotient;
}

}  // namespace gtrim
