#include "gtrim/monomial.hpp"

#include <algorithm>

#include "gtrim/errors.hpp"

namespace gtrim {

MonomialOrder parse_order(std::string_view name) {
  if (name == "grevlex") return MonomialOrder::Grevlex;
  if (name == "grlex") return MonomialOrder::Grlex;
  if (name == "lex") return MonomialOrder::Lex;
  throw InvalidArgument("unknown monomial order '" + std::string(name) + "'");
}

std::string_view to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::Grevlex: return "grevlex";
    case MonomialOrder::Grlex: return "grlex";
    case MonomialOrder::Lex: return "lex";
  }
  return "grevlex";
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t v = 0; v < 3; ++v) {
    if (exp[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += kVariableNames[v];
    if (exp[v] > 1) out += '^' + std::to_string(exp[v]);
  }
  return out.empty() ? "1" : out;
}

namespace {

std::strong_ordering lex_cmp(const Monomial& a, const Monomial& b) {
  for (std::size_t v = 0; v < 3; ++v) {
    if (a.exp[v] != b.exp[v]) return a.exp[v] <=> b.exp[v];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order != MonomialOrder::Lex) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  }
  switch (order) {
    case MonomialOrder::Grevlex:
      // Equal degree: the smaller exponent in the last differing variable wins.
      for (std::size_t v = 3; v-- > 0;) {
        if (a.exp[v] != b.exp[v]) return b.exp[v] <=> a.exp[v];
      }
      return std::strong_ordering::equal;
    case MonomialOrder::Grlex:
    case MonomialOrder::Lex:
      return lex_cmp(a, b);
  }
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomials_of_degree(int d, MonomialOrder order) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  out.reserve(monomial_count(d));
  for (int a = 0; a <= d; ++a) {
    for (int b = 0; a + b <= d; ++b) out.emplace_back(a, b, d - a - b);
  }
  std::sort(out.begin(), out.end(),
            [order](const Monomial& l, const Monomial& r) { return mono_cmp(l, r, order) > 0; });
  return out;
}

}  // namespace gtrim
