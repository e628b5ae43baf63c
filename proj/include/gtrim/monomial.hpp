#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gtrim {

/// Monomial orders on k[x,y,z], always with x > y > z.
enum class MonomialOrder { Grevlex, Grlex, Lex };

/// Throws InvalidArgument for names other than grevlex, grlex, lex.
MonomialOrder parse_order(std::string_view name);
std::string_view to_string(MonomialOrder order);

inline constexpr std::array<char, 3> kVariableNames{'x', 'y', 'z'};

/// x^a y^b z^c.
struct Monomial {
  std::array<int, 3> exp{0, 0, 0};

  constexpr Monomial() = default;
  constexpr Monomial(int a, int b, int c) : exp{a, b, c} {}

  static constexpr Monomial variable(int v) {
    Monomial m;
    m.exp[static_cast<std::size_t>(v)] = 1;
    return m;
  }

  constexpr int degree() const { return exp[0] + exp[1] + exp[2]; }
  constexpr bool is_one() const { return degree() == 0; }
  constexpr bool divides(const Monomial& o) const {
    return exp[0] <= o.exp[0] && exp[1] <= o.exp[1] && exp[2] <= o.exp[2];
  }
  constexpr Monomial operator*(const Monomial& o) const {
    return {exp[0] + o.exp[0], exp[1] + o.exp[1], exp[2] + o.exp[2]};
  }
  /// Precondition: o divides *this.
  constexpr Monomial operator/(const Monomial& o) const {
    return {exp[0] - o.exp[0], exp[1] - o.exp[1], exp[2] - o.exp[2]};
  }
  constexpr Monomial swapped_xy() const { return {exp[1], exp[0], exp[2]}; }

  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

  /// "x^2*y*z"; "1" for the unit monomial.
  std::string to_string() const;
};

constexpr Monomial lcm(const Monomial& a, const Monomial& b) {
  return {a.exp[0] > b.exp[0] ? a.exp[0] : b.exp[0], a.exp[1] > b.exp[1] ? a.exp[1] : b.exp[1],
          a.exp[2] > b.exp[2] ? a.exp[2] : b.exp[2]};
}

constexpr bool coprime(const Monomial& a, const Monomial& b) {
  return (a.exp[0] == 0 || b.exp[0] == 0) && (a.exp[1] == 0 || b.exp[1] == 0) &&
         (a.exp[2] == 0 || b.exp[2] == 0);
}

std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order);

/// All monomials of total degree d, in descending order for `order`.
std::vector<Monomial> monomials_of_degree(int d, MonomialOrder order);

/// C(d+2, 2): number of monomials of degree d in three variables.
constexpr std::size_t monomial_count(int d) {
  return d < 0 ? 0 : static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(d + 2) / 2;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    return static_cast<std::size_t>(m.exp[0]) * 1000003u ^
           static_cast<std::size_t>(m.exp[1]) * 10007u ^ static_cast<std::size_t>(m.exp[2]);
  }
};

}  // namespace gtrim
