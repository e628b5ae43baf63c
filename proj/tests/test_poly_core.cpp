#include <doctest.h>

#include "gtrim/field.hpp"
#include "gtrim/monomial.hpp"
#include "gtrim/poly_matrix.hpp"
#include "gtrim/polynomial.hpp"
#include "oracles.hpp"

using namespace gtrim;

namespace {

const FieldSpec F = FieldSpec::prime(32003);
const FieldSpec QQ = FieldSpec::rationals();

Polynomial<Zp> P(const char* s) { return parse_polynomial<Zp>(s, F); }
Polynomial<Rational> R(const char* s) { return parse_polynomial<Rational>(s, QQ); }

}  // namespace

TEST_CASE("field spec validation") {
  CHECK(FieldSpec{}.characteristic == 32003);
  CHECK(FieldSpec::from_characteristic(0).is_rational());
  CHECK_THROWS_AS(FieldSpec::prime(4), InvalidArgument);
  CHECK_THROWS_AS(FieldSpec::prime(1), InvalidArgument);
  CHECK_THROWS_AS(FieldSpec::prime(4294967311ULL), InvalidArgument);
  CHECK(FieldSpec::prime(2).to_string() == "GF(2)");
  CHECK(QQ.to_string() == "QQ");
}

TEST_CASE("prime field arithmetic") {
  const Zp a = Zp::from_integer(-1, F);
  CHECK(a.value() == 32002);
  CHECK(a.to_string() == "-1");
  CHECK((a * a).is_one());
  const Zp three = Zp::from_integer(3, F);
  CHECK((three * three.inverse()).is_one());
  CHECK_THROWS_AS(Zp::zero(F).inverse(), std::domain_error);
  const Zp other = Zp::one(FieldSpec::prime(7));
  CHECK_THROWS_AS(other + three, FieldMismatch);
  CHECK(Zp::from_decimal("-5", F) == Zp::from_integer(-5, F));
  CHECK_THROWS_AS(Zp::from_decimal("5x", F), ParseError);
}

TEST_CASE("rational arithmetic") {
  const Rational h = Rational::from_decimal("1/2", QQ);
  CHECK((h + h).is_one());
  CHECK(Rational::from_decimal("-3/6", QQ).to_string() == "-1/2");
  CHECK_THROWS_AS(Rational::from_decimal("1/0", QQ), ParseError);
  CHECK_THROWS_AS(Rational::zero(QQ).inverse(), std::domain_error);
  CHECK_FALSE(Rational::accepts(F));
  CHECK_FALSE(Zp::accepts(QQ));
}

TEST_CASE("monomial orders") {
  const Monomial xy(1, 1, 0), z2(0, 0, 2), x2(2, 0, 0), xz(1, 0, 1), y2(0, 2, 0);
  CHECK(mono_cmp(xy, z2, MonomialOrder::Grevlex) == std::strong_ordering::greater);
  CHECK(mono_cmp(x2, xy, MonomialOrder::Grevlex) == std::strong_ordering::greater);
  for (auto o : {MonomialOrder::Grevlex, MonomialOrder::Grlex, MonomialOrder::Lex}) {
    CHECK(mono_cmp(xz, xz, o) == std::strong_ordering::equal);
  }
  // xz^2 vs y^3: grlex compares lexicographically, grevlex by the last exponent.
  const Monomial xzz(1, 0, 2), yyy(0, 3, 0);
  CHECK(mono_cmp(xzz, yyy, MonomialOrder::Grlex) == std::strong_ordering::greater);
  CHECK(mono_cmp(xzz, yyy, MonomialOrder::Grevlex) == std::strong_ordering::less);
  CHECK(mono_cmp(Monomial(0, 0, 5), Monomial(1, 0, 0), MonomialOrder::Lex) == std::strong_ordering::less);
  CHECK(mono_cmp(y2, xz, MonomialOrder::Lex) == std::strong_ordering::less);
  CHECK(parse_order("grlex") == MonomialOrder::Grlex);
  CHECK_THROWS_AS(parse_order("deglex"), InvalidArgument);
  CHECK(monomials_of_degree(2, MonomialOrder::Grevlex).size() == 6);
  CHECK(monomial_count(4) == 15);
}

TEST_CASE("polynomial text format") {
  CHECK(P("2*x*y*z - z^3").to_string() == "2*x*y*z - z^3");
  CHECK(P("  z^3 -  2 * x*y*z ").to_string() == "-2*x*y*z + z^3");
  CHECK(P("0").to_string() == "0");
  CHECK(P("x*x").to_string() == "x^2");
  CHECK(P("3 + x - 3").to_string() == "x");
  CHECK(R("1/2*x^2 - 2/4*x^2").is_zero());
  CHECK_THROWS_AS(P("x + w"), ParseError);
  CHECK_THROWS_AS(P("x^"), ParseError);
  CHECK_THROWS_AS(P("x ++ y"), ParseError);
  CHECK(P("1/2*x") == P("16002*x"));
  CHECK_THROWS_AS(P("1/0*x"), ParseError);
}

TEST_CASE("poly_add examples") {
  CHECK(poly_add(P("x*y - z^2"), P("z^2")) == P("x*y"));
  const auto f = P("x^2 + y*z");
  CHECK(poly_add(f, Polynomial<Zp>(F)) == f);
  CHECK(poly_add(P("2*x*y*z - z^3"), P("z^3")) == P("2*x*y*z"));
  CHECK_THROWS_AS(poly_add(P("x"), parse_polynomial<Zp>("x", FieldSpec::prime(7))), FieldMismatch);
}

TEST_CASE("poly_mul examples") {
  CHECK(poly_mul(P("x"), P("y")) == P("x*y"));
  CHECK(poly_mul(P("x*y - z^2"), P("x*y + z^2")) == P("x^2*y^2 - z^4"));
  CHECK(poly_mul(P("z"), P("x*y - z^2")) == P("x*y*z - z^3"));
  CHECK(poly_mul(R("1/2*x"), R("2*y")) == R("x*y"));
}

TEST_CASE("normalization invariant") {
  const auto f = Polynomial<Zp>::from_terms(
      {{Zp::from_integer(1, F), Monomial(0, 0, 2)}, {Zp::from_integer(2, F), Monomial(1, 1, 0)},
       {Zp::from_integer(-1, F), Monomial(0, 0, 2)}, {Zp::zero(F), Monomial(3, 0, 0)}},
      F);
  CHECK(f.is_normalized());
  CHECK(f.size() == 1);
  CHECK(f.leading_monomial() == Monomial(1, 1, 0));
  CHECK(f.is_homogeneous());
  CHECK_FALSE(P("x + y^2").is_homogeneous());
  CHECK(P("x*y - z^2").degree() == 2);
  CHECK(Polynomial<Zp>(F).degree() == -1);
}

TEST_CASE("exact division") {
  CHECK(divide_exact(P("x^2*y^2 - z^4"), P("x*y - z^2")) == P("x*y + z^2"));
  CHECK_THROWS_AS(divide_exact(P("x^2 + y"), P("x")), InvalidArgument);
}

TEST_CASE("matrix_det examples") {
  PolyMatrix<Zp> u2(2, 2, F);
  u2(0, 0) = P("x");
  u2(0, 1) = P("z");
  u2(1, 0) = P("z");
  u2(1, 1) = P("y");
  CHECK(matrix_det(u2) == P("x*y - z^2"));

  PolyMatrix<Zp> u3(3, 3, F);
  u3(0, 1) = P("x");
  u3(0, 2) = P("z");
  u3(1, 0) = P("x");
  u3(1, 1) = P("z");
  u3(1, 2) = P("y");
  u3(2, 0) = P("z");
  u3(2, 1) = P("y");
  CHECK(matrix_det(u3) == P("2*x*y*z - z^3"));
  CHECK(matrix_det(u3) == oracle::leibniz_det(u3));
  CHECK(matrix_det(PolyMatrix<Zp>::identity(3, F)) == P("1"));
  CHECK_THROWS_AS(matrix_det(PolyMatrix<Zp>(2, 3, F)), InvalidArgument);
}

TEST_CASE("determinant with a duplicated row vanishes") {
  PolyMatrix<Zp> m(3, 3, F);
  const char* row[3] = {"x + y", "z^2", "x*y"};
  for (std::size_t c = 0; c < 3; ++c) {
    m(0, c) = P(row[c]);
    m(2, c) = P(row[c]);
    m(1, c) = P(c == 1 ? "y" : "z");
  }
  CHECK(matrix_det(m).is_zero());
  CHECK(matrix_det_bareiss(m).is_zero());
}

TEST_CASE("skew flag") {
  PolyMatrix<Zp> m(2, 2, F);
  m(0, 1) = P("x");
  m(1, 0) = P("-x");
  CHECK(m.is_skew_symmetric());
  m.mark_skew();
  CHECK(m.skew_flag());
  PolyMatrix<Zp> bad(2, 2, F);
  bad(0, 1) = P("x");
  CHECK_THROWS_AS(bad.mark_skew(), InvalidArgument);
}
