#include <doctest.h>

#include "gtrim/pfaffian.hpp"
#include "oracles.hpp"

using namespace gtrim;

namespace {

const FieldSpec F = FieldSpec::prime(32003);

Polynomial<Zp> P(const char* s) { return parse_polynomial<Zp>(s, F); }

Polynomial<Zp> d(int m) { return d_poly<Zp>(m, DetMethod::Recurrence, F); }

bool equal_up_to_sign(const Polynomial<Zp>& a, const Polynomial<Zp>& b) { return a == b || a == -b; }

Polynomial<Zp> pow(const char* v, int e) {
  Monomial mono;
  mono.exp[static_cast<std::size_t>(v[0] - 'x')] = e;
  return Polynomial<Zp>::monomial(mono, F);
}

}  // namespace

TEST_CASE("build_U examples") {
  const auto u1 = build_U<Zp>(1, F);
  CHECK(u1.rows() == 1);
  CHECK(u1(0, 0) == P("z"));
  const auto u2 = build_U<Zp>(2, F);
  CHECK(u2(0, 0) == P("x"));
  CHECK(u2(0, 1) == P("z"));
  CHECK(u2(1, 0) == P("z"));
  CHECK(u2(1, 1) == P("y"));
  const auto u3 = build_U<Zp>(3, F);
  CHECK(u3(0, 0).is_zero());
  CHECK(u3(0, 1) == P("x"));
  CHECK(u3(0, 2) == P("z"));
  CHECK_THROWS_AS(build_U<Zp>(0, F), InvalidArgument);
}

TEST_CASE("d_poly examples") {
  for (auto method : {DetMethod::Determinant, DetMethod::Recurrence, DetMethod::ClosedForm}) {
    CHECK(d_poly<Zp>(4, method, F) == P("-3*x*y*z^2 + x^2*y^2 + z^4"));
    CHECK(d_poly<Zp>(0, method, F) == P("1"));
    CHECK(d_poly<Zp>(-1, method, F).is_zero());
    CHECK(d_poly<Zp>(1, method, F) == P("z"));
    CHECK(d_poly<Zp>(2, method, F) == P("x*y - z^2"));
    CHECK(d_poly<Zp>(3, method, F) == P("2*x*y*z - z^3"));
  }
  CHECK(d_poly<Zp>(5, DetMethod::Recurrence, F) == d_poly<Zp>(5, DetMethod::Determinant, F));
  CHECK_THROWS_AS(d_poly<Zp>(-2, DetMethod::Recurrence, F), InvalidArgument);
}

TEST_CASE("determinant routes agree with Leibniz and Bareiss") {
  for (int m = 1; m <= 7; ++m) {
    const auto u = build_U<Zp>(m, F);
    CHECK(matrix_det(u) == oracle::leibniz_det(u));
  }
  for (int m = 1; m <= 8; ++m) {
    const auto u = build_U<Zp>(m, F);
    CHECK(matrix_det(u) == matrix_det_bareiss(u));
  }
}

TEST_CASE("build_V examples") {
  const auto v1 = build_V<Zp>(1, F);
  const char* expected[3][3] = {{"0", "x", "z"}, {"-x", "0", "y"}, {"-z", "-y", "0"}};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) CHECK(v1(r, c) == P(expected[r][c]));
  }
  const auto v2 = build_V<Zp>(2, F);
  const char* row1[5] = {"0", "0", "0", "x", "z"};
  for (std::size_t c = 0; c < 5; ++c) CHECK(v2(0, c) == P(row1[c]));
  const auto v3 = build_V<Zp>(3, F);
  CHECK(v3.skew_flag());
  const auto t = v3.transposed();
  for (std::size_t r = 0; r < 7; ++r) {
    for (std::size_t c = 0; c < 7; ++c) CHECK((v3(r, c) + t(r, c)).is_zero());
  }
}

TEST_CASE("sub_pfaffian examples") {
  CHECK(equal_up_to_sign(sub_pfaffian(build_V<Zp>(1, F), 1), P("y")));
  CHECK(equal_up_to_sign(sub_pfaffian(build_V<Zp>(2, F), 3), P("x*y - z^2")));
  CHECK(equal_up_to_sign(sub_pfaffian(build_V<Zp>(2, F), 1), P("y^2")));
  CHECK_THROWS_AS(sub_pfaffian(build_V<Zp>(2, F), 0), InvalidArgument);
  CHECK_THROWS_AS(sub_pfaffian(build_U<Zp>(2, F), 1), InvalidArgument);
  PolyMatrix<Zp> even(4, 4, F);
  even.mark_skew();
  CHECK_THROWS_AS(sub_pfaffian(even, 1), InvalidArgument);
}

TEST_CASE("sub-maximal Pfaffians: squares and closed forms") {
  for (int m = 1; m <= 5; ++m) {
    const auto v = build_V<Zp>(m, F);
    const auto n = static_cast<std::size_t>(2 * m + 1);
    for (std::size_t i = 1; i <= n; ++i) {
      const auto pf = sub_pfaffian(v, i);
      CHECK(pf * pf == matrix_det(v.principal_submatrix_without({i - 1})));
      const int ii = static_cast<int>(i);
      Polynomial<Zp> expected(F);
      if (ii <= m) {
        expected = pow("y", m - ii + 1) * d(ii - 1);
      } else if (ii == m + 1) {
        expected = d(m);
      } else {
        expected = pow("x", ii - m - 1) * d(2 * m + 1 - ii);
      }
      CHECK_MESSAGE(equal_up_to_sign(pf, expected), "m=" << m << " i=" << i);
    }
  }
}

TEST_CASE("gorenstein_ideal examples") {
  const Ideal<Zp> g2({P("x^2"), P("x*z"), P("x*y - z^2"), P("y*z"), P("y^2")}, F);
  CHECK(ideal_equal(gorenstein_ideal<Zp>(2, F), g2));
  const Ideal<Zp> n = Ideal<Zp>::maximal(F);
  CHECK(ideal_equal(gorenstein_ideal<Zp>(1, F), n));
  for (int m = 2; m <= 6; ++m) {
    const Ideal<Zp> canon(canonical_generators<Zp>(m, F), F);
    CHECK(ideal_equal(gorenstein_ideal<Zp>(m, F), canon));
    CHECK(minimal_generators(canon).mu == static_cast<std::size_t>(2 * m + 1));
  }
}

TEST_CASE("canonical_generators examples") {
  const auto c2 = canonical_generators<Zp>(2, F);
  const std::vector<Polynomial<Zp>> e2{P("x^2"), P("x*z"), P("x*y - z^2"), P("y*z"), P("y^2")};
  CHECK(c2 == e2);
  const auto c3 = canonical_generators<Zp>(3, F);
  CHECK(c3[1] == P("x^2*z"));
  CHECK(c3[2] == P("x^2*y - x*z^2"));
  for (int m = 2; m <= 6; ++m) {
    for (const auto& g : canonical_generators<Zp>(m, F)) {
      CHECK(g.is_homogeneous());
      CHECK(g.degree() == m);
    }
  }
  CHECK_THROWS_AS(canonical_generators<Zp>(1, F), InvalidArgument);
}

TEST_CASE("trim selectors") {
  CHECK(TrimChoice::parse(3, "x0") == TrimChoice::xpow(3));
  CHECK(TrimChoice::parse(3, "y0") == TrimChoice::ypow(3));
  CHECK(TrimChoice::parse(3, "d") == TrimChoice::dm(3));
  CHECK(TrimChoice::parse(3, "x2") == TrimChoice::xi(3, 2));
  CHECK(TrimChoice::parse(3, "y1") == TrimChoice::yi(3, 1));
  CHECK_THROWS_AS(TrimChoice::parse(3, "x3"), InvalidArgument);
  CHECK_THROWS_AS(TrimChoice::parse(3, "z1"), InvalidArgument);
  CHECK_THROWS_AS(TrimChoice::parse(2, "y2"), InvalidArgument);
  CHECK_THROWS_AS(TrimChoice::parse(1, "x0"), InvalidArgument);
  const auto all = TrimChoice::all(4);
  REQUIRE(all.size() == 9);
  for (std::size_t k = 0; k < all.size(); ++k) {
    CHECK(all[k].index() == k);
    CHECK(TrimChoice::parse(4, all[k].token()) == all[k]);
  }
  CHECK(TrimChoice::yi(4, 3).mirrored() == TrimChoice::xi(4, 3));
  CHECK(TrimChoice::dm(4).mirrored() == TrimChoice::dm(4));
}

TEST_CASE("trim_gm examples") {
  const Ideal<Zp> xz_trim({P("x^2"), P("x*y - z^2"), P("y*z"), P("y^2")}, F);
  CHECK(ideal_equal(trim_gm<Zp>(TrimChoice::xi(2, 1), F), xz_trim));
  const Ideal<Zp> x2_trim({P("x^3"), P("x*z"), P("x*y - z^2"), P("y*z"), P("y^2")}, F);
  CHECK(ideal_equal(trim_gm<Zp>(TrimChoice::xpow(2), F), x2_trim));
  CHECK(trimmed_generator<Zp>(TrimChoice::yi(2, 1), F) == P("y*z"));
  CHECK(minimal_generators(trim_gm<Zp>(TrimChoice::dm(3), F)).mu == 7);
  CHECK_THROWS_AS(trim_gm<Zp>(TrimChoice::xpow(1), F), InvalidArgument);
  CHECK_THROWS_AS(trim_gm<Zp>(TrimChoice::xi(3, 3), F), InvalidArgument);
}

TEST_CASE("interior trims are absorbed by the remaining generators") {
  for (int m = 3; m <= 5; ++m) {
    const auto gens = canonical_generators<Zp>(m, F);
    for (int i = 1; i <= m - 1; ++i) {
      const auto c = TrimChoice::xi(m, i);
      std::vector<Polynomial<Zp>> rest;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (k != c.index()) rest.push_back(gens[k]);
      }
      const Ideal<Zp> b(rest, F);
      const auto scaled = scale_by_maximal(trimmed_generator<Zp>(c, F));
      for (const auto& h : scaled.generators()) {
        CHECK_MESSAGE(contains(b, h), "m=" << m << " i=" << i << " h=" << h.to_string());
        CHECK(oracle::member(rest, h, F));
      }
    }
  }
}

TEST_CASE("family record") {
  const auto fam = build_family<Zp>(3, F);
  CHECK(fam.m == 3);
  CHECK(fam.U.rows() == 3);
  CHECK(fam.V.rows() == 7);
  CHECK(fam.d == P("2*x*y*z - z^3"));
  CHECK(fam.pfaffians.size() == 7);
  CHECK(fam.canonical_gens.size() == 7);
  CHECK(ideal_equal(Ideal<Zp>(fam.pfaffians, F), Ideal<Zp>(fam.canonical_gens, F)));
  const auto fam1 = build_family<Zp>(1, F);
  CHECK(ideal_equal(Ideal<Zp>(fam1.canonical_gens, F), Ideal<Zp>::maximal(F)));
  CHECK(gorenstein_hilbert_formula(2).coefficients == std::vector<long>{1, 3, 1});
  CHECK(gorenstein_hilbert_formula(5).coefficients == oracle::gorenstein_hilbert(5));
  CHECK_THROWS_AS(gorenstein_hilbert_formula(1), InvalidArgument);
}
