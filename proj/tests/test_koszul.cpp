#include <doctest.h>

#include "gtrim/koszul.hpp"
#include "oracles.hpp"

using namespace gtrim;

namespace {

const FieldSpec F = FieldSpec::prime(32003);

Polynomial<Zp> P(const char* s) { return parse_polynomial<Zp>(s, F); }
KoszulElement<Zp> E(Word w, const char* coeff) { return KoszulElement<Zp>::single(w, P(coeff)); }

std::size_t rank_of(const std::vector<std::vector<Zp>>& rows) { return oracle::rank(rows, F); }

bool zero(const std::vector<Zp>& v) { return is_zero_vector<Zp>(v); }

}  // namespace

TEST_CASE("exterior words") {
  CHECK(word_name(kExz) == "e_xz");
  CHECK(word_degree(kExyz) == 3);
  CHECK(wedge_sign(kEx, kEy) == 1);
  CHECK(wedge_sign(kEy, kEx) == -1);
  CHECK(wedge_sign(kEy, kExz) == -1);
  CHECK(wedge_sign(kEx, kExz) == 0);
  CHECK(word_rank(kEyz) == 2);
}

TEST_CASE("differential examples") {
  const auto de = koszul_differential(E(kExyz, "1"));
  KoszulElement<Zp> expected(2, F);
  expected.add(kEyz, P("x"));
  expected.add(kExz, P("-y"));
  expected.add(kExy, P("z"));
  CHECK(de == expected);
  CHECK(koszul_differential(E(kE1, "1")).is_zero());
  const auto dxy = koszul_differential(E(kExy, "1"));
  CHECK(dxy.component(kEy) == P("x"));
  CHECK(dxy.component(kEx) == P("-y"));
  CHECK(koszul_differential(dxy).is_zero());
  CHECK_THROWS_AS(KoszulElement<Zp>(4, F), InvalidArgument);
  KoszulElement<Zp> one(1, F);
  CHECK_THROWS_AS(one.add(kExy, P("x")), InvalidArgument);
}

TEST_CASE("complex property on matrices") {
  for (int m = 2; m <= 4; ++m) {
    const KoszulComplex<Zp> k(gorenstein_ideal<Zp>(m, F));
    for (int D = 0; D <= k.max_internal_degree(); ++D) {
      for (int i = 2; i <= 3; ++i) {
        const auto& a = k.differential(i - 1, D);
        const auto& b = k.differential(i, D);
        for (std::size_t r = 0; r < a.rows(); ++r) {
          for (std::size_t c = 0; c < b.cols(); ++c) {
            Zp s = Zp::zero(F);
            for (std::size_t t = 0; t < a.cols(); ++t) s += a(r, t) * b(t, c);
            CHECK(s.is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("homology ranks examples") {
  CHECK(HomologyAlgebra<Zp>(gorenstein_ideal<Zp>(2, F)).ranks() == std::array<std::size_t, 4>{1, 5, 5, 1});
  CHECK(HomologyAlgebra<Zp>(trim_gm<Zp>(TrimChoice::xi(3, 1), F)).ranks() ==
        std::array<std::size_t, 4>{1, 6, 7, 2});
  const HomologyAlgebra<Zp> k(Ideal<Zp>::maximal(F));
  CHECK(k.ranks() == std::array<std::size_t, 4>{1, 3, 3, 1});
  // Over k itself the classes are e_x, e_y, e_z and their products.
  CHECK(k.class_coordinates(E(kEx, "1")).size() == 3);
  CHECK_FALSE(k.is_boundary(E(kExyz, "1")));
}

TEST_CASE("basis representatives are cycles") {
  const auto a = trim_gm<Zp>(TrimChoice::dm(3), F);
  const HomologyAlgebra<Zp> h(a);
  for (int i = 0; i <= 3; ++i) {
    for (const auto& c : h.basis(i)) {
      CHECK(is_cycle(a, c.rep));
      CHECK(c.rep.exterior_degree() == i);
    }
  }
}

TEST_CASE("multiply examples") {
  const HomologyAlgebra<Zp> h(trim_gm<Zp>(TrimChoice::xi(3, 1), F));
  const auto one = E(kE1, "1");
  for (std::size_t a = 0; a < h.rank(1); ++a) {
    const auto& u = h.basis(1)[a].rep;
    auto expected = std::vector<Zp>(h.rank(1), Zp::zero(F));
    expected[a] = Zp::one(F);
    CHECK(h.multiply(u, one) == expected);
    for (std::size_t b = 0; b < h.rank(1); ++b) {
      const auto& v = h.basis(1)[b].rep;
      const auto uv = h.multiply(u, v);
      auto vu = h.multiply(v, u);
      for (auto& c : vu) c = -c;
      CHECK(uv == vu);
      CHECK(zero(uv));  // p = 0 for class G
    }
  }
  const auto x3ex = E(kEx, "x^2");  // x * x^2 e_x-type cycle: d = x^3 in a
  CHECK(is_cycle(h.ring().ideal(), x3ex));
  CHECK_THROWS_AS(h.multiply(E(kExy, "1"), E(kExy, "1")), InvalidArgument);
  CHECK_THROWS_AS(h.multiply(E(kEx, "1"), one), NotACycle);
}

TEST_CASE("invariants examples") {
  auto pqr = [](const Ideal<Zp>& a) {
    const auto inv = invariants(HomologyAlgebra<Zp>(a));
    return std::array<int, 3>{inv.p, inv.q, inv.r};
  };
  CHECK(pqr(trim_gm<Zp>(TrimChoice::xi(2, 1), F)) == std::array<int, 3>{3, 2, 2});
  CHECK(pqr(trim_gm<Zp>(TrimChoice::xpow(2), F)) == std::array<int, 3>{1, 1, 2});
  CHECK(pqr(trim_gm<Zp>(TrimChoice::xi(3, 1), F)) == std::array<int, 3>{0, 1, 3});
}

TEST_CASE("delta_rank examples") {
  CHECK(delta_rank(HomologyAlgebra<Zp>(gorenstein_ideal<Zp>(2, F))) == 5);
  CHECK(delta_rank(HomologyAlgebra<Zp>(trim_gm<Zp>(TrimChoice::dm(3), F))) == 4);
  CHECK(delta_rank(HomologyAlgebra<Zp>(trim_gm<Zp>(TrimChoice::yi(4, 2), F))) == 5);
}

TEST_CASE("classify examples") {
  const auto g3 = classify(HomologyAlgebra<Zp>(gorenstein_ideal<Zp>(3, F)));
  CHECK(g3.tag == TorClass::Tag::Gorenstein);
  CHECK(g3.label() == "Gorenstein(7)");
  // The yz trim of g_2.
  const auto yz = classify(HomologyAlgebra<Zp>(trim_gm<Zp>(TrimChoice::yi(2, 1), F)));
  CHECK(yz.label() == "H(3,2)");
  const auto x5 = classify(HomologyAlgebra<Zp>(trim_gm<Zp>(TrimChoice::xpow(5), F)));
  CHECK(x5.label() == "G(8)");
  CHECK_FALSE(x5.gorenstein());
  const Ideal<Zp> ci({P("x^2"), P("y^2"), P("z^2")}, F);
  CHECK(classify(HomologyAlgebra<Zp>(ci)).tag == TorClass::Tag::CompleteIntersection);
  CHECK_THROWS_AS(classify(HomologyAlgebra<Zp>(Ideal<Zp>::maximal(F))), NotInSquare);
}

TEST_CASE("decision table") {
  auto tag = [](int mu, int type, int p, int q, int r) {
    TorInvariants inv;
    inv.mu = mu;
    inv.type_rank = type;
    inv.p = p;
    inv.q = q;
    inv.r = r;
    return classify_invariants(inv);
  };
  CHECK(tag(3, 1, 3, 1, 3).tag == TorClass::Tag::CompleteIntersection);
  CHECK(tag(5, 1, 5, 1, 5).label() == "Gorenstein(5)");
  CHECK(tag(5, 2, 1, 1, 2).label() == "B");
  CHECK(tag(4, 3, 3, 0, 0).label() == "T");
  CHECK(tag(6, 2, 0, 1, 3).label() == "G(3)");
  CHECK(tag(5, 2, 0, 1, 1).label() == "H(0,1)");
  CHECK(tag(4, 2, 3, 2, 2).label() == "H(3,2)");
  CHECK(tag(6, 2, 2, 1, 3).tag == TorClass::Tag::Unclassified);
}

TEST_CASE("explicit cycles for g = d_3") {
  const auto c = TrimChoice::dm(3);
  const auto cycles = prop43_cycles<Zp>(c, F);
  CHECK(cycles.size() == 7);
  bool has_dez = false;
  for (const auto& u : cycles) has_dez = has_dez || u == E(kEz, "2*x*y*z - z^3");
  CHECK(has_dez);
  for (const char* s : {"x^2", "x*z", "x*y - z^2"}) {
    bool has = false;
    for (const auto& u : cycles) has = has || u == E(kEx, s);
    CHECK_MESSAGE(has, s);
  }
  const auto f = prop43_special_cycle<Zp>(c, F);
  CHECK(f == E(kExy, "x*y - z^2"));
  const HomologyAlgebra<Zp> h(trim_gm<Zp>(c, F));
  CHECK(annihilates_A1(h, f));
  CHECK_FALSE(h.is_boundary(f));
}

TEST_CASE("explicit cycles for g = x^3") {
  const auto c = TrimChoice::xpow(3);
  const auto cycles = prop43_cycles<Zp>(c, F);
  bool has = false;
  for (const auto& u : cycles) has = has || u == E(kEx, "x^3");
  CHECK(has);
  CHECK(prop43_special_cycle<Zp>(c, F) == E(kEyz, "y^2"));
  CHECK_THROWS_AS(prop43_cycles<Zp>(TrimChoice::xpow(2), F), InvalidArgument);
}

TEST_CASE("special cycle for an interior trim of g_4") {
  const auto f = prop43_special_cycle<Zp>(TrimChoice::xi(4, 2), F);
  const auto a = trim_gm<Zp>(TrimChoice::xi(4, 2), F);
  CHECK(reduce_mod(koszul_differential(f), a).is_zero());
  const HomologyAlgebra<Zp> h(trim_gm<Zp>(TrimChoice::xi(4, 1), F));
  CHECK(annihilates_A1(h, prop43_special_cycle<Zp>(TrimChoice::xi(4, 1), F)));
}

TEST_CASE("g e_xy pairs to zero with A_1") {
  for (const auto& c : TrimChoice::all(3)) {
    const HomologyAlgebra<Zp> h(trim_gm<Zp>(c, F));
    const auto gs = trimmed_generator_cycles<Zp>(c, F);
    CHECK(annihilates_A1(h, gs[0]));
    std::vector<std::vector<Zp>> rows;
    for (const auto& u : gs) rows.push_back(h.class_coordinates(u));
    CHECK(rank_of(rows) == 3);
  }
}

TEST_CASE("serial and parallel homology agree") {
  const auto a = trim_gm<Zp>(TrimChoice::xi(5, 2), F);
  const HomologyAlgebra<Zp> s(a, Exec::Serial);
  const HomologyAlgebra<Zp> p(a, Exec::Parallel);
  CHECK(s.ranks() == p.ranks());
  for (int i = 0; i <= 3; ++i) {
    for (std::size_t k = 0; k < s.rank(i); ++k) {
      CHECK(s.basis(i)[k].vector == p.basis(i)[k].vector);
      CHECK(s.basis(i)[k].internal_degree == p.basis(i)[k].internal_degree);
    }
  }
  CHECK(invariants(s) == invariants(p));
}

TEST_CASE("homology over the rationals") {
  const FieldSpec QQ = FieldSpec::rationals();
  const auto a = trim_gm<Rational>(TrimChoice::dm(3), QQ);
  const HomologyAlgebra<Rational> h(a);
  const auto cls = classify(h);
  CHECK(cls.label() == "G(4)");
  CHECK(cls.inv.ranks == std::array<std::size_t, 4>{1, 7, 8, 2});
}
