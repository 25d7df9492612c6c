#include "lrh/ah.hpp"
#include "lrh/parse.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace lrh;

namespace {

const char *h_values[] = {"1", "x", "x^2", "x^3", "x^2-1", "x^3-x"};

SpecPtr spec_for(const char *h_str) {
  auto h = parse_poly_x(h_str);
  REQUIRE(h);
  return AlgebraSpec::ah(*h);
}

} // namespace

TEST_CASE("windowed dimensions match the closed forms") {
  // closed forms: HH^0 = k, HH^1 = S/(h) (+) I[y], HH^2 = S/(d)[y]
  // with d = gcd(h, h') and dim I = deg d; in the (X, Y) window the y-line
  // parts contribute Y+1 each.
  for (const char *h_str : h_values) {
    auto s = spec_for(h_str);
    AhReport rep = ah_hh_dims(s, 8, 6);
    INFO("h = " << h_str);
    CHECK(rep.nabla_agree);
    CHECK(rep.match);
    CHECK(rep.hh0 == 1);
    CHECK(rep.hh1 == rep.deg_h + rep.deg_d * 7);
    CHECK(rep.hh2 == rep.deg_d * 7);
  }
}

TEST_CASE("spot values of the closed forms") {
  // h = x^2: d = x, so HH^1 = 2 + (Y+1) and HH^2 = Y+1
  AhReport r = ah_hh_dims(spec_for("x^2"), 8, 4);
  CHECK(r.hh1 == 2 + 5);
  CHECK(r.hh2 == 5);
  // squarefree h: d = 1, no y-line contribution
  AhReport rs = ah_hh_dims(spec_for("x^2-1"), 8, 4);
  CHECK(rs.hh1 == 2);
  CHECK(rs.hh2 == 0);
  // h = 1: the algebra is simple, only the constants survive
  AhReport r1 = ah_hh_dims(spec_for("1"), 8, 4);
  CHECK(r1.hh0 == 1);
  CHECK(r1.hh1 == 0);
  CHECK(r1.hh2 == 0);
  // the window must cover deg h
  CHECK_THROWS_AS(ah_hh_dims(spec_for("x^3"), 2, 4), std::invalid_argument);
}

TEST_CASE("lifting-based and closed-form connecting maps agree") {
  for (const char *h_str : h_values) {
    auto s = spec_for(h_str);
    INFO("h = " << h_str);
    CHECK(ah_nabla_agree(s, 8, 6));
    // and the correction tensor satisfies its defining identity: checked at
    // construction, so building the lifting is already a test
    CHECK_NOTHROW(build_lifting(Theta::AhY, s));
  }
}

TEST_CASE("reduction modulo h") {
  auto s = spec_for("x^2-1");
  // x^3 y = (x^2-1) x y + x y == x y
  PbwElement u = pbw_monomial(s, 3, 1);
  CHECK(ah_reduce_mod_h(u) == pbw_monomial(s, 1, 1));
  // h itself reduces to zero
  CHECK(ah_reduce_mod_h(from_polynomial(s, s->h)).is_zero());
  // h = constant: everything reduces to zero
  auto s1 = spec_for("1");
  CHECK(ah_reduce_mod_h(pbw_monomial(s1, 2, 3)).is_zero());
}

TEST_CASE("truncated cokernel matches the independent counting oracle") {
  // im [x,-] = hU, and hU meets the bidegree window in the span of
  // h x^a y^b with deg(h x^a) <= X, which leaves (Y+1) min(deg h, X+1)
  // window monomials uncovered.  The engine side computes the visible
  // image subspace with no reference to that formula.
  for (const char *h_str : h_values) {
    auto s = spec_for(h_str);
    INFO("h = " << h_str);
    for (int X : {2, 4, 7})
      for (int Y : {0, 2, 5})
        CHECK(ah_hochschild_dim(s, 1, X, Y) == ah_coker_oracle(s, X, Y));
    CHECK(ah_hochschild_dim(s, 2, 5, 5) == 0);
  }
}

TEST_CASE("the commutator image really is the principal ideal") {
  // brute force: every [x, basis monomial] is divisible by h, and every
  // h x^a y^b inside a window is hit by the visible image computation.
  auto s = spec_for("x^2");
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      PbwElement im = ah_delta(pbw_monomial(s, a, b));
      CHECK(ah_reduce_mod_h(im).is_zero());
    }
  int X = 4, Y = 3;
  detail::AhIndex ix;
  for (int a = 0; a <= X; ++a)
    for (int b = 0; b <= Y; ++b)
      ix.of(a, b);
  std::vector<SparseVec> images;
  long dh = s->h.degree_x();
  for (int a = 0; a <= X + (Y + 2) * dh; ++a)
    for (int b = 0; b <= Y + 1; ++b)
      images.push_back(detail::ah_vec(ix, ah_delta(pbw_monomial(s, a, b))));
  std::vector<bool> allowed(ix.dim(), false);
  for (long k = 0; k < (long)((X + 1) * (Y + 1)); ++k)
    allowed[k] = true;
  SubspaceBasis visible = intersect_with_coordinates(ix.dim(), images, allowed);
  for (int a = 0; a + dh <= X; ++a)
    for (int b = 0; b <= Y; ++b) {
      PbwElement target =
          multiply(from_polynomial(s, s->h), pbw_monomial(s, a, b));
      CHECK(visible.contains(detail::ah_vec(ix, target)));
    }
}
