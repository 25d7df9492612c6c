#include "lrh/lifting.hpp"
#include "lrh/spectral.hpp"
#include "named_cocycles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace lrh;

TEST_CASE("difference quotients of small polynomials") {
  // g = y^2: Dy = 1 (x) y + y (x) 1, Dx = 0
  auto [dx2, dy2] = difference_quotients(Polynomial::monomial(0, 2));
  CHECK(dx2.is_zero());
  BiTensor expect;
  expect.add(0, 0, 0, 1, 1);
  expect.add(0, 1, 0, 0, 1);
  CHECK(dy2 == expect);

  // g = F = y(tx + y) = t x y + y^2 for three lines
  Rational t(3);
  Polynomial F = Polynomial::y() * (Polynomial::x() * t + Polynomial::y());
  auto [dxF, dyF] = difference_quotients(F);
  BiTensor ex;
  ex.add(0, 0, 0, 1, t); // t (1 (x) y)
  CHECK(dxF == ex);
  BiTensor ey;
  ey.add(0, 0, 0, 1, 1); // from y^2
  ey.add(0, 1, 0, 0, 1);
  ey.add(1, 0, 0, 0, t); // t (x (x) 1) from t x y
  CHECK(dyF == ey);

  // defining identity: g|1 - 1|g = Dx(g).(x|1-1|x) + Dy(g).(y|1-1|y)
  for (const Polynomial &g :
       {F, Polynomial::monomial(3, 2), Polynomial::monomial(2, 0)}) {
    auto [dx, dy] = difference_quotients(g);
    BiTensor lhs = BiTensor::of(g, Polynomial(Rational(1))) -
                   BiTensor::of(Polynomial(Rational(1)), g);
    BiTensor rhs = dx * detail::koszul_x() + dy * detail::koszul_y();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("liftings verify their chain identities on construction") {
  auto s = AlgebraSpec::three_lines(Rational(1));
  CHECK_NOTHROW(build_lifting(Theta::D, s));
  CHECK_NOTHROW(build_lifting(Theta::E, s));
  auto s5 = AlgebraSpec::arrangement(
      5, {Rational(0), Rational(1), Rational(2), Rational(-1)});
  CHECK_NOTHROW(build_lifting(Theta::D, s5));
  auto ah = AlgebraSpec::ah(Polynomial::monomial(3, 0) - Polynomial::x());
  CHECK_NOTHROW(build_lifting(Theta::AhY, ah));
}

TEST_CASE("a corrupted lifting fails verification") {
  auto s = AlgebraSpec::three_lines(Rational(1));
  LiftingData L = build_lifting(Theta::D, s);
  L.d2 = L.d2 + BiTensor::one();
  CHECK_FALSE(detail::verify_lifting(L));
  LiftingData L2 = build_lifting(Theta::E, s);
  L2.d1_xy = BiTensor::one();
  CHECK_FALSE(detail::verify_lifting(L2));
}

TEST_CASE("sharp of the Euler lifting scales by the internal degree") {
  auto s = AlgebraSpec::three_lines(Rational(2));
  LiftingData LE = build_lifting(Theta::E, s);
  for (int q = 0; q <= 2; ++q)
    for (long i = -3; i <= 3; ++i) {
      SliceBasis b =
          slice_basis({ComplexId::HochschildKoszul, q, i, 3, 0}, s);
      for (long j = 0; j < b.dim(); ++j) {
        Cochain c = cochain_from_vector(SparseVec{{j, Rational(1)}}, b);
        CHECK(sharp(LE, c) == c * Rational(i));
      }
    }
}

TEST_CASE("sharp of the D lifting on the witness cochain") {
  // sharp(D)(D y^) = (-F_y D - F) y^
  auto s = AlgebraSpec::three_lines(Rational(1));
  LiftingData LD = build_lifting(Theta::D, s);
  Cochain in = cochain1(s, PbwElement(s), gen_D(s));
  PbwElement Fy = from_polynomial(s, s->F.derivative_y());
  Cochain expect =
      cochain1(s, PbwElement(s),
               -multiply(Fy, gen_D(s)) - from_polynomial(s, s->F));
  CHECK(sharp(LD, in) == expect);
}

TEST_CASE("sharp commutes with delta") {
  auto s = AlgebraSpec::three_lines(Rational(1));
  LiftingData LD = build_lifting(Theta::D, s);
  LiftingData LE = build_lifting(Theta::E, s);
  for (int q = 0; q <= 1; ++q)
    for (long i = 0; i <= 2; ++i) {
      CHECK(chain_map_check(LD, q, i, 4));
      CHECK(chain_map_check(LE, q, i, 4));
    }
  CHECK(chain_map_check(LD, 1, -1, 4));
}

TEST_CASE("the induced map in degree 0 sends eta_1 into degree 1 classes") {
  auto s = AlgebraSpec::three_lines(Rational(1));
  LiftingData LD = build_lifting(Theta::D, s);
  auto etas = testing::degree0_cocycles(s);
  // sharp(D) of a cocycle is again a cocycle
  for (const auto &c : etas)
    CHECK(is_cocycle(sharp(LD, c)));
  // and the matrix of the induced map exists on stabilized models
  EulerianModuleData m = eulerian_from_hochschild(s, 1, 0, 6, 3);
  CHECK(m.dim_src == 5);
  CHECK(m.dim_tgt == 8);
  CHECK(m.Dmat.cols == 5);
  CHECK(m.Dmat.rows == 8);
}

TEST_CASE("the bracket of the induced operators") {
  auto s = AlgebraSpec::three_lines(Rational(1));
  CHECK(lie_morphism_check(s, 1, 0, 4, 2));
  CHECK(lie_morphism_check(s, 0, 0, 4, 2));
  CHECK(lie_morphism_check(s, 0, 1, 4, 2));
  auto s5 = AlgebraSpec::arrangement(
      5, {Rational(0), Rational(1), Rational(2), Rational(-1)});
  CHECK(lie_morphism_check(s5, 0, 0, 4, 2));
  CHECK(lie_morphism_check(s5, 1, 0, 4, 2));
}
