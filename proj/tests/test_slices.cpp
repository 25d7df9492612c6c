#include "lrh/slices.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace lrh;

TEST_CASE("slab dimensions match the counting formula") {
  auto s = AlgebraSpec::three_lines(Rational(1));
  // l = 3: D has degree 1, so a slab of target degree T holds
  // (T+1)(T+2)/2 monomials per label, each at N+1 E-powers.
  for (int q = 0; q <= 2; ++q) {
    long labels = (q == 1) ? 2 : 1;
    for (long i = 0; i <= 4; ++i)
      for (int N : {0, 2, 5}) {
        long T = i + q; // every Hochschild label weighs q
        long expect = labels * (T + 1) * (T + 2) / 2 * (N + 1);
        SliceBasis b =
            slice_basis({ComplexId::HochschildKoszul, q, i, N, 0}, s);
        CHECK(b.dim() == expect);
      }
  }
}

TEST_CASE("negative degrees give empty slabs where expected") {
  auto s = AlgebraSpec::three_lines(Rational(1));
  CHECK(slice_basis({ComplexId::HochschildKoszul, 0, -1, 4, 0}, s).dim() == 0);
  // q = 1 at degree -1: target = 0, one constant per label
  CHECK(slice_basis({ComplexId::HochschildKoszul, 1, -1, 0, 0}, s).dim() == 2);
}

TEST_CASE("X-complex labels are the masks of the right size") {
  for (int q = 0; q <= 4; ++q) {
    auto labels = complex_labels(ComplexId::XComplex, q);
    long expect = 1;
    // binom(4, q)
    for (int j = 0; j < q; ++j)
      expect = expect * (4 - j) / (j + 1);
    CHECK((long)labels.size() == expect);
    for (int m : labels)
      CHECK(__builtin_popcount((unsigned)m) == q);
  }
  auto s = AlgebraSpec::three_lines(Rational(1));
  CHECK(label_weight(*s, ComplexId::XComplex, 2, 3) == 2);  // x^ /\ y^
  CHECK(label_weight(*s, ComplexId::XComplex, 2, 12) == 1); // D^ /\ E^
  CHECK(label_name(ComplexId::XComplex, 2, 5) == "x^/\\D^");
}

TEST_CASE("vector round trip through a slab") {
  auto s = AlgebraSpec::three_lines(Rational(1));
  SliceBasis b = slice_basis({ComplexId::HochschildKoszul, 1, 1, 3, 0}, s);
  for (long j = 0; j < b.dim(); ++j) {
    SparseVec v{{j, Rational(1)}};
    CHECK(to_vector(from_vector(v, b), b) == v);
  }
  // an element outside the slab throws
  std::map<int, PbwElement> comp;
  PbwElement e(s);
  e.add_term({0, 0, 0, 9}, 1); // E^9 above the bound
  comp.emplace(0, e);
  CHECK_THROWS_AS(to_vector(comp, b), std::invalid_argument);
}

TEST_CASE("stabilization over simultaneous increments") {
  // constant: stabilizes with a three-entry trace
  auto [d1, c1] = stabilize([](int, int) { return std::vector<long>{7}; },
                            4, 2);
  CHECK(c1.stable);
  CHECK(d1 == std::vector<long>{7});
  CHECK(c1.trace.size() == 3);
  CHECK(c1.trace[0].e_bound == 4);
  CHECK(c1.trace[0].slack == 2);
  CHECK(c1.trace[1].e_bound == 5);
  CHECK(c1.trace[1].slack == 3);

  // eventually constant: first certified value is the plateau entry
  auto [d2, c2] = stabilize(
      [](int n, int) { return std::vector<long>{std::min<long>(n, 9)}; }, 4, 2);
  CHECK(c2.stable);
  CHECK(d2 == std::vector<long>{9});

  // never constant: verdict not stable past the cap
  auto [d3, c3] =
      stabilize([](int n, int) { return std::vector<long>{(long)n}; }, 4, 2,
                10);
  CHECK_FALSE(c3.stable);
}
