#pragma once

#include "lrh/hochschild.hpp"

#include <vector>

namespace lrh::testing {

// The distinguished 1-cocycles of degrees 0 and 1 for three lines with
// parameter t.  Indices follow the order used throughout the test suite:
// degree 0 gives five classes, degree 1 gives eight.

inline std::vector<Cochain> degree0_cocycles(const SpecPtr &s) {
  Rational t = s->slopes.at(1);
  auto x = gen_x(s), y = gen_y(s), D = gen_D(s), E = gen_E(s);
  PbwElement yE = multiply(y, E);
  return {
      cochain1(s, -yE + D, yE * t),
      cochain1(s, y, PbwElement(s)),
      cochain1(s, PbwElement(s), x),
      cochain1(s, PbwElement(s), y),
      cochain1(s, PbwElement(s), D),
  };
}

inline std::vector<Cochain> degree1_cocycles(const SpecPtr &s) {
  Rational t = s->slopes.at(1);
  auto x = gen_x(s), y = gen_y(s), D = gen_D(s), E = gen_E(s);
  PbwElement F = from_polynomial(s, s->F);
  PbwElement D2 = multiply(D, D);
  PbwElement E2 = multiply(E, E);
  PbwElement yDE = multiply(y, multiply(D, E));
  PbwElement y2 = multiply(y, y);
  return {
      cochain1(s, D2 - yDE * 2 + multiply(y2, E2 - E),
               yDE * (t * 2) + multiply(F, E) * t + multiply(y2, E - E2) * t),
      cochain1(s, multiply(y2, E) * Rational(-1) + multiply(y, D),
               multiply(y2, E) * t),
      cochain1(s, y2, PbwElement(s)),
      cochain1(s, PbwElement(s), multiply(x, x)),
      cochain1(s, PbwElement(s), multiply(x, y)),
      cochain1(s, PbwElement(s), multiply(x, D)),
      cochain1(s, PbwElement(s), multiply(y, D)),
      cochain1(s, PbwElement(s), D2),
  };
}

} // namespace lrh::testing
