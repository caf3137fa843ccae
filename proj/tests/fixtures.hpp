#pragma once

// Shared worked-example BPAs used across the test suites.

#include "mulp/core.hpp"

namespace fixtures {

inline mulp::Frame abc_frame() {
  return mulp::Frame({"a", "b", "c"});
}

// m(a)=0.2, m(b)=0.3, m(c)=0.1, m(ab)=0.1, m(abc)=0.3
inline mulp::MassFunction step_example() {
  return mulp::build_mass_function(abc_frame(), {{{"a"}, 0.2},
                                                 {{"b"}, 0.3},
                                                 {{"c"}, 0.1},
                                                 {{"a", "b"}, 0.1},
                                                 {{"a", "b", "c"}, 0.3}});
}

// m(a)=0.3, m(b)=0.1, m(ab)=0.1, m(ac)=0.2, m(abc)=0.3
inline mulp::MassFunction sweep_example() {
  return mulp::build_mass_function(abc_frame(), {{{"a"}, 0.3},
                                                 {{"b"}, 0.1},
                                                 {{"a", "b"}, 0.1},
                                                 {{"a", "c"}, 0.2},
                                                 {{"a", "b", "c"}, 0.3}});
}

// m(b)=0.25, m(ac)=0.35, m(abc)=0.40: MulP(b) and MulP(c) swap order at
// q* = ln(10/19)/ln(8/15).
inline mulp::MassFunction crossing_example() {
  return mulp::build_mass_function(
      abc_frame(), {{{"b"}, 0.25}, {{"a", "c"}, 0.35}, {{"a", "b", "c"}, 0.40}});
}

}  // namespace fixtures
