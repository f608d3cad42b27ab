#ifndef SGIDEALS_TESTS_FIXTURES_HPP_
#define SGIDEALS_TESTS_FIXTURES_HPP_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sgideals/semigroup.hpp"

namespace sgtest {

// Three-element semilattice: a absorbs, b and c are incomparable idempotents.
// Interior ideals: {a}, {a,b}, {a,c}, S. Same table as fixture example2.sg.
inline sgideals::Semigroup make_semilattice3() {
  return sgideals::Semigroup::from_table({"a", "b", "c"},
                                         {0, 0, 0, 0, 1, 0, 0, 0, 2});
}

// Left-zero semigroup of order 2: x*y = x. Regular, not duo; {x} is a right
// ideal, quasi-ideal and bi-ideal but neither a left nor an interior ideal.
inline sgideals::Semigroup make_left_zero2() {
  return sgideals::Semigroup::from_table({"x", "y"}, {0, 0, 1, 1});
}

// Null semigroup of order 2: every product is the zero a. Zero-degenerate.
inline sgideals::Semigroup make_null2() {
  return sgideals::Semigroup::from_table({"a", "b"}, {0, 0, 0, 0});
}

inline sgideals::Semigroup make_trivial() {
  return sgideals::Semigroup::from_table({"a"}, {0});
}

inline std::string fixture_path(std::string const& name) {
  return std::string(SGIDEALS_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(std::string const& name) {
  std::ifstream in(fixture_path(name));
  if (!in) {
    throw std::runtime_error("missing fixture: " + name);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace sgtest

#endif  // SGIDEALS_TESTS_FIXTURES_HPP_
