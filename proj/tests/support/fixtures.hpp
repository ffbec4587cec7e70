#ifndef STARCI_TESTS_FIXTURES_HPP
#define STARCI_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "starci/arrangement.hpp"

namespace starci::testing {

/// {x, y, x+y, z, w, z+w} in K[x, y, z, w].
inline Arrangement hartshorne(FieldSpec field = FieldSpec::rationals()) {
  return Arrangement::from_integers(field, 4,
                                    {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0},
                                     {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}});
}

/// {x, y, z, x+y+z}: 3-generic, n = 4.
inline Arrangement generic_four(FieldSpec field = FieldSpec::rationals()) {
  return Arrangement::from_integers(field, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
}

inline const std::vector<std::string>& xyzw() {
  static const std::vector<std::string> names{"x", "y", "z", "w"};
  return names;
}

}  // namespace starci::testing

#endif  // STARCI_TESTS_FIXTURES_HPP
