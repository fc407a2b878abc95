#pragma once

#include "scs/constraints.hpp"

#include <optional>
#include <string>

namespace scs {

/// Parsed constraint-spec file. Line oriented:
///   alphabet 01            (single characters)  or  alphabet a,b,c
///   k 2
///   constraint 11 <= 0.205
///   constraint 000 + 2*111 - 1/2*101 = 0       (relations: <=, <, =)
///   eps 0.005      m 10      p 3      q 4      mode block
/// '#' starts a comment. Rationals are "p/q", integers, or decimals, parsed
/// exactly.
struct Spec {
  AlphabetPtr alphabet;
  int k = 0;
  std::vector<LinearConstraint> constraints;
  std::optional<Rational> eps;
  std::optional<int> m, p, q;
  std::optional<std::string> mode;

  ConstraintSet constraint_set() const { return ConstraintSet(alphabet, k, constraints); }
};

/// Throws parse_error with a "line N:" position annotation on any defect.
Spec parse_spec(const std::string& text);

/// Reads and parses a spec file from disk.
Spec load_spec(const std::string& path);

}  // namespace scs
