#pragma once

#include <string>

#include "bicoh/formula.hpp"
#include "bicoh/term.hpp"

namespace bicoh {

// Concrete syntax. Binary formulas need parentheses except at the outermost
// level; `.` is right-associative composition and `( t )` groups.
Formula parse_formula(const std::string& text);
Term parse_term(const std::string& text);

}  // namespace bicoh
