#pragma once

#include <string_view>

#include "decidua/flowchart/ast.hpp"

namespace decidua::flowchart {

// Parses a program of the shape
//
//   var x in 0..3; var y in 0..1;
//   while 0 < x do x := x - 1 od
//
// Declarations come first, each binding a variable to the range 0..bound.
// Statements are skip, assignment, sequencing with ';', if/then/else/fi and
// while/do/od; predicates combine comparisons (=, <, <=) with not/and/or and
// the constants true, false, undef; arithmetic has +, -, * with the usual
// precedence. '#' starts a line comment. Syntax and declaration problems are
// reported with line and column.
Module parse_program(std::string_view source, long state_cap = kDefaultStateCap);

}  // namespace decidua::flowchart
