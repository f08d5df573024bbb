#pragma once

#include <plp/ast.hpp>

#include <string_view>
#include <vector>

namespace plp {

// Parses an ordered logic program:
//
//   statement  := rule | setdecl
//   rule       := head (":-" body)? "." | ":-" body "."
//   head       := literal | prefatom
//   body       := element ("," element)*
//   element    := "not"? "neg"? atom | prefatom
//   prefatom   := "("? term "<" term ")"?
//   setdecl    := constant ":" "[" term ("," term)* "]" "."
//
// `%` starts a comment that runs to the end of the line. A positive
// `name(T)` body atom becomes the rule's name and is removed from the body.
// Throws SourceError on malformed input or when the result violates the
// OrderedProgram invariants (duplicate names, dangling set members, ...).
OrderedProgram parse_program(std::string_view src);

// Parses a regular (compiled) extended program: `name/1` is an ordinary
// atom and neither preference atoms nor set declarations are accepted.
std::vector<Rule> parse_regular_program(std::string_view src);

Term parse_term(std::string_view src);

// A single possibly strong-negated atom, in `neg p(a)` or `-p(a)` form.
Literal parse_literal(std::string_view src);

} // namespace plp
