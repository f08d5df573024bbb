#pragma once

#include <plp/ast.hpp>

#include <string>

namespace plp {

/// Replaces every rule containing variables by all of its instances over the
/// program's constants (depth-0 Herbrand universe, no safety requirement).
/// Rule names are instantiated together with the rule. Instances appear in
/// input rule order, then in lexicographic order of the binding, with
/// variables taken in sorted order. Set declarations pass through.
///
/// Throws GroundingError if the program has variables but no constants, or if
/// two instances end up with the same name.
OrderedProgram ground_program(const OrderedProgram& program);

/// Rewrites compound rule names, preference-atom arguments and set names or
/// members into constants joining functor and arguments with `_`
/// (r(f(c)) becomes r_f_c). Ordinary atoms are left alone.
///
/// Throws GroundingError if the program is not ground or if two distinct
/// terms flatten to the same constant.
OrderedProgram flatten_names(const OrderedProgram& program);

// Spelling of term once flattened; term must be ground.
std::string flattened_symbol(const Term& term);

} // namespace plp
