#pragma once
// Translation of ground, name-flattened ordered programs into regular
// extended programs over the control predicates ap/bl/ok/oko/prec/name (and
// the set-level setname/memb/allap/blset/resolved/okset).

#include <plp/ast.hpp>

#include <set>
#include <string>
#include <vector>

namespace plp {

struct CompileOptions {
	// Emit `:- q(t), neg_q(t).` for every strongly negated ground atom.
	bool coherence = true;
	// Emit `neg_prec(M, N) :- name(N), name(M), prec(N, M).` over all name pairs.
	bool emit_neg_prec = false;
};

/// A regular program: no preference atoms (they became prec/2), no strong
/// negation (neg q became neg_q), no rule names. Constraints are allowed.
struct CompiledProgram {
	std::vector<Rule> rules;

	static const std::set<std::string>& control_predicates();

	friend bool operator==(const CompiledProgram&, const CompiledProgram&) = default;
};

// Prefix given to the fresh predicate standing for a strongly negated one.
inline constexpr const char* kNegPrefix = "neg_";

/// Compiles program; its answer sets are the preferred answer sets of the input.
///
/// Rule order of the result: unnamed rules in input order; for every named
/// rule (input order) its head rule, ap rule and bl rules; the ok/oko rules
/// (or the set encoding when sets are declared); name facts; coherence
/// constraints; neg_prec rules.
///
/// Throws CompileError if the input is not ground and flattened, uses a
/// reserved predicate, mentions an unknown name in a preference atom, or
/// would clash with a generated neg_ predicate.
CompiledProgram compile(const OrderedProgram& program, const CompileOptions& options = {});

/// Set-level ordering rules for a program whose preference atoms all relate
/// declared set names. Returns nothing when no sets are declared.
std::vector<Rule> compile_sets(const OrderedProgram& program);

/// The same program with all order information removed: names stripped,
/// preference-headed rules dropped, preference atoms removed from bodies and
/// set declarations dropped.
OrderedProgram erase_order(const OrderedProgram& program);

} // namespace plp
