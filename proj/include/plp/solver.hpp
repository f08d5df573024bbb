#pragma once
// Desk-scale answer-set solver for ground normal programs with constraints.

#include <plp/ast.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace plp {

using AtomId = std::uint32_t;
using AtomSet = std::set<AtomId>;

struct NormalRule {
	std::optional<AtomId> head;      // nullopt: constraint
	std::vector<AtomId>   positive;
	std::vector<AtomId>   negative;  // atoms under `not`

	friend bool operator==(const NormalRule&, const NormalRule&) = default;
};

/// Ground program without strong negation or preference atoms, over interned atoms.
class NormalProgram {
public:
	NormalProgram() = default;

	// Throws SolverError on variables, strong negation, preference atoms or named rules.
	static NormalProgram from_rules(std::span<const Rule> rules);

	AtomId intern(const Literal& atom);
	std::optional<AtomId> find(const Literal& atom) const;
	void add_rule(NormalRule rule);

	const std::vector<NormalRule>& rules() const noexcept { return rules_; }
	const Literal& atom(AtomId id) const { return atoms_.at(id); }
	std::size_t atom_count() const noexcept { return atoms_.size(); }

	AtomSet atoms_of(std::span<const Literal> atoms) const;
	AnswerSet to_answer_set(const AtomSet& atoms) const;

	// Same atom table, different rules.
	NormalProgram with_rules(std::vector<NormalRule> rules) const;

private:
	std::vector<Literal>       atoms_;
	std::map<Literal, AtomId>  index_;
	std::vector<NormalRule>    rules_;
};

/// Gelfond-Lifschitz reduct: drops every rule with `not a` for some a in x and
/// strips the remaining naf literals.
NormalProgram reduct(const NormalProgram& program, const AtomSet& x);

/// Least model of a naf-free program, or nullopt (incoherent) when the
/// fixpoint satisfies the body of a constraint. Throws SolverError if a
/// rule still carries naf literals.
std::optional<AtomSet> least_model(const NormalProgram& program);

struct SolveOptions {
	// Maximum number of search nodes (partial assignments) visited.
	std::uint64_t budget = std::uint64_t{1} << 24;
};

/// All stable models, as atom sets, sorted by their sorted atom ids.
/// Throws ResourceError when the search exceeds options.budget.
std::vector<AtomSet> stable_models(const NormalProgram& program, const SolveOptions& options = {});

/// Stable models as answer sets, sorted by their (sorted) literal lists.
std::vector<AnswerSet> answer_sets(const NormalProgram& program, const SolveOptions& options = {});
std::vector<AnswerSet> answer_sets(std::span<const Rule> rules, const SolveOptions& options = {});

} // namespace plp
