#pragma once
// Term/literal/rule/program data model shared by every pipeline stage.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace plp {

/// A constant, variable or compound term. Rule names and atom arguments are terms.
///
/// Constants are identifiers starting with a lowercase letter or non-negative
/// integers spelled in decimal; variables start with an uppercase letter or `_`.
struct Term {
	enum class Kind : std::uint8_t { Constant, Variable, Compound };

	Kind              kind = Kind::Constant;
	std::string       symbol;  // constant/variable spelling, or the functor
	std::vector<Term> args;    // non-empty iff kind == Compound

	static Term constant(std::string symbol);
	static Term variable(std::string symbol);
	// Throws std::invalid_argument if args is empty.
	static Term compound(std::string functor, std::vector<Term> args);

	bool is_constant() const noexcept { return kind == Kind::Constant; }
	bool is_variable() const noexcept { return kind == Kind::Variable; }
	bool is_compound() const noexcept { return kind == Kind::Compound; }
	bool is_integer() const noexcept;
	bool is_ground() const noexcept;

	// Kind, then symbol (integers numerically, before identifiers), then args.
	friend std::strong_ordering operator<=>(const Term& lhs, const Term& rhs);
	friend bool operator==(const Term& lhs, const Term& rhs);
};

/// Atom with an optional classical negation sign (`neg` in the surface syntax).
struct Literal {
	std::string       predicate;
	std::vector<Term> args;
	bool              strong_neg = false;

	Literal complement() const;
	bool is_ground() const noexcept;

	friend std::strong_ordering operator<=>(const Literal& lhs, const Literal& rhs);
	friend bool operator==(const Literal&, const Literal&) = default;
};

/// `not lit` when naf is set.
struct BodyLiteral {
	bool    naf = false;
	Literal lit;

	friend bool operator==(const BodyLiteral&, const BodyLiteral&) = default;
};

/// `lesser < greater`: the rule (or set) named by `greater` has higher priority.
struct PrefAtom {
	Term lesser;
	Term greater;

	friend bool operator==(const PrefAtom&, const PrefAtom&) = default;
};

using BodyElement = std::variant<BodyLiteral, PrefAtom>;
// monostate marks a constraint (empty head).
using Head = std::variant<std::monostate, Literal, PrefAtom>;

struct Rule {
	std::optional<Term>      name;
	Head                     head;
	std::vector<BodyElement> body;

	bool is_fact() const noexcept { return body.empty() && !is_constraint(); }
	bool is_constraint() const noexcept { return std::holds_alternative<std::monostate>(head); }
	bool is_ground() const noexcept;

	friend bool operator==(const Rule&, const Rule&) = default;
};

struct SetDecl {
	Term              set_name;
	std::vector<Term> members;

	friend bool operator==(const SetDecl&, const SetDecl&) = default;
};

struct OrderedProgram {
	std::vector<Rule>    rules;
	std::vector<SetDecl> set_decls;

	bool is_ground() const noexcept;
	// Rule names in rule order.
	std::vector<Term> rule_names() const;

	friend bool operator==(const OrderedProgram&, const OrderedProgram&) = default;
};

/// Consistent set of ground literals.
struct AnswerSet {
	std::set<Literal> literals;

	bool consistent() const;
	bool contains(const Literal& lit) const { return literals.count(lit) != 0; }
	std::size_t size() const noexcept { return literals.size(); }

	friend auto operator<=>(const AnswerSet&, const AnswerSet&) = default;
};

using Binding = std::map<std::string, Term>;  // variable symbol -> replacement

// Simultaneous, recursive replacement of the variables bound in binding.
Term substitute(const Term& term, const Binding& binding);
Literal substitute(const Literal& lit, const Binding& binding);
Rule substitute(const Rule& rule, const Binding& binding);

// Every constant occurring anywhere in program, including inside compound
// terms, rule names, preference atoms and set declarations. Functors and
// predicate symbols are not terms and are excluded.
std::set<Term> collect_constants(const OrderedProgram& program);

// Variable symbols of rule (name, head and body) in order of first occurrence.
std::vector<std::string> collect_variables(const Rule& rule);

// Validates the OrderedProgram invariants; throws CompileError naming the first violation.
void validate(const OrderedProgram& program);

// Canonical text of a term, e.g. "r(f(c))". Compound arguments are joined with sep.
std::string to_string(const Term& term, const char* sep = ", ");
// "neg p(a)" style; args joined with sep.
std::string to_string(const Literal& lit, const char* sep = ", ");

} // namespace plp
