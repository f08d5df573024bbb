#include <plp/grounder.hpp>
#include <plp/error.hpp>

#include <algorithm>
#include <map>

namespace plp {

OrderedProgram ground_program(const OrderedProgram& program) {
	const std::set<Term> constant_set = collect_constants(program);
	const std::vector<Term> domain(constant_set.begin(), constant_set.end());

	OrderedProgram out;
	out.set_decls = program.set_decls;
	for (const auto& rule : program.rules) {
		auto vars = collect_variables(rule);
		if (vars.empty()) {
			out.rules.push_back(rule);
			continue;
		}
		if (domain.empty()) {
			throw GroundingError("cannot ground a program with variables but no constants");
		}
		std::sort(vars.begin(), vars.end());
		// Odometer over domain^k, first variable most significant.
		std::vector<std::size_t> digits(vars.size(), 0);
		for (;;) {
			Binding binding;
			for (std::size_t i = 0; i != vars.size(); ++i) { binding.emplace(vars[i], domain[digits[i]]); }
			out.rules.push_back(substitute(rule, binding));

			std::size_t pos = digits.size();
			while (pos > 0 && ++digits[pos - 1] == domain.size()) {
				digits[pos - 1] = 0;
				--pos;
			}
			if (pos == 0) { break; }
		}
	}

	std::set<Term> names;
	for (const auto& r : out.rules) {
		if (r.name && !names.insert(*r.name).second) {
			throw GroundingError("grounding produced duplicate rule name '" + to_string(*r.name) + "'");
		}
	}
	return out;
}

std::string flattened_symbol(const Term& term) {
	if (term.is_variable()) {
		throw GroundingError("cannot flatten non-ground term '" + to_string(term) + "'");
	}
	if (term.is_constant()) { return term.symbol; }
	std::string out = term.symbol;
	for (const auto& a : term.args) {
		out += '_';
		out += flattened_symbol(a);
	}
	return out;
}

namespace {
class Flattener {
public:
	Term operator()(const Term& t) {
		Term flat = Term::constant(flattened_symbol(t));
		auto [it, fresh] = origin_.emplace(flat.symbol, t);
		if (!fresh && it->second != t) {
			throw GroundingError("name collision: '" + to_string(it->second) + "' and '" + to_string(t)
			                     + "' both flatten to '" + flat.symbol + "'");
		}
		return flat;
	}

	PrefAtom operator()(const PrefAtom& pa) { return PrefAtom{(*this)(pa.lesser), (*this)(pa.greater)}; }

private:
	std::map<std::string, Term> origin_;
};
} // namespace

OrderedProgram flatten_names(const OrderedProgram& program) {
	if (!program.is_ground()) {
		throw GroundingError("name flattening needs a ground program");
	}
	Flattener flat;
	OrderedProgram out;
	out.rules.reserve(program.rules.size());
	for (const auto& rule : program.rules) {
		Rule r = rule;
		if (r.name) { r.name = flat(*r.name); }
		if (auto* pa = std::get_if<PrefAtom>(&r.head)) { *pa = flat(*pa); }
		for (auto& el : r.body) {
			if (auto* pa = std::get_if<PrefAtom>(&el)) { *pa = flat(*pa); }
		}
		out.rules.push_back(std::move(r));
	}
	for (const auto& decl : program.set_decls) {
		SetDecl d{flat(decl.set_name), {}};
		for (const auto& m : decl.members) { d.members.push_back(flat(m)); }
		out.set_decls.push_back(std::move(d));
	}
	return out;
}

} // namespace plp
