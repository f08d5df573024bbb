#include <plp/ast.hpp>
#include <plp/error.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace plp {

Term Term::constant(std::string symbol) {
	return Term{Kind::Constant, std::move(symbol), {}};
}

Term Term::variable(std::string symbol) {
	return Term{Kind::Variable, std::move(symbol), {}};
}

Term Term::compound(std::string functor, std::vector<Term> args) {
	if (args.empty()) {
		throw std::invalid_argument("compound term '" + functor + "' needs at least one argument");
	}
	return Term{Kind::Compound, std::move(functor), std::move(args)};
}

bool Term::is_integer() const noexcept {
	return kind == Kind::Constant && !symbol.empty()
		&& std::all_of(symbol.begin(), symbol.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool Term::is_ground() const noexcept {
	switch (kind) {
		case Kind::Variable: return false;
		case Kind::Constant: return true;
		case Kind::Compound:
			return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
	}
	return true;
}

namespace {
std::strong_ordering compare_symbols(const Term& lhs, const Term& rhs) {
	if (lhs.kind == Term::Kind::Constant) {
		bool li = lhs.is_integer(), ri = rhs.is_integer();
		if (li != ri) { return li ? std::strong_ordering::less : std::strong_ordering::greater; }
		if (li) {
			// Decimal spellings compare numerically once leading zeros are gone.
			auto strip = [](const std::string& s) {
				auto pos = s.find_first_not_of('0');
				return pos == std::string::npos ? std::string("0") : s.substr(pos);
			};
			auto a = strip(lhs.symbol), b = strip(rhs.symbol);
			if (auto c = a.size() <=> b.size(); c != 0) { return c; }
			if (auto c = a <=> b; c != 0) { return c; }
		}
	}
	return lhs.symbol <=> rhs.symbol;
}
} // namespace

std::strong_ordering operator<=>(const Term& lhs, const Term& rhs) {
	if (auto c = lhs.kind <=> rhs.kind; c != 0) { return c; }
	if (auto c = compare_symbols(lhs, rhs); c != 0) { return c; }
	return std::lexicographical_compare_three_way(lhs.args.begin(), lhs.args.end(),
	                                              rhs.args.begin(), rhs.args.end());
}

bool operator==(const Term& lhs, const Term& rhs) {
	return lhs.kind == rhs.kind && lhs.symbol == rhs.symbol && lhs.args == rhs.args;
}

Literal Literal::complement() const {
	Literal out = *this;
	out.strong_neg = !strong_neg;
	return out;
}

bool Literal::is_ground() const noexcept {
	return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
}

std::strong_ordering operator<=>(const Literal& lhs, const Literal& rhs) {
	if (auto c = lhs.predicate <=> rhs.predicate; c != 0) { return c; }
	if (auto c = lhs.args.size() <=> rhs.args.size(); c != 0) { return c; }
	if (auto c = std::lexicographical_compare_three_way(lhs.args.begin(), lhs.args.end(),
	                                                    rhs.args.begin(), rhs.args.end());
	    c != 0) {
		return c;
	}
	return lhs.strong_neg <=> rhs.strong_neg;
}

namespace {
bool ground_element(const BodyElement& el) {
	if (const auto* bl = std::get_if<BodyLiteral>(&el)) { return bl->lit.is_ground(); }
	const auto& pa = std::get<PrefAtom>(el);
	return pa.lesser.is_ground() && pa.greater.is_ground();
}
} // namespace

bool Rule::is_ground() const noexcept {
	if (name && !name->is_ground()) { return false; }
	if (const auto* lit = std::get_if<Literal>(&head); lit && !lit->is_ground()) { return false; }
	if (const auto* pa = std::get_if<PrefAtom>(&head); pa && !(pa->lesser.is_ground() && pa->greater.is_ground())) {
		return false;
	}
	return std::all_of(body.begin(), body.end(), ground_element);
}

bool OrderedProgram::is_ground() const noexcept {
	if (!std::all_of(rules.begin(), rules.end(), [](const Rule& r) { return r.is_ground(); })) { return false; }
	for (const auto& decl : set_decls) {
		if (!decl.set_name.is_ground()) { return false; }
		for (const auto& m : decl.members) {
			if (!m.is_ground()) { return false; }
		}
	}
	return true;
}

std::vector<Term> OrderedProgram::rule_names() const {
	std::vector<Term> out;
	for (const auto& r : rules) {
		if (r.name) { out.push_back(*r.name); }
	}
	return out;
}

bool AnswerSet::consistent() const {
	return std::none_of(literals.begin(), literals.end(), [this](const Literal& l) {
		return l.strong_neg && contains(l.complement());
	});
}

Term substitute(const Term& term, const Binding& binding) {
	switch (term.kind) {
		case Term::Kind::Constant: return term;
		case Term::Kind::Variable: {
			auto it = binding.find(term.symbol);
			return it == binding.end() ? term : it->second;
		}
		case Term::Kind::Compound: {
			Term out{Term::Kind::Compound, term.symbol, {}};
			out.args.reserve(term.args.size());
			for (const auto& a : term.args) { out.args.push_back(substitute(a, binding)); }
			return out;
		}
	}
	return term;
}

Literal substitute(const Literal& lit, const Binding& binding) {
	Literal out{lit.predicate, {}, lit.strong_neg};
	out.args.reserve(lit.args.size());
	for (const auto& a : lit.args) { out.args.push_back(substitute(a, binding)); }
	return out;
}

namespace {
PrefAtom substitute(const PrefAtom& pa, const Binding& binding) {
	return PrefAtom{substitute(pa.lesser, binding), substitute(pa.greater, binding)};
}
} // namespace

Rule substitute(const Rule& rule, const Binding& binding) {
	Rule out;
	if (rule.name) { out.name = substitute(*rule.name, binding); }
	std::visit([&](const auto& h) {
		using T = std::decay_t<decltype(h)>;
		if constexpr (std::is_same_v<T, std::monostate>) { out.head = h; }
		else { out.head = substitute(h, binding); }
	}, rule.head);
	out.body.reserve(rule.body.size());
	for (const auto& el : rule.body) {
		if (const auto* bl = std::get_if<BodyLiteral>(&el)) {
			out.body.emplace_back(BodyLiteral{bl->naf, substitute(bl->lit, binding)});
		}
		else {
			out.body.emplace_back(substitute(std::get<PrefAtom>(el), binding));
		}
	}
	return out;
}

namespace {
template <class F>
void for_each_term(const Rule& rule, F&& f) {
	if (rule.name) { f(*rule.name); }
	auto pref = [&](const PrefAtom& pa) { f(pa.lesser); f(pa.greater); };
	auto lit  = [&](const Literal& l) { for (const auto& a : l.args) { f(a); } };
	if (const auto* h = std::get_if<Literal>(&rule.head)) { lit(*h); }
	if (const auto* h = std::get_if<PrefAtom>(&rule.head)) { pref(*h); }
	for (const auto& el : rule.body) {
		if (const auto* bl = std::get_if<BodyLiteral>(&el)) { lit(bl->lit); }
		else { pref(std::get<PrefAtom>(el)); }
	}
}

void constants_of(const Term& t, std::set<Term>& out) {
	switch (t.kind) {
		case Term::Kind::Constant: out.insert(t); break;
		case Term::Kind::Variable: break;
		case Term::Kind::Compound:
			for (const auto& a : t.args) { constants_of(a, out); }
			break;
	}
}

void variables_of(const Term& t, std::vector<std::string>& out) {
	if (t.is_variable()) {
		if (std::find(out.begin(), out.end(), t.symbol) == out.end()) { out.push_back(t.symbol); }
	}
	for (const auto& a : t.args) { variables_of(a, out); }
}
} // namespace

std::set<Term> collect_constants(const OrderedProgram& program) {
	std::set<Term> out;
	for (const auto& r : program.rules) {
		for_each_term(r, [&](const Term& t) { constants_of(t, out); });
	}
	for (const auto& d : program.set_decls) {
		constants_of(d.set_name, out);
		for (const auto& m : d.members) { constants_of(m, out); }
	}
	return out;
}

std::vector<std::string> collect_variables(const Rule& rule) {
	std::vector<std::string> out;
	for_each_term(rule, [&](const Term& t) { variables_of(t, out); });
	return out;
}

void validate(const OrderedProgram& program) {
	std::set<Term> names;
	for (const auto& r : program.rules) {
		if (r.name && !names.insert(*r.name).second) {
			throw CompileError("duplicate rule name '" + to_string(*r.name) + "'");
		}
	}
	std::set<Term> sets;
	for (const auto& d : program.set_decls) {
		if (!sets.insert(d.set_name).second) {
			throw CompileError("duplicate set name '" + to_string(d.set_name) + "'");
		}
		if (names.count(d.set_name)) {
			throw CompileError("'" + to_string(d.set_name) + "' is used both as a rule name and a set name");
		}
		if (d.members.empty()) {
			throw CompileError("set '" + to_string(d.set_name) + "' has no members");
		}
		for (const auto& m : d.members) {
			if (!names.count(m)) {
				throw CompileError("set '" + to_string(d.set_name) + "' member '" + to_string(m) + "' names no rule");
			}
		}
	}
}

std::string to_string(const Term& term, const char* sep) {
	if (!term.is_compound()) { return term.symbol; }
	std::string out = term.symbol + "(";
	for (std::size_t i = 0; i != term.args.size(); ++i) {
		if (i) { out += sep; }
		out += to_string(term.args[i], sep);
	}
	return out + ")";
}

std::string to_string(const Literal& lit, const char* sep) {
	std::string out = lit.strong_neg ? "neg " : "";
	out += lit.predicate;
	if (!lit.args.empty()) {
		out += "(";
		for (std::size_t i = 0; i != lit.args.size(); ++i) {
			if (i) { out += sep; }
			out += to_string(lit.args[i], sep);
		}
		out += ")";
	}
	return out;
}

} // namespace plp
