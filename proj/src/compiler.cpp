#include <plp/compiler.hpp>
#include <plp/error.hpp>

#include <algorithm>
#include <map>

namespace plp {

const std::set<std::string>& CompiledProgram::control_predicates() {
	static const std::set<std::string> preds{
		"name", "ap", "bl", "ok", "oko", "prec", "neg_prec",
		"memb", "allap", "blset", "resolved", "okset", "setname"};
	return preds;
}

namespace {

Literal atom(std::string pred, std::vector<Term> args = {}) {
	return Literal{std::move(pred), std::move(args), false};
}

BodyElement pos(Literal l) { return BodyLiteral{false, std::move(l)}; }
BodyElement naf(Literal l) { return BodyLiteral{true, std::move(l)}; }

Rule make_rule(std::optional<Literal> head, std::vector<BodyElement> body = {}) {
	Rule r;
	if (head) { r.head = std::move(*head); }
	r.body = std::move(body);
	return r;
}

Literal prec(const Term& lesser, const Term& greater) { return atom("prec", {lesser, greater}); }

// neg q(t) -> neg_q(t); everything else unchanged.
Literal regular(const Literal& lit) {
	if (!lit.strong_neg) { return lit; }
	return atom(kNegPrefix + lit.predicate, lit.args);
}

std::vector<BodyElement> regular_body(const std::vector<BodyElement>& body) {
	std::vector<BodyElement> out;
	out.reserve(body.size());
	for (const auto& el : body) {
		if (const auto* bl = std::get_if<BodyLiteral>(&el)) {
			out.emplace_back(BodyLiteral{bl->naf, regular(bl->lit)});
		}
		else {
			const auto& pa = std::get<PrefAtom>(el);
			out.push_back(pos(prec(pa.lesser, pa.greater)));
		}
	}
	return out;
}

std::optional<Literal> regular_head(const Head& head) {
	if (const auto* lit = std::get_if<Literal>(&head)) { return regular(*lit); }
	if (const auto* pa = std::get_if<PrefAtom>(&head)) { return prec(pa->lesser, pa->greater); }
	return std::nullopt;
}

template <class P, class F>
void for_each_pref(P& p, F&& f) {
	for (auto& r : p.rules) {
		if (auto* pa = std::get_if<PrefAtom>(&r.head)) { f(*pa); }
		for (auto& el : r.body) {
			if (auto* pa = std::get_if<PrefAtom>(&el)) { f(*pa); }
		}
	}
}

template <class F>
void for_each_literal(const OrderedProgram& p, F&& f) {
	for (const auto& r : p.rules) {
		if (const auto* lit = std::get_if<Literal>(&r.head)) { f(*lit); }
		for (const auto& el : r.body) {
			if (const auto* bl = std::get_if<BodyLiteral>(&el)) { f(bl->lit); }
		}
	}
}

void require_flat(const OrderedProgram& p) {
	if (!p.is_ground()) { throw CompileError("compile needs a ground program; run the grounder first"); }
	auto check = [](const Term& t, const char* what) {
		if (!t.is_constant()) {
			throw CompileError(std::string(what) + " '" + to_string(t) + "' is not a constant; flatten names first");
		}
	};
	for (const auto& r : p.rules) {
		if (r.name) { check(*r.name, "rule name"); }
	}
	for_each_pref(p, [&](const PrefAtom& pa) {
		check(pa.lesser, "preference argument");
		check(pa.greater, "preference argument");
	});
	for (const auto& d : p.set_decls) {
		check(d.set_name, "set name");
		for (const auto& m : d.members) { check(m, "set member"); }
	}
}

void check_predicates(const OrderedProgram& p) {
	const auto& control = CompiledProgram::control_predicates();
	std::set<std::string> plain, negated;
	for_each_literal(p, [&](const Literal& lit) {
		if (control.count(lit.predicate)) {
			throw CompileError("predicate '" + lit.predicate + "' is reserved for generated rules");
		}
		(lit.strong_neg ? negated : plain).insert(lit.predicate);
	});
	for (const auto& q : negated) {
		if (plain.count(kNegPrefix + q)) {
			throw CompileError("predicate '" + std::string(kNegPrefix) + q
			                   + "' clashes with the compiled form of 'neg " + q + "'");
		}
	}
}

// Resolves rule-level preferences in a program with set declarations to
// singleton sets, declaring the sets that are missing.
OrderedProgram lift_to_sets(OrderedProgram p) {
	std::set<Term> names, sets;
	for (const auto& r : p.rules) {
		if (r.name) { names.insert(*r.name); }
	}
	for (const auto& d : p.set_decls) { sets.insert(d.set_name); }

	std::map<Term, Term> singleton;
	for (const auto& d : p.set_decls) {
		if (d.members.size() == 1) { singleton.emplace(d.members.front(), d.set_name); }
	}
	auto lift = [&](Term& t) {
		if (sets.count(t)) { return; }
		if (!names.count(t)) {
			throw CompileError("preference atom mentions '" + to_string(t) + "', which is neither a rule nor a set name");
		}
		auto it = singleton.find(t);
		if (it == singleton.end()) {
			std::string base = "single_" + t.symbol, sym = base;
			for (int k = 1; names.count(Term::constant(sym)) || sets.count(Term::constant(sym)); ++k) {
				sym = base + "_" + std::to_string(k);
			}
			Term set_name = Term::constant(sym);
			p.set_decls.push_back(SetDecl{set_name, {t}});
			sets.insert(set_name);
			it = singleton.emplace(t, set_name).first;
		}
		t = it->second;
	};
	for_each_pref(p, [&](PrefAtom& pa) {
		lift(pa.lesser);
		lift(pa.greater);
	});
	return p;
}

void check_rule_prefs(OrderedProgram& p) {
	std::set<Term> names;
	for (const auto& r : p.rules) {
		if (r.name) { names.insert(*r.name); }
	}
	for_each_pref(p, [&](const PrefAtom& pa) {
		for (const Term* t : {&pa.lesser, &pa.greater}) {
			if (!names.count(*t)) {
				throw CompileError("preference atom mentions '" + to_string(*t) + "', which is not a rule name");
			}
		}
	});
}

} // namespace

std::vector<Rule> compile_sets(const OrderedProgram& program) {
	std::vector<Rule> out;
	if (program.set_decls.empty()) { return out; }

	std::vector<Term> sets;
	for (const auto& d : program.set_decls) { sets.push_back(d.set_name); }
	const std::set<Term> known(sets.begin(), sets.end());
	for_each_pref(program, [&](const PrefAtom& pa) {
		for (const Term* t : {&pa.lesser, &pa.greater}) {
			if (!known.count(*t)) {
				throw CompileError("preference atom mentions '" + to_string(*t) + "', which is not a set name");
			}
		}
	});

	for (const auto& d : program.set_decls) {
		out.push_back(make_rule(atom("setname", {d.set_name})));
		for (const auto& m : d.members) { out.push_back(make_rule(atom("memb", {d.set_name, m}))); }
	}
	for (const auto& d : program.set_decls) {
		std::vector<BodyElement> all;
		for (const auto& m : d.members) { all.push_back(pos(atom("ap", {m}))); }
		out.push_back(make_rule(atom("allap", {d.set_name}), std::move(all)));
		for (const auto& m : d.members) {
			out.push_back(make_rule(atom("blset", {d.set_name}), {pos(atom("bl", {m}))}));
		}
		out.push_back(make_rule(atom("resolved", {d.set_name}), {pos(atom("allap", {d.set_name}))}));
		out.push_back(make_rule(atom("resolved", {d.set_name}), {pos(atom("blset", {d.set_name}))}));
	}
	for (const auto& s : sets) {
		out.push_back(make_rule(atom("okset", {s, s}), {pos(atom("setname", {s}))}));
	}
	for (const auto& s : sets) {
		for (const auto& m : sets) {
			out.push_back(make_rule(atom("okset", {s, m}),
			                        {pos(atom("setname", {s})), pos(atom("setname", {m})), naf(prec(s, m))}));
			out.push_back(make_rule(atom("okset", {s, m}),
			                        {pos(atom("setname", {s})), pos(atom("setname", {m})), pos(prec(s, m)),
			                         pos(atom("resolved", {m}))}));
		}
	}
	// A rule may be applied once any set containing it has every more
	// preferred set resolved.
	for (const auto& r : program.rules) {
		if (!r.name) { continue; }
		bool member = false;
		for (const auto& d : program.set_decls) {
			if (std::find(d.members.begin(), d.members.end(), *r.name) == d.members.end()) { continue; }
			member = true;
			std::vector<BodyElement> body{pos(atom("name", {*r.name}))};
			for (const auto& m : sets) { body.push_back(pos(atom("okset", {d.set_name, m}))); }
			out.push_back(make_rule(atom("ok", {*r.name}), std::move(body)));
		}
		if (!member) { out.push_back(make_rule(atom("ok", {*r.name}), {pos(atom("name", {*r.name}))})); }
	}
	return out;
}

CompiledProgram compile(const OrderedProgram& input, const CompileOptions& options) {
	require_flat(input);
	validate(input);
	check_predicates(input);

	OrderedProgram program = input;
	if (program.set_decls.empty()) { check_rule_prefs(program); }
	else { program = lift_to_sets(std::move(program)); }

	CompiledProgram out;
	auto& rules = out.rules;
	const std::vector<Term> names = program.rule_names();

	for (const auto& r : program.rules) {
		if (r.name) { continue; }
		rules.push_back(make_rule(regular_head(r.head), regular_body(r.body)));
	}

	for (const auto& r : program.rules) {
		if (!r.name) { continue; }
		const Term& n = *r.name;
		const Literal ap = atom("ap", {n}), ok = atom("ok", {n}), bl = atom("bl", {n});
		rules.push_back(make_rule(regular_head(r.head), {pos(ap)}));

		std::vector<BodyElement> ap_body{pos(ok)};
		for (auto& el : regular_body(r.body)) { ap_body.push_back(std::move(el)); }
		rules.push_back(make_rule(ap, ap_body));

		for (std::size_t i = 1; i < ap_body.size(); ++i) {
			const auto& b = std::get<BodyLiteral>(ap_body[i]);
			rules.push_back(make_rule(bl, {pos(ok), BodyLiteral{!b.naf, b.lit}}));
		}
	}

	if (program.set_decls.empty()) {
		for (const auto& n : names) {
			std::vector<BodyElement> body{pos(atom("name", {n}))};
			for (const auto& m : names) { body.push_back(pos(atom("oko", {n, m}))); }
			rules.push_back(make_rule(atom("ok", {n}), std::move(body)));
		}
		for (const auto& n : names) {
			rules.push_back(make_rule(atom("oko", {n, n}), {pos(atom("name", {n}))}));
		}
		for (const auto& n : names) {
			for (const auto& m : names) {
				const Literal guard_n = atom("name", {n}), guard_m = atom("name", {m}), oko = atom("oko", {n, m});
				rules.push_back(make_rule(oko, {pos(guard_n), pos(guard_m), naf(prec(n, m))}));
				rules.push_back(make_rule(oko, {pos(guard_n), pos(guard_m), pos(prec(n, m)), pos(atom("ap", {m}))}));
				rules.push_back(make_rule(oko, {pos(guard_n), pos(guard_m), pos(prec(n, m)), pos(atom("bl", {m}))}));
			}
		}
	}
	else {
		for (auto& r : compile_sets(program)) { rules.push_back(std::move(r)); }
	}

	for (const auto& n : names) { rules.push_back(make_rule(atom("name", {n}))); }

	if (options.coherence) {
		std::set<Literal> negated;
		for_each_literal(program, [&](const Literal& lit) {
			if (lit.strong_neg) { negated.insert(lit.complement()); }
		});
		for (const auto& q : negated) {
			rules.push_back(make_rule(std::nullopt, {pos(q), pos(regular(q.complement()))}));
		}
	}

	if (options.emit_neg_prec) {
		std::vector<Term> domain = names;
		const char* guard = "name";
		if (!program.set_decls.empty()) {
			domain.clear();
			for (const auto& d : program.set_decls) { domain.push_back(d.set_name); }
			guard = "setname";
		}
		for (const auto& n : domain) {
			for (const auto& m : domain) {
				rules.push_back(make_rule(atom("neg_prec", {m, n}),
				                          {pos(atom(guard, {n})), pos(atom(guard, {m})), pos(prec(n, m))}));
			}
		}
	}
	return out;
}

OrderedProgram erase_order(const OrderedProgram& program) {
	OrderedProgram out;
	for (const auto& r : program.rules) {
		if (std::holds_alternative<PrefAtom>(r.head)) { continue; }
		Rule plain;
		plain.head = r.head;
		for (const auto& el : r.body) {
			if (std::holds_alternative<BodyLiteral>(el)) { plain.body.push_back(el); }
		}
		out.rules.push_back(std::move(plain));
	}
	return out;
}

} // namespace plp
