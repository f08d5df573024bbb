// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <plp/compiler.hpp>
#include <plp/emitter.hpp>
#include <plp/error.hpp>
#include <plp/grounder.hpp>
#include <plp/parser.hpp>
#include <plp/pipeline.hpp>
#include <plp/solver.hpp>

#include "support/corpus.hpp"
#include "support/oracle.hpp"
#include "support/random_programs.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace plp;

namespace {

struct Outcome {
	bool        pass = true;
	std::string detail;
};

using Clock = std::chrono::steady_clock;

// Raw answer sets of compiled programs from the penguin, order-erased
// penguin, birds, cars and no-preference runs, for the exclusivity check.
std::vector<AnswerSet> g_control_sets;

AnswerSet set_of(std::initializer_list<const char*> atoms) {
	AnswerSet s;
	for (const char* a : atoms) { s.literals.insert(parse_literal(a)); }
	return s;
}

std::string show(const std::vector<AnswerSet>& sets) {
	std::string out;
	for (const auto& s : sets) { out += render_answer_set(s, Dialect::Core) + " "; }
	return out;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Outcome within(Outcome o, Clock::time_point t0, double limit) {
	double took = seconds_since(t0);
	if (took >= limit) {
		o.pass = false;
		o.detail += " took " + std::to_string(took) + " s";
	}
	return o;
}

// Answer sets of an unordered extended program, computed here rather than
// through compile(): neg p becomes a fresh atom neg_p plus `:- p, neg_p.`
std::vector<AnswerSet> plain_answer_sets(const OrderedProgram& program) {
	auto rename = [](Literal l) {
		if (l.strong_neg) {
			l.strong_neg = false;
			l.predicate = "neg_" + l.predicate;
		}
		return l;
	};
	std::vector<Rule> rules;
	std::set<Literal> negated;
	for (const auto& r : program.rules) {
		Rule out;
		if (const auto* h = std::get_if<Literal>(&r.head)) {
			if (h->strong_neg) { negated.insert(*h); }
			out.head = rename(*h);
		}
		for (const auto& el : r.body) {
			auto bl = std::get<BodyLiteral>(el);
			if (bl.lit.strong_neg) { negated.insert(bl.lit); }
			bl.lit = rename(bl.lit);
			out.body.emplace_back(bl);
		}
		rules.push_back(std::move(out));
	}
	for (const auto& n : negated) {
		Rule c;
		c.body.emplace_back(BodyLiteral{false, n.complement()});
		c.body.emplace_back(BodyLiteral{false, rename(n)});
		rules.push_back(std::move(c));
	}
	auto sets = answer_sets(rules);
	for (auto& s : sets) { s = filter_nice(s); }
	std::sort(sets.begin(), sets.end());
	return sets;
}

std::vector<AnswerSet> nice_sorted(std::vector<AnswerSet> sets) {
	for (auto& s : sets) { s = filter_nice(s); }
	std::sort(sets.begin(), sets.end());
	return sets;
}

Outcome penguin_preferred_set() {
	auto t0 = Clock::now();
	auto compiled = run_pipeline(testing::read_corpus("penguin.olp")).compiled;
	auto sets = answer_sets(compiled.rules);
	g_control_sets.insert(g_control_sets.end(), sets.begin(), sets.end());
	if (sets.size() != 1) { return {false, std::to_string(sets.size()) + " answer sets"}; }
	AnswerSet got;
	for (const auto& l : sets[0].literals) {
		if (l.predicate != "true" && l.predicate != "neg_prec") { got.literals.insert(l); }
	}
	auto want = set_of({"ap(2)", "bl(1)", "ok(1)", "ok(2)", "oko(1,1)", "oko(1,2)", "oko(2,1)", "oko(2,2)",
	                    "prec(1,2)", "name(1)", "name(2)", "penguin(tweety)", "bird(tweety)", "neg_flies(tweety)"});
	Outcome o;
	if (got != want) { o = {false, "got " + render_answer_set(got, Dialect::Core)}; }
	return within(o, t0, 1.0);
}

Outcome penguin_without_order() {
	auto t0 = Clock::now();
	auto erased = erase_order(parse_program(testing::read_corpus("penguin.olp")));
	auto sets = answer_sets(compile(erased).rules);
	g_control_sets.insert(g_control_sets.end(), sets.begin(), sets.end());
	Outcome o;
	auto flies = parse_literal("flies(tweety)");
	auto neg_flies = parse_literal("neg_flies(tweety)");
	bool shape = sets.size() == 2
	             && ((sets[0].contains(flies) && sets[1].contains(neg_flies))
	                 || (sets[1].contains(flies) && sets[0].contains(neg_flies)))
	             && sets[0].contains(flies) != sets[0].contains(neg_flies)
	             && sets[1].contains(flies) != sets[1].contains(neg_flies);
	if (!shape) { o = {false, "got " + show(sets)}; }
	return within(o, t0, 1.0);
}

Outcome birds_sets() {
	auto t0 = Clock::now();
	auto compiled = run_pipeline(testing::read_corpus("birds.olp")).compiled;
	auto raw = answer_sets(compiled.rules);
	g_control_sets.insert(g_control_sets.end(), raw.begin(), raw.end());
	auto got = nice_sorted(raw);
	auto base = {"bird(tweety)", "bird(opus)", "bird(scully)", "penguin(tweety)", "water_shy(tweety)",
	             "emu(opus)", "toy(scully)"};
	std::vector<AnswerSet> want;
	for (auto extra : std::vector<std::vector<const char*>>{
	         {"flies(tweety)", "flies(scully)", "neg flies(opus)"},
	         {"flies(scully)", "neg flies(tweety)", "neg flies(opus)"},
	         {"flies(tweety)", "neg flies(opus)", "neg flies(scully)"},
	         {"neg flies(tweety)", "neg flies(opus)", "neg flies(scully)"}}) {
		AnswerSet s;
		for (const char* a : base) { s.literals.insert(parse_literal(a)); }
		for (const char* a : extra) { s.literals.insert(parse_literal(a)); }
		want.push_back(std::move(s));
	}
	std::sort(want.begin(), want.end());
	Outcome o;
	if (got != want) { o = {false, "got " + show(got)}; }
	return within(o, t0, 30.0);
}

Outcome cars_set() {
	auto t0 = Clock::now();
	auto compiled = run_pipeline(testing::read_corpus("cars.olp")).compiled;
	auto raw = answer_sets(compiled.rules);
	g_control_sets.insert(g_control_sets.end(), raw.begin(), raw.end());
	auto got = nice_sorted(raw);
	Outcome o;
	if (got != std::vector<AnswerSet>{set_of({"powerful", "safe", "neg expensive"})}) {
		o = {false, "got " + show(got)};
	}
	return within(o, t0, 5.0);
}

Outcome name_flattening() {
	auto compiled = run_pipeline(std::string_view("p :- name(r(f(c))).")).compiled;
	bool fact = false;
	for (const auto& r : compiled.rules) {
		if (r.is_fact() && std::get<Literal>(r.head) == parse_literal("name(r_f_c)")) { fact = true; }
	}
	if (!fact) { return {false, "no name(r_f_c) fact"}; }
	try {
		run_pipeline(std::string_view("p :- name(r(f_c)). q :- name(r(f(c)))."));
	}
	catch (const GroundingError& e) {
		std::string msg = e.what();
		if (msg.find("r(f_c)") == std::string::npos || msg.find("r(f(c))") == std::string::npos) {
			return {false, "error does not name both terms: " + msg};
		}
		return {};
	}
	return {false, "collision accepted"};
}

Outcome size_bound() {
	testing::Rng rng(601);
	int violations = 0;
	std::string worst;
	for (int i = 0; i < 100; ++i) {
		testing::OrderedShape shape;
		shape.max_named = 30;
		shape.max_unnamed = 10;
		shape.domain_atoms = 10;
		shape.prefs = i % 2 ? testing::Prefs::Dynamic : testing::Prefs::Static;
		shape.integer_names = i % 3 == 0;
		auto p = testing::random_ordered_program(rng, shape);
		std::size_t u = 0, r = 0, b = 0;
		for (const auto& rule : p.rules) {
			if (!rule.name) { ++u; }
			else {
				++r;
				b += rule.body.size();
			}
		}
		std::size_t n = r;
		std::size_t bound = u + 2 * r + b + 2 * n + 3 * n * n + n;
		std::size_t got = compile(p, {.coherence = false}).rules.size();
		if (got > bound) {
			++violations;
			worst = std::to_string(got) + " > " + std::to_string(bound);
		}
	}
	if (violations) { return {false, std::to_string(violations) + " violations, e.g. " + worst}; }
	return {};
}

Outcome no_preference_equivalence() {
	auto t0 = Clock::now();
	testing::Rng rng(701);
	int violations = 0;
	std::string example;
	for (int i = 0; i < 100; ++i) {
		testing::OrderedShape shape;
		shape.prefs = testing::Prefs::None;
		shape.integer_names = i % 2 == 0;
		auto p = testing::random_ordered_program(rng, shape);
		auto raw = answer_sets(compile(p).rules);
		g_control_sets.insert(g_control_sets.end(), raw.begin(), raw.end());
		auto got = nice_sorted(raw);
		auto want = plain_answer_sets(erase_order(p));
		if (got != want) {
			++violations;
			example = emit(p, Dialect::Core);
		}
	}
	Outcome o;
	if (violations) { o = {false, std::to_string(violations) + " violations, e.g.\n" + example}; }
	return within(o, t0, 60.0);
}

Outcome projection_soundness() {
	std::vector<OrderedProgram> programs;
	for (const char* f : {"penguin.olp", "birds.olp", "cars.olp"}) {
		programs.push_back(flatten_names(ground_program(parse_program(testing::read_corpus(f)))));
	}
	testing::Rng rng(801);
	for (int i = 0; i < 200; ++i) {
		testing::OrderedShape shape;
		shape.prefs = i % 2 ? testing::Prefs::Dynamic : testing::Prefs::Static;
		shape.integer_names = i % 4 == 0;
		programs.push_back(testing::random_ordered_program(rng, shape));
	}
	int violations = 0, checked = 0;
	std::string example;
	for (const auto& p : programs) {
		auto erased = plain_answer_sets(erase_order(p));
		for (const auto& s : answer_sets(compile(p).rules)) {
			++checked;
			if (!std::binary_search(erased.begin(), erased.end(), filter_nice(s))) {
				++violations;
				example = emit(p, Dialect::Core);
			}
		}
	}
	if (violations) { return {false, std::to_string(violations) + " violations, e.g.\n" + example}; }
	return {true, std::to_string(checked) + " answer sets checked"};
}

Outcome solver_oracle() {
	auto t0 = Clock::now();
	testing::Rng rng(901);
	int violations = 0;
	for (int i = 0; i < 200; ++i) {
		auto rules = testing::random_normal_program(rng, 15);
		if (answer_sets(rules) != testing::oracle_answer_sets(rules)) { ++violations; }
	}
	Outcome o;
	if (violations) { o = {false, std::to_string(violations) + " violations"}; }
	return within(o, t0, 60.0);
}

Outcome round_trip() {
	int violations = 0;
	for (const char* f : {"penguin.olp", "birds.olp", "cars.olp"}) {
		auto p = parse_program(testing::read_corpus(f));
		if (parse_program(emit(p, Dialect::Core)) != p) { ++violations; }
		auto compiled = run_pipeline(p).compiled;
		if (parse_regular_program(emit(compiled, Dialect::Core)) != compiled.rules) { ++violations; }
	}
	testing::Rng rng(1001);
	for (int i = 0; i < 100; ++i) {
		auto p = testing::random_surface_program(rng);
		if (parse_program(emit(p, Dialect::Core)) != p) { ++violations; }
	}
	if (violations) { return {false, std::to_string(violations) + " violations"}; }
	return {};
}

Outcome control_exclusivity() {
	int violations = 0;
	std::string example;
	for (const auto& s : g_control_sets) {
		for (const auto& l : s.literals) {
			if (l.predicate != "ok" || l.args.size() != 1) { continue; }
			bool ap = s.contains(Literal{"ap", l.args, false});
			bool bl = s.contains(Literal{"bl", l.args, false});
			if (ap == bl) {
				++violations;
				example = to_string(l.args[0]);
			}
		}
	}
	if (violations) { return {false, std::to_string(violations) + " violations, e.g. name " + example}; }
	return {true, std::to_string(g_control_sets.size()) + " answer sets checked"};
}

} // namespace

int main() {
	const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
	    {"penguin-preferred-set", penguin_preferred_set},
	    {"penguin-order-erased", penguin_without_order},
	    {"birds-dynamic-preferences", birds_sets},
	    {"cars-set-preferences", cars_set},
	    {"name-flattening", name_flattening},
	    {"compiled-size-bound", size_bound},
	    {"no-preference-equivalence", no_preference_equivalence},
	    {"projection-soundness", projection_soundness},
	    {"solver-oracle-equivalence", solver_oracle},
	    {"core-round-trip", round_trip},
	    {"ok-ap-bl-exclusivity", control_exclusivity},
	};
	int failed = 0;
	int index = 0;
	for (const auto& [name, check] : criteria) {
		++index;
		auto t0 = Clock::now();
		Outcome o;
		try {
			o = check();
		}
		catch (const std::exception& e) {
			o = {false, std::string("exception: ") + e.what()};
		}
		if (!o.pass) { ++failed; }
		std::printf("[%s] %2d %-28s %8.3f s%s%s\n", o.pass ? "PASS" : "FAIL", index, name, seconds_since(t0),
		            o.detail.empty() ? "" : "  ", o.detail.c_str());
	}
	std::printf("%d/%zu criteria passed\n", index - failed, criteria.size());
	return failed == 0 ? 0 : 1;
}
