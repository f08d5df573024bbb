#include <plp/error.hpp>
#include <plp/grounder.hpp>
#include <plp/parser.hpp>

#include "support/corpus.hpp"
#include "support/random_programs.hpp"

#include <doctest.h>

using namespace plp;

namespace {
Term c(const char* s) { return Term::constant(s); }

std::string grounding_error(const OrderedProgram& p, bool flatten) {
	try {
		flatten ? flatten_names(p) : ground_program(p);
	}
	catch (const GroundingError& e) {
		return e.what();
	}
	return {};
}
} // namespace

TEST_SUITE("grounder") {

TEST_CASE("birds grounds over its three constants") {
	auto g = ground_program(parse_program(testing::read_corpus("birds.olp")));
	CHECK(g.is_ground());
	// 7 facts, 4 named rules x 3, 2 preference rules x 3
	CHECK(g.rules.size() == 25);
	auto names = g.rule_names();
	CHECK(names.size() == 12);
	CHECK(std::count(names.begin(), names.end(), Term::compound("r1", {c("tweety")})) == 1);
}

TEST_CASE("instances follow rule order, then binding order") {
	auto g = ground_program(parse_program("p(b). p(a). q(X) :- p(X). r(Y, X) :- q(X), q(Y)."));
	std::vector<std::string> heads;
	for (const auto& r : g.rules) { heads.push_back(to_string(std::get<Literal>(r.head))); }
	CHECK(heads == std::vector<std::string>{"p(b)", "p(a)", "q(a)", "q(b)", "r(a, a)", "r(b, a)", "r(a, b)", "r(b, b)"});
}

TEST_CASE("unsafe variables range over the whole universe") {
	auto g = ground_program(parse_program("p(a). p(b). q(X) :- not p(X)."));
	CHECK(g.rules.size() == 4);
}

TEST_CASE("grounding is idempotent") {
	testing::Rng rng(3);
	for (int i = 0; i < 150; ++i) {
		auto p = testing::random_surface_program(rng);
		OrderedProgram once;
		try {
			once = ground_program(p);
		}
		catch (const GroundingError&) {
			continue;  // duplicate instance names
		}
		CHECK(ground_program(once) == once);
	}
}

TEST_CASE("variables without constants") {
	CHECK(grounding_error(parse_program("p(X) :- q(X)."), false).find("no constants") != std::string::npos);
	CHECK(ground_program(OrderedProgram{}).rules.empty());
}

TEST_CASE("instances sharing a name") {
	// r(a) names both p(a) and p(b)
	auto msg = grounding_error(parse_program("p(X) :- name(r(a)), q(X). q(b)."), false);
	CHECK(msg.find("r(a)") != std::string::npos);
}

TEST_CASE("flattening names") {
	CHECK(flattened_symbol(parse_term("r(f(c))")) == "r_f_c");
	CHECK(flattened_symbol(parse_term("r1(tweety)")) == "r1_tweety");
	CHECK(flattened_symbol(parse_term("g(1, h(a, b))")) == "g_1_h_a_b");
	CHECK_THROWS_AS(flattened_symbol(parse_term("f(X)")), GroundingError);

	auto f = flatten_names(ground_program(parse_program(testing::read_corpus("birds.olp"))));
	for (const auto& n : f.rule_names()) { CHECK(n.is_constant()); }
	bool found = false;
	for (const auto& r : f.rules) {
		if (const auto* pa = std::get_if<PrefAtom>(&r.head)) {
			CHECK(pa->lesser.is_constant());
			if (*pa == PrefAtom{c("r1_tweety"), c("r2_tweety")}) { found = true; }
		}
	}
	CHECK(found);
	// ordinary atoms keep their structure
	auto q = flatten_names(parse_program("p(f(a)) :- name(n(b))."));
	CHECK(std::get<Literal>(q.rules[0].head).args[0] == Term::compound("f", {c("a")}));
	CHECK(q.rules[0].name == c("n_b"));
}

TEST_CASE("flattening sets") {
	auto f = flatten_names(parse_program("p :- name(r(1)). s : [r(1)]."));
	REQUIRE(f.set_decls.size() == 1);
	CHECK(f.set_decls[0] == SetDecl{c("s"), {c("r_1")}});
}

TEST_CASE("flattening collisions name both terms") {
	auto msg = grounding_error(parse_program("p :- name(r(f(c))). q :- name(r(f_c))."), true);
	CHECK(msg.find("r(f(c))") != std::string::npos);
	CHECK(msg.find("r(f_c)") != std::string::npos);
	CHECK(msg.find("r_f_c") != std::string::npos);
	// a constant already spelled like a flattened term collides too
	CHECK_FALSE(grounding_error(parse_program("p :- name(r_f_c). q :- name(r(f(c)))."), true).empty());
	// the same term twice is not a collision
	CHECK_NOTHROW(flatten_names(parse_program("p :- name(r(a)). r(a) < r(a).")));
}

TEST_CASE("flattening needs a ground program") {
	CHECK_THROWS_AS(flatten_names(parse_program("p(X) :- q(X).")), GroundingError);
}

}
