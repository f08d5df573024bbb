#pragma once
// Brute-force stable-model oracle used by the tests. It shares nothing with
// the solver beyond the AST: atoms are plain literals, the reduct and the
// fixpoint are computed naively, and every subset of the atom universe is tried.

#include <plp/ast.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace plp::testing {

struct OracleRule {
	std::optional<Literal> head;
	std::vector<Literal>   pos;
	std::vector<Literal>   neg;
};

inline std::vector<OracleRule> oracle_rules(const std::vector<Rule>& rules) {
	std::vector<OracleRule> out;
	for (const auto& r : rules) {
		OracleRule o;
		if (const auto* h = std::get_if<Literal>(&r.head)) { o.head = *h; }
		else if (!r.is_constraint()) { throw std::invalid_argument("oracle: preference head"); }
		for (const auto& el : r.body) {
			const auto& bl = std::get<BodyLiteral>(el);
			(bl.naf ? o.neg : o.pos).push_back(bl.lit);
		}
		out.push_back(std::move(o));
	}
	return out;
}

inline bool subset_of(const std::vector<Literal>& xs, const std::set<Literal>& m) {
	return std::all_of(xs.begin(), xs.end(), [&](const Literal& l) { return m.count(l) != 0; });
}

inline bool disjoint(const std::vector<Literal>& xs, const std::set<Literal>& m) {
	return std::none_of(xs.begin(), xs.end(), [&](const Literal& l) { return m.count(l) != 0; });
}

// X is stable iff X is the least model of P^X and no constraint fires in X.
inline bool oracle_is_stable(const std::vector<OracleRule>& rules, const std::set<Literal>& x) {
	std::vector<const OracleRule*> reduct;
	for (const auto& r : rules) {
		if (disjoint(r.neg, x)) { reduct.push_back(&r); }
	}
	std::set<Literal> model;
	for (bool grew = true; grew;) {
		grew = false;
		for (const auto* r : reduct) {
			if (r->head && !model.count(*r->head) && subset_of(r->pos, model)) {
				model.insert(*r->head);
				grew = true;
			}
		}
	}
	for (const auto* r : reduct) {
		if (!r->head && subset_of(r->pos, model)) { return false; }
	}
	return model == x;
}

inline std::vector<AnswerSet> oracle_answer_sets(const std::vector<Rule>& rules) {
	auto orules = oracle_rules(rules);
	std::set<Literal> universe;
	for (const auto& r : orules) {
		if (r.head) { universe.insert(*r.head); }
		universe.insert(r.pos.begin(), r.pos.end());
		universe.insert(r.neg.begin(), r.neg.end());
	}
	std::vector<Literal> atoms(universe.begin(), universe.end());
	if (atoms.size() > 20) { throw std::invalid_argument("oracle: too many atoms"); }
	std::vector<AnswerSet> out;
	for (unsigned long mask = 0; mask < (1ul << atoms.size()); ++mask) {
		std::set<Literal> x;
		for (std::size_t i = 0; i != atoms.size(); ++i) {
			if (mask & (1ul << i)) { x.insert(atoms[i]); }
		}
		if (oracle_is_stable(orules, x)) { out.push_back(AnswerSet{std::move(x)}); }
	}
	std::sort(out.begin(), out.end());
	return out;
}

} // namespace plp::testing
