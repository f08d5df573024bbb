#include <plp/solver.hpp>
#include <plp/error.hpp>

#include <algorithm>

namespace plp {

NormalProgram NormalProgram::from_rules(std::span<const Rule> rules) {
	NormalProgram out;
	auto require_atom = [](const Literal& lit) {
		if (lit.strong_neg) {
			throw SolverError("solver input contains strong negation '" + to_string(lit) + "'; compile it first");
		}
		if (!lit.is_ground()) {
			throw SolverError("solver input contains non-ground atom '" + to_string(lit) + "'");
		}
	};
	for (const auto& r : rules) {
		if (r.name) { throw SolverError("solver input contains named rule '" + to_string(*r.name) + "'"); }
		NormalRule nr;
		if (std::holds_alternative<PrefAtom>(r.head)) {
			throw SolverError("solver input contains a preference atom; compile it first");
		}
		if (const auto* h = std::get_if<Literal>(&r.head)) {
			require_atom(*h);
			nr.head = out.intern(*h);
		}
		for (const auto& el : r.body) {
			const auto* bl = std::get_if<BodyLiteral>(&el);
			if (!bl) { throw SolverError("solver input contains a preference atom; compile it first"); }
			require_atom(bl->lit);
			(bl->naf ? nr.negative : nr.positive).push_back(out.intern(bl->lit));
		}
		out.add_rule(std::move(nr));
	}
	return out;
}

AtomId NormalProgram::intern(const Literal& atom) {
	auto [it, fresh] = index_.emplace(atom, static_cast<AtomId>(atoms_.size()));
	if (fresh) { atoms_.push_back(atom); }
	return it->second;
}

std::optional<AtomId> NormalProgram::find(const Literal& atom) const {
	auto it = index_.find(atom);
	if (it == index_.end()) { return std::nullopt; }
	return it->second;
}

void NormalProgram::add_rule(NormalRule rule) {
	auto check = [this](AtomId id) {
		if (id >= atoms_.size()) { throw SolverError("rule refers to unknown atom id " + std::to_string(id)); }
	};
	if (rule.head) { check(*rule.head); }
	std::for_each(rule.positive.begin(), rule.positive.end(), check);
	std::for_each(rule.negative.begin(), rule.negative.end(), check);
	rules_.push_back(std::move(rule));
}

AtomSet NormalProgram::atoms_of(std::span<const Literal> atoms) const {
	AtomSet out;
	for (const auto& a : atoms) {
		auto id = find(a);
		if (!id) { throw SolverError("atom '" + to_string(a) + "' does not occur in the program"); }
		out.insert(*id);
	}
	return out;
}

AnswerSet NormalProgram::to_answer_set(const AtomSet& atoms) const {
	AnswerSet out;
	for (AtomId id : atoms) { out.literals.insert(atoms_.at(id)); }
	return out;
}

NormalProgram NormalProgram::with_rules(std::vector<NormalRule> rules) const {
	NormalProgram out;
	out.atoms_ = atoms_;
	out.index_ = index_;
	for (auto& r : rules) { out.add_rule(std::move(r)); }
	return out;
}

NormalProgram reduct(const NormalProgram& program, const AtomSet& x) {
	std::vector<NormalRule> kept;
	for (const auto& r : program.rules()) {
		bool blocked = std::any_of(r.negative.begin(), r.negative.end(), [&](AtomId a) { return x.count(a) != 0; });
		if (!blocked) { kept.push_back(NormalRule{r.head, r.positive, {}}); }
	}
	return program.with_rules(std::move(kept));
}

namespace {

// Least fixpoint of the rules selected by `use` (constraints are skipped).
// Unit-propagation style: each rule counts its outstanding positive atoms.
template <class Use>
std::vector<char> closure(const NormalProgram& p, const std::vector<std::vector<std::size_t>>& watch, Use&& use) {
	const auto& rules = p.rules();
	std::vector<char>        truth(p.atom_count(), 0);
	std::vector<std::size_t> missing(rules.size(), 0);
	std::vector<AtomId>      queue;
	for (std::size_t i = 0; i != rules.size(); ++i) {
		const auto& r = rules[i];
		if (!r.head || !use(r)) {
			missing[i] = SIZE_MAX;
			continue;
		}
		missing[i] = r.positive.size();
		if (missing[i] == 0 && !truth[*r.head]) {
			truth[*r.head] = 1;
			queue.push_back(*r.head);
		}
	}
	while (!queue.empty()) {
		AtomId a = queue.back();
		queue.pop_back();
		for (std::size_t i : watch[a]) {
			if (missing[i] == SIZE_MAX || --missing[i] != 0) { continue; }
			AtomId h = *rules[i].head;
			if (!truth[h]) {
				truth[h] = 1;
				queue.push_back(h);
			}
		}
	}
	return truth;
}

// rule indices per positive body atom, one entry per occurrence
std::vector<std::vector<std::size_t>> positive_watches(const NormalProgram& p) {
	std::vector<std::vector<std::size_t>> watch(p.atom_count());
	for (std::size_t i = 0; i != p.rules().size(); ++i) {
		for (AtomId a : p.rules()[i].positive) { watch[a].push_back(i); }
	}
	return watch;
}

bool body_holds(const NormalRule& r, const std::vector<char>& truth) {
	return std::all_of(r.positive.begin(), r.positive.end(), [&](AtomId a) { return truth[a] != 0; })
		&& std::none_of(r.negative.begin(), r.negative.end(), [&](AtomId a) { return truth[a] != 0; });
}

// Backtracking over the atoms that occur under `not`. Every node narrows the
// candidates with two fixpoints: `lower` uses only rules whose naf atoms are
// all assigned false, `upper` every rule none of whose naf atoms is assigned
// true. Any stable model X agreeing with the assignment lies between them,
// so an assigned atom outside its bound is a conflict and an unassigned atom
// inside lower (outside upper) is forced true (false). Leaves are re-checked
// with reduct + least_model.
class Search {
public:
	Search(const NormalProgram& p, const SolveOptions& opts)
		: p_(p), opts_(opts), watch_(positive_watches(p)), value_(p.atom_count(), kFree) {
		std::vector<char> seen(p.atom_count(), 0);
		for (const auto& r : p.rules()) {
			for (AtomId a : r.negative) {
				if (!seen[a]) {
					seen[a] = 1;
					naf_atoms_.push_back(a);
				}
			}
		}
		std::sort(naf_atoms_.begin(), naf_atoms_.end());
	}

	std::vector<AtomSet> run() {
		visit();
		std::vector<std::vector<AtomId>> sorted;
		for (const auto& m : models_) { sorted.emplace_back(m.begin(), m.end()); }
		std::sort(sorted.begin(), sorted.end());
		std::vector<AtomSet> out;
		for (const auto& s : sorted) { out.emplace_back(s.begin(), s.end()); }
		return out;
	}

private:
	static constexpr signed char kFree = -1;

	void visit() {
		if (++nodes_ > opts_.budget) {
			throw ResourceError("answer-set enumeration exceeded the budget of " + std::to_string(opts_.budget)
			                    + " search nodes");
		}
		std::vector<AtomId> trail;
		std::vector<char>   lower;
		if (propagate(trail, lower)) {
			auto next = std::find_if(naf_atoms_.begin(), naf_atoms_.end(), [&](AtomId a) { return value_[a] == kFree; });
			if (next == naf_atoms_.end()) {
				accept(lower);
			}
			else {
				for (signed char v : {1, 0}) {
					value_[*next] = v;
					visit();
				}
				value_[*next] = kFree;
			}
		}
		for (AtomId a : trail) { value_[a] = kFree; }
	}

	bool propagate(std::vector<AtomId>& trail, std::vector<char>& lower) {
		for (;;) {
			lower = closure(p_, watch_, [&](const NormalRule& r) {
				return std::all_of(r.negative.begin(), r.negative.end(), [&](AtomId a) { return value_[a] == 0; });
			});
			auto upper = closure(p_, watch_, [&](const NormalRule& r) {
				return std::none_of(r.negative.begin(), r.negative.end(), [&](AtomId a) { return value_[a] == 1; });
			});
			for (const auto& r : p_.rules()) {
				if (r.head) { continue; }
				bool fires = std::all_of(r.positive.begin(), r.positive.end(), [&](AtomId a) { return lower[a] != 0; })
					&& std::all_of(r.negative.begin(), r.negative.end(), [&](AtomId a) { return value_[a] == 0; });
				if (fires) { return false; }
			}
			bool changed = false;
			for (AtomId a : naf_atoms_) {
				signed char v = value_[a];
				if ((v == 1 && !upper[a]) || (v == 0 && lower[a])) { return false; }
				if (v != kFree) { continue; }
				if (lower[a] || !upper[a]) {
					value_[a] = lower[a] ? 1 : 0;
					trail.push_back(a);
					changed = true;
				}
			}
			if (!changed) { return true; }
		}
	}

	void accept(const std::vector<char>& truth) {
		AtomSet x;
		for (AtomId a = 0; a != truth.size(); ++a) {
			if (truth[a]) { x.insert(a); }
		}
		for (const auto& r : p_.rules()) {
			if (!r.head && body_holds(r, truth)) { return; }
		}
		auto check = least_model(reduct(p_, x));
		if (check && *check == x) { models_.push_back(std::move(x)); }
	}

	const NormalProgram&      p_;
	const SolveOptions&       opts_;
	std::vector<std::vector<std::size_t>> watch_;
	std::vector<signed char>  value_;
	std::vector<AtomId>       naf_atoms_;
	std::vector<AtomSet>      models_;
	std::uint64_t             nodes_ = 0;
};

} // namespace

std::optional<AtomSet> least_model(const NormalProgram& program) {
	for (const auto& r : program.rules()) {
		if (!r.negative.empty()) { throw SolverError("least_model needs a naf-free program"); }
	}
	auto truth = closure(program, positive_watches(program), [](const NormalRule&) { return true; });
	for (const auto& r : program.rules()) {
		if (!r.head && body_holds(r, truth)) { return std::nullopt; }
	}
	AtomSet out;
	for (AtomId a = 0; a != truth.size(); ++a) {
		if (truth[a]) { out.insert(a); }
	}
	return out;
}

std::vector<AtomSet> stable_models(const NormalProgram& program, const SolveOptions& options) {
	return Search(program, options).run();
}

std::vector<AnswerSet> answer_sets(const NormalProgram& program, const SolveOptions& options) {
	std::vector<AnswerSet> out;
	for (const auto& m : stable_models(program, options)) { out.push_back(program.to_answer_set(m)); }
	std::sort(out.begin(), out.end());
	return out;
}

std::vector<AnswerSet> answer_sets(std::span<const Rule> rules, const SolveOptions& options) {
	return answer_sets(NormalProgram::from_rules(rules), options);
}

} // namespace plp
