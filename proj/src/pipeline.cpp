#include <plp/pipeline.hpp>
#include <plp/emitter.hpp>
#include <plp/grounder.hpp>
#include <plp/parser.hpp>

#include <algorithm>

namespace plp {

Pipeline run_pipeline(const OrderedProgram& program, const CompileOptions& options) {
	Pipeline p;
	p.parsed = program;
	p.grounded = ground_program(p.parsed);
	p.flattened = flatten_names(p.grounded);
	p.compiled = compile(p.flattened, options);
	return p;
}

Pipeline run_pipeline(std::string_view source, const CompileOptions& options) {
	return run_pipeline(parse_program(source), options);
}

std::vector<AnswerSet> preferred_answer_sets(const OrderedProgram& program, bool nice,
                                             const CompileOptions& compile_options,
                                             const SolveOptions& solve_options) {
	auto compiled = run_pipeline(program, compile_options).compiled;
	auto sets = answer_sets(compiled.rules, solve_options);
	if (nice) {
		std::transform(sets.begin(), sets.end(), sets.begin(), filter_nice);
	}
	return sets;
}

} // namespace plp
