#pragma once
// parse -> ground -> flatten -> compile, keeping every intermediate program.

#include <plp/ast.hpp>
#include <plp/compiler.hpp>
#include <plp/solver.hpp>

#include <string_view>
#include <vector>

namespace plp {

struct Pipeline {
	OrderedProgram  parsed;
	OrderedProgram  grounded;
	OrderedProgram  flattened;
	CompiledProgram compiled;
};

Pipeline run_pipeline(std::string_view source, const CompileOptions& options = {});
Pipeline run_pipeline(const OrderedProgram& program, const CompileOptions& options = {});

// Answer sets of the compiled program, optionally nice-filtered, in solver order.
std::vector<AnswerSet> preferred_answer_sets(const OrderedProgram& program, bool nice,
                                             const CompileOptions& compile_options = {},
                                             const SolveOptions& solve_options = {});

} // namespace plp
