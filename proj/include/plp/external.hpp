#pragma once

#include <plp/emitter.hpp>

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

namespace plp {

struct ExternalRun {
	std::vector<AnswerSet> answer_sets;
	std::string            transcript;  // captured standard output
	std::string            diagnostics; // captured standard error
	int                    exit_code = 0;
};

/// Runs an external ASP solver on program_text and parses its answer sets.
///
/// The program goes to the child's standard input unless some argument
/// contains `{file}`, in which case it is written to a temporary file whose
/// path replaces the token. command[0] is looked up on PATH.
///
/// Throws ExternalSolverError with kind Launch (could not start), Timeout
/// (killed after timeout), Exit (nonzero exit, no answer sets and no
/// UNSATISFIABLE verdict in the output) or Format (unparseable answer-set text).
ExternalRun run_external(std::string_view program_text, const std::vector<std::string>& command, Dialect dialect,
                         std::chrono::milliseconds timeout);

// Splits a command line on whitespace; single and double quotes group words.
std::vector<std::string> split_command(std::string_view command);

} // namespace plp
