#pragma once
// Program serialization in three dialects, the `nice` answer-set filter and
// answer-set I/O in solver transcript formats.

#include <plp/ast.hpp>
#include <plp/compiler.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace plp {

enum class Dialect {
	Core,     // the toolkit's own grammar (round-trips through the parser)
	Dlv,
	Smodels,
};

std::optional<Dialect> parse_dialect(std::string_view name);
const char* dialect_name(Dialect d);

/// Renders program one statement per line.
///
/// Core keeps rule names (`name(n)` first in the body), preference atoms and
/// set declarations. Dlv and smodels need a ground program and render names
/// as `name(n)` body atoms, preference atoms as prec/2, set declarations as
/// setname/memb facts and strong negation as `-q`. Throws CompileError for a
/// non-ground program in the dlv or smodels dialect.
std::string emit(const OrderedProgram& program, Dialect dialect);
std::string emit(const CompiledProgram& program, Dialect dialect);

/// Drops control atoms (and `true`) and shows neg_q atoms as strongly negated q.
AnswerSet filter_nice(const AnswerSet& answer_set);

/// Core: `{a, b(c,d), neg e}`; dlv: `{a, b(c,d), -e}`; smodels: `Stable Model: a b(c,d) -e`.
/// Atoms are sorted by their rendered text.
std::string render_answer_set(const AnswerSet& answer_set, Dialect dialect);
// One set per line, each line newline-terminated.
std::string render_answer_sets(std::span<const AnswerSet> answer_sets, Dialect dialect);

/// Parses a solver transcript. Core and dlv: every `{...}` group is one
/// answer set. Smodels: every `Stable Model:` line is one answer set; the
/// line following an `Answer: N` header (clingo style) is accepted as well.
/// Other lines are ignored. Throws FormatError on unparseable atom text.
std::vector<AnswerSet> parse_answer_sets(std::string_view out, Dialect dialect);

} // namespace plp
