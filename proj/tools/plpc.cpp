// plpc: compile ordered logic programs and, optionally, solve them.
#include <plp/emitter.hpp>
#include <plp/error.hpp>
#include <plp/external.hpp>
#include <plp/grounder.hpp>
#include <plp/parser.hpp>
#include <plp/pipeline.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

enum class SolveMode { None, Internal, External };

struct Options {
	std::string   input;
	std::string   emit = "dlv";
	std::string   solve;
	std::string   external_cmd;
	double        timeout_s = 60.0;
	bool          ground_only = false;
	bool          nice = false;
	bool          no_coherence = false;
	bool          emit_neg_prec = false;
	bool          verbose = false;
	std::uint64_t budget = std::uint64_t{1} << 24;
};

std::string read_input(const std::string& path) {
	if (path == "-") {
		return std::string(std::istreambuf_iterator<char>(std::cin), {});
	}
	std::ifstream in(path, std::ios::binary);
	if (!in) { throw plp::SourceError(1, 1, "cannot open '" + path + "'"); }
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void stage(std::ostream& out, const char* name, const std::string& text) {
	out << "%% stage: " << name << '\n' << text;
}

int run(const Options& opt) {
	const plp::Dialect dialect = *plp::parse_dialect(opt.emit);
	SolveMode mode = SolveMode::None;
	if (opt.solve == "internal") { mode = SolveMode::Internal; }
	else if (opt.solve == "external") { mode = SolveMode::External; }

	plp::CompileOptions copts;
	copts.coherence = !opt.no_coherence;
	copts.emit_neg_prec = opt.emit_neg_prec;

	const std::string source = read_input(opt.input);
	plp::OrderedProgram parsed = plp::parse_program(source);
	plp::OrderedProgram grounded = plp::ground_program(parsed);
	if (opt.verbose) { stage(std::cout, "ground", plp::emit(grounded, plp::Dialect::Core)); }
	plp::OrderedProgram flattened = plp::flatten_names(grounded);
	if (opt.verbose) { stage(std::cout, "flatten", plp::emit(flattened, plp::Dialect::Core)); }
	if (opt.ground_only) {
		std::cout << plp::emit(flattened, dialect);
		return 0;
	}
	plp::CompiledProgram compiled = plp::compile(flattened, copts);
	if (opt.verbose) { stage(std::cout, "compile", plp::emit(compiled, plp::Dialect::Core)); }

	if (mode == SolveMode::None) {
		std::cout << plp::emit(compiled, dialect);
		return 0;
	}

	std::vector<plp::AnswerSet> sets;
	if (mode == SolveMode::Internal) {
		plp::SolveOptions sopts;
		sopts.budget = opt.budget;
		sets = plp::answer_sets(compiled.rules, sopts);
	}
	else {
		auto command = plp::split_command(opt.external_cmd);
		plp::Dialect wire = dialect == plp::Dialect::Core ? plp::Dialect::Dlv : dialect;
		auto timeout = std::chrono::milliseconds(static_cast<long long>(opt.timeout_s * 1000));
		auto result = plp::run_external(plp::emit(compiled, wire), command, wire, timeout);
		sets = std::move(result.answer_sets);
	}
	if (opt.nice) {
		for (auto& s : sets) { s = plp::filter_nice(s); }
	}
	std::sort(sets.begin(), sets.end());
	std::cout << plp::render_answer_sets(sets, plp::Dialect::Core);
	return 0;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"Compile ordered logic programs into regular extended logic programs"};
	app.name("plpc");
	Options opt;
	app.add_option("input", opt.input, "Program file, or - for standard input")->required();
	app.add_option("--emit", opt.emit, "Output dialect")
		->check(CLI::IsMember({"core", "dlv", "smodels"}))
		->capture_default_str();
	app.add_flag("--ground-only", opt.ground_only, "Stop after grounding and name flattening");
	app.add_option("--solve", opt.solve, "Compute answer sets")->check(CLI::IsMember({"internal", "external"}));
	app.add_option("--external-cmd", opt.external_cmd,
	               "External solver command; {file} is replaced by a temporary program file, otherwise the "
	               "program goes to standard input");
	app.add_option("--timeout", opt.timeout_s, "External solver timeout in seconds")->capture_default_str();
	app.add_flag("--nice", opt.nice, "Hide control atoms in answer sets");
	app.add_flag("--no-coherence", opt.no_coherence, "Omit the ':- q, neg_q.' constraints");
	app.add_flag("--emit-neg-prec", opt.emit_neg_prec, "Also derive neg_prec atoms");
	app.add_flag("--verbose", opt.verbose, "Print the program after each stage");
	app.add_option("--budget", opt.budget, "Internal solver search-node cap")->capture_default_str();

	try {
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 1;
	}
	if (opt.solve == "external" && opt.external_cmd.empty()) {
		std::cerr << "plpc: --solve external needs --external-cmd\n";
		return 1;
	}

	try {
		return run(opt);
	}
	catch (const plp::SourceError& e) {
		std::cerr << opt.input << ":" << e.what() << '\n';
		return 1;
	}
	catch (const plp::GroundingError& e) {
		std::cerr << "plpc: " << e.what() << '\n';
		return 1;
	}
	catch (const plp::CompileError& e) {
		std::cerr << "plpc: " << e.what() << '\n';
		return 1;
	}
	catch (const plp::ExternalSolverError& e) {
		std::cerr << "plpc: " << e.what() << '\n';
		if (!e.transcript().empty()) { std::cerr << e.transcript(); }
		return 2;
	}
	catch (const plp::Error& e) {
		std::cerr << "plpc: " << e.what() << '\n';
		return 2;
	}
}
