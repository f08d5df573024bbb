#include <plp/compiler.hpp>
#include <plp/emitter.hpp>
#include <plp/error.hpp>
#include <plp/grounder.hpp>
#include <plp/parser.hpp>
#include <plp/pipeline.hpp>
#include <plp/solver.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace plp;

namespace {

Dialect dialect_of(const std::string& name) {
	auto d = parse_dialect(name);
	if (!d) { throw py::value_error("unknown dialect '" + name + "' (expected core, dlv or smodels)"); }
	return *d;
}

// Answer sets cross the boundary as frozensets of atom strings ("neg p(a,b)").
py::object to_python(const AnswerSet& s) {
	py::set out;
	for (const auto& l : s.literals) { out.add(py::str(to_string(l, ","))); }
	return py::module_::import("builtins").attr("frozenset")(out);
}

py::list to_python(const std::vector<AnswerSet>& sets) {
	py::list out;
	for (const auto& s : sets) { out.append(to_python(s)); }
	return out;
}

AnswerSet from_python(const py::iterable& atoms) {
	AnswerSet s;
	for (const auto& a : atoms) { s.literals.insert(parse_literal(a.cast<std::string>())); }
	return s;
}

// Raises cls(message) with extra attributes set on the instance.
void raise(const py::object& cls, const std::string& message, std::initializer_list<std::pair<const char*, py::object>> attrs = {}) {
	py::object exc = cls(message);
	for (const auto& [k, v] : attrs) { exc.attr(k) = v; }
	PyErr_SetObject(cls.ptr(), exc.ptr());
}

} // namespace

PYBIND11_MODULE(_plp, m) {
	m.doc() = "Ordered logic programs: parse, ground, compile and solve";

	static py::exception<Error> base(m, "PlpError");
	static py::exception<SourceError> source(m, "SourceError", base.ptr());
	static py::exception<GroundingError> grounding(m, "GroundingError", base.ptr());
	static py::exception<CompileError> compile_err(m, "CompileError", base.ptr());
	static py::exception<SolverError> solver(m, "SolverError", base.ptr());
	static py::exception<ResourceError> resource(m, "ResourceError", solver.ptr());
	static py::exception<FormatError> format(m, "FormatError", base.ptr());
	static py::exception<ExternalSolverError> external(m, "ExternalSolverError", base.ptr());

	py::register_exception_translator([](std::exception_ptr p) {
		try {
			if (p) { std::rethrow_exception(p); }
		}
		catch (const SourceError& e) {
			raise(source, e.what(), {{"line", py::int_(e.line())}, {"column", py::int_(e.column())}});
		}
		catch (const GroundingError& e) { raise(grounding, e.what()); }
		catch (const CompileError& e) { raise(compile_err, e.what()); }
		catch (const ResourceError& e) { raise(resource, e.what()); }
		catch (const SolverError& e) { raise(solver, e.what()); }
		catch (const FormatError& e) { raise(format, e.what(), {{"offending_line", py::str(e.offending_line())}}); }
		catch (const ExternalSolverError& e) { raise(external, e.what()); }
		catch (const Error& e) { raise(base, e.what()); }
	});

	py::class_<OrderedProgram>(m, "Program")
		.def_property_readonly("rule_count", [](const OrderedProgram& p) { return p.rules.size(); })
		.def_property_readonly("set_count", [](const OrderedProgram& p) { return p.set_decls.size(); })
		.def_property_readonly("is_ground", &OrderedProgram::is_ground)
		.def_property_readonly("rule_names",
		                       [](const OrderedProgram& p) {
			                       std::vector<std::string> out;
			                       for (const auto& n : p.rule_names()) { out.push_back(to_string(n)); }
			                       return out;
		                       })
		.def("emit", [](const OrderedProgram& p, const std::string& d) { return emit(p, dialect_of(d)); },
		     py::arg("dialect") = "core")
		.def("__eq__", [](const OrderedProgram& a, const OrderedProgram& b) { return a == b; })
		.def("__str__", [](const OrderedProgram& p) { return emit(p, Dialect::Core); });

	py::class_<CompiledProgram>(m, "CompiledProgram")
		.def_property_readonly("rule_count", [](const CompiledProgram& p) { return p.rules.size(); })
		.def("emit", [](const CompiledProgram& p, const std::string& d) { return emit(p, dialect_of(d)); },
		     py::arg("dialect") = "dlv")
		.def("__eq__", [](const CompiledProgram& a, const CompiledProgram& b) { return a == b; })
		.def("__str__", [](const CompiledProgram& p) { return emit(p, Dialect::Core); });

	m.def("parse", &parse_program, py::arg("source"), "Parse ordered program text.");
	m.def("ground", &ground_program, py::arg("program"));
	m.def("flatten", &flatten_names, py::arg("program"));
	m.def(
		"compile",
		[](const OrderedProgram& p, bool coherence, bool emit_neg_prec) {
			return compile(p, CompileOptions{coherence, emit_neg_prec});
		},
		py::arg("program"), py::arg("coherence") = true, py::arg("emit_neg_prec") = false);
	m.def("erase_order", &erase_order, py::arg("program"));
	m.def(
		"answer_sets",
		[](const CompiledProgram& p, std::uint64_t budget) {
			auto sets = answer_sets(p.rules, SolveOptions{budget});
			return to_python(sets);
		},
		py::arg("program"), py::arg("budget") = SolveOptions{}.budget,
		"Answer sets of a compiled program, via the internal solver.");
	m.def(
		"preferred_answer_sets",
		[](const std::string& source, bool nice, std::uint64_t budget) {
			auto p = parse_program(source);
			return to_python(preferred_answer_sets(p, nice, {}, SolveOptions{budget}));
		},
		py::arg("source"), py::arg("nice") = true, py::arg("budget") = SolveOptions{}.budget,
		"parse, ground, flatten, compile and solve in one go.");
	m.def(
		"filter_nice", [](const py::iterable& atoms) { return to_python(filter_nice(from_python(atoms))); },
		py::arg("answer_set"));
	m.def(
		"render_answer_set",
		[](const py::iterable& atoms, const std::string& d) { return render_answer_set(from_python(atoms), dialect_of(d)); },
		py::arg("answer_set"), py::arg("dialect") = "core");
	m.def(
		"parse_answer_sets",
		[](const std::string& text, const std::string& d) { return to_python(parse_answer_sets(text, dialect_of(d))); },
		py::arg("text"), py::arg("dialect") = "dlv");
}
