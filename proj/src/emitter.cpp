#include <plp/emitter.hpp>
#include <plp/error.hpp>
#include <plp/parser.hpp>

#include <algorithm>
#include <cctype>

namespace plp {

std::optional<Dialect> parse_dialect(std::string_view name) {
	if (name == "core") { return Dialect::Core; }
	if (name == "dlv") { return Dialect::Dlv; }
	if (name == "smodels") { return Dialect::Smodels; }
	return std::nullopt;
}

const char* dialect_name(Dialect d) {
	switch (d) {
		case Dialect::Core:    return "core";
		case Dialect::Dlv:     return "dlv";
		case Dialect::Smodels: return "smodels";
	}
	return "?";
}

namespace {

std::string literal_text(const Literal& lit, Dialect d, const char* sep = ", ") {
	if (d == Dialect::Core || !lit.strong_neg) { return to_string(lit, sep); }
	Literal plain = lit;
	plain.strong_neg = false;
	return "-" + to_string(plain, sep);
}

std::string pref_text(const PrefAtom& pa, Dialect d, bool parenthesize) {
	if (d != Dialect::Core) { return "prec(" + to_string(pa.lesser) + ", " + to_string(pa.greater) + ")"; }
	std::string s = to_string(pa.lesser) + " < " + to_string(pa.greater);
	return parenthesize ? "(" + s + ")" : s;
}

void emit_rule(std::string& out, const Rule& r, Dialect d) {
	if (d != Dialect::Core && !r.is_ground()) {
		throw CompileError(std::string("cannot emit a non-ground program in the ") + dialect_name(d) + " dialect");
	}
	std::vector<std::string> body;
	if (r.name) { body.push_back("name(" + to_string(*r.name) + ")"); }
	for (const auto& el : r.body) {
		if (const auto* bl = std::get_if<BodyLiteral>(&el)) {
			body.push_back((bl->naf ? "not " : "") + literal_text(bl->lit, d));
		}
		else {
			body.push_back(pref_text(std::get<PrefAtom>(el), d, true));
		}
	}
	if (const auto* lit = std::get_if<Literal>(&r.head)) { out += literal_text(*lit, d); }
	else if (const auto* pa = std::get_if<PrefAtom>(&r.head)) { out += pref_text(*pa, d, !body.empty()); }
	if (!body.empty()) {
		out += r.is_constraint() ? ":- " : " :- ";
		for (std::size_t i = 0; i != body.size(); ++i) {
			if (i) { out += ", "; }
			out += body[i];
		}
	}
	out += ".\n";
}

} // namespace

std::string emit(const OrderedProgram& program, Dialect dialect) {
	std::string out;
	for (const auto& r : program.rules) { emit_rule(out, r, dialect); }
	for (const auto& decl : program.set_decls) {
		if (dialect == Dialect::Core) {
			out += to_string(decl.set_name) + " : [";
			for (std::size_t i = 0; i != decl.members.size(); ++i) {
				if (i) { out += ", "; }
				out += to_string(decl.members[i]);
			}
			out += "].\n";
			continue;
		}
		if (!decl.set_name.is_ground()) {
			throw CompileError(std::string("cannot emit a non-ground program in the ") + dialect_name(dialect) + " dialect");
		}
		out += "setname(" + to_string(decl.set_name) + ").\n";
		for (const auto& m : decl.members) {
			out += "memb(" + to_string(decl.set_name) + ", " + to_string(m) + ").\n";
		}
	}
	return out;
}

std::string emit(const CompiledProgram& program, Dialect dialect) {
	std::string out;
	for (const auto& r : program.rules) { emit_rule(out, r, dialect); }
	return out;
}

AnswerSet filter_nice(const AnswerSet& answer_set) {
	const auto& control = CompiledProgram::control_predicates();
	const std::string prefix = kNegPrefix;
	AnswerSet out;
	for (const auto& lit : answer_set.literals) {
		if (control.count(lit.predicate) || lit.predicate == "true") { continue; }
		if (!lit.strong_neg && lit.predicate.size() > prefix.size() && lit.predicate.compare(0, prefix.size(), prefix) == 0) {
			std::string base = lit.predicate.substr(prefix.size());
			if (control.count(base)) { continue; }
			out.literals.insert(Literal{std::move(base), lit.args, true});
			continue;
		}
		out.literals.insert(lit);
	}
	return out;
}

std::string render_answer_set(const AnswerSet& answer_set, Dialect dialect) {
	std::vector<std::string> atoms;
	for (const auto& lit : answer_set.literals) { atoms.push_back(literal_text(lit, dialect, ",")); }
	std::sort(atoms.begin(), atoms.end());
	std::string out = dialect == Dialect::Smodels ? "Stable Model:" : "{";
	for (std::size_t i = 0; i != atoms.size(); ++i) {
		if (dialect == Dialect::Smodels) { out += ' '; }
		else if (i) { out += ", "; }
		out += atoms[i];
	}
	if (dialect != Dialect::Smodels) { out += '}'; }
	return out;
}

std::string render_answer_sets(std::span<const AnswerSet> answer_sets, Dialect dialect) {
	std::string out;
	for (const auto& a : answer_sets) {
		out += render_answer_set(a, dialect);
		out += '\n';
	}
	return out;
}

namespace {

std::string_view trim(std::string_view s) {
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) { s.remove_prefix(1); }
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) { s.remove_suffix(1); }
	return s;
}

std::string_view line_at(std::string_view text, std::size_t pos) {
	std::size_t begin = text.rfind('\n', pos == 0 ? 0 : pos - 1);
	begin = (begin == std::string_view::npos || pos == 0) ? 0 : begin + 1;
	std::size_t end = text.find('\n', pos);
	return text.substr(begin, end == std::string_view::npos ? std::string_view::npos : end - begin);
}

// Splits at separators outside parentheses; sep_ws treats any whitespace run as a separator.
std::vector<std::pair<std::size_t, std::string_view>> split_atoms(std::string_view s, bool sep_ws) {
	std::vector<std::pair<std::size_t, std::string_view>> out;
	int depth = 0;
	std::size_t start = 0;
	auto flush = [&](std::size_t end) {
		std::string_view piece = s.substr(start, end - start);
		std::size_t lead = 0;
		while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) { ++lead; }
		piece = trim(piece);
		if (!piece.empty() || !sep_ws) { out.emplace_back(start + lead, piece); }
	};
	for (std::size_t i = 0; i != s.size(); ++i) {
		char c = s[i];
		if (c == '(') { ++depth; }
		else if (c == ')') { --depth; }
		else if (depth == 0 && (sep_ws ? std::isspace(static_cast<unsigned char>(c)) != 0 : c == ',')) {
			// `neg p` keeps its space: the keyword belongs to the next atom.
			if (sep_ws && s.substr(start, i - start) == "neg") { continue; }
			flush(i);
			start = i + 1;
		}
	}
	flush(s.size());
	return out;
}

AnswerSet parse_group(std::string_view text, std::size_t offset, std::string_view group, bool sep_ws) {
	AnswerSet out;
	if (trim(group).empty()) { return out; }
	for (auto [pos, atom] : split_atoms(group, sep_ws)) {
		try {
			if (atom.empty()) { throw SourceError(1, 1, "empty atom"); }
			out.literals.insert(parse_literal(atom));
		}
		catch (const SourceError& e) {
			throw FormatError(std::string(line_at(text, offset + pos)),
			                  "unparseable atom '" + std::string(atom) + "' (" + e.message() + ")");
		}
	}
	return out;
}

} // namespace

std::vector<AnswerSet> parse_answer_sets(std::string_view out, Dialect dialect) {
	std::vector<AnswerSet> sets;
	if (dialect != Dialect::Smodels) {
		std::size_t pos = 0;
		while ((pos = out.find('{', pos)) != std::string_view::npos) {
			std::size_t close = out.find('}', pos);
			if (close == std::string_view::npos) {
				throw FormatError(std::string(line_at(out, pos)), "unterminated answer set");
			}
			sets.push_back(parse_group(out, pos + 1, out.substr(pos + 1, close - pos - 1), false));
			pos = close + 1;
		}
		return sets;
	}
	constexpr std::string_view stable = "Stable Model:";
	constexpr std::string_view answer = "Answer:";
	std::size_t pos = 0;
	bool model_next = false;
	while (pos <= out.size()) {
		std::size_t end = out.find('\n', pos);
		if (end == std::string_view::npos) { end = out.size(); }
		std::string_view line = out.substr(pos, end - pos);
		if (!line.empty() && line.back() == '\r') { line.remove_suffix(1); }
		if (model_next) {
			sets.push_back(parse_group(out, pos, line, true));
			model_next = false;
		}
		else if (line.substr(0, stable.size()) == stable) {
			sets.push_back(parse_group(out, pos + stable.size(), line.substr(stable.size()), true));
		}
		else if (line.substr(0, answer.size()) == answer) {
			model_next = true;
		}
		if (end == out.size()) { break; }
		pos = end + 1;
	}
	return sets;
}

} // namespace plp
