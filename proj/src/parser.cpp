#include <plp/parser.hpp>
#include <plp/error.hpp>

#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace plp {
namespace {

enum class Tok {
	Ident,     // lowercase identifier
	Var,       // uppercase / underscore identifier
	Int,
	LParen,
	RParen,
	LBracket,
	RBracket,
	Comma,
	Dot,
	If,        // :-
	Colon,
	Less,
	Minus,
	End
};

const char* describe(Tok t) {
	switch (t) {
		case Tok::Ident:    return "identifier";
		case Tok::Var:      return "variable";
		case Tok::Int:      return "integer";
		case Tok::LParen:   return "'('";
		case Tok::RParen:   return "')'";
		case Tok::LBracket: return "'['";
		case Tok::RBracket: return "']'";
		case Tok::Comma:    return "','";
		case Tok::Dot:      return "'.'";
		case Tok::If:       return "':-'";
		case Tok::Colon:    return "':'";
		case Tok::Less:     return "'<'";
		case Tok::Minus:    return "'-'";
		case Tok::End:      return "end of input";
	}
	return "token";
}

struct Token {
	Tok         kind;
	std::string text;
	int         line;
	int         column;
};

class Lexer {
public:
	explicit Lexer(std::string_view src) : src_(src) {}

	std::vector<Token> run() {
		std::vector<Token> out;
		for (;;) {
			skip_blank();
			Token t{Tok::End, {}, line_, col_};
			if (pos_ >= src_.size()) {
				out.push_back(t);
				return out;
			}
			unsigned char c = static_cast<unsigned char>(src_[pos_]);
			if (std::isalpha(c) || c == '_') {
				t.kind = (std::islower(c) ? Tok::Ident : Tok::Var);
				t.text = take_while([](unsigned char ch) { return std::isalnum(ch) || ch == '_'; });
			}
			else if (std::isdigit(c)) {
				t.kind = Tok::Int;
				t.text = take_while([](unsigned char ch) { return std::isdigit(ch); });
				if (pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
					throw SourceError(line_, col_, "malformed number");
				}
			}
			else {
				t.kind = punct(c);
				t.text = std::string(1, static_cast<char>(c));
				advance();
				if (t.kind == Tok::Colon && pos_ < src_.size() && src_[pos_] == '-') {
					t.kind = Tok::If;
					t.text = ":-";
					advance();
				}
			}
			out.push_back(std::move(t));
		}
	}

private:
	Tok punct(unsigned char c) const {
		switch (c) {
			case '(': return Tok::LParen;
			case ')': return Tok::RParen;
			case '[': return Tok::LBracket;
			case ']': return Tok::RBracket;
			case ',': return Tok::Comma;
			case '.': return Tok::Dot;
			case ':': return Tok::Colon;
			case '<': return Tok::Less;
			case '-': return Tok::Minus;
			default: break;
		}
		std::string shown = std::isprint(c) ? std::string(1, static_cast<char>(c)) : "\\x" + std::to_string(c);
		throw SourceError(line_, col_, "unexpected character '" + shown + "'");
	}

	void advance() {
		if (src_[pos_] == '\n') {
			++line_;
			col_ = 1;
		}
		else {
			++col_;
		}
		++pos_;
	}

	void skip_blank() {
		while (pos_ < src_.size()) {
			char c = src_[pos_];
			if (c == '%') {
				while (pos_ < src_.size() && src_[pos_] != '\n') { advance(); }
			}
			else if (std::isspace(static_cast<unsigned char>(c))) {
				advance();
			}
			else {
				break;
			}
		}
	}

	template <class P>
	std::string take_while(P pred) {
		std::size_t start = pos_;
		while (pos_ < src_.size() && pred(static_cast<unsigned char>(src_[pos_]))) { advance(); }
		return std::string(src_.substr(start, pos_ - start));
	}

	std::string_view src_;
	std::size_t      pos_ = 0;
	int              line_ = 1;
	int              col_ = 1;
};

struct Mode {
	bool ordered;  // absorb name/1, allow preference atoms and set declarations
};

struct Located {
	int line;
	int column;
};

class Parser {
public:
	Parser(std::string_view src, Mode mode) : toks_(Lexer(src).run()), mode_(mode) {}

	OrderedProgram program() {
		OrderedProgram out;
		while (!at(Tok::End)) {
			if (mode_.ordered && at(Tok::Ident) && peek(1).kind == Tok::Colon) { out.set_decls.push_back(set_decl()); }
			else if (mode_.ordered && at(Tok::Int) && peek(1).kind == Tok::Colon) { out.set_decls.push_back(set_decl()); }
			else { out.rules.push_back(rule()); }
		}
		if (mode_.ordered) { check(out); }
		return out;
	}

	Term lone_term() {
		Term t = term();
		expect(Tok::End);
		return t;
	}

	Literal lone_literal() {
		bool strong = false;
		if (at(Tok::Minus)) {
			next();
			strong = true;
		}
		else if (is_keyword("neg") && peek(1).kind == Tok::Ident) {
			next();
			strong = true;
		}
		Literal lit = atom();
		lit.strong_neg = strong;
		expect(Tok::End);
		return lit;
	}

private:
	const Token& cur() const { return toks_[pos_]; }
	const Token& peek(std::size_t k) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
	bool at(Tok k) const { return cur().kind == k; }
	bool is_keyword(const char* kw) const { return at(Tok::Ident) && cur().text == kw; }
	Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

	[[noreturn]] void fail(const Token& at, const std::string& msg) const {
		throw SourceError(at.line, at.column, msg);
	}

	Token expect(Tok k) {
		if (!at(k)) {
			std::string found = at(Tok::End) ? "end of input" : "'" + cur().text + "'";
			fail(cur(), std::string("expected ") + describe(k) + ", found " + found);
		}
		return next();
	}

	Term term() {
		const Token& t = cur();
		switch (t.kind) {
			case Tok::Int: next(); return Term::constant(t.text);
			case Tok::Var: {
				next();
				if (at(Tok::LParen)) { fail(t, "variable '" + t.text + "' cannot take arguments"); }
				return Term::variable(t.text);
			}
			case Tok::Ident: {
				Token id = next();
				if (!at(Tok::LParen)) { return Term::constant(id.text); }
				next();
				std::vector<Term> args;
				args.push_back(term());
				while (at(Tok::Comma)) {
					next();
					args.push_back(term());
				}
				expect(Tok::RParen);
				return Term::compound(id.text, std::move(args));
			}
			default: break;
		}
		fail(t, std::string("expected a term, found ") + (at(Tok::End) ? "end of input" : "'" + t.text + "'"));
	}

	Literal to_atom(const Term& t, const Token& where) const {
		if (t.is_compound()) { return Literal{t.symbol, t.args, false}; }
		if (t.is_constant() && !t.is_integer()) { return Literal{t.symbol, {}, false}; }
		fail(where, "'" + to_string(t) + "' is not an atom");
	}

	Literal atom() {
		Token where = cur();
		if (!at(Tok::Ident)) { fail(where, "expected an atom, found '" + where.text + "'"); }
		return to_atom(term(), where);
	}

	PrefAtom pref_rest(Term lesser) {
		expect(Tok::Less);
		Term greater = term();
		return PrefAtom{std::move(lesser), std::move(greater)};
	}

	PrefAtom paren_pref() {
		Token open = expect(Tok::LParen);
		if (!mode_.ordered) { fail(open, "preference atoms are not allowed here"); }
		Term lesser = term();
		PrefAtom pa = pref_rest(std::move(lesser));
		expect(Tok::RParen);
		return pa;
	}

	// Parses an atom or a bare `s < t`, deciding after the first term.
	std::variant<Literal, PrefAtom> atom_or_pref() {
		Token where = cur();
		Term t = term();
		if (at(Tok::Less)) {
			if (!mode_.ordered) { fail(cur(), "preference atoms are not allowed here"); }
			return pref_rest(std::move(t));
		}
		return to_atom(t, where);
	}

	void no_neg_not() {
		if (is_keyword("neg") && peek(1).kind == Tok::Ident && peek(1).text == "not") {
			fail(cur(), "'neg not' is not allowed; write 'not neg'");
		}
	}

	Head head() {
		if (at(Tok::LParen)) { return paren_pref(); }
		no_neg_not();
		if (is_keyword("not") && (peek(1).kind == Tok::Ident || peek(1).kind == Tok::LParen)) {
			fail(cur(), "negation as failure is not allowed in a rule head");
		}
		if (is_keyword("neg") && peek(1).kind == Tok::Ident) {
			next();
			Literal lit = atom();
			lit.strong_neg = true;
			return lit;
		}
		auto el = atom_or_pref();
		if (auto* lit = std::get_if<Literal>(&el)) { return std::move(*lit); }
		return std::get<PrefAtom>(std::move(el));
	}

	BodyElement body_element() {
		if (at(Tok::LParen)) { return paren_pref(); }
		no_neg_not();
		bool naf = false;
		if (is_keyword("not") && (peek(1).kind == Tok::Ident || peek(1).kind == Tok::LParen)) {
			next();
			naf = true;
			if (at(Tok::LParen)) { fail(cur(), "preference atoms cannot be negated"); }
			no_neg_not();
		}
		if (is_keyword("neg") && peek(1).kind == Tok::Ident) {
			next();
			Literal lit = atom();
			lit.strong_neg = true;
			return BodyLiteral{naf, std::move(lit)};
		}
		Token where = cur();
		auto el = atom_or_pref();
		if (auto* lit = std::get_if<Literal>(&el)) { return BodyLiteral{naf, std::move(*lit)}; }
		if (naf) { fail(where, "preference atoms cannot be negated"); }
		return std::get<PrefAtom>(std::move(el));
	}

	Rule rule() {
		Token start = cur();
		Rule r;
		if (at(Tok::If)) {
			r.head = std::monostate{};
		}
		else {
			r.head = head();
		}
		if (at(Tok::If)) {
			next();
			for (;;) {
				Token where = cur();
				BodyElement el = body_element();
				if (!mode_.ordered || !absorb_name(r, el, where)) { r.body.push_back(std::move(el)); }
				if (!at(Tok::Comma)) { break; }
				next();
			}
		}
		if (r.is_constraint() && r.body.empty()) { fail(start, "a constraint needs a non-empty body"); }
		expect(Tok::Dot);
		return r;
	}

	bool absorb_name(Rule& r, const BodyElement& el, const Token& where) {
		const auto* bl = std::get_if<BodyLiteral>(&el);
		if (!bl || bl->lit.predicate != "name" || bl->lit.args.size() != 1) { return false; }
		if (bl->naf || bl->lit.strong_neg) { fail(where, "name atoms cannot be negated"); }
		if (r.name) { fail(where, "rule already has name '" + to_string(*r.name) + "'"); }
		if (!names_.insert(bl->lit.args[0]).second) {
			fail(where, "duplicate rule name '" + to_string(bl->lit.args[0]) + "'");
		}
		r.name = bl->lit.args[0];
		return true;
	}

	SetDecl set_decl() {
		Token start = cur();
		SetDecl d;
		d.set_name = Term::constant(next().text);
		expect(Tok::Colon);
		expect(Tok::LBracket);
		d.members.push_back(term());
		while (at(Tok::Comma)) {
			next();
			d.members.push_back(term());
		}
		expect(Tok::RBracket);
		expect(Tok::Dot);
		if (set_pos_.count(d.set_name)) { fail(start, "duplicate set name '" + d.set_name.symbol + "'"); }
		set_pos_.emplace(d.set_name, Located{start.line, start.column});
		return d;
	}

	void check(const OrderedProgram& p) const {
		for (const auto& d : p.set_decls) {
			const Located& at = set_pos_.at(d.set_name);
			if (names_.count(d.set_name)) {
				throw SourceError(at.line, at.column,
				                  "'" + to_string(d.set_name) + "' is used both as a rule name and a set name");
			}
			for (const auto& m : d.members) {
				if (!names_.count(m)) {
					throw SourceError(at.line, at.column,
					                  "set '" + to_string(d.set_name) + "' member '" + to_string(m) + "' names no rule");
				}
			}
		}
	}

	std::vector<Token>        toks_;
	std::size_t               pos_ = 0;
	Mode                      mode_;
	std::set<Term>            names_;
	std::map<Term, Located>   set_pos_;
};

} // namespace

OrderedProgram parse_program(std::string_view src) {
	return Parser(src, Mode{true}).program();
}

std::vector<Rule> parse_regular_program(std::string_view src) {
	return Parser(src, Mode{false}).program().rules;
}

Term parse_term(std::string_view src) {
	return Parser(src, Mode{true}).lone_term();
}

Literal parse_literal(std::string_view src) {
	return Parser(src, Mode{true}).lone_literal();
}

} // namespace plp
