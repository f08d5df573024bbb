#pragma once

#include <stdexcept>
#include <string>

namespace plp {

// Root of every error the toolkit raises.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

// Malformed program or term text. line and column are 1-based.
class SourceError : public Error {
public:
	SourceError(int line, int column, std::string message);
	int line() const noexcept { return line_; }
	int column() const noexcept { return column_; }
	const std::string& message() const noexcept { return message_; }
private:
	int         line_;
	int         column_;
	std::string message_;
};

// Raised by the grounder and name flattening.
class GroundingError : public Error {
public:
	using Error::Error;
};

class CompileError : public Error {
public:
	using Error::Error;
};

// Input handed to the solver violates its preconditions (variables, strong negation, ...).
class SolverError : public Error {
public:
	using Error::Error;
};

// Enumeration exceeded the configured budget.
class ResourceError : public SolverError {
public:
	using SolverError::SolverError;
};

// Unparseable answer-set text from a solver transcript.
class FormatError : public Error {
public:
	FormatError(std::string line, std::string message);
	const std::string& offending_line() const noexcept { return line_; }
private:
	std::string line_;
};

class ExternalSolverError : public Error {
public:
	enum class Kind { Launch, Exit, Timeout, Format };
	ExternalSolverError(Kind kind, std::string message, std::string transcript = {}, int exit_code = -1);
	Kind kind() const noexcept { return kind_; }
	const std::string& transcript() const noexcept { return transcript_; }
	int exit_code() const noexcept { return exit_code_; }
private:
	Kind        kind_;
	std::string transcript_;
	int         exit_code_;
};

} // namespace plp
