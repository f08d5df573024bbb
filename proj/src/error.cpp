#include <plp/error.hpp>

namespace plp {

SourceError::SourceError(int line, int column, std::string message)
	: Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message)
	, line_(line)
	, column_(column)
	, message_(std::move(message)) {}

FormatError::FormatError(std::string line, std::string message)
	: Error(message + ": '" + line + "'")
	, line_(std::move(line)) {}

ExternalSolverError::ExternalSolverError(Kind kind, std::string message, std::string transcript, int exit_code)
	: Error(std::move(message))
	, kind_(kind)
	, transcript_(std::move(transcript))
	, exit_code_(exit_code) {}

} // namespace plp
