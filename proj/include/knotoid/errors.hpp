#pragma once

#include <stdexcept>
#include <string>

namespace knotoid {

struct SyntaxError : std::runtime_error {
	explicit SyntaxError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ValidationError : std::runtime_error {
	explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnknownChord : std::runtime_error {
	explicit UnknownChord(int id) : std::runtime_error("unknown chord " + std::to_string(id)) {}
};

struct UnknownName : std::runtime_error {
	explicit UnknownName(const std::string& name) : std::runtime_error("unknown diagram name '" + name + "'") {}
};

struct DomainError : std::runtime_error {
	explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// chord is not in C_n (its intersection index is not a multiple of n)
struct NotInCn : std::runtime_error {
	NotInCn(int id, long long n)
	    : std::runtime_error("chord " + std::to_string(id) + " is not in C_" + std::to_string(n)) {}
};

struct InvalidMove : std::runtime_error {
	explicit InvalidMove(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyDiagram : std::runtime_error {
	explicit EmptyDiagram(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace knotoid
