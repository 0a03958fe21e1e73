#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scientrix {

// Base class for all toolkit failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ParseFault {
    MalformedTag,
    UnterminatedRecord,
    DuplicateTag,
    InvalidEncoding,
};

// Raised by the field-tagged export parser; carries the 1-based input line.
class ParseError : public Error {
public:
    ParseError(ParseFault fault, std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), fault_(fault), line_(line) {}

    ParseFault fault() const { return fault_; }
    std::size_t line() const { return line_; }

private:
    ParseFault fault_;
    std::size_t line_;
};

struct RankOutOfRange : Error {
    explicit RankOutOfRange(const std::string& what) : Error(what) {}
};

struct EmptyInput : Error {
    explicit EmptyInput(const std::string& what) : Error(what) {}
};

struct EmptyDistribution : Error {
    explicit EmptyDistribution(const std::string& what) : Error(what) {}
};

struct BadThreshold : Error {
    explicit BadThreshold(const std::string& what) : Error(what) {}
};

// A PRI target paper whose supplied peer set is missing or does not contain it.
struct PeerSetError : Error {
    explicit PeerSetError(const std::string& what) : Error(what) {}
};

// A subcommand was asked to run against an upstream output that does not exist.
struct MissingIntermediate : Error {
    explicit MissingIntermediate(const std::string& what) : Error(what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace scientrix
