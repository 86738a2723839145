#pragma once

#include <stdexcept>
#include <string>

namespace agtd {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input record (bad JSON, bad timestamp, ...).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line_no = 0)
        : Error(line_no ? "line " + std::to_string(line_no) + ": " + what : what),
          line(line_no) {}
    std::size_t line;
};

// Structurally valid record that violates the ingestion schema
// (missing field, wrong type, broken invariant).
class SchemaError : public Error {
public:
    SchemaError(const std::string& field, const std::string& what, std::size_t line_no = 0)
        : Error(line_no ? "line " + std::to_string(line_no) + ": " + field + ": " + what
                        : field + ": " + what),
          field(field), line(line_no) {}
    std::string field;
    std::size_t line;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class TrainError : public Error {
public:
    using Error::Error;
};

class PredictError : public Error {
public:
    using Error::Error;
};

// Operation called in a state that does not permit it (e.g. counting a
// classification for a user that has no profile).
class StateError : public Error {
public:
    using Error::Error;
};

}  // namespace agtd
