#pragma once

#include <stdexcept>
#include <string>

namespace ydn {

// Error hierarchy shared by all modules.  Everything user-facing derives
// from ydn::Error so the CLI can map failures to exit codes uniformly.

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Text could not be parsed; carries the byte offset of the offending token.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error("parse error at byte " + std::to_string(offset) + ": " + what),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class MismatchedStrands : public Error {
public:
    using Error::Error;
};

class MismatchedAlgebra : public Error {
public:
    using Error::Error;
};

class MismatchedOrder : public Error {
public:
    using Error::Error;
};

class BoundExceeded : public Error {
public:
    using Error::Error;
};

class LevelError : public Error {
public:
    using Error::Error;
};

class DegenerateOrder : public Error {
public:
    using Error::Error;
};

class IncompatibleOrders : public Error {
public:
    using Error::Error;
};

class ParamDomainError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class OracleBoundExceeded : public Error {
public:
    using Error::Error;
};

} // namespace ydn
