#pragma once

#include <stdexcept>
#include <string>

namespace qdb {

// Base of all engine errors. UserError maps to CLI exit code 1,
// InternalError to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class UserError : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

// --- user-facing errors ---

// Lexical error; carries the character offset within the input text.
class LexicalError : public UserError {
public:
    LexicalError(const std::string& msg, std::size_t offset)
        : UserError(msg + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class SyntaxError : public UserError {
public:
    SyntaxError(const std::string& msg, std::size_t offset)
        : UserError(msg + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Name resolution / type checking against a schema.
class BindError : public UserError {
public:
    using UserError::UserError;
};

class TypeError : public UserError {
public:
    using UserError::UserError;
};

class SchemaError : public UserError {
public:
    using UserError::UserError;
};

class KeyUniquenessError : public UserError {
public:
    using UserError::UserError;
};

class NotFoundError : public UserError {
public:
    using UserError::UserError;
};

class DistinctnessError : public UserError {
public:
    using UserError::UserError;
};

// A search on a common property that is not searchable.
class QueryFailure : public UserError {
public:
    using UserError::UserError;
};

// != or range condition on a property without a finite domain.
class UnboundedDomainError : public UserError {
public:
    using UserError::UserError;
};

// --- internal errors (logic faults, corruption) ---

class InvalidCorrelationError : public InternalError {
public:
    using InternalError::InternalError;
};

class IndexError : public InternalError {
public:
    using InternalError::InternalError;
};

class EmptyStateError : public InternalError {
public:
    using InternalError::InternalError;
};

class AddressError : public InternalError {
public:
    using InternalError::InternalError;
};

// Post-measurement verification failed, or a persisted file is corrupt.
class ConsistencyError : public InternalError {
public:
    using InternalError::InternalError;
};

}  // namespace qdb
