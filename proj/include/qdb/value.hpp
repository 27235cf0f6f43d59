#pragma once

#include <cstdint>
#include <string>
#include <variant>

namespace qdb {

enum class ValueType { Integer, String };

std::string to_string(ValueType t);

// A typed literal: the content of one table cell, a query constant, or a
// codec entry. Integers are signed 64-bit, strings are raw bytes.
class Value {
public:
    Value() : data_(std::int64_t{0}) {}
    explicit Value(std::int64_t v) : data_(v) {}
    explicit Value(std::string v) : data_(std::move(v)) {}

    ValueType type() const {
        return std::holds_alternative<std::int64_t>(data_) ? ValueType::Integer
                                                           : ValueType::String;
    }
    bool is_int() const { return type() == ValueType::Integer; }
    std::int64_t as_int() const;
    const std::string& as_string() const;

    bool operator==(const Value& other) const { return data_ == other.data_; }
    bool operator!=(const Value& other) const { return data_ != other.data_; }

    // Ordering within one type; comparing across types throws TypeError.
    bool operator<(const Value& other) const;
    bool operator<=(const Value& other) const;
    bool operator>(const Value& other) const;
    bool operator>=(const Value& other) const;

    // Literal form: integers as decimal, strings single-quoted with
    // doubled-quote escaping. Round-trips through parse_literal.
    std::string literal() const;
    static Value parse_literal(const std::string& text);

private:
    std::variant<std::int64_t, std::string> data_;
};

struct ValueHash {
    std::size_t operator()(const Value& v) const;
};

}  // namespace qdb
