#include "qdb/value.hpp"

#include <functional>

#include "qdb/error.hpp"

namespace qdb {

std::string to_string(ValueType t) {
    return t == ValueType::Integer ? "int" : "string";
}

std::int64_t Value::as_int() const {
    if (!is_int()) throw TypeError("value is not an integer: " + literal());
    return std::get<std::int64_t>(data_);
}

const std::string& Value::as_string() const {
    if (is_int()) throw TypeError("value is not a string: " + literal());
    return std::get<std::string>(data_);
}

static int compare(const Value& a, const Value& b) {
    if (a.type() != b.type())
        throw TypeError("cannot compare " + to_string(a.type()) + " with " +
                        to_string(b.type()));
    if (a.is_int()) {
        if (a.as_int() < b.as_int()) return -1;
        if (a.as_int() > b.as_int()) return 1;
        return 0;
    }
    return a.as_string().compare(b.as_string()) < 0
               ? -1
               : (a.as_string() == b.as_string() ? 0 : 1);
}

bool Value::operator<(const Value& other) const { return compare(*this, other) < 0; }
bool Value::operator<=(const Value& other) const { return compare(*this, other) <= 0; }
bool Value::operator>(const Value& other) const { return compare(*this, other) > 0; }
bool Value::operator>=(const Value& other) const { return compare(*this, other) >= 0; }

std::string Value::literal() const {
    if (is_int()) return std::to_string(std::get<std::int64_t>(data_));
    std::string out = "'";
    for (char c : std::get<std::string>(data_)) {
        out += c;
        if (c == '\'') out += '\'';
    }
    out += '\'';
    return out;
}

Value Value::parse_literal(const std::string& text) {
    if (text.empty()) throw TypeError("empty literal");
    if (text.front() == '\'') {
        if (text.size() < 2 || text.back() != '\'')
            throw TypeError("unterminated string literal: " + text);
        std::string out;
        for (std::size_t i = 1; i + 1 < text.size(); ++i) {
            if (text[i] == '\'') {
                if (i + 2 >= text.size() || text[i + 1] != '\'')
                    throw TypeError("stray quote in string literal: " + text);
                ++i;
            }
            out += text[i];
        }
        return Value(std::move(out));
    }
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw TypeError("bad integer literal: " + text);
    }
    if (pos != text.size()) throw TypeError("bad integer literal: " + text);
    return Value(v);
}

std::size_t ValueHash::operator()(const Value& v) const {
    if (v.is_int()) return std::hash<std::int64_t>{}(v.as_int());
    return std::hash<std::string>{}(v.as_string());
}

}  // namespace qdb
