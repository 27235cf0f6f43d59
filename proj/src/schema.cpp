#include "qdb/schema.hpp"

#include <algorithm>

#include "qdb/error.hpp"

namespace qdb {

Domain Domain::interval(std::int64_t lo, std::int64_t hi) {
    if (lo > hi)
        throw SchemaError("bad domain interval [" + std::to_string(lo) + "," +
                          std::to_string(hi) + "]");
    Domain d;
    d.rep_ = Interval{lo, hi};
    return d;
}

Domain Domain::explicit_list(std::vector<Value> values) {
    if (values.empty()) throw SchemaError("empty domain list");
    std::sort(values.begin(), values.end());
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] == values[i - 1])
            throw SchemaError("duplicate domain value " + values[i].literal());
    Domain d;
    d.rep_ = std::move(values);
    return d;
}

std::vector<Value> Domain::ascending() const {
    if (is_interval()) {
        const Interval& iv = as_interval();
        std::vector<Value> out;
        out.reserve(static_cast<std::size_t>(iv.hi - iv.lo + 1));
        for (std::int64_t v = iv.lo; v <= iv.hi; ++v) out.emplace_back(v);
        return out;
    }
    return std::get<std::vector<Value>>(rep_);
}

bool Domain::contains(const Value& v) const {
    if (is_interval()) {
        if (!v.is_int()) return false;
        return v.as_int() >= as_interval().lo && v.as_int() <= as_interval().hi;
    }
    const auto& values = std::get<std::vector<Value>>(rep_);
    return std::binary_search(values.begin(), values.end(), v);
}

std::uint64_t Domain::size() const {
    if (is_interval())
        return static_cast<std::uint64_t>(as_interval().hi - as_interval().lo + 1);
    return std::get<std::vector<Value>>(rep_).size();
}

std::string Domain::render() const {
    if (is_interval())
        return "[" + std::to_string(as_interval().lo) + "," +
               std::to_string(as_interval().hi) + "]";
    std::string out = "{";
    const auto& values = std::get<std::vector<Value>>(rep_);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += values[i].literal();
    }
    return out + "}";
}

Domain Domain::parse(const std::string& text) {
    if (text.size() < 2) throw SchemaError("bad domain: " + text);
    if (text.front() == '[' && text.back() == ']') {
        const auto comma = text.find(',');
        if (comma == std::string::npos) throw SchemaError("bad domain: " + text);
        const Value lo = Value::parse_literal(text.substr(1, comma - 1));
        const Value hi = Value::parse_literal(text.substr(comma + 1, text.size() - comma - 2));
        return interval(lo.as_int(), hi.as_int());
    }
    if (text.front() == '{' && text.back() == '}') {
        std::vector<Value> values;
        std::string body = text.substr(1, text.size() - 2);
        std::size_t pos = 0;
        while (pos < body.size()) {
            std::size_t end;
            if (body[pos] == '\'') {
                // quoted string literal: scan past doubled quotes
                end = pos + 1;
                while (end < body.size()) {
                    if (body[end] == '\'') {
                        if (end + 1 < body.size() && body[end + 1] == '\'') end += 2;
                        else { ++end; break; }
                    } else ++end;
                }
            } else {
                end = body.find(',', pos);
                if (end == std::string::npos) end = body.size();
            }
            values.push_back(Value::parse_literal(body.substr(pos, end - pos)));
            pos = (end < body.size() && body[end] == ',') ? end + 1 : end;
        }
        return explicit_list(std::move(values));
    }
    throw SchemaError("bad domain: " + text);
}

Schema::Schema(std::vector<PropertySpec> properties)
    : properties_(std::move(properties)) {
    std::size_t keys = 0;
    for (std::size_t i = 0; i < properties_.size(); ++i) {
        if (properties_[i].role == PropertyRole::Key) {
            key_index_ = i;
            ++keys;
        }
        for (std::size_t j = 0; j < i; ++j)
            if (properties_[j].name == properties_[i].name)
                throw SchemaError("duplicate property name " + properties_[i].name);
    }
    if (keys != 1)
        throw SchemaError("schema must have exactly one key property, found " +
                          std::to_string(keys));
}

const PropertySpec* Schema::find(const std::string& name) const {
    for (const PropertySpec& p : properties_)
        if (p.name == name) return &p;
    return nullptr;
}

std::size_t Schema::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < properties_.size(); ++i)
        if (properties_[i].name == name) return i;
    throw BindError("unknown property: " + name);
}

}  // namespace qdb
