#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qdb/value.hpp"

namespace qdb {

enum class PropertyRole { Key, Common };

// A finite ordered value set: either an explicit list or an integer
// interval [lo, hi]. Enumeration is always in ascending value order.
class Domain {
public:
    struct Interval {
        std::int64_t lo;
        std::int64_t hi;
    };

    static Domain interval(std::int64_t lo, std::int64_t hi);
    static Domain explicit_list(std::vector<Value> values);

    bool is_interval() const { return std::holds_alternative<Interval>(rep_); }
    const Interval& as_interval() const { return std::get<Interval>(rep_); }

    // All domain values in ascending order.
    std::vector<Value> ascending() const;
    bool contains(const Value& v) const;
    std::uint64_t size() const;

    std::string render() const;                       // "[lo,hi]" or "{v1,v2,...}"
    static Domain parse(const std::string& text);

private:
    std::variant<Interval, std::vector<Value>> rep_;
};

struct PropertySpec {
    std::string name;
    PropertyRole role = PropertyRole::Common;
    ValueType value_type = ValueType::Integer;
    std::optional<Domain> domain;
    bool searchable = false;
};

class Schema {
public:
    Schema() = default;
    explicit Schema(std::vector<PropertySpec> properties);

    const std::vector<PropertySpec>& properties() const { return properties_; }
    std::size_t size() const { return properties_.size(); }
    const PropertySpec& at(std::size_t i) const { return properties_[i]; }

    const PropertySpec* find(const std::string& name) const;
    std::size_t index_of(const std::string& name) const;  // throws BindError
    const PropertySpec& key() const { return properties_[key_index_]; }
    std::size_t key_index() const { return key_index_; }

private:
    std::vector<PropertySpec> properties_;
    std::size_t key_index_ = 0;
};

}  // namespace qdb
