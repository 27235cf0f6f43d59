#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qdb/value.hpp"

namespace qdb {

enum class ComparisonOp { Eq, Neq, Lt, Le, Gt, Ge };

std::string to_string(ComparisonOp op);

// True when `lhs op rhs` holds. Throws TypeError on mixed types.
bool compare_values(const Value& lhs, ComparisonOp op, const Value& rhs);

// One logical expression "x o a".
struct SimpleCondition {
    std::string property;
    ComparisonOp op = ComparisonOp::Eq;
    Value literal;

    std::string render() const;
    bool operator==(const SimpleCondition& o) const {
        return property == o.property && op == o.op && literal == o.literal;
    }
};

// Boolean operator tree over simple conditions.
class BoolExpr {
public:
    enum class Kind { Leaf, And, Or, Not };
    using Ptr = std::unique_ptr<BoolExpr>;

    static Ptr leaf(SimpleCondition cond);
    static Ptr conjunction(Ptr lhs, Ptr rhs);
    static Ptr disjunction(Ptr lhs, Ptr rhs);
    static Ptr negation(Ptr child);

    Kind kind() const { return kind_; }
    const SimpleCondition& condition() const { return cond_; }
    const BoolExpr& left() const { return *left_; }
    const BoolExpr& right() const { return *right_; }
    const BoolExpr& child() const { return *left_; }

    bool equals(const BoolExpr& other) const;
    Ptr clone() const;

    // Canonical text form: reparsing it yields an equal tree.
    std::string render() const;

private:
    BoolExpr() = default;
    std::string render(int required_level) const;

    Kind kind_ = Kind::Leaf;
    SimpleCondition cond_;
    Ptr left_;
    Ptr right_;
};

struct SelectStatement {
    bool star = false;
    std::vector<std::string> columns;  // empty when star
    std::string table;
    BoolExpr::Ptr where;               // null when absent

    std::string render() const;
};

}  // namespace qdb
