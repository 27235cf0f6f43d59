#include "qdb/ast.hpp"

#include "qdb/error.hpp"

namespace qdb {

std::string to_string(ComparisonOp op) {
    switch (op) {
        case ComparisonOp::Eq: return "=";
        case ComparisonOp::Neq: return "!=";
        case ComparisonOp::Lt: return "<";
        case ComparisonOp::Le: return "<=";
        case ComparisonOp::Gt: return ">";
        case ComparisonOp::Ge: return ">=";
    }
    throw InternalError("unreachable comparison op");
}

bool compare_values(const Value& lhs, ComparisonOp op, const Value& rhs) {
    switch (op) {
        case ComparisonOp::Eq: return lhs == rhs;
        case ComparisonOp::Neq: return !(lhs == rhs);
        case ComparisonOp::Lt: return lhs < rhs;
        case ComparisonOp::Le: return lhs <= rhs;
        case ComparisonOp::Gt: return lhs > rhs;
        case ComparisonOp::Ge: return lhs >= rhs;
    }
    throw InternalError("unreachable comparison op");
}

std::string SimpleCondition::render() const {
    return property + " " + to_string(op) + " " + literal.literal();
}

BoolExpr::Ptr BoolExpr::leaf(SimpleCondition cond) {
    Ptr e(new BoolExpr());
    e->kind_ = Kind::Leaf;
    e->cond_ = std::move(cond);
    return e;
}

BoolExpr::Ptr BoolExpr::conjunction(Ptr lhs, Ptr rhs) {
    Ptr e(new BoolExpr());
    e->kind_ = Kind::And;
    e->left_ = std::move(lhs);
    e->right_ = std::move(rhs);
    return e;
}

BoolExpr::Ptr BoolExpr::disjunction(Ptr lhs, Ptr rhs) {
    Ptr e(new BoolExpr());
    e->kind_ = Kind::Or;
    e->left_ = std::move(lhs);
    e->right_ = std::move(rhs);
    return e;
}

BoolExpr::Ptr BoolExpr::negation(Ptr child) {
    Ptr e(new BoolExpr());
    e->kind_ = Kind::Not;
    e->left_ = std::move(child);
    return e;
}

bool BoolExpr::equals(const BoolExpr& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::Leaf: return cond_ == other.cond_;
        case Kind::Not: return left_->equals(*other.left_);
        case Kind::And:
        case Kind::Or:
            return left_->equals(*other.left_) && right_->equals(*other.right_);
    }
    return false;
}

BoolExpr::Ptr BoolExpr::clone() const {
    switch (kind_) {
        case Kind::Leaf: return leaf(cond_);
        case Kind::Not: return negation(left_->clone());
        case Kind::And: return conjunction(left_->clone(), right_->clone());
        case Kind::Or: return disjunction(left_->clone(), right_->clone());
    }
    throw InternalError("unreachable expr kind");
}

// Precedence levels: OR=0, AND=1, NOT=2, leaf=3. A node is parenthesized
// when its level is below what the context requires; right operands of the
// left-associative AND/OR require one level more.
std::string BoolExpr::render(int required_level) const {
    int level;
    std::string text;
    switch (kind_) {
        case Kind::Or:
            level = 0;
            text = left_->render(0) + " OR " + right_->render(1);
            break;
        case Kind::And:
            level = 1;
            text = left_->render(1) + " AND " + right_->render(2);
            break;
        case Kind::Not:
            level = 2;
            text = "NOT " + left_->render(2);
            break;
        case Kind::Leaf:
        default:
            level = 3;
            text = cond_.render();
            break;
    }
    if (level < required_level) return "(" + text + ")";
    return text;
}

std::string BoolExpr::render() const { return render(0); }

std::string SelectStatement::render() const {
    std::string out = "SELECT ";
    if (star) {
        out += "*";
    } else {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out += ", ";
            out += columns[i];
        }
    }
    out += " FROM " + table;
    if (where) out += " WHERE " + where->render();
    return out;
}

}  // namespace qdb
