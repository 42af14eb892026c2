#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gca/errors.hpp"

namespace gca {

/// Immutable expression tree: point atoms, n-ary joins (juxtaposition or
/// "v"), binary meets ("^"). Atoms carry the point's name; resolution
/// against a PointSet happens at evaluation time.
class CayleyExpr {
public:
    enum class Kind { Atom, Join, Meet };

    static CayleyExpr atom(std::string name) {
        return CayleyExpr(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}}));
    }

    /// children.size() >= 2. Children are kept exactly as given; a nested
    /// Join child is a distinct tree from a flattened chain.
    static CayleyExpr join(std::vector<CayleyExpr> children) {
        if (children.size() < 2) throw InvalidExpressionError("join needs at least two operands");
        return CayleyExpr(std::make_shared<const Node>(Node{Kind::Join, {}, std::move(children)}));
    }

    static CayleyExpr join(CayleyExpr a, CayleyExpr b) {
        std::vector<CayleyExpr> kids;
        kids.push_back(std::move(a));
        kids.push_back(std::move(b));
        return join(std::move(kids));
    }

    static CayleyExpr meet(CayleyExpr left, CayleyExpr right) {
        std::vector<CayleyExpr> kids;
        kids.push_back(std::move(left));
        kids.push_back(std::move(right));
        return CayleyExpr(std::make_shared<const Node>(Node{Kind::Meet, {}, std::move(kids)}));
    }

    Kind kind() const { return node_->kind; }

    bool is_atom() const { return node_->kind == Kind::Atom; }

    const std::string& name() const { return node_->name; }

    std::span<const CayleyExpr> children() const { return node_->children; }

    const CayleyExpr& left() const { return node_->children[0]; }

    const CayleyExpr& right() const { return node_->children[1]; }

    /// Structural equality.
    friend bool operator==(const CayleyExpr& a, const CayleyExpr& b) {
        if (a.node_ == b.node_) return true;
        if (a.node_->kind != b.node_->kind) return false;
        if (a.node_->kind == Kind::Atom) return a.node_->name == b.node_->name;
        if (a.node_->children.size() != b.node_->children.size()) return false;
        for (std::size_t i = 0; i < a.node_->children.size(); ++i)
            if (!(a.node_->children[i] == b.node_->children[i])) return false;
        return true;
    }

private:
    struct Node {
        Kind kind;
        std::string name;                // Atom
        std::vector<CayleyExpr> children; // Join (>=2) or Meet (exactly 2)
    };

    explicit CayleyExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

} // namespace gca
