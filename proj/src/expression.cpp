#include "artemis/expression.hpp"

#include <algorithm>

#include "artemis/errors.hpp"

namespace artemis::plonkish {

Expr Expr::constant(const F& v) {
    auto n = std::make_shared<Node>();
    n->op = Op::Const;
    n->value = v;
    return Expr(std::move(n));
}

Expr Expr::cell(ColumnId col, int32_t rotation) {
    if (rotation < -1 || rotation > 1) throw BadCircuit("rotation outside [-1, 1]");
    auto n = std::make_shared<Node>();
    n->op = Op::Cell;
    n->col = col;
    n->rotation = rotation;
    return Expr(std::move(n));
}

Expr Expr::challenge(uint32_t id) {
    auto n = std::make_shared<Node>();
    n->op = Op::Challenge;
    n->challenge = id;
    return Expr(std::move(n));
}

Expr Expr::operator+(const Expr& o) const {
    auto n = std::make_shared<Node>();
    n->op = Op::Sum;
    n->left = node_;
    n->right = o.node_;
    return Expr(std::move(n));
}

Expr Expr::operator*(const Expr& o) const {
    auto n = std::make_shared<Node>();
    n->op = Op::Product;
    n->left = node_;
    n->right = o.node_;
    return Expr(std::move(n));
}

uint32_t Expr::degree() const {
    switch (node_->op) {
        case Op::Const:
        case Op::Challenge:
            return 0;
        case Op::Cell:
            return 1;
        case Op::Sum:
            return std::max(Expr(node_->left).degree(), Expr(node_->right).degree());
        case Op::Product:
            return Expr(node_->left).degree() + Expr(node_->right).degree();
    }
    return 0;
}

F Expr::evaluate(const std::function<F(ColumnId, int32_t)>& cell_fn,
                 const std::function<F(uint32_t)>& chal_fn) const {
    switch (node_->op) {
        case Op::Const:
            return node_->value;
        case Op::Cell:
            return cell_fn(node_->col, node_->rotation);
        case Op::Challenge:
            return chal_fn(node_->challenge);
        case Op::Sum:
            return Expr(node_->left).evaluate(cell_fn, chal_fn) +
                   Expr(node_->right).evaluate(cell_fn, chal_fn);
        case Op::Product:
            return Expr(node_->left).evaluate(cell_fn, chal_fn) *
                   Expr(node_->right).evaluate(cell_fn, chal_fn);
    }
    return F::zero();
}

void Expr::collect_cells(std::vector<std::pair<ColumnId, int32_t>>& out) const {
    switch (node_->op) {
        case Op::Cell: {
            std::pair<ColumnId, int32_t> q{node_->col, node_->rotation};
            if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
            break;
        }
        case Op::Sum:
        case Op::Product:
            Expr(node_->left).collect_cells(out);
            Expr(node_->right).collect_cells(out);
            break;
        default:
            break;
    }
}

void Expr::collect_challenges(std::vector<uint32_t>& out) const {
    switch (node_->op) {
        case Op::Challenge:
            if (std::find(out.begin(), out.end(), node_->challenge) == out.end())
                out.push_back(node_->challenge);
            break;
        case Op::Sum:
        case Op::Product:
            Expr(node_->left).collect_challenges(out);
            Expr(node_->right).collect_challenges(out);
            break;
        default:
            break;
    }
}

std::vector<Expr::Step> Expr::compile() const {
    std::vector<Step> steps;
    switch (node_->op) {
        case Op::Const:
            steps.push_back({Op::Const, node_->value, {}, 0, 0});
            break;
        case Op::Cell:
            steps.push_back({Op::Cell, F::zero(), node_->col, node_->rotation, 0});
            break;
        case Op::Challenge:
            steps.push_back({Op::Challenge, F::zero(), {}, 0, node_->challenge});
            break;
        case Op::Sum:
        case Op::Product: {
            auto l = Expr(node_->left).compile();
            auto r = Expr(node_->right).compile();
            steps.insert(steps.end(), l.begin(), l.end());
            steps.insert(steps.end(), r.begin(), r.end());
            steps.push_back({node_->op, F::zero(), {}, 0, 0});
            break;
        }
    }
    return steps;
}

void Expr::to_bytes(ByteWriter& w) const {
    w.u8(uint8_t(node_->op));
    switch (node_->op) {
        case Op::Const:
            node_->value.to_bytes(w);
            break;
        case Op::Cell:
            w.u8(uint8_t(node_->col.kind));
            w.u32(node_->col.index);
            w.u32(uint32_t(node_->rotation + 1));
            break;
        case Op::Challenge:
            w.u32(node_->challenge);
            break;
        case Op::Sum:
        case Op::Product:
            Expr(node_->left).to_bytes(w);
            Expr(node_->right).to_bytes(w);
            break;
    }
}

Expr Expr::from_bytes(ByteReader& r) {
    Op op = Op(r.u8());
    switch (op) {
        case Op::Const:
            return constant(F::from_bytes(r));
        case Op::Cell: {
            ColumnKind kind = ColumnKind(r.u8());
            uint32_t index = r.u32();
            int32_t rot = int32_t(r.u32()) - 1;
            return cell({kind, index}, rot);
        }
        case Op::Challenge:
            return challenge(r.u32());
        case Op::Sum: {
            Expr l = from_bytes(r);
            Expr rr = from_bytes(r);
            return l + rr;
        }
        case Op::Product: {
            Expr l = from_bytes(r);
            Expr rr = from_bytes(r);
            return l * rr;
        }
    }
    throw ProofDecodeError("bad expression tag");
}

} // namespace artemis::plonkish
