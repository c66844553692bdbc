#ifndef ARTEMIS_EXPRESSION_HPP
#define ARTEMIS_EXPRESSION_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "artemis/bytes.hpp"
#include "artemis/fields.hpp"

namespace artemis::plonkish {

enum class ColumnKind : uint8_t { Fixed = 0, Advice = 1, Instance = 2 };

struct ColumnId {
    ColumnKind kind = ColumnKind::Advice;
    uint32_t index = 0;
    auto operator<=>(const ColumnId&) const = default;
};

struct Cell {
    ColumnId column;
    uint32_t row = 0;
    auto operator<=>(const Cell&) const = default;
};

// Gate constraint expression: column references with row rotation, challenge
// variables, constants, + and x.
class Expr {
  public:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;
    enum class Op : uint8_t { Const = 0, Cell = 1, Challenge = 2, Sum = 3, Product = 4 };

    struct Node {
        Op op;
        F value;             // Const
        ColumnId col;        // Cell
        int32_t rotation = 0;
        uint32_t challenge = 0; // Challenge
        NodePtr left, right;
    };

    Expr() : Expr(constant(F::zero())) {}

    static Expr constant(const F& v);
    static Expr cell(ColumnId col, int32_t rotation = 0);
    static Expr fixed(uint32_t index, int32_t rotation = 0) {
        return cell({ColumnKind::Fixed, index}, rotation);
    }
    static Expr advice(uint32_t index, int32_t rotation = 0) {
        return cell({ColumnKind::Advice, index}, rotation);
    }
    static Expr instance(uint32_t index, int32_t rotation = 0) {
        return cell({ColumnKind::Instance, index}, rotation);
    }
    static Expr challenge(uint32_t id);

    Expr operator+(const Expr& o) const;
    Expr operator*(const Expr& o) const;
    Expr operator-(const Expr& o) const { return *this + constant(-F::one()) * o; }
    Expr operator-() const { return constant(-F::one()) * *this; }

    uint32_t degree() const;

    // cell_fn(column, rotation) and chal_fn(id) supply the leaf values
    F evaluate(const std::function<F(ColumnId, int32_t)>& cell_fn,
               const std::function<F(uint32_t)>& chal_fn) const;

    void collect_cells(std::vector<std::pair<ColumnId, int32_t>>& out) const;
    void collect_challenges(std::vector<uint32_t>& out) const;

    void to_bytes(ByteWriter& w) const;
    static Expr from_bytes(ByteReader& r);

    const Node& node() const { return *node_; }

    // flat postfix form for hot evaluation loops
    struct Step {
        Op op;
        F value;
        ColumnId col;
        int32_t rotation = 0;
        uint32_t challenge = 0;
    };
    std::vector<Step> compile() const;

  private:
    explicit Expr(NodePtr n) : node_(std::move(n)) {}
    NodePtr node_;
};

// stack machine over a compiled expression; cell_fn and chal_fn as in
// Expr::evaluate but without per-node indirection
template <typename CellFn, typename ChalFn>
F eval_steps(const std::vector<Expr::Step>& steps, std::vector<F>& stack, const CellFn& cell_fn,
             const ChalFn& chal_fn) {
    stack.clear();
    for (const auto& s : steps) {
        switch (s.op) {
            case Expr::Op::Const:
                stack.push_back(s.value);
                break;
            case Expr::Op::Cell:
                stack.push_back(cell_fn(s.col, s.rotation));
                break;
            case Expr::Op::Challenge:
                stack.push_back(chal_fn(s.challenge));
                break;
            case Expr::Op::Sum: {
                F b = stack.back();
                stack.pop_back();
                stack.back() += b;
                break;
            }
            case Expr::Op::Product: {
                F b = stack.back();
                stack.pop_back();
                stack.back() *= b;
                break;
            }
        }
    }
    return stack.back();
}

} // namespace artemis::plonkish

#endif
