#ifndef ARTEMIS_CIRCUIT_HPP
#define ARTEMIS_CIRCUIT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artemis/expression.hpp"

namespace artemis::plonkish {

struct Gate {
    std::string name;
    Expr poly;
};

struct ChallengeDecl {
    uint32_t phase = 0; // issued after this phase's columns are committed
    std::string label;
};

// The Plonkish index: grid shape, fixed values, gates, copy constraints and
// phase/challenge bookkeeping. Rows [0, usable_rows) carry the witness; the
// tail is reserved for blinding plus the permutation product's final row.
struct CircuitIndex {
    uint32_t log_n = 0;
    std::vector<std::vector<F>> fixed; // [n_fixed][n]
    std::vector<uint32_t> advice_phase;
    std::vector<std::vector<uint32_t>> advice_challenge_deps; // per advice column
    uint32_t n_instance = 0;
    std::vector<ChallengeDecl> challenges;
    std::vector<Gate> gates;
    uint32_t max_gate_degree = 0;

    std::vector<ColumnId> perm_columns; // P_sigma
    // sigma[t][j] = (t', j'): the next cell in the copy cycle of
    // (perm_columns[t], row j); identity when the cell is in no cycle
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> sigma;

    uint32_t blinding_reserve = 0;

    size_t n() const { return size_t(1) << log_n; }
    size_t n_fixed() const { return fixed.size(); }
    size_t n_advice() const { return advice_phase.size(); }
    size_t usable_rows() const { return n() - blinding_reserve; }
    uint32_t num_phases() const;

    std::optional<uint32_t> perm_position(ColumnId col) const;

    Bytes to_bytes() const;
    static CircuitIndex from_bytes(ByteReader& r);
    std::string debug_dump(const struct Assignment* assignment = nullptr) const;
};

// Witness grid plus any challenge values bound so far.
struct Assignment {
    std::vector<std::vector<F>> advice;   // [n_advice][n]
    std::vector<std::vector<F>> instance; // [n_instance][n]
    std::map<uint32_t, F> challenges;

    static Assignment zeroed(const CircuitIndex& index);
    Bytes to_bytes() const;
    static Assignment from_bytes(ByteReader& r);
};

// Ordered cells whose values are the coefficients of externally committed
// polynomials, one list per commitment.
struct CommitIndexSet {
    std::vector<std::vector<Cell>> lists;

    size_t count() const { return lists.size(); }
    size_t max_size() const {
        size_t m = 0;
        for (const auto& l : lists) m = std::max(m, l.size());
        return m;
    }
};

class CircuitBuilder {
  public:
    CircuitBuilder(uint32_t log_n, uint32_t blinding_reserve, uint32_t max_gate_degree = 9);

    // resume building on top of an existing index (circuit transforms)
    static CircuitBuilder from_index(const CircuitIndex& index);

    uint32_t add_fixed_column();
    uint32_t add_advice_column(uint32_t phase = 0, std::vector<uint32_t> challenge_deps = {});
    uint32_t add_instance_column();
    uint32_t add_challenge(uint32_t phase, const std::string& label);

    void set_fixed(uint32_t col, uint32_t row, const F& v);
    void add_gate(const std::string& name, const Expr& poly);
    void copy(Cell a, Cell b);

    size_t usable_rows() const { return index_.usable_rows(); }
    uint32_t log_n() const { return index_.log_n; }

    CircuitIndex build();

  private:
    uint32_t perm_pos(ColumnId col);

    CircuitIndex index_;
    // union-find over permutation cells (flattened t*n+j) to reject
    // degenerate cycle merges
    uint32_t uf_find(uint32_t x);
    std::vector<uint32_t> uf_;
    bool built_ = false;
};

// Brute-force oracle: every gate evaluates to zero on every row and every
// copy cycle holds a single value. Never consults commitments or transcripts.
bool check_satisfiability(const CircuitIndex& index, const Assignment& assignment);

struct PermutationPolys {
    std::vector<F> deltas;                       // per perm column: delta^t
    std::vector<std::vector<F>> id_lagrange;     // labels delta^t * w^j
    std::vector<std::vector<F>> sigma_lagrange;  // labels of sigma(t, j)
};

PermutationPolys permutation_polynomials(const CircuitIndex& index);

} // namespace artemis::plonkish

#endif
