#include "artemis/circuit.hpp"

#include <algorithm>
#include <sstream>

#include "artemis/errors.hpp"

namespace artemis::plonkish {

uint32_t CircuitIndex::num_phases() const {
    uint32_t p = 0;
    for (uint32_t ph : advice_phase) p = std::max(p, ph + 1);
    return std::max(p, 1u);
}

std::optional<uint32_t> CircuitIndex::perm_position(ColumnId col) const {
    for (uint32_t t = 0; t < perm_columns.size(); t++)
        if (perm_columns[t] == col) return t;
    return std::nullopt;
}

CircuitBuilder::CircuitBuilder(uint32_t log_n, uint32_t blinding_reserve,
                               uint32_t max_gate_degree) {
    index_.log_n = log_n;
    index_.blinding_reserve = blinding_reserve;
    index_.max_gate_degree = max_gate_degree;
    if (index_.usable_rows() <= 0 || blinding_reserve >= index_.n())
        throw BadCircuit("no usable rows");
}

CircuitBuilder CircuitBuilder::from_index(const CircuitIndex& index) {
    CircuitBuilder b(index.log_n, index.blinding_reserve, index.max_gate_degree);
    b.index_ = index;
    size_t n = index.n();
    size_t total = index.perm_columns.size() * n;
    b.uf_.resize(total);
    for (size_t i = 0; i < total; i++) b.uf_[i] = uint32_t(i);
    for (uint32_t t = 0; t < index.perm_columns.size(); t++) {
        for (uint32_t j = 0; j < n; j++) {
            auto [t2, j2] = index.sigma[t][j];
            if (t2 == t && j2 == j) continue;
            uint32_t ra = b.uf_find(uint32_t(t * n + j));
            uint32_t rb = b.uf_find(uint32_t(size_t(t2) * n + j2));
            if (ra != rb) b.uf_[ra] = rb;
        }
    }
    return b;
}

uint32_t CircuitBuilder::add_fixed_column() {
    index_.fixed.emplace_back(index_.n(), F::zero());
    return uint32_t(index_.fixed.size() - 1);
}

uint32_t CircuitBuilder::add_advice_column(uint32_t phase, std::vector<uint32_t> challenge_deps) {
    index_.advice_phase.push_back(phase);
    index_.advice_challenge_deps.push_back(std::move(challenge_deps));
    return uint32_t(index_.advice_phase.size() - 1);
}

uint32_t CircuitBuilder::add_instance_column() { return index_.n_instance++; }

uint32_t CircuitBuilder::add_challenge(uint32_t phase, const std::string& label) {
    index_.challenges.push_back({phase, label});
    return uint32_t(index_.challenges.size() - 1);
}

void CircuitBuilder::set_fixed(uint32_t col, uint32_t row, const F& v) {
    if (col >= index_.fixed.size()) throw BadCircuit("fixed column out of range");
    if (row >= index_.usable_rows()) throw BadCircuit("fixed value in reserved rows");
    index_.fixed[col][row] = v;
}

void CircuitBuilder::add_gate(const std::string& name, const Expr& poly) {
    index_.gates.push_back({name, poly});
}

uint32_t CircuitBuilder::perm_pos(ColumnId col) {
    for (uint32_t t = 0; t < index_.perm_columns.size(); t++)
        if (index_.perm_columns[t] == col) return t;
    index_.perm_columns.push_back(col);
    size_t n = index_.n();
    auto& s = index_.sigma.emplace_back(n);
    uint32_t t = uint32_t(index_.perm_columns.size() - 1);
    for (uint32_t j = 0; j < n; j++) s[j] = {t, j};
    return t;
}

void CircuitBuilder::copy(Cell a, Cell b) {
    size_t u = index_.usable_rows();
    if (a.row >= u || b.row >= u) throw BadCircuit("copy cell in reserved rows");
    auto check_col = [&](ColumnId c) {
        switch (c.kind) {
            case ColumnKind::Fixed:
                if (c.index >= index_.fixed.size()) throw BadCircuit("copy column out of range");
                break;
            case ColumnKind::Advice:
                if (c.index >= index_.advice_phase.size())
                    throw BadCircuit("copy column out of range");
                break;
            case ColumnKind::Instance:
                if (c.index >= index_.n_instance) throw BadCircuit("copy column out of range");
                break;
        }
    };
    check_col(a.column);
    check_col(b.column);
    if (a == b) throw CycleOverlap("self copy");

    uint32_t ta = perm_pos(a.column);
    uint32_t tb = perm_pos(b.column);

    // union-find across all perm cells, flattened as t * n + j
    size_t n = index_.n();
    size_t total = index_.perm_columns.size() * n;
    if (uf_.size() < total) {
        size_t old = uf_.size();
        uf_.resize(total);
        for (size_t i = old; i < total; i++) uf_[i] = uint32_t(i);
    }
    uint32_t ia = uint32_t(ta * n + a.row), ib = uint32_t(tb * n + b.row);
    uint32_t ra = uf_find(ia), rb = uf_find(ib);
    if (ra == rb) throw CycleOverlap("cells already in one cycle");
    uf_[ra] = rb;

    // splice the two cycles: swap successors
    std::swap(index_.sigma[ta][a.row], index_.sigma[tb][b.row]);
}

uint32_t CircuitBuilder::uf_find(uint32_t x) {
    while (uf_[x] != x) {
        uf_[x] = uf_[uf_[x]];
        x = uf_[x];
    }
    return x;
}

CircuitIndex CircuitBuilder::build() {
    if (built_) throw BadCircuit("build() called twice");
    built_ = true;

    // challenge ordering: a phase-r column may only depend on challenges
    // issued strictly before phase r commits
    for (size_t a = 0; a < index_.advice_phase.size(); a++) {
        for (uint32_t dep : index_.advice_challenge_deps[a]) {
            if (dep >= index_.challenges.size()) throw BadCircuit("unknown challenge dep");
            if (index_.challenges[dep].phase >= index_.advice_phase[a])
                throw ChallengeBeforeIssue();
        }
    }
    // gates: every referenced challenge must be issued before the gate's
    // latest advice phase commits
    for (const auto& gate : index_.gates) {
        if (gate.poly.degree() > index_.max_gate_degree) throw DegreeTooHigh(gate.name);
        std::vector<std::pair<ColumnId, int32_t>> cells;
        gate.poly.collect_cells(cells);
        uint32_t pmax = 0;
        for (const auto& [col, rot] : cells) {
            (void)rot;
            if (col.kind == ColumnKind::Advice) {
                if (col.index >= index_.advice_phase.size())
                    throw BadCircuit("gate references unknown advice column");
                pmax = std::max(pmax, index_.advice_phase[col.index]);
            } else if (col.kind == ColumnKind::Fixed) {
                if (col.index >= index_.fixed.size())
                    throw BadCircuit("gate references unknown fixed column");
            } else if (col.index >= index_.n_instance) {
                throw BadCircuit("gate references unknown instance column");
            }
        }
        std::vector<uint32_t> chals;
        gate.poly.collect_challenges(chals);
        for (uint32_t c : chals) {
            if (c >= index_.challenges.size()) throw BadCircuit("gate references unknown challenge");
            if (index_.challenges[c].phase >= pmax) throw ChallengeBeforeIssue(gate.name);
        }
    }
    return index_;
}

Assignment Assignment::zeroed(const CircuitIndex& index) {
    Assignment a;
    a.advice.assign(index.n_advice(), std::vector<F>(index.n(), F::zero()));
    a.instance.assign(index.n_instance, std::vector<F>(index.n(), F::zero()));
    return a;
}

bool check_satisfiability(const CircuitIndex& index, const Assignment& assignment) {
    size_t n = index.n();
    if (assignment.advice.size() != index.n_advice() ||
        assignment.instance.size() != index.n_instance)
        throw BadCircuit("assignment dimensions do not match index");
    for (const auto& col : assignment.advice)
        if (col.size() != n) throw BadCircuit("assignment dimensions do not match index");
    for (const auto& col : assignment.instance)
        if (col.size() != n) throw BadCircuit("assignment dimensions do not match index");

    auto cell_value = [&](ColumnId col, uint32_t row) -> const F& {
        switch (col.kind) {
            case ColumnKind::Fixed:
                return index.fixed[col.index][row];
            case ColumnKind::Advice:
                return assignment.advice[col.index][row];
            default:
                return assignment.instance[col.index][row];
        }
    };

    for (const auto& gate : index.gates) {
        for (uint32_t row = 0; row < n; row++) {
            F v = gate.poly.evaluate(
                [&](ColumnId col, int32_t rot) {
                    uint32_t r = uint32_t((row + n + size_t(int64_t(rot))) % n);
                    return cell_value(col, r);
                },
                [&](uint32_t id) {
                    auto it = assignment.challenges.find(id);
                    if (it == assignment.challenges.end())
                        throw BadCircuit("gate challenge value not bound");
                    return it->second;
                });
            if (!v.is_zero()) return false;
        }
    }

    for (uint32_t t = 0; t < index.perm_columns.size(); t++) {
        for (uint32_t j = 0; j < n; j++) {
            auto [t2, j2] = index.sigma[t][j];
            if (t2 == t && j2 == j) continue;
            if (cell_value(index.perm_columns[t], j) != cell_value(index.perm_columns[t2], j2))
                return false;
        }
    }
    return true;
}

} // namespace artemis::plonkish
