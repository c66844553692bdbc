#include "artemis/hash_circuit.hpp"

#include "artemis/errors.hpp"

namespace artemis::sponge {

using plonkish::Cell;
using plonkish::CircuitBuilder;
using plonkish::CircuitIndex;
using plonkish::ColumnKind;
using plonkish::CommitIndexSet;
using plonkish::Expr;

namespace {

Expr sbox_expr(const Expr& x) {
    Expr x2 = x * x;
    return x2 * x2 * x;
}

constexpr size_t kW = SpongeParams::kWidth;
constexpr size_t kR = SpongeParams::kRate;
constexpr size_t kRounds = SpongeParams::kTotalRounds;

} // namespace

std::pair<CircuitIndex, HashLayout> hash_index_transform(const CircuitIndex& circuit,
                                                         const CommitIndexSet& icom,
                                                         const SpongeParams& params) {
    HashLayout lay;
    lay.params = params;

    size_t total_rows = 0;
    for (const auto& list : icom.lists) total_rows += HashLayout::rows_for(list.size());
    if (total_rows > circuit.usable_rows()) throw NoRoomForHashRows();

    CircuitBuilder b = CircuitBuilder::from_index(circuit);
    lay.col_state = b.add_advice_column();
    b.add_advice_column();
    b.add_advice_column();
    lay.col_in = b.add_advice_column();
    b.add_advice_column();
    lay.fx_rc = b.add_fixed_column();
    b.add_fixed_column();
    b.add_fixed_column();
    lay.sel_init = b.add_fixed_column();
    lay.sel_absorb = b.add_fixed_column();
    lay.sel_full = b.add_fixed_column();
    lay.sel_partial = b.add_fixed_column();
    lay.fx_pad_mask = b.add_fixed_column();
    b.add_fixed_column();
    lay.fx_pad_val = b.add_fixed_column();
    b.add_fixed_column();
    lay.inst_digest = b.add_instance_column();

    // gates
    for (size_t i = 0; i < kW; i++)
        b.add_gate("sponge-init", Expr::fixed(lay.sel_init) * Expr::advice(lay.col_state + i));
    for (size_t i = 0; i < kR; i++)
        b.add_gate("sponge-absorb",
                   Expr::fixed(lay.sel_absorb) *
                       (Expr::advice(lay.col_state + i, 1) - Expr::advice(lay.col_state + i) -
                        Expr::advice(lay.col_in + i)));
    b.add_gate("sponge-absorb-cap",
               Expr::fixed(lay.sel_absorb) * (Expr::advice(lay.col_state + kW - 1, 1) -
                                              Expr::advice(lay.col_state + kW - 1)));
    for (size_t i = 0; i < kR; i++)
        b.add_gate("sponge-pad", Expr::fixed(lay.fx_pad_mask + i) *
                                     (Expr::advice(lay.col_in + i) -
                                      Expr::fixed(lay.fx_pad_val + i)));
    for (size_t i = 0; i < kW; i++) {
        Expr full = Expr::constant(F::zero());
        Expr partial = Expr::constant(F::zero());
        for (size_t j = 0; j < kW; j++) {
            Expr pre = Expr::advice(lay.col_state + j) + Expr::fixed(lay.fx_rc + j);
            Expr mixed_full = sbox_expr(pre);
            Expr mixed_partial = j == 0 ? sbox_expr(pre) : pre;
            full = full + Expr::constant(params.mds[i][j]) * mixed_full;
            partial = partial + Expr::constant(params.mds[i][j]) * mixed_partial;
        }
        b.add_gate("sponge-full",
                   Expr::fixed(lay.sel_full) * (full - Expr::advice(lay.col_state + i, 1)));
        b.add_gate("sponge-partial",
                   Expr::fixed(lay.sel_partial) * (partial - Expr::advice(lay.col_state + i, 1)));
    }

    // per-commitment blocks
    size_t row = 0;
    for (size_t k = 0; k < icom.count(); k++) {
        const auto& list = icom.lists[k];
        size_t padded = list.size() + 1;
        if (padded % kR) padded += kR - padded % kR;
        size_t chunks = padded / kR;

        b.set_fixed(lay.sel_init, uint32_t(row), F::one());
        for (size_t c = 0; c < chunks; c++) {
            size_t absorb_row = row + c * (1 + kRounds);
            b.set_fixed(lay.sel_absorb, uint32_t(absorb_row), F::one());
            for (size_t i = 0; i < kR; i++) {
                size_t o = c * kR + i;
                if (o < list.size()) {
                    b.copy(list[o], Cell{{ColumnKind::Advice, uint32_t(lay.col_in + i)},
                                         uint32_t(absorb_row)});
                } else {
                    b.set_fixed(lay.fx_pad_mask + uint32_t(i), uint32_t(absorb_row), F::one());
                    b.set_fixed(lay.fx_pad_val + uint32_t(i), uint32_t(absorb_row),
                                o == list.size() ? F::one() : F::zero());
                }
            }
            for (size_t r = 0; r < kRounds; r++) {
                size_t rr = absorb_row + 1 + r;
                if (params.is_full_round(r))
                    b.set_fixed(lay.sel_full, uint32_t(rr), F::one());
                else
                    b.set_fixed(lay.sel_partial, uint32_t(rr), F::one());
                for (size_t i = 0; i < kW; i++)
                    b.set_fixed(lay.fx_rc + uint32_t(i), uint32_t(rr),
                                params.round_constants[r][i]);
            }
        }
        size_t digest_row = row + chunks * (1 + kRounds);
        lay.digest_rows.push_back(uint32_t(digest_row));
        b.copy(Cell{{ColumnKind::Advice, lay.col_state}, uint32_t(digest_row)},
               Cell{{ColumnKind::Instance, lay.inst_digest}, uint32_t(k)});
        row = digest_row + 1;
    }
    lay.rows_used = row;
    return {b.build(), lay};
}

void fill_hash_witness(plonkish::Assignment& assignment, const HashLayout& lay,
                       const CommitIndexSet& icom) {
    size_t row = 0;
    for (size_t k = 0; k < icom.count(); k++) {
        const auto& list = icom.lists[k];
        std::vector<F> weights;
        weights.reserve(list.size());
        for (const auto& cell : list)
            weights.push_back(assignment.advice[cell.column.index][cell.row]);
        std::vector<F> padded = pad_input(weights);
        size_t chunks = padded.size() / kR;

        State state{F::zero(), F::zero(), F::zero()};
        for (size_t c = 0; c < chunks; c++) {
            size_t absorb_row = row + c * (1 + kRounds);
            for (size_t i = 0; i < kW; i++)
                assignment.advice[lay.col_state + i][absorb_row] = state[i];
            for (size_t i = 0; i < kR; i++) {
                assignment.advice[lay.col_in + i][absorb_row] = padded[c * kR + i];
                state[i] += padded[c * kR + i];
            }
            for (size_t r = 0; r < kRounds; r++) {
                size_t rr = absorb_row + 1 + r;
                for (size_t i = 0; i < kW; i++)
                    assignment.advice[lay.col_state + i][rr] = state[i];
                state = round_step(lay.params, state, r);
            }
        }
        size_t digest_row = row + chunks * (1 + kRounds);
        for (size_t i = 0; i < kW; i++)
            assignment.advice[lay.col_state + i][digest_row] = state[i];
        assignment.instance[lay.inst_digest][k] = state[0];
        row = digest_row + 1;
    }
}

} // namespace artemis::sponge
