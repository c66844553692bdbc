#include "artemis/cp.hpp"
#include "artemis/errors.hpp"

namespace artemis::cp {

using plonkish::Cell;
using plonkish::CircuitBuilder;
using plonkish::CircuitIndex;
using plonkish::ColumnKind;
using plonkish::CommitIndexSet;
using plonkish::Expr;

// Inner-product arithmetization of the polynomial evaluation: witness copies,
// explicit powers-of-beta columns and a running sum. Costs m extra columns
// compared to the Horner gate; kept as the overhead baseline.
std::pair<CircuitIndex, StrawmanLayout> strawman_index_transform(const CircuitIndex& circuit,
                                                                 const CommitIndexSet& icom,
                                                                 uint64_t ext_degree_bound) {
    if (icom.lists.empty()) throw BadCircuit("no commitments to link");
    // shares shape validation with the horner transform via a dry run
    horner_index_transform(circuit, icom, ext_degree_bound);

    size_t u = circuit.usable_rows();
    size_t cap = u - 2;
    size_t m = 1;
    for (const auto& list : icom.lists) m = std::max(m, (list.size() + cap - 1) / cap);
    size_t active = 1;
    for (const auto& list : icom.lists)
        active = std::max(active, (list.size() + m - 1) / m);
    size_t ell = icom.count();

    CircuitBuilder b = CircuitBuilder::from_index(circuit);
    StrawmanLayout lay;
    lay.link.ell = ell;
    lay.link.m = m;
    lay.link.active_rows = active;
    lay.link.ext_degree_bound = ext_degree_bound;

    lay.link.ch_alpha = b.add_challenge(0, "link-alpha");
    lay.link.ch_beta = b.add_challenge(0, "link-beta");
    lay.idx_wit = b.add_advice_column(0);
    for (size_t c = 1; c < ell * m; c++) b.add_advice_column(0);
    lay.idx_mu = b.add_advice_column(0);
    lay.idx_pow = b.add_advice_column(1, {lay.link.ch_beta});
    for (size_t c = 1; c < m; c++) b.add_advice_column(1, {lay.link.ch_beta});
    lay.idx_sum = b.add_advice_column(1, {lay.link.ch_alpha, lay.link.ch_beta});
    lay.link.result_column = lay.idx_sum;

    lay.sel_active = b.add_fixed_column();
    lay.sel_first = b.add_fixed_column();
    lay.sel_trans = b.add_fixed_column();
    lay.sel_last = b.add_fixed_column();
    for (size_t j = 0; j < active; j++) b.set_fixed(lay.sel_active, uint32_t(j), F::one());
    b.set_fixed(lay.sel_first, 0, F::one());
    for (size_t j = 0; j + 1 < active; j++) b.set_fixed(lay.sel_trans, uint32_t(j), F::one());
    b.set_fixed(lay.sel_last, uint32_t(active), F::one());

    for (size_t k = 0; k < ell; k++) {
        const auto& list = icom.lists[k];
        for (size_t o = 0; o < list.size(); o++) {
            Cell copy{{ColumnKind::Advice, uint32_t(lay.idx_wit + k * m + o % m)},
                      uint32_t(o / m)};
            b.copy(list[o], copy);
        }
    }

    Expr ca = Expr::challenge(lay.link.ch_alpha);
    Expr cb = Expr::challenge(lay.link.ch_beta);

    // power columns carry beta^(row*m + j)
    b.add_gate("powers-first",
               Expr::fixed(lay.sel_first) * (Expr::advice(lay.idx_pow) - Expr::constant(F::one())));
    for (size_t j = 1; j < m; j++)
        b.add_gate("powers-step",
                   Expr::fixed(lay.sel_active) *
                       (Expr::advice(uint32_t(lay.idx_pow + j)) -
                        Expr::advice(uint32_t(lay.idx_pow + j - 1)) * cb));
    b.add_gate("powers-wrap",
               Expr::fixed(lay.sel_trans) *
                   (Expr::advice(lay.idx_pow, 1) -
                    Expr::advice(uint32_t(lay.idx_pow + m - 1)) * cb));

    // running sum: s = mu + sum_j agg_j * pow_j + s(next row)
    Expr body = Expr::advice(lay.idx_mu);
    for (size_t j = 0; j < m; j++) {
        Expr agg = Expr::constant(F::zero());
        Expr ca_pow = ca;
        for (size_t k = 0; k < ell; k++) {
            agg = agg + Expr::advice(uint32_t(lay.idx_wit + k * m + j)) * ca_pow;
            ca_pow = ca_pow * ca;
        }
        body = body + agg * Expr::advice(uint32_t(lay.idx_pow + j));
    }
    body = body + Expr::advice(lay.idx_sum, 1) - Expr::advice(lay.idx_sum);
    b.add_gate("sum-step", Expr::fixed(lay.sel_active) * body);
    b.add_gate("sum-zero", Expr::fixed(lay.sel_last) * Expr::advice(lay.idx_sum));

    return {b.build(), lay};
}

void fill_strawman_phase0(plonkish::Assignment& assignment, const StrawmanLayout& lay,
                          const CommitIndexSet& icom, const F& mu) {
    if (icom.count() != lay.link.ell) throw LayoutMismatch();
    for (size_t k = 0; k < lay.link.ell; k++) {
        const auto& list = icom.lists[k];
        if (list.size() > lay.link.m * lay.link.active_rows) throw LayoutMismatch();
        for (size_t o = 0; o < list.size(); o++) {
            const auto& cell = list[o];
            assignment.advice[lay.idx_wit + k * lay.link.m + o % lay.link.m][o / lay.link.m] =
                assignment.advice[cell.column.index][cell.row];
        }
    }
    assignment.advice[lay.idx_mu][0] = mu;
}

void fill_strawman_phase1(plonkish::Assignment& assignment, const StrawmanLayout& lay,
                          const F& alpha, const F& beta, const F& psi) {
    size_t active = lay.link.active_rows;
    size_t m = lay.link.m;

    F acc = F::one();
    for (size_t j = 0; j < active; j++)
        for (size_t jj = 0; jj < m; jj++) {
            assignment.advice[lay.idx_pow + jj][j] = acc;
            acc *= beta;
        }

    auto& s = assignment.advice[lay.idx_sum];
    s[active] = F::zero();
    for (size_t j = active; j-- > 0;) {
        F row = assignment.advice[lay.idx_mu][j];
        for (size_t jj = 0; jj < m; jj++) {
            F agg = F::zero();
            F ca_pow = alpha;
            for (size_t k = 0; k < lay.link.ell; k++) {
                agg += assignment.advice[lay.idx_wit + k * m + jj][j] * ca_pow;
                ca_pow *= alpha;
            }
            row += agg * assignment.advice[lay.idx_pow + jj][j];
        }
        s[j] = row + s[j + 1];
    }
    s[active + 1] = psi;
}

} // namespace artemis::cp
