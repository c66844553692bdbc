#include <set>

#include "artemis/cp.hpp"
#include "artemis/errors.hpp"

namespace artemis::cp {

using plonkish::Cell;
using plonkish::CircuitBuilder;
using plonkish::CircuitIndex;
using plonkish::ColumnKind;
using plonkish::CommitIndexSet;
using plonkish::Expr;

namespace {

void validate_icom(const CircuitIndex& circuit, const CommitIndexSet& icom) {
    size_t u = circuit.usable_rows();
    for (const auto& list : icom.lists) {
        std::set<Cell> seen;
        for (const auto& cell : list) {
            if (cell.column.kind != ColumnKind::Advice ||
                cell.column.index >= circuit.n_advice() || cell.row >= u)
                throw BadCircuit("commit-index cell out of range");
            if (!seen.insert(cell).second) throw BadCircuit("duplicate commit-index cell");
        }
    }
}

// columns-per-commitment and active rows for the mod-m split
std::pair<size_t, size_t> split_shape(const CircuitIndex& circuit, const CommitIndexSet& icom) {
    size_t u = circuit.usable_rows();
    if (u < 3) throw NoRoomForHornerRows();
    size_t cap = u - 2; // one row for the zero boundary, one for the extra blinder
    size_t m = 1;
    for (const auto& list : icom.lists)
        m = std::max(m, (list.size() + cap - 1) / cap);
    size_t active = 1;
    for (const auto& list : icom.lists)
        active = std::max(active, (list.size() + m - 1) / m);
    if (active + 2 > u) throw NoRoomForHornerRows();
    return {m, active};
}

} // namespace

std::pair<CircuitIndex, HornerLayout> horner_index_transform(const CircuitIndex& circuit,
                                                             const CommitIndexSet& icom,
                                                             uint64_t ext_degree_bound) {
    if (icom.lists.empty()) throw BadCircuit("no commitments to link");
    validate_icom(circuit, icom);
    auto [m, active] = split_shape(circuit, icom);
    size_t ell = icom.count();

    CircuitBuilder b = CircuitBuilder::from_index(circuit);
    HornerLayout lay;
    lay.link.ell = ell;
    lay.link.m = m;
    lay.link.active_rows = active;
    lay.link.ext_degree_bound = ext_degree_bound;

    lay.link.ch_alpha = b.add_challenge(0, "link-alpha");
    lay.link.ch_beta = b.add_challenge(0, "link-beta");
    lay.idx_wit = b.add_advice_column(0);
    for (size_t c = 1; c < ell * m; c++) b.add_advice_column(0);
    lay.idx_mu = b.add_advice_column(0);
    lay.idx_rho = b.add_advice_column(1, {lay.link.ch_alpha, lay.link.ch_beta});
    lay.link.result_column = lay.idx_rho;

    lay.sel_active = b.add_fixed_column();
    lay.sel_last = b.add_fixed_column();
    for (size_t j = 0; j < active; j++) b.set_fixed(lay.sel_active, uint32_t(j), F::one());
    b.set_fixed(lay.sel_last, uint32_t(active), F::one());

    // copy constraints: element o of commitment k lives at
    // (idx_wit + k*m + o mod m, floor(o/m))
    for (size_t k = 0; k < ell; k++) {
        const auto& list = icom.lists[k];
        for (size_t o = 0; o < list.size(); o++) {
            Cell copy{{ColumnKind::Advice, uint32_t(lay.idx_wit + k * m + o % m)},
                      uint32_t(o / m)};
            b.copy(list[o], copy);
        }
    }

    // sel * (a_mu + sum_j (sum_k wit[k,j] * Ca^(k+1)) * Cb^j
    //        + rho(next row) * Cb^m - rho)
    Expr ca = Expr::challenge(lay.link.ch_alpha);
    Expr cb = Expr::challenge(lay.link.ch_beta);
    Expr body = Expr::advice(lay.idx_mu);
    Expr cb_pow = Expr::constant(F::one());
    for (size_t j = 0; j < m; j++) {
        Expr agg = Expr::constant(F::zero());
        Expr ca_pow = ca;
        for (size_t k = 0; k < ell; k++) {
            agg = agg + Expr::advice(uint32_t(lay.idx_wit + k * m + j)) * ca_pow;
            ca_pow = ca_pow * ca;
        }
        body = body + agg * cb_pow;
        cb_pow = cb_pow * cb;
    }
    body = body + Expr::advice(lay.idx_rho, 1) * cb_pow - Expr::advice(lay.idx_rho);
    b.add_gate("horner-step", Expr::fixed(lay.sel_active) * body);
    // boundary: evaluation column is zero one row past the active region
    b.add_gate("horner-zero", Expr::fixed(lay.sel_last) * Expr::advice(lay.idx_rho));

    return {b.build(), lay};
}

void fill_horner_phase0(plonkish::Assignment& assignment, const HornerLayout& lay,
                        const CommitIndexSet& icom, const F& mu) {
    if (icom.count() != lay.ell()) throw LayoutMismatch();
    size_t n = assignment.advice.empty() ? 0 : assignment.advice[0].size();
    for (size_t k = 0; k < lay.ell(); k++) {
        const auto& list = icom.lists[k];
        if (list.size() > lay.m() * lay.n_horner()) throw LayoutMismatch();
        for (size_t o = 0; o < list.size(); o++) {
            const auto& cell = list[o];
            if (cell.column.index >= assignment.advice.size() || cell.row >= n)
                throw LayoutMismatch();
            assignment.advice[lay.idx_wit + k * lay.m() + o % lay.m()][o / lay.m()] =
                assignment.advice[cell.column.index][cell.row];
        }
    }
    assignment.advice[lay.idx_mu][0] = mu;
}

void fill_horner_phase1(plonkish::Assignment& assignment, const HornerLayout& lay,
                        const F& alpha, const F& beta, const F& psi) {
    auto& rho = assignment.advice[lay.idx_rho];
    size_t active = lay.n_horner();
    F beta_m = beta.pow(lay.m());
    rho[active] = F::zero();
    for (size_t j = active; j-- > 0;) {
        F row = assignment.advice[lay.idx_mu][j];
        F cb_pow = F::one();
        for (size_t jj = 0; jj < lay.m(); jj++) {
            F agg = F::zero();
            F ca_pow = alpha;
            for (size_t k = 0; k < lay.ell(); k++) {
                agg += assignment.advice[lay.idx_wit + k * lay.m() + jj][j] * ca_pow;
                ca_pow *= alpha;
            }
            row += agg * cb_pow;
            cb_pow *= beta;
        }
        rho[j] = row + rho[j + 1] * beta_m;
    }
    rho[active + 1] = psi;
}

plonkish::Assignment horner_witness_transform(const plonkish::Assignment& assignment,
                                              const HornerLayout& lay,
                                              const CommitIndexSet& icom, const F& mu,
                                              const F& alpha, const F& beta, const F& psi) {
    plonkish::Assignment out = assignment;
    fill_horner_phase0(out, lay, icom, mu);
    fill_horner_phase1(out, lay, alpha, beta, psi);
    out.challenges[lay.link.ch_alpha] = alpha;
    out.challenges[lay.link.ch_beta] = beta;
    return out;
}

} // namespace artemis::cp
