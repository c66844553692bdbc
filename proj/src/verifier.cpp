#include <map>

#include "artemis/errors.hpp"
#include "artemis/piop.hpp"

namespace artemis::piop {

bool verify(const VerifyingKey& vk, const Ck& ck,
            const std::vector<std::vector<F>>& instance, const PlonkProof& proof,
            Transcript& ts, VerifyOutput* out) {
    using plonkish::ColumnId;
    using plonkish::ColumnKind;

    const auto& index = vk.index;
    const size_t n = index.n();
    const size_t u = index.usable_rows();
    const uint64_t col_bound = n - 1;
    auto domain = EvaluationDomain<F>::make(index.log_n);

    if (instance.size() != index.n_instance) return false;
    for (const auto& col : instance)
        if (col.size() != n) return false;

    absorb_instance(ts, vk.digest, instance);

    // ---- replay the commit/challenge schedule ----
    const uint32_t phases = index.num_phases();
    if (proof.advice_commitments.size() != phases) return false;
    std::map<uint32_t, F> challenges;
    for (uint32_t p = 0; p < phases; p++) {
        size_t expected = 0;
        for (uint32_t a = 0; a < index.n_advice(); a++)
            if (index.advice_phase[a] == p) expected++;
        if (proof.advice_commitments[p].size() != expected) return false;
        for (const auto& cmt : proof.advice_commitments[p]) {
            if (cmt.degree_bound != col_bound) return false;
            ts.absorb("advice-commitment", cmt);
        }
        for (uint32_t cid = 0; cid < index.challenges.size(); cid++) {
            if (index.challenges[cid].phase != p) continue;
            challenges[cid] = ts.challenge_nonzero<F>("challenge-" + index.challenges[cid].label);
        }
    }
    if (out) out->challenges = challenges;

    F pbeta = ts.challenge_nonzero<F>("perm-beta");
    F pgamma = ts.challenge_nonzero<F>("perm-gamma");
    size_t n_perm = index.perm_columns.size();
    size_t n_z = perm_z_count(n_perm);
    if (proof.z_commitments.size() != n_z) return false;
    for (const auto& cmt : proof.z_commitments) {
        if (cmt.degree_bound != col_bound) return false;
        ts.absorb("z-commitment", cmt);
    }
    F y = ts.challenge_nonzero<F>("gate-aggregation");

    if (proof.quotient_commitments.size() != vk.quotient_chunks) return false;
    for (const auto& cmt : proof.quotient_commitments) {
        if (cmt.degree_bound != col_bound) return false;
        ts.absorb("quotient-commitment", cmt);
    }

    F x;
    do {
        x = ts.challenge_nonzero<F>("eval-x");
    } while (x.pow(n) == F::one());

    QueryLayout layout = QueryLayout::build(index, vk.quotient_chunks);
    if (proof.evals.size() != layout.entries.size()) return false;
    for (const auto& v : proof.evals) ts.absorb("claimed-eval", v);
    F xi = ts.challenge_nonzero<F>("batch-xi");

    // claimed evaluations by (polynomial, rotation)
    std::map<std::pair<size_t, int32_t>, F> eval_map;
    for (size_t e = 0; e < layout.entries.size(); e++)
        eval_map[layout.entries[e]] = proof.evals[e];

    // instance polynomials are public: evaluate them directly
    std::map<std::pair<size_t, int32_t>, F> inst_map;
    for (size_t i = 0; i < index.n_instance; i++) {
        for (int32_t rot : layout.instance_rots[i]) {
            F point = x;
            if (rot == 1) point = x * domain.omega;
            if (rot == -1) point = x * domain.omega_inv;
            inst_map[{i, rot}] = domain.eval_from_lagrange(instance[i], point);
        }
    }

    auto cell_at_x = [&](ColumnId col, int32_t rot) -> F {
        switch (col.kind) {
            case ColumnKind::Advice:
                return eval_map.at({layout.advice_poly(col.index), rot});
            case ColumnKind::Fixed:
                return eval_map.at({layout.fixed_poly(col.index), rot});
            default:
                return inst_map.at({col.index, rot});
        }
    };
    auto chal_fn = [&](uint32_t id) { return challenges.at(id); };

    // ---- decision predicate: aggregated constraint identity at x ----
    F agg = F::zero();
    try {
        for (const auto& gate : index.gates) agg = agg * y + gate.poly.evaluate(cell_at_x, chal_fn);

        F l0_x = domain.lagrange_eval(0, x);
        F lu_x = domain.lagrange_eval(u, x);
        F active_x = eval_map.at({layout.active_poly(), 0});

        F zprod_x = F::one();
        for (size_t a = 0; a < n_z; a++) {
            F z_x = eval_map.at({layout.z_poly(a), 0});
            F z_wx = eval_map.at({layout.z_poly(a), 1});
            zprod_x *= z_x;
            agg = agg * y + l0_x * (z_x - F::one());
            F lhs = z_wx, rhs = z_x;
            size_t t0 = a * kMaxPermColsPerZ;
            size_t t1 = std::min(n_perm, t0 + kMaxPermColsPerZ);
            for (size_t t = t0; t < t1; t++) {
                F v = cell_at_x(index.perm_columns[t], 0);
                lhs *= v + pbeta * eval_map.at({layout.sigma_poly(t), 0}) + pgamma;
                rhs *= v + pbeta * vk.perm_deltas[t] * x + pgamma;
            }
            agg = agg * y + active_x * (lhs - rhs);
        }
        agg = agg * y + lu_x * (zprod_x - F::one());
    } catch (const std::out_of_range&) {
        return false;
    }

    F zx_van = x.pow(n) - F::one();
    F t_at_x = F::zero();
    F xn = x.pow(n);
    F xpow = F::one();
    for (size_t c = 0; c < vk.quotient_chunks; c++) {
        t_at_x += xpow * eval_map.at({layout.chunk_poly(c), 0});
        xpow *= xn;
    }
    if (agg != t_at_x * zx_van) return false;

    // ---- batch opening check ----
    std::vector<Commitment> commitments(layout.poly_count());
    for (size_t a = 0; a < index.n_advice(); a++) {
        OracleId oid = vk.advice_map[a];
        commitments[layout.advice_poly(a)] = proof.advice_commitments[oid.round][oid.index];
    }
    for (size_t i = 0; i < vk.fixed_commitments.size(); i++)
        commitments[layout.fixed_poly(i)] = vk.fixed_commitments[i];
    for (size_t t = 0; t < vk.sigma_commitments.size(); t++)
        commitments[layout.sigma_poly(t)] = vk.sigma_commitments[t];
    for (size_t a = 0; a < n_z; a++) commitments[layout.z_poly(a)] = proof.z_commitments[a];
    for (size_t c = 0; c < vk.quotient_chunks; c++)
        commitments[layout.chunk_poly(c)] = proof.quotient_commitments[c];

    std::vector<Query<F>> queries;
    for (size_t e = 0; e < layout.entries.size(); e++) {
        auto [poly, rot] = layout.entries[e];
        F point = x;
        if (rot == 1) point = x * domain.omega;
        if (rot == -1) point = x * domain.omega_inv;
        queries.push_back({poly, point, proof.evals[e]});
    }
    std::vector<uint64_t> bounds(layout.poly_count(), col_bound);
    return pcs_batch_check(ck, commitments, bounds, queries, xi, proof.batch, ts);
}

} // namespace artemis::piop
