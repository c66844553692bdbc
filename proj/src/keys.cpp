#include <algorithm>

#include "artemis/errors.hpp"
#include "artemis/piop.hpp"

namespace artemis::piop {

QueryLayout QueryLayout::build(const plonkish::CircuitIndex& index, size_t n_chunks) {
    using plonkish::ColumnKind;
    QueryLayout q;
    q.n_advice = index.n_advice();
    q.n_fixed = index.n_fixed();
    q.n_sigma = index.perm_columns.size();
    q.n_chunks = n_chunks;
    q.advice_rots.assign(q.n_advice, {});
    q.fixed_rots.assign(q.n_fixed, {});
    q.instance_rots.assign(index.n_instance, {});

    auto note = [](std::vector<int32_t>& rots, int32_t rot) {
        if (std::find(rots.begin(), rots.end(), rot) == rots.end()) rots.push_back(rot);
    };
    // rotation 0 for everything: columns may also be referenced by copy
    // constraints, whose check needs the value at x
    for (auto& r : q.advice_rots) note(r, 0);
    for (auto& r : q.fixed_rots) note(r, 0);
    for (auto& r : q.instance_rots) note(r, 0);

    for (const auto& gate : index.gates) {
        std::vector<std::pair<plonkish::ColumnId, int32_t>> cells;
        gate.poly.collect_cells(cells);
        for (auto [col, rot] : cells) {
            switch (col.kind) {
                case ColumnKind::Advice:
                    note(q.advice_rots[col.index], rot);
                    break;
                case ColumnKind::Fixed:
                    note(q.fixed_rots[col.index], rot);
                    break;
                case ColumnKind::Instance:
                    note(q.instance_rots[col.index], rot);
                    break;
            }
        }
    }
    for (auto& r : q.advice_rots) std::sort(r.begin(), r.end());
    for (auto& r : q.fixed_rots) std::sort(r.begin(), r.end());
    for (auto& r : q.instance_rots) std::sort(r.begin(), r.end());

    q.n_z = perm_z_count(index.perm_columns.size());

    for (size_t i = 0; i < q.n_advice; i++)
        for (int32_t rot : q.advice_rots[i]) q.entries.push_back({q.advice_poly(i), rot});
    for (size_t i = 0; i < q.n_fixed; i++)
        for (int32_t rot : q.fixed_rots[i]) q.entries.push_back({q.fixed_poly(i), rot});
    q.entries.push_back({q.active_poly(), 0});
    for (size_t t = 0; t < q.n_sigma; t++) q.entries.push_back({q.sigma_poly(t), 0});
    for (size_t a = 0; a < q.n_z; a++) {
        q.entries.push_back({q.z_poly(a), 0});
        q.entries.push_back({q.z_poly(a), 1});
    }
    for (size_t c = 0; c < q.n_chunks; c++) q.entries.push_back({q.chunk_poly(c), 0});
    return q;
}

Bytes VerifyingKey::to_bytes() const {
    ByteWriter body;
    body.raw(index.to_bytes());
    body.u64(fixed_commitments.size());
    for (const auto& c : fixed_commitments) c.to_bytes(body);
    body.u64(sigma_commitments.size());
    for (const auto& c : sigma_commitments) c.to_bytes(body);
    body.u64(perm_deltas.size());
    for (const auto& d : perm_deltas) d.to_bytes(body);
    body.u64(advice_map.size());
    for (const auto& o : advice_map) {
        body.u32(o.round);
        body.u32(o.index);
    }
    body.u32(quotient_chunks);
    ByteWriter w;
    w.section("PLVK", body.data());
    return w.take();
}

void VerifyingKey::compute_digest() {
    digest = sha256(to_bytes());
}

std::pair<ProvingKey, VerifyingKey> index(const Ck& ck, const plonkish::CircuitIndex& circuit) {
    size_t n = circuit.n();
    if (ck.max_degree + 1 < n) throw DegreeCapacityExceeded();
    if (circuit.blinding_reserve < kBlindingReserve)
        throw BadCircuit("blinding reserve below protocol minimum");

    ProvingKey pk;
    pk.index = circuit;
    pk.domain = EvaluationDomain<F>::make(circuit.log_n);

    // constraint degree: gates vs the chunked permutation transitions and the
    // final chunk-product constraint
    size_t n_z = perm_z_count(circuit.perm_columns.size());
    uint32_t ng = 3;
    for (const auto& g : circuit.gates) ng = std::max(ng, g.poly.degree());
    ng = std::max<uint32_t>(
        ng, uint32_t(std::min(circuit.perm_columns.size(), kMaxPermColsPerZ)) + 2);
    ng = std::max<uint32_t>(ng, uint32_t(n_z) + 1);
    pk.constraint_degree = ng;

    uint32_t ext_factor_log = 0;
    while ((size_t(1) << ext_factor_log) < ng) ext_factor_log++;
    pk.extended_domain = EvaluationDomain<F>::make(circuit.log_n + ext_factor_log);

    size_t u = circuit.usable_rows();

    pk.fixed_lagrange = circuit.fixed;
    std::vector<F> active(n, F::zero());
    for (size_t j = 0; j < u; j++) active[j] = F::one();
    pk.fixed_lagrange.push_back(std::move(active));

    pk.fixed_coeff.reserve(pk.fixed_lagrange.size());
    for (const auto& col : pk.fixed_lagrange) pk.fixed_coeff.push_back(pk.domain.intt(col));

    pk.perm = plonkish::permutation_polynomials(circuit);
    pk.sigma_coeff.reserve(pk.perm.sigma_lagrange.size());
    for (const auto& col : pk.perm.sigma_lagrange) pk.sigma_coeff.push_back(pk.domain.intt(col));

    // L_0 and L_u on the extended coset
    {
        std::vector<F> e(n, F::zero());
        e[0] = F::one();
        auto coeffs = pk.domain.intt(e);
        coeffs.resize(pk.extended_domain.size, F::zero());
        pk.l0_coset = pk.extended_domain.coset_ntt(coeffs);
        std::vector<F> e2(n, F::zero());
        e2[u] = F::one();
        auto coeffs2 = pk.domain.intt(e2);
        coeffs2.resize(pk.extended_domain.size, F::zero());
        pk.llast_coset = pk.extended_domain.coset_ntt(coeffs2);
    }

    VerifyingKey vk;
    vk.index = circuit;
    vk.quotient_chunks = ng - 1;
    vk.perm_deltas = pk.perm.deltas;
    for (const auto& coeffs : pk.fixed_coeff)
        vk.fixed_commitments.push_back(pcs_commit(ck, coeffs, n - 1, F::zero()));
    for (const auto& coeffs : pk.sigma_coeff)
        vk.sigma_commitments.push_back(pcs_commit(ck, coeffs, n - 1, F::zero()));

    // P_A: group advice columns by phase, order within a phase by column id
    uint32_t phases = circuit.num_phases();
    vk.advice_map.resize(circuit.n_advice());
    for (uint32_t p = 0; p < phases; p++) {
        uint32_t idx_in_round = 0;
        for (uint32_t a = 0; a < circuit.n_advice(); a++) {
            if (circuit.advice_phase[a] != p) continue;
            vk.advice_map[a] = {p, idx_in_round++};
        }
    }
    vk.compute_digest();
    pk.vk = vk;
    return {std::move(pk), std::move(vk)};
}

Bytes PlonkProof::to_bytes() const {
    ByteWriter body;
    body.u64(advice_commitments.size());
    for (const auto& round : advice_commitments) {
        body.u64(round.size());
        for (const auto& c : round) c.to_bytes(body);
    }
    body.u64(z_commitments.size());
    for (const auto& c : z_commitments) c.to_bytes(body);
    body.u64(quotient_commitments.size());
    for (const auto& c : quotient_commitments) c.to_bytes(body);
    body.u64(evals.size());
    for (const auto& v : evals) v.to_bytes(body);
    body.raw(batch.to_bytes());
    ByteWriter w;
    w.section("PLNK", body.data());
    return w.take();
}

PlonkProof PlonkProof::from_bytes(ByteReader& outer) {
    Bytes payload = outer.section("PLNK");
    ByteReader r(payload);
    PlonkProof p;
    p.advice_commitments.resize(r.u64());
    for (auto& round : p.advice_commitments) {
        round.resize(r.u64());
        for (auto& c : round) c = Commitment::from_bytes(r);
    }
    p.z_commitments.resize(r.u64());
    for (auto& c : p.z_commitments) c = Commitment::from_bytes(r);
    p.quotient_commitments.resize(r.u64());
    for (auto& c : p.quotient_commitments) c = Commitment::from_bytes(r);
    p.evals.resize(r.u64());
    for (auto& v : p.evals) v = F::from_bytes(r);
    p.batch = BatchOpeningProof<Gp>::from_bytes(r);
    if (!r.done()) throw ProofDecodeError("trailing bytes in proof");
    return p;
}

} // namespace artemis::piop
