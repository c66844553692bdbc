#include "artemis/blinding.hpp"
#include "artemis/errors.hpp"
#include "artemis/piop.hpp"

namespace artemis::piop {

namespace {

Bytes column_bytes(const std::vector<F>& col) {
    ByteWriter w;
    w.u64(col.size());
    for (const auto& v : col) v.to_bytes(w);
    return w.take();
}

} // namespace

void absorb_instance(Transcript& ts, const Digest& vk_digest,
                     const std::vector<std::vector<F>>& instance) {
    ts.absorb_bytes("vk-digest", Bytes(vk_digest.begin(), vk_digest.end()));
    ts.absorb_u64("instance-columns", instance.size());
    for (const auto& col : instance) ts.absorb_bytes("instance-column", column_bytes(col));
}

ProveOutput prove(const ProvingKey& pk, const Ck& ck, plonkish::Assignment& assignment,
                  Transcript& ts, Rng& rng, const PhaseFiller& filler,
                  const ProveOptions& opts) {
    using plonkish::ColumnId;
    using plonkish::ColumnKind;

    const auto& index = pk.index;
    const auto& domain = pk.domain;
    const size_t n = index.n();
    const size_t u = index.usable_rows();
    const uint64_t col_bound = n - 1;

    if (assignment.advice.size() != index.n_advice() ||
        assignment.instance.size() != index.n_instance)
        throw BadCircuit("assignment dimensions do not match index");

    absorb_instance(ts, pk.vk.digest, assignment.instance);

    const uint32_t phases = index.num_phases();
    ProveOutput out;
    out.proof.advice_commitments.resize(phases);
    out.advice_coeffs.resize(index.n_advice());
    out.advice_rands.assign(index.n_advice(), F::zero());
    std::vector<std::vector<F>> advice_blinded(index.n_advice());

    for (uint32_t p = 0; p < phases; p++) {
        if (filler) filler(p, out.challenges, assignment);
        for (uint32_t a = 0; a < index.n_advice(); a++) {
            if (index.advice_phase[a] != p) continue;
            if (assignment.advice[a].size() != n)
                throw BadCircuit("advice column has wrong length");
            advice_blinded[a] =
                blind_lagrange(assignment.advice[a], u, index.blinding_reserve, rng);
            out.advice_coeffs[a] = domain.intt(advice_blinded[a]);
            out.advice_rands[a] = F::random(rng);
            Commitment cmt = pcs_commit(ck, out.advice_coeffs[a], col_bound, out.advice_rands[a]);
            ts.absorb("advice-commitment", cmt);
            out.proof.advice_commitments[p].push_back(cmt);
        }
        for (uint32_t cid = 0; cid < index.challenges.size(); cid++) {
            if (index.challenges[cid].phase != p) continue;
            out.challenges[cid] =
                ts.challenge_nonzero<F>("challenge-" + index.challenges[cid].label);
        }
    }
    assignment.challenges = out.challenges;

    auto column_values = [&](ColumnId col) -> const std::vector<F>& {
        switch (col.kind) {
            case ColumnKind::Fixed:
                return pk.fixed_lagrange[col.index];
            case ColumnKind::Advice:
                return advice_blinded[col.index];
            default:
                return assignment.instance[col.index];
        }
    };

    // ---- permutation grand products, one per column chunk ----
    F pbeta = ts.challenge_nonzero<F>("perm-beta");
    F pgamma = ts.challenge_nonzero<F>("perm-gamma");

    size_t n_perm = index.perm_columns.size();
    size_t n_z = perm_z_count(n_perm);
    std::vector<std::vector<F>> z_lagrange(n_z);
    std::vector<std::vector<F>> z_coeffs(n_z);
    std::vector<F> rz(n_z);
    for (size_t a = 0; a < n_z; a++) {
        std::vector<F> nums(u, F::one()), dens(u, F::one());
        size_t t0 = a * kMaxPermColsPerZ;
        size_t t1 = std::min(n_perm, t0 + kMaxPermColsPerZ);
        for (size_t t = t0; t < t1; t++) {
            const auto& vals = column_values(index.perm_columns[t]);
            for (size_t j = 0; j < u; j++) {
                nums[j] *= vals[j] + pbeta * pk.perm.id_lagrange[t][j] + pgamma;
                dens[j] *= vals[j] + pbeta * pk.perm.sigma_lagrange[t][j] + pgamma;
            }
        }
        batch_inverse(dens);
        std::vector<F> z(n, F::zero());
        z[0] = F::one();
        for (size_t j = 0; j < u; j++) z[j + 1] = z[j] * nums[j] * dens[j];
        z_lagrange[a] = blind_lagrange(z, u + 1, n - u - 1, rng);
        z_coeffs[a] = domain.intt(z_lagrange[a]);
        rz[a] = F::random(rng);
        Commitment z_cmt = pcs_commit(ck, z_coeffs[a], col_bound, rz[a]);
        ts.absorb("z-commitment", z_cmt);
        out.proof.z_commitments.push_back(z_cmt);
    }

    F y = ts.challenge_nonzero<F>("gate-aggregation");

    // ---- divisibility precheck: the aggregate must vanish on the domain ----
    if (!opts.skip_divisibility_check) {
        std::vector<F> stack;
        for (const auto& gate : index.gates) {
            auto steps = gate.poly.compile();
            for (size_t row = 0; row < n; row++) {
                F v = plonkish::eval_steps(
                    steps, stack,
                    [&](ColumnId col, int32_t rot) {
                        size_t r = (row + n + size_t(int64_t(rot))) % n;
                        return column_values(col)[r];
                    },
                    [&](uint32_t id) {
                        auto it = out.challenges.find(id);
                        if (it == out.challenges.end())
                            throw BadCircuit("gate challenge value not bound");
                        return it->second;
                    });
                if (!v.is_zero()) throw UnsatisfiedConstraint(gate.name);
            }
        }
        F zprod = F::one();
        for (size_t a = 0; a < n_z; a++) zprod *= z_lagrange[a][u];
        if (zprod != F::one()) throw UnsatisfiedConstraint("permutation product");
    }

    // ---- quotient on the extended coset ----
    const auto& ext = pk.extended_domain;
    const size_t big = ext.size;
    const size_t factor = big / n;

    auto coset_of_coeffs = [&](std::vector<F> coeffs) {
        coeffs.resize(big, F::zero());
        return ext.coset_ntt(std::move(coeffs));
    };
    auto coset_of_lagrange = [&](const std::vector<F>& evals) {
        return coset_of_coeffs(domain.intt(evals));
    };

    std::vector<std::vector<F>> adv_coset(index.n_advice());
    for (size_t a = 0; a < index.n_advice(); a++) adv_coset[a] = coset_of_coeffs(out.advice_coeffs[a]);
    std::vector<std::vector<F>> fix_coset(pk.fixed_coeff.size());
    for (size_t i = 0; i < pk.fixed_coeff.size(); i++) fix_coset[i] = coset_of_coeffs(pk.fixed_coeff[i]);
    std::vector<std::vector<F>> inst_coset(index.n_instance);
    for (size_t i = 0; i < index.n_instance; i++) inst_coset[i] = coset_of_lagrange(assignment.instance[i]);
    std::vector<std::vector<F>> sig_coset(n_perm);
    for (size_t t = 0; t < n_perm; t++) sig_coset[t] = coset_of_coeffs(pk.sigma_coeff[t]);
    std::vector<std::vector<F>> z_coset(n_z);
    for (size_t a = 0; a < n_z; a++) z_coset[a] = coset_of_coeffs(z_coeffs[a]);

    std::vector<F> x_coset(big);
    {
        F g = F::generator();
        F acc = F::one();
        for (size_t i = 0; i < big; i++) {
            x_coset[i] = g * acc;
            acc *= ext.omega;
        }
    }
    const auto& active_coset = fix_coset.back();

    auto coset_cell = [&](ColumnId col, int32_t rot, size_t i) -> const F& {
        size_t idx = (i + big + size_t(int64_t(rot) * int64_t(factor))) % big;
        switch (col.kind) {
            case ColumnKind::Fixed:
                return fix_coset[col.index][idx];
            case ColumnKind::Advice:
                return adv_coset[col.index][idx];
            default:
                return inst_coset[col.index][idx];
        }
    };

    std::vector<F> agg(big, F::zero());
    auto fold_constraint = [&](const std::vector<F>& c) {
        for (size_t i = 0; i < big; i++) agg[i] = agg[i] * y + c[i];
    };

    std::vector<F> tmp(big);
    std::vector<F> stack;
    for (const auto& gate : index.gates) {
        auto steps = gate.poly.compile();
        for (size_t i = 0; i < big; i++) {
            tmp[i] = plonkish::eval_steps(
                steps, stack,
                [&](ColumnId col, int32_t rot) { return coset_cell(col, rot, i); },
                [&](uint32_t id) { return out.challenges.at(id); });
        }
        fold_constraint(tmp);
    }
    for (size_t a = 0; a < n_z; a++) {
        // L_0(X) * (z_a(X) - 1)
        for (size_t i = 0; i < big; i++) tmp[i] = pk.l0_coset[i] * (z_coset[a][i] - F::one());
        fold_constraint(tmp);
        // active(X) * (z_a(wX) * prod(v + beta*sigma + gamma)
        //              - z_a(X) * prod(v + beta*id + gamma)) over chunk a
        size_t t0 = a * kMaxPermColsPerZ;
        size_t t1 = std::min(n_perm, t0 + kMaxPermColsPerZ);
        for (size_t i = 0; i < big; i++) {
            F lhs = z_coset[a][(i + factor) % big];
            F rhs = z_coset[a][i];
            for (size_t t = t0; t < t1; t++) {
                const F& v = coset_cell(index.perm_columns[t], 0, i);
                lhs *= v + pbeta * sig_coset[t][i] + pgamma;
                rhs *= v + pbeta * pk.perm.deltas[t] * x_coset[i] + pgamma;
            }
            tmp[i] = active_coset[i] * (lhs - rhs);
        }
        fold_constraint(tmp);
    }
    // L_u(X) * (prod_a z_a(X) - 1): the chunk products multiply out to 1
    for (size_t i = 0; i < big; i++) {
        F prod = F::one();
        for (size_t a = 0; a < n_z; a++) prod *= z_coset[a][i];
        tmp[i] = pk.llast_coset[i] * (prod - F::one());
    }
    fold_constraint(tmp);

    // divide by X^n - 1 pointwise on the coset
    std::vector<F> zvan(factor);
    {
        F gn = F::generator().pow(n);
        F wn = ext.omega.pow(n);
        F acc = gn;
        for (size_t i = 0; i < factor; i++) {
            zvan[i] = acc - F::one();
            acc *= wn;
        }
        batch_inverse(zvan);
    }
    for (size_t i = 0; i < big; i++) agg[i] *= zvan[i % factor];
    std::vector<F> t_coeffs = ext.coset_intt(std::move(agg));

    const size_t n_chunks = pk.constraint_degree - 1;
    std::vector<std::vector<F>> chunks(n_chunks);
    std::vector<F> chunk_rands(n_chunks);
    for (size_t c = 0; c < n_chunks; c++) {
        auto begin = t_coeffs.begin() + std::min(c * n, t_coeffs.size());
        auto end = t_coeffs.begin() + std::min((c + 1) * n, t_coeffs.size());
        chunks[c].assign(begin, end);
        chunks[c].resize(n, F::zero());
        chunk_rands[c] = F::random(rng);
        Commitment cmt = pcs_commit(ck, chunks[c], col_bound, chunk_rands[c]);
        ts.absorb("quotient-commitment", cmt);
        out.proof.quotient_commitments.push_back(cmt);
    }

    // ---- query phase ----
    F x;
    do {
        x = ts.challenge_nonzero<F>("eval-x");
    } while (x.pow(n) == F::one());

    QueryLayout layout = QueryLayout::build(index, n_chunks);
    std::vector<std::vector<F>> polys(layout.poly_count());
    std::vector<F> rands(layout.poly_count(), F::zero());
    for (size_t a = 0; a < index.n_advice(); a++) {
        polys[layout.advice_poly(a)] = out.advice_coeffs[a];
        rands[layout.advice_poly(a)] = out.advice_rands[a];
    }
    for (size_t i = 0; i < pk.fixed_coeff.size(); i++)
        polys[layout.fixed_poly(i)] = pk.fixed_coeff[i]; // includes the active column
    for (size_t t = 0; t < n_perm; t++) polys[layout.sigma_poly(t)] = pk.sigma_coeff[t];
    for (size_t a = 0; a < n_z; a++) {
        polys[layout.z_poly(a)] = z_coeffs[a];
        rands[layout.z_poly(a)] = rz[a];
    }
    for (size_t c = 0; c < n_chunks; c++) {
        polys[layout.chunk_poly(c)] = chunks[c];
        rands[layout.chunk_poly(c)] = chunk_rands[c];
    }

    std::vector<Query<F>> queries;
    for (auto [poly, rot] : layout.entries) {
        F point = x;
        if (rot == 1) point = x * domain.omega;
        if (rot == -1) point = x * domain.omega_inv;
        F val = horner_eval(polys[poly], point);
        out.proof.evals.push_back(val);
        ts.absorb("claimed-eval", val);
        queries.push_back({poly, point, val});
    }

    F xi = ts.challenge_nonzero<F>("batch-xi");
    std::vector<uint64_t> bounds(layout.poly_count(), col_bound);
    out.proof.batch = pcs_batch_open(ck, polys, bounds, queries, xi, rands, ts, rng);
    return out;
}

} // namespace artemis::piop
