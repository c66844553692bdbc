#ifndef ARTEMIS_BATCH_OPEN_HPP
#define ARTEMIS_BATCH_OPEN_HPP

#include <vector>

#include "artemis/ipa.hpp"

namespace artemis {

// One query: polynomial index i, evaluation point z, claimed value v.
template <typename Fx>
struct Query {
    size_t poly;
    Fx point;
    Fx value;
};

// Multipoint batch opening reduced to a single inner-product argument.
//
// The xi-weighted quotient h = sum_q xi^q (g_{i_q} - v_q)/(X - z_q) is
// committed; a fresh point w then moves every claim to the same point, where
// all polynomials (h included) are combined with a second challenge and opened
// once. h(w) is forced by the quotient identity, so it is never sent.
template <typename Gp>
struct BatchOpeningProof {
    using Fx = typename Gp::Scalar;
    PolyCommitment<Gp> quotient_commit;
    std::vector<Fx> evals_at_w; // one per polynomial
    OpeningProof<Gp> inner;

    void to_bytes(ByteWriter& w) const {
        quotient_commit.to_bytes(w);
        w.u64(evals_at_w.size());
        for (const auto& v : evals_at_w) v.to_bytes(w);
        inner.to_bytes(w);
    }
    Bytes to_bytes() const {
        ByteWriter w;
        to_bytes(w);
        return w.take();
    }
    static BatchOpeningProof from_bytes(ByteReader& r) {
        BatchOpeningProof p;
        p.quotient_commit = PolyCommitment<Gp>::from_bytes(r);
        p.evals_at_w.resize(r.u64());
        for (auto& v : p.evals_at_w) v = Fx::from_bytes(r);
        p.inner = OpeningProof<Gp>::from_bytes(r);
        return p;
    }
};

template <typename Gp>
BatchOpeningProof<Gp> pcs_batch_open(const CommitKey<Gp>& ck,
                                     const std::vector<std::vector<typename Gp::Scalar>>& polys,
                                     const std::vector<uint64_t>& bounds,
                                     const std::vector<Query<typename Gp::Scalar>>& queries,
                                     const typename Gp::Scalar& xi,
                                     const std::vector<typename Gp::Scalar>& rands,
                                     Transcript& ts, Rng& rng) {
    using Fx = typename Gp::Scalar;
    if (polys.size() != bounds.size() || polys.size() != rands.size())
        throw DomainSizeMismatch("batch open arity mismatch");

    uint64_t dmax = 0;
    for (uint64_t b : bounds) dmax = std::max(dmax, b);

    std::vector<Fx> h;
    Fx xpow = Fx::one();
    for (const auto& q : queries) {
        auto [quot, rem] = poly_divide_linear(polys[q.poly], q.point);
        if (rem != q.value) throw ClaimedValueWrong();
        h = poly_add(h, poly_scale(std::move(quot), xpow));
        xpow *= xi;
    }

    Fx rh = Fx::random(rng);
    PolyCommitment<Gp> ch = pcs_commit(ck, h, dmax, rh);
    ts.absorb("batch-quotient", ch);
    Fx w = ts.template challenge_nonzero<Fx>("batch-w");

    BatchOpeningProof<Gp> proof;
    proof.quotient_commit = ch;
    proof.evals_at_w.reserve(polys.size());
    for (const auto& p : polys) proof.evals_at_w.push_back(horner_eval(p, w));
    for (const auto& v : proof.evals_at_w) ts.absorb("batch-eval", v);
    Fx zeta = ts.template challenge_nonzero<Fx>("batch-zeta");

    // combined polynomial h + sum zeta^{i+1} g_i opened at w
    std::vector<Fx> combined = h;
    Fx zr = rh;
    Fx zv = Fx::zero(); // expected h(w), reconstructed below
    {
        Fx xp = Fx::one();
        std::vector<Fx> denoms;
        denoms.reserve(queries.size());
        for (const auto& q : queries) denoms.push_back(w - q.point);
        batch_inverse(denoms);
        for (size_t qi = 0; qi < queries.size(); qi++) {
            zv += xp * (proof.evals_at_w[queries[qi].poly] - queries[qi].value) * denoms[qi];
            xp *= xi;
        }
    }
    Fx zp = zeta;
    for (size_t i = 0; i < polys.size(); i++) {
        combined = poly_add(combined, poly_scale(polys[i], zp));
        zr += zp * rands[i];
        zv += zp * proof.evals_at_w[i];
        zp *= zeta;
    }

    proof.inner = pcs_open(ck, combined, dmax, w, zv, zr, ts, rng);
    return proof;
}

template <typename Gp>
bool pcs_batch_check(const CommitKey<Gp>& ck,
                     const std::vector<PolyCommitment<Gp>>& commitments,
                     const std::vector<uint64_t>& bounds,
                     const std::vector<Query<typename Gp::Scalar>>& queries,
                     const typename Gp::Scalar& xi, const BatchOpeningProof<Gp>& proof,
                     Transcript& ts) {
    using Fx = typename Gp::Scalar;
    if (commitments.size() != bounds.size()) return false;
    if (proof.evals_at_w.size() != commitments.size()) return false;
    for (size_t i = 0; i < commitments.size(); i++)
        if (commitments[i].degree_bound != bounds[i]) return false;
    for (const auto& q : queries)
        if (q.poly >= commitments.size()) return false;

    uint64_t dmax = 0;
    for (uint64_t b : bounds) dmax = std::max(dmax, b);

    ts.absorb("batch-quotient", proof.quotient_commit);
    Fx w = ts.template challenge_nonzero<Fx>("batch-w");
    for (const auto& v : proof.evals_at_w) ts.absorb("batch-eval", v);
    Fx zeta = ts.template challenge_nonzero<Fx>("batch-zeta");

    std::vector<Fx> denoms;
    denoms.reserve(queries.size());
    for (const auto& q : queries) {
        if (w == q.point) return false;
        denoms.push_back(w - q.point);
    }
    batch_inverse(denoms);
    Fx zv = Fx::zero();
    Fx xp = Fx::one();
    for (size_t qi = 0; qi < queries.size(); qi++) {
        zv += xp * (proof.evals_at_w[queries[qi].poly] - queries[qi].value) * denoms[qi];
        xp *= xi;
    }

    Gp cpoint = proof.quotient_commit.point;
    Fx zp = zeta;
    for (size_t i = 0; i < commitments.size(); i++) {
        cpoint += zp * commitments[i].point;
        zv += zp * proof.evals_at_w[i];
        zp *= zeta;
    }
    PolyCommitment<Gp> combined{cpoint, dmax};
    return pcs_check(ck, combined, dmax, w, zv, proof.inner, ts);
}

} // namespace artemis

#endif
