#include "artemis/cp.hpp"
#include "artemis/errors.hpp"

namespace artemis::cp {

Bytes LinkProof::to_bytes() const {
    ByteWriter body;
    c_mu.to_bytes(body);
    rho.to_bytes(body);
    Bytes a = internal_open.to_bytes();
    body.u64(a.size());
    body.raw(a);
    Bytes b = external_open.to_bytes();
    body.u64(b.size());
    body.raw(b);
    ByteWriter w;
    w.section("LINK", body.data());
    return w.take();
}

LinkProof LinkProof::from_bytes(ByteReader& outer) {
    Bytes payload = outer.section("LINK");
    ByteReader r(payload);
    LinkProof p;
    p.c_mu = Commitment::from_bytes(r);
    p.rho = F::from_bytes(r);
    {
        Bytes a = r.raw(r.u64());
        ByteReader ra(a);
        p.internal_open = OpeningProof<Gp>::from_bytes(ra);
    }
    {
        Bytes b = r.raw(r.u64());
        ByteReader rb(b);
        p.external_open = OpeningProof<Gp>::from_bytes(rb);
    }
    if (!r.done()) throw ProofDecodeError("trailing bytes in link section");
    return p;
}

Bytes ArtemisProof::to_bytes() const {
    ByteWriter w;
    w.raw(inner.to_bytes());
    w.raw(link.to_bytes());
    return w.take();
}

ArtemisProof ArtemisProof::from_bytes(ByteReader& r) {
    ArtemisProof p;
    p.inner = piop::PlonkProof::from_bytes(r);
    p.link = LinkProof::from_bytes(r);
    return p;
}

namespace {

void absorb_externals(Transcript& ts, const std::vector<Commitment>& commitments) {
    ts.absorb_u64("link-count", commitments.size());
    for (const auto& c : commitments) ts.absorb("link-external", c);
}

} // namespace

namespace {

// wire mu/psi sampling into the phase fillers so both transforms share the
// protocol core above
template <typename Layout, typename Fill0, typename Fill1>
ArtemisProof prove_with_layout(const piop::ProvingKey& pk, const Ck& ck_int, const Ck& ck_ext,
                               plonkish::Assignment& assignment,
                               const plonkish::CommitIndexSet& icom,
                               const ExternalCommitmentSet& external, const Layout& layout,
                               Transcript& ts, Rng& rng, const ArtemisProveOptions& opts,
                               Fill0 fill0, Fill1 fill1) {
    // sample the per-proof masking values with the same stream the core uses
    // (order matters for reproducibility: mu, r_mu first, then psi)
    F mu = F::random(rng);
    F r_mu = F::random(rng);
    F psi = F::random(rng);

    const uint64_t d = layout.link.ext_degree_bound;
    if (external.degree_bound != d || external.count() != layout.link.ell ||
        icom.count() != layout.link.ell)
        throw LayoutMismatch();

    if (!opts.skip_witness_check) {
        for (size_t k = 0; k < layout.link.ell; k++) {
            const auto& list = icom.lists[k];
            const auto& poly = external.polys[k];
            for (size_t o = 0; o < list.size(); o++) {
                F cell = assignment.advice[list[o].column.index][list[o].row];
                F coeff = o < poly.size() ? poly[o] : F::zero();
                if (cell != coeff) throw WitnessCommitmentMismatch();
            }
            for (size_t o = list.size(); o < poly.size(); o++)
                if (!poly[o].is_zero()) throw WitnessCommitmentMismatch();
        }
    }

    Commitment c_mu = pcs_commit(ck_ext, std::vector<F>{mu}, d, r_mu);
    absorb_externals(ts, external.commitments);
    ts.absorb("link-cmu", c_mu);

    auto filler = [&](uint32_t phase, const std::map<uint32_t, F>& chals,
                      plonkish::Assignment& asg) {
        if (phase == 0) {
            fill0(asg, layout, icom, mu);
        } else if (phase == 1) {
            fill1(asg, layout, chals.at(layout.link.ch_alpha), chals.at(layout.link.ch_beta),
                  psi);
        }
    };
    piop::ProveOutput inner = piop::prove(pk, ck_int, assignment, ts, rng, filler);

    F alpha = inner.challenges.at(layout.link.ch_alpha);
    F beta = inner.challenges.at(layout.link.ch_beta);
    F rho = assignment.advice[layout.link.result_column][0];

    ArtemisProof proof;
    proof.link.c_mu = c_mu;
    proof.link.rho = rho;

    ts.absorb("link-rho", rho);
    proof.link.internal_open = pcs_open(ck_int, inner.advice_coeffs[layout.link.result_column],
                                        pk.index.n() - 1, F::one(), rho,
                                        inner.advice_rands[layout.link.result_column], ts, rng);

    std::vector<F> wstar{mu};
    F rstar = r_mu;
    F apow = alpha;
    for (size_t k = 0; k < layout.link.ell; k++) {
        wstar = poly_add(wstar, poly_scale(external.polys[k], apow));
        rstar += apow * external.rands[k];
        apow *= alpha;
    }
    proof.link.external_open = pcs_open(ck_ext, wstar, d, beta, rho, rstar, ts, rng,
                                        /*check_claim=*/!opts.force_external_open);
    proof.inner = std::move(inner.proof);
    return proof;
}

} // namespace

ArtemisProof artemis_prove_horner(const piop::ProvingKey& pk, const Ck& ck_int, const Ck& ck_ext,
                                  plonkish::Assignment& assignment,
                                  const plonkish::CommitIndexSet& icom,
                                  const ExternalCommitmentSet& external,
                                  const HornerLayout& layout, Transcript& ts, Rng& rng,
                                  const ArtemisProveOptions& opts) {
    return prove_with_layout(
        pk, ck_int, ck_ext, assignment, icom, external, layout, ts, rng, opts,
        [](plonkish::Assignment& a, const HornerLayout& l, const plonkish::CommitIndexSet& ic,
           const F& mu) { fill_horner_phase0(a, l, ic, mu); },
        [](plonkish::Assignment& a, const HornerLayout& l, const F& al, const F& be,
           const F& ps) { fill_horner_phase1(a, l, al, be, ps); });
}

ArtemisProof artemis_prove_strawman(const piop::ProvingKey& pk, const Ck& ck_int,
                                    const Ck& ck_ext, plonkish::Assignment& assignment,
                                    const plonkish::CommitIndexSet& icom,
                                    const ExternalCommitmentSet& external,
                                    const StrawmanLayout& layout, Transcript& ts, Rng& rng,
                                    const ArtemisProveOptions& opts) {
    return prove_with_layout(
        pk, ck_int, ck_ext, assignment, icom, external, layout, ts, rng, opts,
        [](plonkish::Assignment& a, const StrawmanLayout& l, const plonkish::CommitIndexSet& ic,
           const F& mu) { fill_strawman_phase0(a, l, ic, mu); },
        [](plonkish::Assignment& a, const StrawmanLayout& l, const F& al, const F& be,
           const F& ps) { fill_strawman_phase1(a, l, al, be, ps); });
}

bool artemis_verify(const piop::VerifyingKey& vk, const Ck& ck_int, const Ck& ck_ext,
                    const std::vector<std::vector<F>>& instance,
                    const std::vector<Commitment>& external_commitments,
                    const ArtemisProof& proof, const LinkLayout& layout, Transcript& ts) {
    if (external_commitments.size() != layout.ell) return false;
    const uint64_t d = layout.ext_degree_bound;
    for (const auto& c : external_commitments)
        if (c.degree_bound != d) return false;
    if (proof.link.c_mu.degree_bound != d) return false;

    absorb_externals(ts, external_commitments);
    ts.absorb("link-cmu", proof.link.c_mu);

    piop::VerifyOutput vout;
    if (!piop::verify(vk, ck_int, instance, proof.inner, ts, &vout)) return false;

    auto ita = vout.challenges.find(layout.ch_alpha);
    auto itb = vout.challenges.find(layout.ch_beta);
    if (ita == vout.challenges.end() || itb == vout.challenges.end()) return false;
    F alpha = ita->second, beta = itb->second;

    if (layout.result_column >= vk.advice_map.size()) return false;
    piop::OracleId oid = vk.advice_map[layout.result_column];
    const Commitment& c_rho = proof.inner.advice_commitments[oid.round][oid.index];

    ts.absorb("link-rho", proof.link.rho);
    if (!pcs_check(ck_int, c_rho, vk.index.n() - 1, F::one(), proof.link.rho,
                   proof.link.internal_open, ts))
        return false;

    // combined external commitment c_mu + sum_i c_i * alpha^i
    Gp combined = proof.link.c_mu.point;
    F apow = alpha;
    for (const auto& c : external_commitments) {
        combined += apow * c.point;
        apow *= alpha;
    }
    return pcs_check(ck_ext, Commitment{combined, d}, d, beta, proof.link.rho,
                     proof.link.external_open, ts);
}

} // namespace artemis::cp
