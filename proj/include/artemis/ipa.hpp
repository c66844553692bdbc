#ifndef ARTEMIS_IPA_HPP
#define ARTEMIS_IPA_HPP

#include <utility>
#include <vector>

#include "artemis/pedersen.hpp"
#include "artemis/rng.hpp"
#include "artemis/transcript.hpp"

namespace artemis {

// Evaluation argument for Pedersen polynomial commitments: a bulletproofs
// style inner-product reduction against the powers-of-x vector, finished with
// a Schnorr proof of the folded claim so that neither the final coefficient
// nor the accumulated blinder is revealed.
template <typename Gp>
struct OpeningProof {
    using Fx = typename Gp::Scalar;
    std::vector<std::pair<Gp, Gp>> rounds;
    Gp final_commit; // Schnorr commitment correcting the blinders
    Fx z_a, z_r;

    void to_bytes(ByteWriter& w) const {
        w.u8(uint8_t(rounds.size()));
        for (const auto& [l, r] : rounds) {
            l.to_bytes(w);
            r.to_bytes(w);
        }
        final_commit.to_bytes(w);
        z_a.to_bytes(w);
        z_r.to_bytes(w);
    }
    Bytes to_bytes() const {
        ByteWriter w;
        to_bytes(w);
        return w.take();
    }
    static OpeningProof from_bytes(ByteReader& r) {
        OpeningProof p;
        size_t k = r.u8();
        p.rounds.resize(k);
        for (auto& [l, rr] : p.rounds) {
            l = Gp::from_bytes(r);
            rr = Gp::from_bytes(r);
        }
        p.final_commit = Gp::from_bytes(r);
        p.z_a = Fx::from_bytes(r);
        p.z_r = Fx::from_bytes(r);
        return p;
    }
};

namespace ipa_detail {

inline size_t padded_len(uint64_t degree_bound) {
    size_t n = 1;
    while (n < degree_bound + 1) n <<= 1;
    return n;
}

} // namespace ipa_detail

// Prove that the polynomial committed with randomness r evaluates to y at x.
// Pre: g(x) = y and deg(g) <= degree_bound.
template <typename Gp>
OpeningProof<Gp> pcs_open(const CommitKey<Gp>& ck, const std::vector<typename Gp::Scalar>& g,
                          uint64_t degree_bound, const typename Gp::Scalar& x,
                          const typename Gp::Scalar& y, const typename Gp::Scalar& r,
                          Transcript& ts, Rng& rng, bool check_claim = true) {
    using Fx = typename Gp::Scalar;
    if (degree_bound > ck.max_degree || g.size() > degree_bound + 1) throw DegreeBoundExceeded();
    if (check_claim && horner_eval(g, x) != y) throw ClaimedValueWrong();

    PolyCommitment<Gp> c = pcs_commit(ck, g, degree_bound, r);
    ts.absorb("ipa-commitment", c);
    ts.absorb("ipa-x", x);
    ts.absorb("ipa-y", y);
    Fx u = ts.template challenge_nonzero<Fx>("ipa-u");
    Gp ubase = u * ck.eval_base;

    size_t n = ipa_detail::padded_len(degree_bound);
    std::vector<Fx> a = g;
    a.resize(n, Fx::zero());
    std::vector<Fx> b = powers(x, n);
    std::vector<Gp> basis(ck.basis.begin(), ck.basis.begin() + n);

    OpeningProof<Gp> proof;
    Fx blind = r;
    // fold convention: G' = G_lo + ch*G_hi, a' = a_lo + chinv*a_hi,
    // b' = b_lo + ch*b_hi, P' = ch*L + P + chinv*R. The short challenge makes
    // the per-point multiplication chain half length.
    while (n > 1) {
        size_t half = n / 2;
        std::vector<Fx> a_lo(a.begin(), a.begin() + half), a_hi(a.begin() + half, a.end());
        std::vector<Fx> b_lo(b.begin(), b.begin() + half), b_hi(b.begin() + half, b.end());
        std::vector<Gp> g_lo(basis.begin(), basis.begin() + half),
            g_hi(basis.begin() + half, basis.end());

        Fx ip_l = Fx::zero(), ip_r = Fx::zero();
        for (size_t i = 0; i < half; i++) {
            ip_l += a_lo[i] * b_hi[i];
            ip_r += a_hi[i] * b_lo[i];
        }
        Fx bl = Fx::random(rng), br = Fx::random(rng);
        Gp L = Gp::msm(g_hi, a_lo) + ip_l * ubase + bl * ck.blinder;
        Gp R = Gp::msm(g_lo, a_hi) + ip_r * ubase + br * ck.blinder;
        ts.absorb("ipa-l", L);
        ts.absorb("ipa-r", R);
        proof.rounds.emplace_back(L, R);

        Fx ch = ts.template challenge_short_nonzero<Fx>("ipa-fold");
        Fx chinv = ch.inverse();
        for (size_t i = 0; i < half; i++) {
            a_lo[i] = a_lo[i] + chinv * a_hi[i];
            b_lo[i] = b_lo[i] + ch * b_hi[i];
            g_lo[i] = g_lo[i] + ch * g_hi[i];
        }
        a = std::move(a_lo);
        b = std::move(b_lo);
        basis = std::move(g_lo);
        blind += ch * bl + chinv * br;
        n = half;
    }

    // Schnorr opening of P_final = a[0]*(G_hat + b[0]*ubase) + blind*h
    Gp base = basis[0] + b[0] * ubase;
    Fx sa = Fx::random(rng), sr = Fx::random(rng);
    proof.final_commit = sa * base + sr * ck.blinder;
    ts.absorb("ipa-t", proof.final_commit);
    Fx e = ts.template challenge_nonzero<Fx>("ipa-e");
    proof.z_a = sa + e * a[0];
    proof.z_r = sr + e * blind;
    return proof;
}

template <typename Gp>
bool pcs_check(const CommitKey<Gp>& ck, const PolyCommitment<Gp>& c, uint64_t degree_bound,
               const typename Gp::Scalar& x, const typename Gp::Scalar& y,
               const OpeningProof<Gp>& proof, Transcript& ts) {
    using Fx = typename Gp::Scalar;
    if (degree_bound > ck.max_degree || c.degree_bound != degree_bound) return false;
    size_t n = ipa_detail::padded_len(degree_bound);
    size_t k = 0;
    while ((size_t(1) << k) < n) k++;
    if (proof.rounds.size() != k) return false;

    ts.absorb("ipa-commitment", c);
    ts.absorb("ipa-x", x);
    ts.absorb("ipa-y", y);
    Fx u = ts.template challenge_nonzero<Fx>("ipa-u");
    Gp ubase = u * ck.eval_base;

    Gp p = c.point + y * ubase;
    std::vector<Fx> chs(k), chinvs(k);
    for (size_t j = 0; j < k; j++) {
        const auto& [L, R] = proof.rounds[j];
        ts.absorb("ipa-l", L);
        ts.absorb("ipa-r", R);
        Fx ch = ts.template challenge_short_nonzero<Fx>("ipa-fold");
        chs[j] = ch;
        chinvs[j] = ch.inverse();
        p = ch * L + p + chinvs[j] * R;
    }

    // fold the basis and the powers-of-x vector
    std::vector<Fx> s(n, Fx::one());
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < k; j++)
            if ((i >> (k - 1 - j)) & 1) s[i] *= chs[j];
    std::vector<Gp> basis(ck.basis.begin(), ck.basis.begin() + n);
    Gp ghat = Gp::msm(basis, s);
    Fx bhat = Fx::one();
    Fx xp = x;
    for (size_t j = k; j-- > 0;) {
        bhat *= Fx::one() + chs[j] * xp;
        // challenge j folds pairs 2^(k-1-j) apart, so the power doubles
        xp = xp.square();
    }

    Gp base = ghat + bhat * ubase;
    ts.absorb("ipa-t", proof.final_commit);
    Fx e = ts.template challenge_nonzero<Fx>("ipa-e");
    return proof.z_a * base + proof.z_r * ck.blinder == proof.final_commit + e * p;
}

} // namespace artemis

#endif
