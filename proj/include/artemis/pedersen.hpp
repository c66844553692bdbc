#ifndef ARTEMIS_PEDERSEN_HPP
#define ARTEMIS_PEDERSEN_HPP

#include <vector>

#include "artemis/bytes.hpp"
#include "artemis/errors.hpp"
#include "artemis/polynomial.hpp"

namespace artemis {

// Pedersen commitment key over a prime-order group: D+1 hash-derived basis
// generators, a blinding generator h, and an extra generator u used by the
// evaluation argument. Transparent: nothing-up-my-sleeve derivation, no
// trapdoor retained.
template <typename Gp>
struct CommitKey {
    using Fx = typename Gp::Scalar;

    size_t max_degree = 0;
    std::vector<Gp> basis;
    Gp blinder;
    Gp eval_base;
    Bytes seed;

    static CommitKey setup(size_t max_degree, const Bytes& seed) {
        if (max_degree < 1) throw DegreeBoundExceeded("max_degree must be >= 1");
        CommitKey ck;
        ck.max_degree = max_degree;
        ck.seed = seed;
        // the evaluation argument folds vectors of power-of-two length, so
        // the basis covers max_degree+1 rounded up
        size_t count = 1;
        while (count < max_degree + 1) count <<= 1;
        ck.basis.reserve(count);
        for (size_t i = 0; i < count; i++)
            ck.basis.push_back(Gp::hash_to_group("pedersen-basis", seed, i));
        ck.blinder = Gp::hash_to_group("pedersen-blind", seed, 0);
        ck.eval_base = Gp::hash_to_group("pedersen-eval", seed, 0);
        return ck;
    }

    void to_bytes(ByteWriter& w) const {
        w.u64(max_degree);
        w.u64(seed.size());
        w.raw(seed);
        w.u64(basis.size());
        for (const auto& g : basis) g.to_bytes(w);
        blinder.to_bytes(w);
        eval_base.to_bytes(w);
    }

    static CommitKey from_bytes(ByteReader& r) {
        CommitKey ck;
        ck.max_degree = r.u64();
        ck.seed = r.raw(r.u64());
        ck.basis.resize(r.u64());
        for (auto& g : ck.basis) g = Gp::from_bytes(r);
        ck.blinder = Gp::from_bytes(r);
        ck.eval_base = Gp::from_bytes(r);
        return ck;
    }
};

template <typename Gp>
struct PolyCommitment {
    Gp point;
    uint64_t degree_bound = 0;

    void to_bytes(ByteWriter& w) const {
        point.to_bytes(w);
        w.u64(degree_bound);
    }
    Bytes to_bytes() const {
        ByteWriter w;
        to_bytes(w);
        return w.take();
    }
    static PolyCommitment from_bytes(ByteReader& r) {
        PolyCommitment c;
        c.point = Gp::from_bytes(r);
        c.degree_bound = r.u64();
        return c;
    }
    bool operator==(const PolyCommitment& o) const {
        return point == o.point && degree_bound == o.degree_bound;
    }
};

// c = sum_i g_i * basis_i + r * h
template <typename Gp>
PolyCommitment<Gp> pcs_commit(const CommitKey<Gp>& ck, const std::vector<typename Gp::Scalar>& g,
                              uint64_t degree_bound, const typename Gp::Scalar& r) {
    if (degree_bound > ck.max_degree || g.size() > degree_bound + 1)
        throw DegreeBoundExceeded();
    std::vector<Gp> pts(ck.basis.begin(), ck.basis.begin() + g.size());
    Gp point = Gp::msm(pts, g);
    if (!r.is_zero()) point += r * ck.blinder;
    return PolyCommitment<Gp>{point, degree_bound};
}

template <typename Gp>
PolyCommitment<Gp> pcs_commit(const CommitKey<Gp>& ck, const Polynomial<typename Gp::Scalar>& g,
                              uint64_t degree_bound, const typename Gp::Scalar& r) {
    if (g.form != PolyForm::Coefficient) throw DegreeBoundExceeded("commit expects coefficients");
    return pcs_commit(ck, g.values, degree_bound, r);
}

// true iff c was produced from exactly (g, degree_bound, r)
template <typename Gp>
bool pcs_verify_open(const CommitKey<Gp>& ck, const PolyCommitment<Gp>& c,
                     const std::vector<typename Gp::Scalar>& g, uint64_t degree_bound,
                     const typename Gp::Scalar& r) {
    if (degree_bound != c.degree_bound) return false;
    try {
        return pcs_commit(ck, g, degree_bound, r) == c;
    } catch (const DegreeBoundExceeded&) {
        return false;
    }
}

} // namespace artemis

#endif
