#ifndef ARTEMIS_PIOP_HPP
#define ARTEMIS_PIOP_HPP

#include <functional>
#include <map>
#include <optional>

#include "artemis/batch_open.hpp"
#include "artemis/circuit.hpp"
#include "artemis/pallas.hpp"
#include "artemis/pedersen.hpp"
#include "artemis/transcript.hpp"

namespace artemis::piop {

using Gp = PallasPoint;
using Commitment = PolyCommitment<Gp>;
using Ck = CommitKey<Gp>;

// Every committed polynomial is opened at up to three out-of-domain points
// (x, wx and the batch point); the tail reserve adds two more rows on top.
constexpr uint32_t kQueriesPerPoly = 3;
constexpr uint32_t kBlindingReserve = kQueriesPerPoly + 2;

// the permutation product is split into chunks of at most this many columns
// to keep the constraint degree (and with it the extended domain and the
// quotient chunk count) small
constexpr size_t kMaxPermColsPerZ = 4;

inline size_t perm_z_count(size_t perm_columns) {
    return std::max<size_t>(1, (perm_columns + kMaxPermColsPerZ - 1) / kMaxPermColsPerZ);
}

// advice column -> (round, oracle index) within the proof's commitment lists
struct OracleId {
    uint32_t round = 0;
    uint32_t index = 0;
};

// Deterministic enumeration of committed polynomials and their queries,
// shared by prover and verifier. Polynomial order: advice columns, fixed
// columns, the permutation-active indicator, sigma polynomials, the grand
// product, quotient chunks.
struct QueryLayout {
    std::vector<std::vector<int32_t>> advice_rots;
    std::vector<std::vector<int32_t>> fixed_rots;
    std::vector<std::vector<int32_t>> instance_rots;
    size_t n_advice = 0, n_fixed = 0, n_sigma = 0, n_z = 1, n_chunks = 0;

    size_t poly_count() const { return n_advice + n_fixed + 1 + n_sigma + n_z + n_chunks; }
    size_t advice_poly(size_t i) const { return i; }
    size_t fixed_poly(size_t i) const { return n_advice + i; }
    size_t active_poly() const { return n_advice + n_fixed; }
    size_t sigma_poly(size_t t) const { return n_advice + n_fixed + 1 + t; }
    size_t z_poly(size_t a) const { return n_advice + n_fixed + 1 + n_sigma + a; }
    size_t chunk_poly(size_t c) const { return n_advice + n_fixed + 1 + n_sigma + n_z + c; }

    // flattened (poly, rotation) query order; claimed evaluations in proofs
    // follow this order exactly
    std::vector<std::pair<size_t, int32_t>> entries;

    static QueryLayout build(const plonkish::CircuitIndex& index, size_t n_chunks);
};

struct VerifyingKey {
    plonkish::CircuitIndex index;
    std::vector<Commitment> fixed_commitments; // index fixed columns + active indicator
    std::vector<Commitment> sigma_commitments;
    std::vector<F> perm_deltas;
    std::vector<OracleId> advice_map; // P_A
    uint32_t quotient_chunks = 0;
    Digest digest{};

    Bytes to_bytes() const;
    void compute_digest();
};

struct ProvingKey {
    plonkish::CircuitIndex index;
    EvaluationDomain<F> domain;
    EvaluationDomain<F> extended_domain;
    uint32_t constraint_degree = 0; // n_g
    std::vector<std::vector<F>> fixed_lagrange; // + active indicator appended
    std::vector<std::vector<F>> fixed_coeff;
    plonkish::PermutationPolys perm;
    std::vector<std::vector<F>> sigma_coeff;
    std::vector<F> l0_coset, llast_coset; // Lagrange selectors on the extended coset
    VerifyingKey vk;
};

struct PlonkProof {
    std::vector<std::vector<Commitment>> advice_commitments; // per round
    std::vector<Commitment> z_commitments;                   // per permutation chunk
    std::vector<Commitment> quotient_commitments;
    std::vector<F> evals; // claimed evaluations in QueryLayout::entries order
    BatchOpeningProof<Gp> batch;

    Bytes to_bytes() const;
    static PlonkProof from_bytes(ByteReader& r);
};

// called before each phase is committed; fills challenge-dependent columns
using PhaseFiller =
    std::function<void(uint32_t phase, const std::map<uint32_t, F>& challenges,
                       plonkish::Assignment& assignment)>;

struct ProveOptions {
    // test hook: push an unsatisfied witness past the quotient divisibility
    // check so verifier-side rejection can be exercised
    bool skip_divisibility_check = false;
};

struct ProveOutput {
    PlonkProof proof;
    std::map<uint32_t, F> challenges;
    // per advice column: blinded coefficient form + commitment randomness,
    // consumed by the linking phase
    std::vector<std::vector<F>> advice_coeffs;
    std::vector<F> advice_rands;
};

struct VerifyOutput {
    std::map<uint32_t, F> challenges;
};

std::pair<ProvingKey, VerifyingKey> index(const Ck& ck, const plonkish::CircuitIndex& circuit);

void absorb_instance(Transcript& ts, const Digest& vk_digest,
                     const std::vector<std::vector<F>>& instance);

ProveOutput prove(const ProvingKey& pk, const Ck& ck, plonkish::Assignment& assignment,
                  Transcript& ts, Rng& rng, const PhaseFiller& filler = nullptr,
                  const ProveOptions& opts = {});

bool verify(const VerifyingKey& vk, const Ck& ck,
            const std::vector<std::vector<F>>& instance, const PlonkProof& proof,
            Transcript& ts, VerifyOutput* out = nullptr);

} // namespace artemis::piop

#endif
