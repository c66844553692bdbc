#ifndef ARTEMIS_CP_HPP
#define ARTEMIS_CP_HPP

#include "artemis/piop.hpp"

namespace artemis::cp {

using Gp = piop::Gp;
using Ck = piop::Ck;
using Commitment = piop::Commitment;

// External commitments c_i = commit(w_i, d, r_i) together with the prover's
// openings.
struct ExternalCommitmentSet {
    uint64_t degree_bound = 0;
    std::vector<Commitment> commitments;
    std::vector<std::vector<F>> polys; // prover side
    std::vector<F> rands;              // prover side

    size_t count() const { return commitments.size(); }
};

// Where a transform put the in-circuit evaluation machinery. result_column
// holds the final evaluation rho at row 0 (h_omega = w^0); alpha and beta are
// the two consecutive challenges squeezed between the first and second
// witness phases.
struct LinkLayout {
    uint32_t result_column = 0;
    uint32_t ch_alpha = 0;
    uint32_t ch_beta = 0;
    uint64_t ext_degree_bound = 0;
    size_t ell = 0;
    size_t m = 0;        // witness columns per commitment
    size_t active_rows = 0;
};

struct HornerLayout {
    LinkLayout link;
    uint32_t idx_wit = 0; // first of ell*m copy columns
    uint32_t idx_mu = 0;
    uint32_t idx_rho = 0;
    uint32_t sel_active = 0; // fixed: 1 on [0, active_rows)
    uint32_t sel_last = 0;   // fixed: 1 at row active_rows

    size_t ell() const { return link.ell; }
    size_t m() const { return link.m; }
    size_t n_horner() const { return link.active_rows; }
    // evaluation-related columns: witness copies + masking + result
    size_t eval_column_count() const { return link.ell * link.m + 2; }
};

struct StrawmanLayout {
    LinkLayout link;
    uint32_t idx_wit = 0;
    uint32_t idx_mu = 0;
    uint32_t idx_pow = 0; // first of m powers-of-beta columns
    uint32_t idx_sum = 0; // running sum; result at row 0
    uint32_t sel_active = 0, sel_first = 0, sel_trans = 0, sel_last = 0;

    // witness copies + powers + masking + running sum
    size_t eval_column_count() const { return link.ell * link.m + link.m + 2; }
};

// ---- Horner's-method polynomial evaluation gate ----

std::pair<plonkish::CircuitIndex, HornerLayout> horner_index_transform(
    const plonkish::CircuitIndex& circuit, const plonkish::CommitIndexSet& icom,
    uint64_t ext_degree_bound);

// phase-0 witness: copy columns (row-major mod-m split) and the masking column
void fill_horner_phase0(plonkish::Assignment& assignment, const HornerLayout& layout,
                        const plonkish::CommitIndexSet& icom, const F& mu);
// phase-1 witness: the evaluation column, bottom-up, plus its extra blinder
void fill_horner_phase1(plonkish::Assignment& assignment, const HornerLayout& layout,
                        const F& alpha, const F& beta, const F& psi);

// both phases at once (oracle tests drive this directly)
plonkish::Assignment horner_witness_transform(const plonkish::Assignment& assignment,
                                              const HornerLayout& layout,
                                              const plonkish::CommitIndexSet& icom, const F& mu,
                                              const F& alpha, const F& beta, const F& psi);

// ---- strawman inner-product evaluation ----

std::pair<plonkish::CircuitIndex, StrawmanLayout> strawman_index_transform(
    const plonkish::CircuitIndex& circuit, const plonkish::CommitIndexSet& icom,
    uint64_t ext_degree_bound);

void fill_strawman_phase0(plonkish::Assignment& assignment, const StrawmanLayout& layout,
                          const plonkish::CommitIndexSet& icom, const F& mu);
void fill_strawman_phase1(plonkish::Assignment& assignment, const StrawmanLayout& layout,
                          const F& alpha, const F& beta, const F& psi);

// ---- column alignment (no linking proof; validated by satisfiability and
// the trapdoor KZG double in tests) ----

std::pair<plonkish::CircuitIndex, std::vector<uint32_t>> align_index_transform(
    const plonkish::CircuitIndex& circuit, const plonkish::CommitIndexSet& icom);

void fill_aligned_columns(plonkish::Assignment& assignment,
                          const std::vector<uint32_t>& columns,
                          const plonkish::CommitIndexSet& icom);

// ---- the compiled CP-SNARK ----

struct LinkProof {
    Commitment c_mu;
    F rho;
    OpeningProof<Gp> internal_open; // result oracle at h_omega
    OpeningProof<Gp> external_open; // combined external commitment at beta

    Bytes to_bytes() const;
    static LinkProof from_bytes(ByteReader& r);
};

struct ArtemisProof {
    piop::PlonkProof inner;
    LinkProof link;

    Bytes to_bytes() const;
    static ArtemisProof from_bytes(ByteReader& r);
};

struct ArtemisProveOptions {
    // test hooks used by forgery trials
    bool skip_witness_check = false;     // don't compare grid cells to w_i
    bool force_external_open = false;    // open the external claim unchecked
};

ArtemisProof artemis_prove_horner(const piop::ProvingKey& pk, const Ck& ck_int,
                                  const Ck& ck_ext, plonkish::Assignment& assignment,
                                  const plonkish::CommitIndexSet& icom,
                                  const ExternalCommitmentSet& external,
                                  const HornerLayout& layout, Transcript& ts, Rng& rng,
                                  const ArtemisProveOptions& opts = {});

ArtemisProof artemis_prove_strawman(const piop::ProvingKey& pk, const Ck& ck_int,
                                    const Ck& ck_ext, plonkish::Assignment& assignment,
                                    const plonkish::CommitIndexSet& icom,
                                    const ExternalCommitmentSet& external,
                                    const StrawmanLayout& layout, Transcript& ts, Rng& rng,
                                    const ArtemisProveOptions& opts = {});

bool artemis_verify(const piop::VerifyingKey& vk, const Ck& ck_int, const Ck& ck_ext,
                    const std::vector<std::vector<F>>& instance,
                    const std::vector<Commitment>& external_commitments,
                    const ArtemisProof& proof, const LinkLayout& layout, Transcript& ts);

} // namespace artemis::cp

#endif
