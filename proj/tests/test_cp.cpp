#include <doctest.h>

#include <set>

#include "artemis/cp.hpp"
#include "support/kzg.hpp"

using namespace artemis;
using namespace artemis::plonkish;
using namespace artemis::cp;

namespace {

Bytes seed_bytes(uint64_t s) {
    ByteWriter w;
    w.u64(s);
    return w.take();
}

// base circuit: one advice column of private values; selected cells are the
// externally committed coefficients
struct Base {
    CircuitIndex index;
    uint32_t col_w;
    CommitIndexSet icom;
};

Base build_base(uint32_t log_n, const std::vector<size_t>& sizes) {
    CircuitBuilder b(log_n, piop::kBlindingReserve);
    Base base;
    base.col_w = b.add_advice_column();
    size_t row = 0;
    for (size_t d : sizes) {
        std::vector<Cell> list;
        for (size_t o = 0; o < d; o++)
            list.push_back({{ColumnKind::Advice, base.col_w}, uint32_t(row + o)});
        base.icom.lists.push_back(list);
        row += d;
    }
    if (row > b.usable_rows()) throw std::runtime_error("test base too small");
    base.index = b.build();
    return base;
}

// multi-column variant when the weights do not fit one column
Base build_base_wide(uint32_t log_n, size_t d) {
    CircuitBuilder b(log_n, piop::kBlindingReserve);
    Base base;
    size_t u = b.usable_rows();
    size_t cols = (d + u - 1) / u;
    std::vector<uint32_t> ids;
    for (size_t c = 0; c < cols; c++) ids.push_back(b.add_advice_column());
    base.col_w = ids[0];
    std::vector<Cell> list;
    for (size_t o = 0; o < d; o++)
        list.push_back({{ColumnKind::Advice, ids[o / u]}, uint32_t(o % u)});
    base.icom.lists.push_back(list);
    base.index = b.build();
    return base;
}

std::vector<F> random_coeffs(Rng& rng, size_t d) {
    std::vector<F> out(d);
    for (auto& c : out) c = F::random(rng);
    return out;
}

void place_weights(Assignment& a, const CommitIndexSet& icom,
                   const std::vector<std::vector<F>>& polys) {
    for (size_t k = 0; k < icom.lists.size(); k++)
        for (size_t o = 0; o < icom.lists[k].size(); o++)
            a.advice[icom.lists[k][o].column.index][icom.lists[k][o].row] = polys[k][o];
}

ExternalCommitmentSet commit_all(const Ck& ck, const std::vector<std::vector<F>>& polys,
                                 uint64_t d, Rng& rng) {
    ExternalCommitmentSet set;
    set.degree_bound = d;
    set.polys = polys;
    for (const auto& p : polys) {
        set.rands.push_back(F::random(rng));
        set.commitments.push_back(pcs_commit(ck, p, d, set.rands.back()));
    }
    return set;
}

// aggregate polynomial mu + sum_i w_i alpha^i
std::vector<F> aggregate(const std::vector<std::vector<F>>& polys, const F& mu, const F& alpha) {
    std::vector<F> agg{mu};
    F apow = alpha;
    for (const auto& p : polys) {
        agg = poly_add(agg, poly_scale(p, apow));
        apow *= alpha;
    }
    return agg;
}

} // namespace

TEST_CASE("horner transform shape and even-odd split") {
    // d = 10 over a 16-row grid (9 usable eval rows) forces m = 2
    auto base = build_base_wide(4, 9);
    Rng rng(60);
    auto w = random_coeffs(rng, 9);

    auto [idx, lay] = horner_index_transform(base.index, base.icom, 15);
    CHECK(lay.m() == 1);

    auto base2 = build_base_wide(4, 10);
    auto [idx2, lay2] = horner_index_transform(base2.index, base2.icom, 15);
    CHECK(lay2.m() == 2);
    CHECK(lay2.n_horner() == 5);

    // even coefficients land in the first copy column, odd in the second
    auto w2 = random_coeffs(rng, 10);
    auto a = Assignment::zeroed(idx2);
    place_weights(a, base2.icom, {w2});
    fill_horner_phase0(a, lay2, base2.icom, F::zero());
    for (size_t o = 0; o < 10; o++)
        CHECK(a.advice[lay2.idx_wit + o % 2][o / 2] == w2[o]);
}

TEST_CASE("horner witness transform frozen examples") {
    // w = [1,2,3,4], mu = 0, alpha = 1, beta = 2, m = 1: rho climbs
    // 4, 11, 24, 49 from the bottom
    auto base = build_base(4, {4});
    auto [idx, lay] = horner_index_transform(base.index, base.icom, 15);
    REQUIRE(lay.m() == 1);
    REQUIRE(lay.n_horner() == 4);

    auto a = Assignment::zeroed(idx);
    std::vector<F> w{F::from_u64(1), F::from_u64(2), F::from_u64(3), F::from_u64(4)};
    place_weights(a, base.icom, {w});
    auto filled = horner_witness_transform(a, lay, base.icom, F::zero(), F::one(),
                                           F::from_u64(2), F::zero());
    CHECK(filled.advice[lay.idx_rho][3] == F::from_u64(4));
    CHECK(filled.advice[lay.idx_rho][2] == F::from_u64(11));
    CHECK(filled.advice[lay.idx_rho][1] == F::from_u64(24));
    CHECK(filled.advice[lay.idx_rho][0] == F::from_u64(49));
    CHECK(check_satisfiability(idx, filled));
}

TEST_CASE("horner aggregation of two commitments") {
    // w1 = [1,0], w2 = [0,1], mu = 5, alpha = 3, beta = 2:
    // rho = (5 + 3) + 9*2 = 26, the aggregate 8 + 9X at 2
    auto base = build_base(4, {2, 2});
    auto [idx, lay] = horner_index_transform(base.index, base.icom, 15);
    REQUIRE(lay.ell() == 2);
    REQUIRE(lay.m() == 1);

    auto a = Assignment::zeroed(idx);
    std::vector<std::vector<F>> polys{{F::one(), F::zero()}, {F::zero(), F::one()}};
    place_weights(a, base.icom, polys);
    auto filled = horner_witness_transform(a, lay, base.icom, F::from_u64(5), F::from_u64(3),
                                           F::from_u64(2), F::zero());
    CHECK(filled.advice[lay.idx_rho][0] == F::from_u64(26));
    CHECK(check_satisfiability(idx, filled));
}

TEST_CASE("horner gate matches the evaluation oracle") {
    Rng rng(61);
    for (size_t ell : {1u, 2u, 4u}) {
        for (size_t d : {3u, 10u, 16u}) {
            auto base = build_base(7, std::vector<size_t>(ell, d));
            auto [idx, lay] = horner_index_transform(base.index, base.icom, 63);
            std::vector<std::vector<F>> polys;
            for (size_t k = 0; k < ell; k++) polys.push_back(random_coeffs(rng, d));
            auto a = Assignment::zeroed(idx);
            place_weights(a, base.icom, polys);
            F mu = F::random(rng), alpha = F::random(rng), beta = F::random(rng);
            auto filled = horner_witness_transform(a, lay, base.icom, mu, alpha, beta,
                                                   F::random(rng));
            F expect = horner_eval(aggregate(polys, mu, alpha), beta);
            CHECK(filled.advice[lay.idx_rho][0] == expect);
            CHECK(check_satisfiability(idx, filled));
        }
    }
}

TEST_CASE("flipping a horner cell breaks satisfiability") {
    Rng rng(62);
    auto base = build_base(5, {6});
    auto [idx, lay] = horner_index_transform(base.index, base.icom, 31);
    auto polys = std::vector<std::vector<F>>{random_coeffs(rng, 6)};
    auto a = Assignment::zeroed(idx);
    place_weights(a, base.icom, polys);
    auto filled = horner_witness_transform(a, lay, base.icom, F::random(rng), F::random(rng),
                                           F::random(rng), F::zero());
    REQUIRE(check_satisfiability(idx, filled));
    auto bad = filled;
    bad.advice[lay.idx_rho][2] += F::one();
    CHECK_FALSE(check_satisfiability(idx, bad));
    auto bad2 = filled;
    bad2.advice[lay.idx_wit][1] += F::one();
    CHECK_FALSE(check_satisfiability(idx, bad2));
    // the boundary cell is pinned at zero
    auto bad3 = filled;
    bad3.advice[lay.idx_rho][lay.n_horner()] += F::one();
    CHECK_FALSE(check_satisfiability(idx, bad3));
}

TEST_CASE("artemis end-to-end completeness") {
    Rng rng(63);
    auto ck = Ck::setup(63, seed_bytes(70));
    uint64_t d = 15;
    for (size_t ell : {1u, 2u}) {
        auto base = build_base(6, std::vector<size_t>(ell, 8));
        auto [idx, lay] = horner_index_transform(base.index, base.icom, d);
        auto [pk, vk] = piop::index(ck, idx);

        std::vector<std::vector<F>> polys;
        for (size_t k = 0; k < ell; k++) polys.push_back(random_coeffs(rng, 8));
        auto external = commit_all(ck, polys, d, rng);

        auto a = Assignment::zeroed(idx);
        place_weights(a, base.icom, polys);

        Transcript tp("artemis-test");
        auto proof = artemis_prove_horner(pk, ck, ck, a, base.icom, external, lay, tp, rng);
        Transcript tv("artemis-test");
        CHECK(artemis_verify(vk, ck, ck, {}, external.commitments, proof, lay.link, tv));

        // serialization round-trip
        Bytes enc = proof.to_bytes();
        ByteReader r(enc);
        auto proof2 = ArtemisProof::from_bytes(r);
        CHECK(proof2.to_bytes() == enc);
        Transcript tv2("artemis-test");
        CHECK(artemis_verify(vk, ck, ck, {}, external.commitments, proof2, lay.link, tv2));
    }
}

TEST_CASE("rho and c_mu vary across proofs of one statement") {
    Rng rng(64);
    auto ck = Ck::setup(63, seed_bytes(71));
    uint64_t d = 7;
    auto base = build_base(6, {6});
    auto [idx, lay] = horner_index_transform(base.index, base.icom, d);
    auto [pk, vk] = piop::index(ck, idx);
    auto polys = std::vector<std::vector<F>>{random_coeffs(rng, 6)};
    auto external = commit_all(ck, polys, d, rng);

    std::set<Bytes> rhos, cmus;
    for (int t = 0; t < 20; t++) {
        auto a = Assignment::zeroed(idx);
        place_weights(a, base.icom, polys);
        Transcript tp("artemis-test");
        auto proof = artemis_prove_horner(pk, ck, ck, a, base.icom, external, lay, tp, rng);
        rhos.insert(proof.link.rho.to_bytes());
        cmus.insert(proof.link.c_mu.to_bytes());
        Transcript tv("artemis-test");
        CHECK(artemis_verify(vk, ck, ck, {}, external.commitments, proof, lay.link, tv));
    }
    CHECK(rhos.size() == 20);
    CHECK(cmus.size() == 20);
}

TEST_CASE("linking extension size is constant in ell") {
    Rng rng(65);
    auto ck = Ck::setup(63, seed_bytes(72));
    uint64_t d = 7;
    std::set<size_t> sizes;
    for (size_t ell : {1u, 2u, 4u}) {
        auto base = build_base(6, std::vector<size_t>(ell, 8));
        auto [idx, lay] = horner_index_transform(base.index, base.icom, d);
        auto [pk, vk] = piop::index(ck, idx);
        std::vector<std::vector<F>> polys;
        for (size_t k = 0; k < ell; k++) polys.push_back(random_coeffs(rng, 8));
        auto external = commit_all(ck, polys, d, rng);
        auto a = Assignment::zeroed(idx);
        place_weights(a, base.icom, polys);
        Transcript tp("artemis-test");
        auto proof = artemis_prove_horner(pk, ck, ck, a, base.icom, external, lay, tp, rng);
        sizes.insert(proof.link.to_bytes().size());
    }
    CHECK(sizes.size() == 1);
}

TEST_CASE("forged weights are rejected") {
    Rng rng(66);
    auto ck = Ck::setup(63, seed_bytes(73));
    uint64_t d = 7;
    auto base = build_base(6, {6});
    auto [idx, lay] = horner_index_transform(base.index, base.icom, d);
    auto [pk, vk] = piop::index(ck, idx);
    auto polys = std::vector<std::vector<F>>{random_coeffs(rng, 6)};
    auto external = commit_all(ck, polys, d, rng);

    for (int t = 0; t < 20; t++) {
        // the prover uses perturbed weights in the circuit but keeps the
        // original commitments and openings
        auto forged = polys;
        forged[0][rng.next_below(6)] += F::one();
        auto a = Assignment::zeroed(idx);
        place_weights(a, base.icom, forged);

        Transcript tp("artemis-test");
        ArtemisProveOptions opts;
        opts.skip_witness_check = true;
        opts.force_external_open = true;
        auto proof = artemis_prove_horner(pk, ck, ck, a, base.icom, external, lay, tp, rng, opts);
        Transcript tv("artemis-test");
        CHECK_FALSE(artemis_verify(vk, ck, ck, {}, external.commitments, proof, lay.link, tv));
    }

    // honest path refuses the mismatch outright
    auto forged = polys;
    forged[0][0] += F::one();
    auto a = Assignment::zeroed(idx);
    place_weights(a, base.icom, forged);
    Transcript tp("artemis-test");
    CHECK_THROWS_AS(artemis_prove_horner(pk, ck, ck, a, base.icom, external, lay, tp, rng),
                    WitnessCommitmentMismatch);
}

TEST_CASE("perturbed rho fails both linking checks") {
    Rng rng(67);
    auto ck = Ck::setup(63, seed_bytes(74));
    uint64_t d = 7;
    auto base = build_base(6, {6});
    auto [idx, lay] = horner_index_transform(base.index, base.icom, d);
    auto [pk, vk] = piop::index(ck, idx);
    auto polys = std::vector<std::vector<F>>{random_coeffs(rng, 6)};
    auto external = commit_all(ck, polys, d, rng);
    auto a = Assignment::zeroed(idx);
    place_weights(a, base.icom, polys);
    Transcript tp("artemis-test");
    auto proof = artemis_prove_horner(pk, ck, ck, a, base.icom, external, lay, tp, rng);

    auto bad = proof;
    bad.link.rho += F::one();
    Transcript tv("artemis-test");
    CHECK_FALSE(artemis_verify(vk, ck, ck, {}, external.commitments, bad, lay.link, tv));

    // swapping one external commitment for a commitment to different weights
    auto other = commit_all(ck, {random_coeffs(rng, 6)}, d, rng);
    Transcript tv2("artemis-test");
    CHECK_FALSE(artemis_verify(vk, ck, ck, {}, other.commitments, proof, lay.link, tv2));
}

TEST_CASE("strawman matches horner and costs more columns") {
    Rng rng(68);
    uint64_t d = 15;
    auto base = build_base(6, {10});
    auto [hidx, hlay] = horner_index_transform(base.index, base.icom, d);
    auto [sidx, slay] = strawman_index_transform(base.index, base.icom, d);

    CHECK(slay.eval_column_count() > hlay.eval_column_count());
    CHECK(slay.eval_column_count() >= 2 * slay.link.m + 1);
    CHECK(hlay.eval_column_count() == hlay.m() + 2);

    auto polys = std::vector<std::vector<F>>{random_coeffs(rng, 10)};
    F mu = F::random(rng), alpha = F::random(rng), beta = F::random(rng), psi = F::random(rng);

    auto ha = Assignment::zeroed(hidx);
    place_weights(ha, base.icom, polys);
    auto hf = horner_witness_transform(ha, hlay, base.icom, mu, alpha, beta, psi);

    auto sa = Assignment::zeroed(sidx);
    place_weights(sa, base.icom, polys);
    fill_strawman_phase0(sa, slay, base.icom, mu);
    fill_strawman_phase1(sa, slay, alpha, beta, psi);
    sa.challenges[slay.link.ch_alpha] = alpha;
    sa.challenges[slay.link.ch_beta] = beta;

    CHECK(sa.advice[slay.idx_sum][0] == hf.advice[hlay.idx_rho][0]);
    CHECK(check_satisfiability(sidx, sa));
}

TEST_CASE("strawman end-to-end") {
    Rng rng(69);
    auto ck = Ck::setup(63, seed_bytes(75));
    uint64_t d = 15;
    auto base = build_base(6, {10});
    auto [idx, lay] = strawman_index_transform(base.index, base.icom, d);
    auto [pk, vk] = piop::index(ck, idx);
    auto polys = std::vector<std::vector<F>>{random_coeffs(rng, 10)};
    auto external = commit_all(ck, polys, d, rng);
    auto a = Assignment::zeroed(idx);
    place_weights(a, base.icom, polys);
    Transcript tp("artemis-test");
    auto proof = artemis_prove_strawman(pk, ck, ck, a, base.icom, external, lay, tp, rng);
    Transcript tv("artemis-test");
    CHECK(artemis_verify(vk, ck, ck, {}, external.commitments, proof, lay.link, tv));
}

TEST_CASE("alignment transform") {
    Rng rng(80);
    auto base = build_base(5, {7});
    auto [idx, cols] = align_index_transform(base.index, base.icom);
    REQUIRE(cols.size() == 1);

    auto polys = std::vector<std::vector<F>>{random_coeffs(rng, 7)};
    auto a = Assignment::zeroed(idx);
    place_weights(a, base.icom, polys);
    fill_aligned_columns(a, cols, base.icom);
    CHECK(check_satisfiability(idx, a));

    // the aligned column equals w on the first d domain rows
    for (size_t o = 0; o < 7; o++) CHECK(a.advice[cols[0]][o] == polys[0][o]);

    // trapdoor KZG: the column polynomial and the externally committed
    // polynomial (both in evaluation form over the domain) agree
    auto domain = EvaluationDomain<F>::make(idx.log_n);
    std::vector<F> padded = polys[0];
    padded.resize(domain.size, F::zero());
    auto external_poly = domain.intt(padded);
    auto column_poly = domain.intt(a.advice[cols[0]]);

    testing::TrapdoorKzg kzg(F::random(rng), domain.size - 1);
    F r = F::random(rng);
    auto c = kzg.commit(column_poly, domain.size - 1, r);
    F point = F::random(rng);
    F expect = horner_eval(external_poly, point);
    auto open = kzg.open(column_poly, domain.size - 1, point, expect, r);
    CHECK(kzg.check(c, domain.size - 1, point, expect, open));

    // single-row misalignment breaks a copy cycle
    for (size_t shift_o = 0; shift_o < 7; shift_o++) {
        auto bad = Assignment::zeroed(idx);
        place_weights(bad, base.icom, polys);
        for (size_t o = 0; o < 7; o++) bad.advice[cols[0]][o + 1] = polys[0][o];
        CHECK_FALSE(check_satisfiability(idx, bad));
    }

    // witness too large for one column
    auto big = build_base_wide(5, 40);
    CHECK_THROWS_AS(align_index_transform(big.index, big.icom), WitnessTooLargeForColumn);
}
