#include <doctest.h>

#include "artemis/blinding.hpp"
#include "artemis/fields.hpp"
#include "artemis/polynomial.hpp"
#include "oracles.hpp"

using namespace artemis;

TEST_CASE("mont field basic arithmetic") {
    CHECK(F::from_u64(3) + F::from_u64(4) == F::from_u64(7));
    CHECK(F::from_u64(3) - F::from_u64(4) == -F::one());
    CHECK(F::from_u64(3) * F::from_u64(4) == F::from_u64(12));
    CHECK(F::from_u64(12345).canonical()[0] == 12345);
    CHECK(F::from_i64(-1) + F::one() == F::zero());
    CHECK((-F::zero()) == F::zero());

    Rng rng(1);
    for (int i = 0; i < 50; i++) {
        F a = F::random(rng);
        F b = F::random(rng);
        CHECK(a + (-a) == F::zero());
        CHECK(a * b == b * a);
        CHECK((a + b) * (a - b) == a * a - b * b);
    }
}

TEST_CASE("field inverse") {
    CHECK(F::one().inverse() == F::one());
    CHECK(F17(2).inverse() == F17(9));   // 2*9 = 18 = 1 mod 17
    CHECK(F17(16).inverse() == F17(16)); // -1 is its own inverse
    CHECK_THROWS_AS(F::zero().inverse(), InverseOfZero);
    CHECK_THROWS_AS(F17(0).inverse(), InverseOfZero);

    Rng rng(2);
    for (int i = 0; i < 50; i++) {
        F a = F::random(rng);
        if (a.is_zero()) continue;
        CHECK(a * a.inverse() == F::one());
    }
}

TEST_CASE("from_wide_bytes matches direct reduction") {
    uint8_t wide[64] = {0};
    wide[0] = 42;
    CHECK(F::from_wide_bytes(wide) == F::from_u64(42));
    // 2^256 mod p equals what the shift path computes
    uint8_t wide2[64] = {0};
    wide2[32] = 1; // value 2^256
    F two = F::from_u64(2);
    F expect = two.pow(256);
    CHECK(F::from_wide_bytes(wide2) == expect);
}

TEST_CASE("two-adic roots of unity") {
    auto d = EvaluationDomain<F>::make(10);
    CHECK(d.omega.pow(d.size) == F::one());
    CHECK(d.omega.pow(d.size / 2) != F::one());
    CHECK(F17::root_of_unity(2) == F17(13)); // 3^4 = 81 = 13 mod 17
}

TEST_CASE("ntt constant polynomial") {
    auto d = EvaluationDomain<F>::make(2);
    auto out = d.ntt({F::one(), F::zero(), F::zero(), F::zero()});
    for (auto& v : out) CHECK(v == F::one());
}

TEST_CASE("ntt F17 frozen vector") {
    // domain w = 13, n = 4: NTT of X gives the domain elements themselves
    auto d = EvaluationDomain<F17>::make(2);
    CHECK(d.omega == F17(13));
    auto out = d.ntt({F17(0), F17(1), F17(0), F17(0)});
    CHECK(out[0] == F17(1));
    CHECK(out[1] == F17(13));
    CHECK(out[2] == F17(16));
    CHECK(out[3] == F17(4));
}

TEST_CASE("ntt equals naive dft") {
    Rng rng(3);
    for (uint32_t k = 1; k <= 8; k++) {
        auto d = EvaluationDomain<F>::make(k);
        std::vector<F> v(d.size);
        for (auto& x : v) x = F::random(rng);
        CHECK(d.ntt(v) == oracle::naive_dft(v, d.omega));
    }
}

TEST_CASE("intt inverts ntt") {
    Rng rng(4);
    auto d = EvaluationDomain<F>::make(6);
    std::vector<F> v(d.size);
    for (auto& x : v) x = F::random(rng);
    CHECK(d.intt(d.ntt(v)) == v);
    CHECK(d.coset_intt(d.coset_ntt(v)) == v);
    CHECK_THROWS_AS(d.ntt(std::vector<F>(3, F::zero())), DomainSizeMismatch);
}

TEST_CASE("interpolate") {
    auto d = EvaluationDomain<F>::make(4);
    auto zero = d.intt(std::vector<F>(d.size, F::zero()));
    for (auto& c : zero) CHECK(c == F::zero());

    auto c7 = d.intt(std::vector<F>(d.size, F::from_u64(7)));
    CHECK(c7[0] == F::from_u64(7));
    for (size_t i = 1; i < c7.size(); i++) CHECK(c7[i] == F::zero());

    Rng rng(5);
    std::vector<F> evals(d.size);
    for (auto& x : evals) x = F::random(rng);
    auto coeffs = d.intt(evals);
    F w = F::one();
    for (size_t j = 0; j < d.size; j++) {
        CHECK(oracle::naive_eval(coeffs, w) == evals[j]);
        w *= d.omega;
    }
}

TEST_CASE("poly_divide_linear") {
    // X^2 - 1 at x=1 -> quotient X+1, remainder 0
    std::vector<F> g{-F::one(), F::zero(), F::one()};
    auto [q, r] = poly_divide_linear(g, F::one());
    CHECK(r == F::zero());
    REQUIRE(q.size() == 2);
    CHECK(q[0] == F::one());
    CHECK(q[1] == F::one());

    auto [qc, rc] = poly_divide_linear(std::vector<F>{F::from_u64(9)}, F::from_u64(4));
    CHECK(qc.empty());
    CHECK(rc == F::from_u64(9));

    Rng rng(6);
    for (int t = 0; t < 20; t++) {
        std::vector<F> poly(1 + rng.next_below(20));
        for (auto& c : poly) c = F::random(rng);
        F x = F::random(rng);
        auto [quot, rem] = poly_divide_linear(poly, x);
        // multiply back: quot*(X-x) + rem
        std::vector<F> back = poly_mul(quot, std::vector<F>{-x, F::one()});
        back.resize(poly.size(), F::zero());
        back[0] += rem;
        CHECK(back == poly);
        CHECK(rem == oracle::naive_eval(poly, x));
    }
}

TEST_CASE("divide_by_vanishing") {
    size_t n = 8;
    std::vector<F> v(n + 1, F::zero());
    v[0] = -F::one();
    v[n] = F::one();
    auto q = divide_by_vanishing(v, n);
    REQUIRE(q.size() == 1);
    CHECK(q[0] == F::one());

    CHECK(divide_by_vanishing(std::vector<F>{}, n).empty());

    Rng rng(7);
    std::vector<F> h(13);
    for (auto& c : h) c = F::random(rng);
    // g = h * (X^n - 1)
    std::vector<F> zn(n + 1, F::zero());
    zn[0] = -F::one();
    zn[n] = F::one();
    auto g = poly_mul(h, zn);
    auto q2 = divide_by_vanishing(g, n);
    q2.resize(h.size(), F::zero());
    CHECK(q2 == h);

    g[2] += F::one();
    CHECK_THROWS_AS(divide_by_vanishing(g, n), NotDivisibleByVanishing);
}

TEST_CASE("horner_eval") {
    CHECK(horner_eval(std::vector<F17>{F17(2), F17(3)}, F17(5)) == F17(0));
    CHECK(horner_eval(std::vector<F>{F::from_u64(1), F::from_u64(2), F::from_u64(3),
                                     F::from_u64(4)},
                      F::from_u64(2)) == F::from_u64(49));
    Rng rng(8);
    std::vector<F> g(30);
    for (auto& c : g) c = F::random(rng);
    CHECK(horner_eval(g, F::zero()) == g[0]);
    for (int t = 0; t < 10; t++) {
        F x = F::random(rng);
        CHECK(horner_eval(g, x) == oracle::naive_eval(g, x));
    }
}

TEST_CASE("horner matches naive powers up to degree 64") {
    Rng rng(9);
    for (size_t deg = 0; deg <= 64; deg += 8) {
        std::vector<F> g(deg + 1);
        for (auto& c : g) c = F::random(rng);
        F x = F::random(rng);
        CHECK(horner_eval(g, x) == oracle::naive_eval(g, x));
    }
}

TEST_CASE("blind_lagrange") {
    Rng rng(10);
    std::vector<F> col(16, F::zero());
    for (size_t i = 0; i < 10; i++) col[i] = F::from_u64(i + 1);

    auto same = blind_lagrange(col, 10, 0, rng);
    CHECK(same == col);

    auto blinded = blind_lagrange(col, 10, 4, rng);
    for (size_t i = 0; i < 10; i++) CHECK(blinded[i] == col[i]);
    for (size_t i = 14; i < 16; i++) CHECK(blinded[i] == F::zero());

    CHECK_THROWS_AS(blind_lagrange(col, 14, 4, rng), NotEnoughBlindingRoom);

    // distinct blindings diverge outside the used rows
    int diffs = 0;
    for (int t = 0; t < 100; t++) {
        auto a = blind_lagrange(col, 10, 4, rng);
        auto b = blind_lagrange(col, 10, 4, rng);
        bool differ = false;
        for (size_t i = 10; i < 14; i++)
            if (a[i] != b[i]) differ = true;
        if (differ) diffs++;
    }
    CHECK(diffs == 100);
}

TEST_CASE("blinded column still interpolates original prefix") {
    Rng rng(11);
    auto d = EvaluationDomain<F>::make(4);
    std::vector<F> col(d.size, F::zero());
    for (size_t i = 0; i < 8; i++) col[i] = F::random(rng);
    auto blinded = blind_lagrange(col, 8, 5, rng);
    auto coeffs = d.intt(blinded);
    F w = F::one();
    for (size_t j = 0; j < 8; j++) {
        CHECK(horner_eval(coeffs, w) == col[j]);
        w *= d.omega;
    }
}

TEST_CASE("polynomial form conversions") {
    Rng rng(12);
    auto d = EvaluationDomain<F>::make(3);
    std::vector<F> coeffs(5);
    for (auto& c : coeffs) c = F::random(rng);
    auto p = Polynomial<F>::from_coeffs(coeffs);
    auto lag = p.to_lagrange(d);
    CHECK(lag.form == PolyForm::Lagrange);
    auto back = lag.to_coefficient(d);
    std::vector<F> expect = coeffs;
    expect.resize(d.size, F::zero());
    CHECK(back.values == expect);
}

TEST_CASE("pallas base field sqrt") {
    Rng rng(13);
    for (int i = 0; i < 20; i++) {
        PallasBase a = PallasBase::random(rng);
        PallasBase sq = a.square();
        CHECK(sq.is_square());
        PallasBase r = sq.sqrt();
        CHECK(r.square() == sq);
    }
}
