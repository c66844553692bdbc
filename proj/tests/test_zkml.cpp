#include <doctest.h>

#include "artemis/inference_circuit.hpp"

using namespace artemis;
using namespace artemis::plonkish;
using namespace artemis::zkml;

namespace {

Bytes seed_bytes(uint64_t s) {
    ByteWriter w;
    w.u64(s);
    return w.take();
}

ModelSpec random_model(Rng& rng, size_t max_layers = 3, size_t max_dim = 8,
                       uint32_t scale_bits = 6) {
    ModelSpec m;
    m.scale_bits = scale_bits;
    size_t n_layers = 1 + rng.next_below(max_layers);
    uint32_t in_dim = uint32_t(1 + rng.next_below(max_dim));
    for (size_t l = 0; l < n_layers; l++) {
        Layer layer;
        layer.in_dim = in_dim;
        layer.out_dim = uint32_t(1 + rng.next_below(max_dim));
        layer.square_activation = rng.next_below(2) == 0;
        for (size_t i = 0; i < size_t(layer.in_dim) * layer.out_dim; i++)
            layer.weights.push_back(int64_t(rng.next_below(2 * 64 + 1)) - 64);
        for (size_t i = 0; i < layer.out_dim; i++)
            layer.bias.push_back(int64_t(rng.next_below(2 * 64 + 1)) - 64);
        in_dim = layer.out_dim;
        m.layers.push_back(std::move(layer));
    }
    return m;
}

std::vector<int64_t> random_input(Rng& rng, size_t dim, int64_t bound = 64) {
    std::vector<int64_t> out(dim);
    for (auto& x : out) x = int64_t(rng.next_below(uint64_t(2 * bound + 1))) - bound;
    return out;
}

} // namespace

TEST_CASE("native inference basics") {
    // 1x1 identity layer at scale 0: output = input
    ModelSpec m;
    m.scale_bits = 0;
    m.layers.push_back({1, 1, {1}, {0}, false});
    CHECK(native_infer(m, {42}) == std::vector<int64_t>{42});

    // 2 -> 1, w = [3, 5], x = [2, 4], scale 0 -> 26
    ModelSpec m2;
    m2.scale_bits = 0;
    m2.layers.push_back({2, 1, {3, 5}, {0}, false});
    CHECK(native_infer(m2, {2, 4}) == std::vector<int64_t>{26});

    // zero input -> bias-only output (bias at scale s passes rescale intact)
    ModelSpec m3;
    m3.scale_bits = 4;
    m3.layers.push_back({2, 2, {0, 0, 0, 0}, {7, -3}, false});
    CHECK(native_infer(m3, {0, 0}) == std::vector<int64_t>{7, -3});

    // identity weight matrix at scale s: passthrough
    ModelSpec m4;
    m4.scale_bits = 5;
    int64_t one = int64_t(1) << 5;
    m4.layers.push_back({2, 2, {one, 0, 0, one}, {0, 0}, false});
    CHECK(native_infer(m4, {11, -9}) == std::vector<int64_t>{11, -9});

    // truncation toward zero on negatives
    ModelSpec m5;
    m5.scale_bits = 2;
    m5.layers.push_back({1, 1, {-3}, {0}, false});
    // acc = -3 * 5 = -15; trunc(-15 / 4) = -3
    CHECK(native_infer(m5, {5}) == std::vector<int64_t>{-3});
}

TEST_CASE("circuit agrees with native inference") {
    Rng rng(110);
    for (int t = 0; t < 20; t++) {
        auto model = random_model(rng);
        auto input = random_input(rng, model.layers.front().in_dim);
        auto expect = native_infer(model, input);

        auto zc = build_inference_circuit(model);
        auto a = zc.assign(input);
        CHECK(check_satisfiability(zc.index, a));
        for (size_t o = 0; o < expect.size(); o++)
            CHECK(a.instance[zc.inst_out][o] == F::from_i64(expect[o]));
    }
}

TEST_CASE("wrong output is unsatisfiable") {
    Rng rng(111);
    auto model = random_model(rng, 2, 4);
    auto input = random_input(rng, model.layers.front().in_dim);
    auto zc = build_inference_circuit(model);
    auto a = zc.assign(input);
    REQUIRE(check_satisfiability(zc.index, a));
    a.instance[zc.inst_out][0] += F::one();
    CHECK_FALSE(check_satisfiability(zc.index, a));
}

TEST_CASE("perturbed weight cell is unsatisfiable") {
    Rng rng(112);
    auto model = random_model(rng, 2, 4);
    auto input = random_input(rng, model.layers.front().in_dim);
    auto zc = build_inference_circuit(model);
    auto a = zc.assign(input);
    REQUIRE(check_satisfiability(zc.index, a));
    const auto& cell = zc.icom.lists[0][0];
    a.advice[cell.column.index][cell.row] += F::one();
    CHECK_FALSE(check_satisfiability(zc.index, a));
}

TEST_CASE("model json round trip") {
    Rng rng(113);
    auto model = random_model(rng);
    auto text = model.to_json();
    auto model2 = ModelSpec::from_json(text);
    CHECK(model2.to_json() == text);
    CHECK(model2.layers.size() == model.layers.size());
}

TEST_CASE("commit_model shapes and determinism") {
    Rng rng(114);
    auto model = random_model(rng);
    auto ck = cp::Ck::setup(255, seed_bytes(20));
    Rng r1(7), r2(7);
    auto set1 = commit_model(ck, model, 255, r1);
    auto set2 = commit_model(ck, model, 255, r2);
    CHECK(set1.count() == model.layers.size());
    for (size_t k = 0; k < set1.count(); k++) {
        CHECK(set1.commitments[k] == set2.commitments[k]);
        CHECK(pcs_verify_open(ck, set1.commitments[k], set1.polys[k], 255, set1.rands[k]));
    }
}

TEST_CASE("model too large for domain") {
    ModelSpec m;
    m.scale_bits = 4;
    Layer layer;
    layer.in_dim = 64;
    layer.out_dim = 64;
    layer.weights.assign(64 * 64, 1);
    layer.bias.assign(64, 0);
    m.layers.push_back(layer);
    CHECK_THROWS_AS(build_inference_circuit(m, 8), ModelTooLargeForDomain);
}

TEST_CASE("fixed point overflow") {
    ModelSpec m;
    m.scale_bits = 0;
    m.layers.push_back({1, 1, {int64_t(1) << 39, 0 * 0}, {0}, false});
    m.layers.back().weights.resize(1);
    CHECK_THROWS_AS(native_infer(m, {int64_t(1) << 39}), FixedPointOverflow);
}
