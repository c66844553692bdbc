#include "artemis/model.hpp"

#include <json.hpp>

#include "artemis/errors.hpp"

namespace artemis::zkml {

void ModelSpec::validate() const {
    if (layers.empty()) throw BadCircuit("model has no layers");
    if (scale_bits > 16) throw BadCircuit("scale_bits out of range");
    if (quotient_bits < 8 || quotient_bits > 52) throw BadCircuit("quotient_bits out of range");
    for (size_t l = 0; l < layers.size(); l++) {
        const auto& layer = layers[l];
        if (layer.in_dim == 0 || layer.out_dim == 0) throw BadCircuit("zero layer dimension");
        if (layer.weights.size() != size_t(layer.in_dim) * layer.out_dim)
            throw BadCircuit("weight count does not match dimensions");
        if (layer.bias.size() != layer.out_dim) throw BadCircuit("bias count mismatch");
        if (l > 0 && layers[l - 1].out_dim != layer.in_dim)
            throw BadCircuit("layer dimensions do not chain");
        for (int64_t w : layer.weights)
            if (w <= -kMagnitudeBound || w >= kMagnitudeBound)
                throw FixedPointOverflow("weight magnitude");
        for (int64_t b : layer.bias)
            if (b <= -kMagnitudeBound || b >= kMagnitudeBound)
                throw FixedPointOverflow("bias magnitude");
    }
}

std::string ModelSpec::to_json() const {
    nlohmann::json j;
    j["scale_bits"] = scale_bits;
    j["quotient_bits"] = quotient_bits;
    j["layers"] = nlohmann::json::array();
    for (const auto& layer : layers) {
        nlohmann::json jl;
        jl["in_dim"] = layer.in_dim;
        jl["out_dim"] = layer.out_dim;
        jl["weights"] = layer.weights;
        jl["bias"] = layer.bias;
        jl["activation"] = layer.square_activation ? "square" : "identity";
        j["layers"].push_back(jl);
    }
    return j.dump(2);
}

ModelSpec ModelSpec::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ModelSpec m;
    m.scale_bits = j.at("scale_bits").get<uint32_t>();
    m.quotient_bits = j.value("quotient_bits", 44u);
    for (const auto& jl : j.at("layers")) {
        Layer layer;
        layer.in_dim = jl.at("in_dim").get<uint32_t>();
        layer.out_dim = jl.at("out_dim").get<uint32_t>();
        layer.weights = jl.at("weights").get<std::vector<int64_t>>();
        layer.bias = jl.at("bias").get<std::vector<int64_t>>();
        std::string act = jl.value("activation", "identity");
        if (act != "square" && act != "identity") throw BadCircuit("unknown activation");
        layer.square_activation = act == "square";
        m.layers.push_back(std::move(layer));
    }
    m.validate();
    return m;
}

namespace {

int64_t rescale_trunc(__int128 v, uint32_t scale_bits) {
    __int128 q = v / (__int128(1) << scale_bits); // C++ division truncates toward zero
    if (q <= -__int128(kMagnitudeBound) || q >= __int128(kMagnitudeBound))
        throw FixedPointOverflow("rescaled value");
    return int64_t(q);
}

} // namespace

std::vector<int64_t> native_infer(const ModelSpec& model, const std::vector<int64_t>& input) {
    model.validate();
    if (input.size() != model.layers.front().in_dim) throw BadCircuit("input dimension");
    for (int64_t x : input)
        if (x <= -kMagnitudeBound || x >= kMagnitudeBound)
            throw FixedPointOverflow("input magnitude");

    std::vector<int64_t> cur = input;
    for (const auto& layer : model.layers) {
        std::vector<int64_t> next(layer.out_dim);
        for (uint32_t o = 0; o < layer.out_dim; o++) {
            __int128 acc = __int128(layer.bias[o]) << model.scale_bits;
            for (uint32_t i = 0; i < layer.in_dim; i++)
                acc += __int128(layer.weights[size_t(o) * layer.in_dim + i]) * cur[i];
            if (acc <= -(__int128(1) << (model.quotient_bits + model.scale_bits)) ||
                acc >= (__int128(1) << (model.quotient_bits + model.scale_bits)))
                throw FixedPointOverflow("accumulator");
            int64_t y = rescale_trunc(acc, model.scale_bits);
            if (layer.square_activation) {
                __int128 sq = __int128(y) * y;
                if (sq >= (__int128(1) << (model.quotient_bits + model.scale_bits)))
                    throw FixedPointOverflow("activation");
                y = rescale_trunc(sq, model.scale_bits);
            }
            next[o] = y;
        }
        cur = std::move(next);
    }
    return cur;
}

cp::ExternalCommitmentSet commit_model(const cp::Ck& ck_ext, const ModelSpec& model,
                                       uint64_t degree_bound, Rng& rng) {
    model.validate();
    cp::ExternalCommitmentSet set;
    set.degree_bound = degree_bound;
    for (const auto& layer : model.layers) {
        std::vector<F> coeffs;
        coeffs.reserve(layer.weights.size());
        for (int64_t w : layer.weights) coeffs.push_back(F::from_i64(w));
        set.rands.push_back(F::random(rng));
        set.commitments.push_back(pcs_commit(ck_ext, coeffs, degree_bound, set.rands.back()));
        set.polys.push_back(std::move(coeffs));
    }
    return set;
}

} // namespace artemis::zkml
