#ifndef ARTEMIS_MODEL_HPP
#define ARTEMIS_MODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "artemis/cp.hpp"

namespace artemis::zkml {

// Quantized feed-forward model. All values are fixed-point integers with
// scale_bits fractional bits; weights and activations at scale s, layer
// accumulators at scale 2s, biases at scale s (shifted up before the add).
struct Layer {
    uint32_t in_dim = 0;
    uint32_t out_dim = 0;
    std::vector<int64_t> weights; // row-major: weights[o*in_dim + i]
    std::vector<int64_t> bias;    // per output
    bool square_activation = false;
};

struct ModelSpec {
    std::vector<Layer> layers;
    uint32_t scale_bits = 8;
    // width of the hinted-quotient range check; every rescaled value must fit
    // in quotient_bits bits (magnitude). Smaller values shrink the range
    // chains and with them the evaluation domain.
    uint32_t quotient_bits = 44;

    void validate() const;
    std::string to_json() const;
    static ModelSpec from_json(const std::string& text);
};

// magnitude cap on weights, biases, inputs and every intermediate value;
// keeps the rescale decomposition sound and far from field wraparound
constexpr int64_t kMagnitudeBound = int64_t(1) << 40;

// integer fixed-point inference matching the circuit bit for bit
// (truncation toward zero on every rescale)
std::vector<int64_t> native_infer(const ModelSpec& model, const std::vector<int64_t>& input);

// per-layer weight vectors as polynomial coefficients, fresh randomness per
// layer
cp::ExternalCommitmentSet commit_model(const cp::Ck& ck_ext, const ModelSpec& model,
                                       uint64_t degree_bound, Rng& rng);

} // namespace artemis::zkml

#endif
