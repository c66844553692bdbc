#ifndef ARTEMIS_INFERENCE_CIRCUIT_HPP
#define ARTEMIS_INFERENCE_CIRCUIT_HPP

#include "artemis/model.hpp"

namespace artemis::zkml {

// Plonkish arithmetization of fixed-point inference: running-sum dot
// products, hinted-quotient rescaling with bit-decomposition range chains,
// square activations. Weight cells are designated as externally committed
// (one commitment per layer, row-major order).
struct ZkmlCircuit {
    ModelSpec model;
    size_t batch = 1; // samples proven per proof, sharing one weight set
    plonkish::CircuitIndex index;
    plonkish::CommitIndexSet icom;
    size_t rows_used = 0;

    uint32_t inst_in = 0, inst_out = 0;

    // witness generator: fills the grid and both instance columns; inputs are
    // concatenated sample vectors (batch * in_dim values)
    plonkish::Assignment assign(const std::vector<int64_t>& inputs) const;

    // instance columns only (verifier side)
    std::vector<std::vector<F>> instance_for(const std::vector<int64_t>& inputs,
                                             const std::vector<int64_t>& outputs) const;

    // internals shared by builder and filler
    struct RescaleSlot {
        size_t gate_row = 0, q_row = 0, rem_row = 0;
    };
    struct OutputPlan {
        size_t mac_row = 0;
        RescaleSlot dot;
        size_t square_row = 0;
        RescaleSlot act;
    };
    // plan[sample][layer][output]
    std::vector<std::vector<std::vector<OutputPlan>>> plan;
    uint32_t col_x = 0, col_w = 0, col_acc = 0;
    uint32_t col_rs_v = 0, col_rs_sign = 0, col_rs_mag = 0, col_rs_q = 0, col_rs_rem = 0,
             col_rs_out = 0;
    uint32_t col_bit = 0, col_rec = 0;
};

// minimal needed rows (before domain rounding)
size_t inference_rows(const ModelSpec& model, size_t batch = 1);

ZkmlCircuit build_inference_circuit(const ModelSpec& model, uint32_t log_n, size_t batch = 1);
ZkmlCircuit build_inference_circuit(const ModelSpec& model); // minimal domain, batch 1

} // namespace artemis::zkml

#endif
