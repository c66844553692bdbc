#include "artemis/inference_circuit.hpp"

#include "artemis/errors.hpp"
#include "artemis/piop.hpp"

namespace artemis::zkml {

using plonkish::Cell;
using plonkish::CircuitBuilder;
using plonkish::ColumnKind;
using plonkish::Expr;

namespace {

// row cursors across the three independent column groups
struct Cursors {
    size_t mac = 0;   // x / w / acc
    size_t gate = 0;  // rescale + square rows
    size_t chain = 0; // bit decomposition chains
};

std::vector<std::vector<std::vector<ZkmlCircuit::OutputPlan>>> layout_plan(
    const ModelSpec& model, size_t batch, Cursors& cur) {
    std::vector<std::vector<std::vector<ZkmlCircuit::OutputPlan>>> plan(batch);
    for (size_t s = 0; s < batch; s++) {
        for (const auto& layer : model.layers) {
            std::vector<ZkmlCircuit::OutputPlan> outs(layer.out_dim);
            for (uint32_t o = 0; o < layer.out_dim; o++) {
                auto& p = outs[o];
                p.mac_row = cur.mac;
                cur.mac += layer.in_dim + 1;
                auto slot = [&]() {
                    ZkmlCircuit::RescaleSlot sl;
                    sl.gate_row = cur.gate++;
                    sl.q_row = cur.chain;
                    cur.chain += model.quotient_bits + 1;
                    sl.rem_row = cur.chain;
                    cur.chain += model.scale_bits + 1;
                    return sl;
                };
                p.dot = slot();
                if (layer.square_activation) {
                    p.square_row = cur.gate++;
                    p.act = slot();
                }
            }
            plan[s].push_back(std::move(outs));
        }
    }
    return plan;
}

} // namespace

size_t inference_rows(const ModelSpec& model, size_t batch) {
    Cursors cur;
    layout_plan(model, batch, cur);
    size_t io = batch * std::max<size_t>(model.layers.front().in_dim, model.layers.back().out_dim);
    return std::max({cur.mac, cur.gate, cur.chain, io});
}

ZkmlCircuit build_inference_circuit(const ModelSpec& model) {
    size_t rows = inference_rows(model, 1) + piop::kBlindingReserve;
    uint32_t log_n = 2;
    while ((size_t(1) << log_n) < rows) log_n++;
    return build_inference_circuit(model, log_n, 1);
}

ZkmlCircuit build_inference_circuit(const ModelSpec& model, uint32_t log_n, size_t batch) {
    model.validate();
    if (log_n > 20 || batch == 0) throw ModelTooLargeForDomain();

    ZkmlCircuit zc;
    zc.model = model;
    zc.batch = batch;
    Cursors cur;
    zc.plan = layout_plan(model, batch, cur);
    zc.rows_used = std::max({cur.mac, cur.gate, cur.chain});

    CircuitBuilder b(log_n, piop::kBlindingReserve);
    if (inference_rows(model, batch) > b.usable_rows()) throw ModelTooLargeForDomain();

    zc.col_x = b.add_advice_column();
    zc.col_w = b.add_advice_column();
    zc.col_acc = b.add_advice_column();
    zc.col_rs_v = b.add_advice_column();
    zc.col_rs_sign = b.add_advice_column();
    zc.col_rs_mag = b.add_advice_column();
    zc.col_rs_q = b.add_advice_column();
    zc.col_rs_rem = b.add_advice_column();
    zc.col_rs_out = b.add_advice_column();
    zc.col_bit = b.add_advice_column();
    zc.col_rec = b.add_advice_column();
    uint32_t sel_mac = b.add_fixed_column();
    uint32_t sel_rescale = b.add_fixed_column();
    uint32_t sel_square = b.add_fixed_column();
    uint32_t sel_chain_start = b.add_fixed_column();
    uint32_t sel_chain = b.add_fixed_column();
    uint32_t sel_bit = b.add_fixed_column();
    zc.inst_in = b.add_instance_column();
    zc.inst_out = b.add_instance_column();

    F two_s = F::from_u64(uint64_t(1) << model.scale_bits);

    b.add_gate("mac", Expr::fixed(sel_mac) *
                          (Expr::advice(zc.col_acc, 1) - Expr::advice(zc.col_acc) -
                           Expr::advice(zc.col_w) * Expr::advice(zc.col_x)));
    Expr sign = Expr::advice(zc.col_rs_sign);
    b.add_gate("rescale-sign", Expr::fixed(sel_rescale) * (sign * sign - Expr::constant(F::one())));
    b.add_gate("rescale-mag", Expr::fixed(sel_rescale) *
                                  (Expr::advice(zc.col_rs_v) * sign - Expr::advice(zc.col_rs_mag)));
    b.add_gate("rescale-split",
               Expr::fixed(sel_rescale) *
                   (Expr::advice(zc.col_rs_mag) - Expr::advice(zc.col_rs_q) * Expr::constant(two_s) -
                    Expr::advice(zc.col_rs_rem)));
    b.add_gate("rescale-out", Expr::fixed(sel_rescale) *
                                  (Expr::advice(zc.col_rs_out) - sign * Expr::advice(zc.col_rs_q)));
    b.add_gate("square", Expr::fixed(sel_square) *
                             (Expr::advice(zc.col_rs_out) -
                              Expr::advice(zc.col_rs_v) * Expr::advice(zc.col_rs_v)));
    b.add_gate("chain-start", Expr::fixed(sel_chain_start) * Expr::advice(zc.col_rec));
    b.add_gate("chain-step",
               Expr::fixed(sel_chain) *
                   (Expr::advice(zc.col_rec, 1) - Expr::advice(zc.col_rec) -
                    Expr::advice(zc.col_rec) - Expr::advice(zc.col_bit, 1)));
    b.add_gate("bit", Expr::fixed(sel_bit) * (Expr::advice(zc.col_bit) * Expr::advice(zc.col_bit) -
                                              Expr::advice(zc.col_bit)));

    auto wire_chain = [&](size_t row0, size_t bits, uint32_t target_col, size_t target_row) {
        b.set_fixed(sel_chain_start, uint32_t(row0), F::one());
        for (size_t j = 0; j < bits; j++) {
            b.set_fixed(sel_chain, uint32_t(row0 + j), F::one());
            b.set_fixed(sel_bit, uint32_t(row0 + 1 + j), F::one());
        }
        b.copy({{ColumnKind::Advice, zc.col_rec}, uint32_t(row0 + bits)},
               {{ColumnKind::Advice, target_col}, uint32_t(target_row)});
    };

    auto wire_rescale = [&](const ZkmlCircuit::RescaleSlot& slot) {
        b.set_fixed(sel_rescale, uint32_t(slot.gate_row), F::one());
        wire_chain(slot.q_row, model.quotient_bits, zc.col_rs_q, slot.gate_row);
        wire_chain(slot.rem_row, model.scale_bits, zc.col_rs_rem, slot.gate_row);
    };

    for (size_t s = 0; s < batch; s++) {
        for (size_t l = 0; l < model.layers.size(); l++) {
            const auto& layer = model.layers[l];
            std::vector<Cell> wcells;
            for (uint32_t o = 0; o < layer.out_dim; o++) {
                const auto& p = zc.plan[s][l][o];
                for (uint32_t i = 0; i < layer.in_dim; i++) {
                    uint32_t row = uint32_t(p.mac_row + i);
                    b.set_fixed(sel_mac, row, F::one());
                    Cell wcell{{ColumnKind::Advice, zc.col_w}, row};
                    if (s == 0) {
                        wcells.push_back(wcell);
                    } else {
                        // later samples reuse the committed weights
                        b.copy(Cell{{ColumnKind::Advice, zc.col_w},
                                    uint32_t(zc.plan[0][l][o].mac_row + i)},
                               wcell);
                    }
                    // bind the activation inputs
                    Cell xcell{{ColumnKind::Advice, zc.col_x}, row};
                    if (l == 0) {
                        b.copy(xcell, {{ColumnKind::Instance, zc.inst_in},
                                       uint32_t(s * layer.in_dim + i)});
                    } else {
                        const auto& prev = zc.plan[s][l - 1][i];
                        size_t src = model.layers[l - 1].square_activation ? prev.act.gate_row
                                                                           : prev.dot.gate_row;
                        b.copy(xcell, {{ColumnKind::Advice, zc.col_rs_out}, uint32_t(src)});
                    }
                }
                // accumulator result feeds the dot rescale
                b.copy({{ColumnKind::Advice, zc.col_acc}, uint32_t(p.mac_row + layer.in_dim)},
                       {{ColumnKind::Advice, zc.col_rs_v}, uint32_t(p.dot.gate_row)});
                wire_rescale(p.dot);
                if (layer.square_activation) {
                    b.set_fixed(sel_square, uint32_t(p.square_row), F::one());
                    b.copy({{ColumnKind::Advice, zc.col_rs_out}, uint32_t(p.dot.gate_row)},
                           {{ColumnKind::Advice, zc.col_rs_v}, uint32_t(p.square_row)});
                    b.copy({{ColumnKind::Advice, zc.col_rs_out}, uint32_t(p.square_row)},
                           {{ColumnKind::Advice, zc.col_rs_v}, uint32_t(p.act.gate_row)});
                    wire_rescale(p.act);
                }
                // final layer outputs are public
                if (l + 1 == model.layers.size()) {
                    size_t src = layer.square_activation ? p.act.gate_row : p.dot.gate_row;
                    b.copy({{ColumnKind::Advice, zc.col_rs_out}, uint32_t(src)},
                           {{ColumnKind::Instance, zc.inst_out},
                            uint32_t(s * layer.out_dim + o)});
                }
            }
            if (s == 0) zc.icom.lists.push_back(std::move(wcells));
        }
    }

    zc.index = b.build();
    return zc;
}

namespace {

struct RescaleValues {
    int64_t v, sign, mag, q, rem, out;
};

RescaleValues rescale_values(int64_t v, uint32_t scale_bits) {
    RescaleValues r;
    r.v = v;
    r.sign = v < 0 ? -1 : 1;
    r.mag = v < 0 ? -v : v;
    r.q = r.mag >> scale_bits;
    r.rem = r.mag & ((int64_t(1) << scale_bits) - 1);
    r.out = r.sign * r.q;
    return r;
}

} // namespace

plonkish::Assignment ZkmlCircuit::assign(const std::vector<int64_t>& inputs) const {
    auto a = plonkish::Assignment::zeroed(index);

    auto fill_chain = [&](size_t row0, size_t bits, int64_t value) {
        // most significant bit first; rec accumulates prefixes
        int64_t rec = 0;
        a.advice[col_rec][row0] = F::zero();
        for (size_t j = 0; j < bits; j++) {
            int64_t bit = (value >> (bits - 1 - j)) & 1;
            rec = 2 * rec + bit;
            a.advice[col_bit][row0 + 1 + j] = F::from_i64(bit);
            a.advice[col_rec][row0 + 1 + j] = F::from_i64(rec);
        }
    };
    auto fill_rescale = [&](const RescaleSlot& slot, const RescaleValues& rv) {
        a.advice[col_rs_v][slot.gate_row] = F::from_i64(rv.v);
        a.advice[col_rs_sign][slot.gate_row] = F::from_i64(rv.sign);
        a.advice[col_rs_mag][slot.gate_row] = F::from_i64(rv.mag);
        a.advice[col_rs_q][slot.gate_row] = F::from_i64(rv.q);
        a.advice[col_rs_rem][slot.gate_row] = F::from_i64(rv.rem);
        a.advice[col_rs_out][slot.gate_row] = F::from_i64(rv.out);
        fill_chain(slot.q_row, model.quotient_bits, rv.q);
        fill_chain(slot.rem_row, model.scale_bits, rv.rem);
    };

    size_t in_dim = model.layers.front().in_dim;
    if (inputs.size() != batch * in_dim) throw BadCircuit("input dimension");

    for (size_t s = 0; s < batch; s++) {
        std::vector<int64_t> cur(inputs.begin() + s * in_dim, inputs.begin() + (s + 1) * in_dim);
        for (size_t i = 0; i < in_dim; i++)
            a.instance[inst_in][s * in_dim + i] = F::from_i64(cur[i]);

        for (size_t l = 0; l < model.layers.size(); l++) {
            const auto& layer = model.layers[l];
            std::vector<int64_t> next(layer.out_dim);
            for (uint32_t o = 0; o < layer.out_dim; o++) {
                const auto& p = plan[s][l][o];
                __int128 acc = __int128(layer.bias[o]) << model.scale_bits;
                a.advice[col_acc][p.mac_row] = F::from_i64(layer.bias[o] << model.scale_bits);
                for (uint32_t i = 0; i < layer.in_dim; i++) {
                    int64_t w = layer.weights[size_t(o) * layer.in_dim + i];
                    a.advice[col_x][p.mac_row + i] = F::from_i64(cur[i]);
                    a.advice[col_w][p.mac_row + i] = F::from_i64(w);
                    acc += __int128(w) * cur[i];
                    if (acc <= -(__int128(1) << 62) || acc >= (__int128(1) << 62))
                        throw FixedPointOverflow("accumulator");
                    a.advice[col_acc][p.mac_row + i + 1] = F::from_i64(int64_t(acc));
                }
                if (acc <= -(__int128(1) << (model.quotient_bits + model.scale_bits)) ||
                    acc >= (__int128(1) << (model.quotient_bits + model.scale_bits)))
                    throw FixedPointOverflow("accumulator");
                auto rv = rescale_values(int64_t(acc), model.scale_bits);
                fill_rescale(p.dot, rv);
                int64_t y = rv.out;
                if (layer.square_activation) {
                    __int128 sq = __int128(y) * y;
                    if (sq >= (__int128(1) << (model.quotient_bits + model.scale_bits)))
                        throw FixedPointOverflow("activation");
                    a.advice[col_rs_v][p.square_row] = F::from_i64(y);
                    a.advice[col_rs_out][p.square_row] = F::from_i64(int64_t(sq));
                    auto rv2 = rescale_values(int64_t(sq), model.scale_bits);
                    fill_rescale(p.act, rv2);
                    y = rv2.out;
                }
                next[o] = y;
            }
            cur = std::move(next);
        }
        for (size_t o = 0; o < cur.size(); o++)
            a.instance[inst_out][s * cur.size() + o] = F::from_i64(cur[o]);
    }
    return a;
}

std::vector<std::vector<F>> ZkmlCircuit::instance_for(const std::vector<int64_t>& inputs,
                                                      const std::vector<int64_t>& outputs) const {
    std::vector<std::vector<F>> inst(2, std::vector<F>(index.n(), F::zero()));
    if (inputs.size() != batch * model.layers.front().in_dim ||
        outputs.size() != batch * model.layers.back().out_dim)
        throw BadCircuit("instance dimensions");
    for (size_t i = 0; i < inputs.size(); i++) inst[inst_in][i] = F::from_i64(inputs[i]);
    for (size_t o = 0; o < outputs.size(); o++) inst[inst_out][o] = F::from_i64(outputs[o]);
    return inst;
}

} // namespace artemis::zkml
