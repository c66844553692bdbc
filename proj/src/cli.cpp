#include "artemis/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "artemis/hash_circuit.hpp"

namespace artemis::cli {

using nlohmann::json;

Scheme scheme_from_string(const std::string& s) {
    if (s == "none") return Scheme::None;
    if (s == "artemis") return Scheme::Artemis;
    if (s == "strawman") return Scheme::Strawman;
    if (s == "hash") return Scheme::Hash;
    throw IoError("unknown scheme: " + s);
}

std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::None:
            return "none";
        case Scheme::Artemis:
            return "artemis";
        case Scheme::Strawman:
            return "strawman";
        case Scheme::Hash:
            return "hash";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Bytes read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    return Bytes(s.begin(), s.end());
}

void write_file(const std::string& path, const Bytes& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out.write(reinterpret_cast<const char*>(data.data()), std::streamsize(data.size()));
    if (!out) throw IoError("short write to " + path);
}

void write_file(const std::string& path, const std::string& text) {
    write_file(path, Bytes(text.begin(), text.end()));
}

constexpr const char kSpongeDomainSeed[] = "artemis-hash-baseline-v1";

// ---- params file: "APRM" section = version, seed, k, commit key ----

struct Params {
    uint64_t seed = 0;
    uint32_t log_n = 0;
    cp::Ck ck;
};

Bytes params_to_bytes(const Params& p) {
    ByteWriter body;
    body.u32(1);
    body.u64(p.seed);
    body.u32(p.log_n);
    p.ck.to_bytes(body);
    ByteWriter w;
    w.section("APRM", body.data());
    return w.take();
}

Params params_from_bytes(const Bytes& data) {
    ByteReader outer(data);
    Bytes payload = outer.section("APRM");
    ByteReader r(payload);
    if (r.u32() != 1) throw ProofDecodeError("unsupported params version");
    Params p;
    p.seed = r.u64();
    p.log_n = r.u32();
    p.ck = cp::Ck::from_bytes(r);
    return p;
}

// ---- commitment files: "ACP1" magic + u64 degree bound + element ----

Bytes commitment_to_bytes(const cp::Commitment& c) {
    ByteWriter w;
    w.tag("ACP1");
    w.u64(c.degree_bound);
    c.point.to_bytes(w);
    return w.take();
}

cp::Commitment commitment_from_bytes(const Bytes& data) {
    ByteReader r(data);
    r.expect_tag("ACP1");
    cp::Commitment c;
    c.degree_bound = r.u64();
    c.point = piop::Gp::from_bytes(r);
    return c;
}

// ---- prover secrets: per-layer commitment randomness ----

Bytes secrets_to_bytes(const std::vector<F>& rands) {
    ByteWriter body;
    body.u64(rands.size());
    for (const auto& r : rands) r.to_bytes(body);
    ByteWriter w;
    w.section("ASEC", body.data());
    return w.take();
}

std::vector<F> secrets_from_bytes(const Bytes& data) {
    ByteReader outer(data);
    Bytes payload = outer.section("ASEC");
    ByteReader r(payload);
    std::vector<F> rands(r.u64());
    for (auto& x : rands) x = F::from_bytes(r);
    return rands;
}

std::vector<int64_t> read_input_json(const std::string& path) {
    Bytes data = read_file(path);
    json j = json::parse(std::string(data.begin(), data.end()));
    return j.at("values").get<std::vector<int64_t>>();
}

// statement: everything the verifier needs to rebuild the index (the model
// skeleton carries no weights)
struct Statement {
    Scheme scheme = Scheme::None;
    uint32_t scale_bits = 0;
    uint32_t quotient_bits = 44;
    uint32_t batch = 1;
    uint32_t log_n = 0;
    std::vector<std::array<uint32_t, 2>> dims;
    std::vector<bool> square;
    std::vector<int64_t> input;
    std::vector<int64_t> output;
    std::vector<std::string> digests; // hash scheme: hex digests per layer
};

zkml::ModelSpec skeleton_model(const Statement& st) {
    zkml::ModelSpec m;
    m.scale_bits = st.scale_bits;
    m.quotient_bits = st.quotient_bits;
    for (size_t l = 0; l < st.dims.size(); l++) {
        zkml::Layer layer;
        layer.in_dim = st.dims[l][0];
        layer.out_dim = st.dims[l][1];
        layer.weights.assign(size_t(layer.in_dim) * layer.out_dim, 0);
        layer.bias.assign(layer.out_dim, 0);
        layer.square_activation = st.square[l];
        m.layers.push_back(std::move(layer));
    }
    return m;
}

std::string hex_of(const Bytes& b) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (uint8_t c : b) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

Bytes hex_to_bytes(const std::string& s) {
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw IoError("bad hex");
    };
    Bytes out;
    for (size_t i = 0; i + 1 < s.size(); i += 2)
        out.push_back(uint8_t(nib(s[i]) * 16 + nib(s[i + 1])));
    return out;
}

std::string statement_to_json(const Statement& st) {
    json j;
    j["schema_version"] = 1;
    j["scheme"] = scheme_name(st.scheme);
    j["scale_bits"] = st.scale_bits;
    j["quotient_bits"] = st.quotient_bits;
    j["batch"] = st.batch;
    j["log_n"] = st.log_n;
    j["dims"] = json::array();
    for (size_t l = 0; l < st.dims.size(); l++)
        j["dims"].push_back({{"in", st.dims[l][0]},
                             {"out", st.dims[l][1]},
                             {"square", bool(st.square[l])}});
    j["input"] = st.input;
    j["output"] = st.output;
    if (!st.digests.empty()) j["digests"] = st.digests;
    return j.dump(2);
}

Statement statement_from_json(const std::string& text) {
    json j = json::parse(text);
    Statement st;
    st.scheme = scheme_from_string(j.at("scheme").get<std::string>());
    st.scale_bits = j.at("scale_bits").get<uint32_t>();
    st.quotient_bits = j.value("quotient_bits", 44u);
    st.batch = j.value("batch", 1u);
    st.log_n = j.at("log_n").get<uint32_t>();
    for (const auto& jd : j.at("dims")) {
        st.dims.push_back({jd.at("in").get<uint32_t>(), jd.at("out").get<uint32_t>()});
        st.square.push_back(jd.at("square").get<bool>());
    }
    st.input = j.at("input").get<std::vector<int64_t>>();
    st.output = j.at("output").get<std::vector<int64_t>>();
    if (j.contains("digests")) st.digests = j.at("digests").get<std::vector<std::string>>();
    return st;
}

uint64_t effective_seed(uint64_t flag_seed) {
    if (const char* env = std::getenv("ARTEMIS_SEED")) return std::strtoull(env, nullptr, 10);
    return flag_seed;
}

// external commitment degree bound: smallest power-of-two span covering the
// largest layer (identical for prover and verifier, independent of the key)
uint64_t external_degree_bound(const zkml::ModelSpec& model) {
    size_t max_w = 1;
    for (const auto& l : model.layers) max_w = std::max(max_w, l.weights.size());
    uint64_t d = 1;
    while (d < max_w) d <<= 1;
    return d - 1;
}

// required domain size per scheme
uint32_t scheme_log_n(const zkml::ModelSpec& model, Scheme scheme, size_t batch) {
    size_t rows = zkml::inference_rows(model, batch);
    if (scheme == Scheme::Artemis || scheme == Scheme::Strawman) {
        // witness copies fit alongside; the transform checks the exact fit
        size_t max_w = 0;
        for (const auto& l : model.layers) max_w = std::max(max_w, l.weights.size());
        rows = std::max(rows, max_w + 2);
        if (scheme == Scheme::Strawman) rows = std::max(rows, max_w + 2);
    } else if (scheme == Scheme::Hash) {
        size_t hash_rows = 0;
        for (const auto& l : model.layers)
            hash_rows += sponge::HashLayout::rows_for(l.weights.size());
        rows += hash_rows;
    }
    rows += piop::kBlindingReserve;
    uint32_t log_n = 2;
    while ((size_t(1) << log_n) < rows) log_n++;
    return log_n;
}

struct ProveResult {
    Bytes proof;
    Statement statement;
    size_t grid_rows = 0;
    size_t grid_columns = 0;
    uint32_t log_n = 0;
};

std::vector<int64_t> infer_batch(const zkml::ModelSpec& model,
                                 const std::vector<int64_t>& inputs, size_t batch) {
    size_t in_dim = model.layers.front().in_dim;
    if (inputs.size() != batch * in_dim) throw IoError("input size != batch * in_dim");
    std::vector<int64_t> out;
    for (size_t s = 0; s < batch; s++) {
        std::vector<int64_t> one(inputs.begin() + s * in_dim, inputs.begin() + (s + 1) * in_dim);
        auto y = zkml::native_infer(model, one);
        out.insert(out.end(), y.begin(), y.end());
    }
    return out;
}

ProveResult prove_scheme(const zkml::ModelSpec& model, const std::vector<int64_t>& input,
                         Scheme scheme, const Params& params, const std::vector<F>& layer_rands,
                         Rng& rng, size_t batch = 1) {
    uint32_t log_n = scheme_log_n(model, scheme, batch);
    auto zc = zkml::build_inference_circuit(model, log_n, batch);
    auto output = infer_batch(model, input, batch);

    ProveResult res;
    res.log_n = log_n;
    res.statement.scheme = scheme;
    res.statement.scale_bits = model.scale_bits;
    res.statement.quotient_bits = model.quotient_bits;
    res.statement.batch = uint32_t(batch);
    res.statement.log_n = log_n;
    for (const auto& l : model.layers) {
        res.statement.dims.push_back({l.in_dim, l.out_dim});
        res.statement.square.push_back(l.square_activation);
    }
    res.statement.input = input;
    res.statement.output = output;

    Transcript ts("artemis-cli-v1");

    if (scheme == Scheme::None) {
        auto [pk, vk] = piop::index(params.ck, zc.index);
        auto a = zc.assign(input);
        auto out = piop::prove(pk, params.ck, a, ts, rng);
        res.proof = out.proof.to_bytes();
        res.grid_rows = zc.rows_used;
        res.grid_columns = zc.index.n_advice() + zc.index.n_fixed() + zc.index.n_instance;
        return res;
    }

    if (scheme == Scheme::Hash) {
        auto sponge_params = sponge::SpongeParams::derive(
            Bytes(kSpongeDomainSeed, kSpongeDomainSeed + sizeof(kSpongeDomainSeed) - 1));
        auto [idx, lay] = sponge::hash_index_transform(zc.index, zc.icom, sponge_params);
        auto [pk, vk] = piop::index(params.ck, idx);
        auto a = zc.assign(input);
        a.advice.resize(idx.n_advice(), std::vector<F>(idx.n(), F::zero()));
        a.instance.resize(idx.n_instance, std::vector<F>(idx.n(), F::zero()));
        sponge::fill_hash_witness(a, lay, zc.icom);
        for (size_t k = 0; k < zc.icom.count(); k++) {
            ByteWriter w;
            a.instance[lay.inst_digest][k].to_bytes(w);
            res.statement.digests.push_back(hex_of(w.data()));
        }
        auto out = piop::prove(pk, params.ck, a, ts, rng);
        res.proof = out.proof.to_bytes();
        res.grid_rows = std::max(zc.rows_used, lay.rows_used);
        res.grid_columns = idx.n_advice() + idx.n_fixed() + idx.n_instance;
        return res;
    }

    // linked schemes
    cp::ExternalCommitmentSet external;
    external.degree_bound = external_degree_bound(model);
    external.rands = layer_rands;
    for (size_t k = 0; k < model.layers.size(); k++) {
        std::vector<F> coeffs;
        for (int64_t w : model.layers[k].weights) coeffs.push_back(F::from_i64(w));
        external.commitments.push_back(
            pcs_commit(params.ck, coeffs, external.degree_bound, external.rands[k]));
        external.polys.push_back(std::move(coeffs));
    }

    if (scheme == Scheme::Artemis) {
        auto [idx, lay] = cp::horner_index_transform(zc.index, zc.icom, external.degree_bound);
        auto [pk, vk] = piop::index(params.ck, idx);
        auto a = zc.assign(input);
        a.advice.resize(idx.n_advice(), std::vector<F>(idx.n(), F::zero()));
        auto proof = cp::artemis_prove_horner(pk, params.ck, params.ck, a, zc.icom, external,
                                              lay, ts, rng);
        res.proof = proof.to_bytes();
        res.grid_rows = std::max(zc.rows_used, lay.n_horner() + 2);
        res.grid_columns = idx.n_advice() + idx.n_fixed() + idx.n_instance;
        return res;
    }

    auto [idx, lay] = cp::strawman_index_transform(zc.index, zc.icom, external.degree_bound);
    auto [pk, vk] = piop::index(params.ck, idx);
    auto a = zc.assign(input);
    a.advice.resize(idx.n_advice(), std::vector<F>(idx.n(), F::zero()));
    auto proof = cp::artemis_prove_strawman(pk, params.ck, params.ck, a, zc.icom, external, lay,
                                            ts, rng);
    res.proof = proof.to_bytes();
    res.grid_rows = std::max(zc.rows_used, lay.link.active_rows + 2);
    res.grid_columns = idx.n_advice() + idx.n_fixed() + idx.n_instance;
    return res;
}

bool verify_scheme(const Statement& st, const Params& params, const Bytes& proof_bytes,
                   const std::vector<cp::Commitment>& commitments) {
    auto model = skeleton_model(st);
    auto zc = zkml::build_inference_circuit(model, st.log_n, st.batch);
    if (st.input.size() != size_t(st.batch) * model.layers.front().in_dim ||
        st.output.size() != size_t(st.batch) * model.layers.back().out_dim)
        return false;

    Transcript ts("artemis-cli-v1");

    if (st.scheme == Scheme::None) {
        auto [pk, vk] = piop::index(params.ck, zc.index);
        auto instance = zc.instance_for(st.input, st.output);
        ByteReader r(proof_bytes);
        auto proof = piop::PlonkProof::from_bytes(r);
        return piop::verify(vk, params.ck, instance, proof, ts);
    }

    if (st.scheme == Scheme::Hash) {
        auto sponge_params = sponge::SpongeParams::derive(
            Bytes(kSpongeDomainSeed, kSpongeDomainSeed + sizeof(kSpongeDomainSeed) - 1));
        auto [idx, lay] = sponge::hash_index_transform(zc.index, zc.icom, sponge_params);
        auto [pk, vk] = piop::index(params.ck, idx);
        auto instance = zc.instance_for(st.input, st.output);
        instance.resize(idx.n_instance, std::vector<F>(idx.n(), F::zero()));
        if (st.digests.size() != zc.icom.count()) return false;
        for (size_t k = 0; k < zc.icom.count(); k++) {
            Bytes db = hex_to_bytes(st.digests[k]);
            ByteReader dr(db);
            instance[lay.inst_digest][k] = F::from_bytes(dr);
        }
        ByteReader r(proof_bytes);
        auto proof = piop::PlonkProof::from_bytes(r);
        return piop::verify(vk, params.ck, instance, proof, ts);
    }

    if (commitments.size() != model.layers.size()) return false;

    if (st.scheme == Scheme::Artemis) {
        auto [idx, lay] =
            cp::horner_index_transform(zc.index, zc.icom, external_degree_bound(model));
        auto [pk, vk] = piop::index(params.ck, idx);
        auto instance = zc.instance_for(st.input, st.output);
        ByteReader r(proof_bytes);
        auto proof = cp::ArtemisProof::from_bytes(r);
        return cp::artemis_verify(vk, params.ck, params.ck, instance, commitments, proof,
                                  lay.link, ts);
    }

    auto [idx, lay] =
        cp::strawman_index_transform(zc.index, zc.icom, external_degree_bound(model));
    auto [pk, vk] = piop::index(params.ck, idx);
    auto instance = zc.instance_for(st.input, st.output);
    ByteReader r(proof_bytes);
    auto proof = cp::ArtemisProof::from_bytes(r);
    return cp::artemis_verify(vk, params.ck, params.ck, instance, commitments, proof, lay.link,
                              ts);
}

} // namespace

BenchReport run_bench(const zkml::ModelSpec& model, const std::vector<int64_t>& input,
                      const std::vector<Scheme>& schemes, size_t trials, uint64_t seed,
                      size_t batch) {
    BenchReport report;
    report.trials = trials;
    report.seed = seed;
    report.batch = batch;
    for (const auto& l : model.layers) report.total_weights += l.weights.size();

    // one key big enough for the largest scheme
    uint32_t max_log_n = 0;
    for (Scheme s : schemes) max_log_n = std::max(max_log_n, scheme_log_n(model, s, batch));
    Params params;
    params.seed = seed;
    params.log_n = max_log_n;
    {
        ByteWriter w;
        w.u64(seed);
        params.ck = cp::Ck::setup((size_t(1) << max_log_n) - 1, w.take());
    }

    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return v[v.size() / 2];
    };

    double base_prover = 0, base_verifier = 0;
    for (Scheme scheme : schemes) {
        BenchEntry e;
        e.scheme = scheme_name(scheme);
        e.trials = trials;
        try {
            // offline: circuit, transform, keys and external commitments are
            // indexer work and sit outside the timed region
            uint32_t log_n = scheme_log_n(model, scheme, batch);
            auto zc = zkml::build_inference_circuit(model, log_n, batch);
            auto output = infer_batch(model, input, batch);
            Rng rng(seed + uint64_t(scheme));

            plonkish::CircuitIndex idx = zc.index;
            cp::HornerLayout hlay;
            cp::StrawmanLayout slay;
            sponge::HashLayout hashlay;
            cp::ExternalCommitmentSet external;
            if (scheme == Scheme::Artemis || scheme == Scheme::Strawman) {
                external.degree_bound = external_degree_bound(model);
                for (size_t k = 0; k < model.layers.size(); k++) {
                    std::vector<F> coeffs;
                    for (int64_t w : model.layers[k].weights) coeffs.push_back(F::from_i64(w));
                    external.rands.push_back(F::random(rng));
                    external.commitments.push_back(pcs_commit(params.ck, coeffs,
                                                              external.degree_bound,
                                                              external.rands.back()));
                    external.polys.push_back(std::move(coeffs));
                }
            }
            if (scheme == Scheme::Artemis) {
                std::tie(idx, hlay) =
                    cp::horner_index_transform(zc.index, zc.icom, external.degree_bound);
            } else if (scheme == Scheme::Strawman) {
                std::tie(idx, slay) =
                    cp::strawman_index_transform(zc.index, zc.icom, external.degree_bound);
            } else if (scheme == Scheme::Hash) {
                auto sponge_params = sponge::SpongeParams::derive(
                    Bytes(kSpongeDomainSeed, kSpongeDomainSeed + sizeof(kSpongeDomainSeed) - 1));
                std::tie(idx, hashlay) =
                    sponge::hash_index_transform(zc.index, zc.icom, sponge_params);
            }
            auto [pk, vk] = piop::index(params.ck, idx);
            e.log_n = log_n;
            e.grid_columns = idx.n_advice() + idx.n_fixed() + idx.n_instance;

            std::vector<double> pt, vt;
            for (size_t t = 0; t < trials; t++) {
                auto t0 = Clock::now();
                auto a = zc.assign(input);
                a.advice.resize(idx.n_advice(), std::vector<F>(idx.n(), F::zero()));
                a.instance.resize(idx.n_instance, std::vector<F>(idx.n(), F::zero()));
                Bytes proof_bytes;
                Transcript tp("artemis-cli-v1");
                if (scheme == Scheme::Artemis) {
                    proof_bytes = cp::artemis_prove_horner(pk, params.ck, params.ck, a, zc.icom,
                                                           external, hlay, tp, rng)
                                      .to_bytes();
                    e.grid_rows = std::max(zc.rows_used, hlay.n_horner() + 2);
                } else if (scheme == Scheme::Strawman) {
                    proof_bytes = cp::artemis_prove_strawman(pk, params.ck, params.ck, a,
                                                             zc.icom, external, slay, tp, rng)
                                      .to_bytes();
                    e.grid_rows = std::max(zc.rows_used, slay.link.active_rows + 2);
                } else {
                    if (scheme == Scheme::Hash) {
                        sponge::fill_hash_witness(a, hashlay, zc.icom);
                        e.grid_rows = std::max(zc.rows_used, hashlay.rows_used);
                    } else {
                        e.grid_rows = zc.rows_used;
                    }
                    proof_bytes = piop::prove(pk, params.ck, a, tp, rng).proof.to_bytes();
                }
                pt.push_back(ms_since(t0));
                e.proof_bytes = proof_bytes.size();

                auto instance = a.instance;
                auto t1 = Clock::now();
                bool ok = false;
                Transcript tv("artemis-cli-v1");
                if (scheme == Scheme::Artemis) {
                    ByteReader r(proof_bytes);
                    auto proof = cp::ArtemisProof::from_bytes(r);
                    ok = cp::artemis_verify(vk, params.ck, params.ck, instance,
                                            external.commitments, proof, hlay.link, tv);
                } else if (scheme == Scheme::Strawman) {
                    ByteReader r(proof_bytes);
                    auto proof = cp::ArtemisProof::from_bytes(r);
                    ok = cp::artemis_verify(vk, params.ck, params.ck, instance,
                                            external.commitments, proof, slay.link, tv);
                } else {
                    ByteReader r(proof_bytes);
                    auto proof = piop::PlonkProof::from_bytes(r);
                    ok = piop::verify(vk, params.ck, instance, proof, tv);
                }
                vt.push_back(ms_since(t1));
                if (!ok) throw Error("bench proof failed to verify");
                (void)output;
            }
            e.prover_ms = median(pt);
            e.verifier_ms = median(vt);
        } catch (const std::exception& ex) {
            e.skipped = true;
            e.skip_reason = ex.what();
        }
        if (!e.skipped && scheme == Scheme::None) {
            base_prover = e.prover_ms;
            base_verifier = e.verifier_ms;
        }
        report.entries.push_back(e);
    }
    for (auto& e : report.entries) {
        if (e.skipped || base_prover == 0) continue;
        e.prover_overhead = e.prover_ms / base_prover;
        e.verifier_overhead = e.verifier_ms / base_verifier;
    }
    return report;
}

std::string BenchReport::to_json() const {
    json j;
    j["schema_version"] = schema_version;
    j["trials"] = trials;
    j["seed"] = seed;
    j["batch"] = batch;
    j["total_weights"] = total_weights;
    j["entries"] = json::array();
    for (const auto& e : entries) {
        json je;
        je["scheme"] = e.scheme;
        if (e.skipped) {
            je["skipped"] = true;
            je["reason"] = e.skip_reason;
        } else {
            je["prover_ms"] = e.prover_ms;
            je["verifier_ms"] = e.verifier_ms;
            je["proof_bytes"] = e.proof_bytes;
            je["grid_rows"] = e.grid_rows;
            je["grid_columns"] = e.grid_columns;
            je["log_n"] = e.log_n;
            je["prover_overhead"] = e.prover_overhead;
            je["verifier_overhead"] = e.verifier_overhead;
        }
        j["entries"].push_back(je);
    }
    return j.dump(2);
}

std::string BenchReport::to_table() const {
    std::ostringstream os;
    os << "scheme     prover_ms  verifier_ms  proof_B  rows   cols  log_n  overhead\n";
    for (const auto& e : entries) {
        if (e.skipped) {
            os << e.scheme << "  skipped: " << e.skip_reason << "\n";
            continue;
        }
        char buf[160];
        snprintf(buf, sizeof(buf), "%-9s %10.1f %12.1f %8zu %6zu %5zu %6u %9.2f\n",
                 e.scheme.c_str(), e.prover_ms, e.verifier_ms, e.proof_bytes, e.grid_rows,
                 e.grid_columns, e.log_n, e.prover_overhead);
        os << buf;
    }
    return os.str();
}

int run(int argc, const char* const* argv) {
    CLI::App app{"commit-and-prove SNARK toolkit"};
    app.require_subcommand(1);

    // setup
    auto* setup = app.add_subcommand("setup", "generate public parameters");
    uint32_t k = 12;
    uint64_t max_degree = 0;
    uint64_t seed = 1;
    std::string out_path = "params.bin";
    setup->add_option("--k", k, "log2 of the evaluation domain size");
    setup->add_option("--max-degree", max_degree, "commitment key degree (default 2^k - 1)");
    setup->add_option("--seed", seed, "derivation seed");
    setup->add_option("--out", out_path, "output file");

    // commit
    auto* commit = app.add_subcommand("commit", "commit to a model's weights");
    std::string model_path, params_path = "params.bin", out_prefix = "model";
    commit->add_option("--model", model_path, "model json")->required();
    commit->add_option("--params", params_path, "params file");
    commit->add_option("--out", out_prefix, "output prefix");
    commit->add_option("--seed", seed, "randomness seed");

    // prove
    auto* prove = app.add_subcommand("prove", "prove an inference");
    std::string input_path, scheme_str = "artemis", proof_path = "proof.bin",
                statement_path = "statement.json", secrets_path;
    prove->add_option("--model", model_path, "model json")->required();
    prove->add_option("--input", input_path, "input json")->required();
    prove->add_option("--params", params_path, "params file");
    prove->add_option("--scheme", scheme_str, "none|artemis|strawman|hash");
    prove->add_option("--secrets", secrets_path, "commitment secrets (linked schemes)");
    prove->add_option("--out", proof_path, "proof output");
    prove->add_option("--statement-out", statement_path, "statement output");
    prove->add_option("--seed", seed, "prover randomness seed");
    size_t batch = 1;
    prove->add_option("--batch", batch, "samples per proof (inputs concatenated)");

    // verify
    auto* verify = app.add_subcommand("verify", "verify a proof");
    std::string commit_prefix;
    verify->add_option("--statement", statement_path, "statement json")->required();
    verify->add_option("--params", params_path, "params file");
    verify->add_option("--proof", proof_path, "proof file");
    verify->add_option("--commitments", commit_prefix, "commitment file prefix");

    // bench
    auto* bench = app.add_subcommand("bench", "compare schemes on one model");
    std::string schemes_str = "none,artemis,strawman,hash", report_path = "report.json";
    size_t trials = 3;
    bench->add_option("--model", model_path, "model json")->required();
    bench->add_option("--input", input_path, "input json (random if omitted)");
    bench->add_option("--schemes", schemes_str, "comma-separated scheme list");
    bench->add_option("--trials", trials, "trials per scheme");
    bench->add_option("--seed", seed, "seed");
    bench->add_option("--out", report_path, "report output");
    bench->add_option("--batch", batch, "samples per proof");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        seed = effective_seed(seed);

        if (setup->parsed()) {
            Params p;
            p.seed = seed;
            p.log_n = k;
            if (max_degree == 0) max_degree = (uint64_t(1) << k) - 1;
            ByteWriter w;
            w.u64(seed);
            p.ck = cp::Ck::setup(max_degree, w.take());
            write_file(out_path, params_to_bytes(p));
            std::cout << "wrote " << out_path << " (k=" << k << ", max_degree=" << max_degree
                      << ")\n";
            return 0;
        }

        if (commit->parsed()) {
            auto model = zkml::ModelSpec::from_json([&] {
                Bytes b = read_file(model_path);
                return std::string(b.begin(), b.end());
            }());
            auto params = params_from_bytes(read_file(params_path));
            Rng rng(seed);
            auto set =
                zkml::commit_model(params.ck, model, external_degree_bound(model), rng);
            for (size_t kx = 0; kx < set.count(); kx++)
                write_file(out_prefix + "." + std::to_string(kx) + ".acp",
                           commitment_to_bytes(set.commitments[kx]));
            write_file(out_prefix + ".secrets", secrets_to_bytes(set.rands));
            std::cout << "wrote " << set.count() << " commitment files\n";
            return 0;
        }

        if (prove->parsed()) {
            auto model = zkml::ModelSpec::from_json([&] {
                Bytes b = read_file(model_path);
                return std::string(b.begin(), b.end());
            }());
            auto params = params_from_bytes(read_file(params_path));
            auto input = read_input_json(input_path);
            Scheme scheme = scheme_from_string(scheme_str);
            std::vector<F> layer_rands;
            if (scheme == Scheme::Artemis || scheme == Scheme::Strawman) {
                if (secrets_path.empty()) throw IoError("--secrets required for linked schemes");
                layer_rands = secrets_from_bytes(read_file(secrets_path));
                if (layer_rands.size() != model.layers.size())
                    throw IoError("secrets file does not match model");
            }
            Rng rng(seed);
            auto res = prove_scheme(model, input, scheme, params, layer_rands, rng, batch);
            write_file(proof_path, res.proof);
            write_file(statement_path, statement_to_json(res.statement));
            std::cout << "proof: " << res.proof.size() << " bytes, domain 2^" << res.log_n
                      << "\n";
            return 0;
        }

        if (verify->parsed()) {
            auto st = statement_from_json([&] {
                Bytes b = read_file(statement_path);
                return std::string(b.begin(), b.end());
            }());
            auto params = params_from_bytes(read_file(params_path));
            std::vector<cp::Commitment> commitments;
            if (st.scheme == Scheme::Artemis || st.scheme == Scheme::Strawman) {
                if (commit_prefix.empty())
                    throw IoError("--commitments required for linked schemes");
                for (size_t kx = 0; kx < st.dims.size(); kx++)
                    commitments.push_back(commitment_from_bytes(
                        read_file(commit_prefix + "." + std::to_string(kx) + ".acp")));
            }
            bool ok = verify_scheme(st, params, read_file(proof_path), commitments);
            std::cout << (ok ? "accept" : "reject") << "\n";
            return ok ? 0 : 1;
        }

        if (bench->parsed()) {
            auto model = zkml::ModelSpec::from_json([&] {
                Bytes b = read_file(model_path);
                return std::string(b.begin(), b.end());
            }());
            std::vector<int64_t> input;
            if (!input_path.empty()) {
                input = read_input_json(input_path);
            } else {
                Rng rng(seed ^ 0x62656e63);
                for (size_t i = 0; i < batch * model.layers.front().in_dim; i++)
                    input.push_back(int64_t(rng.next_below(31)) - 15);
            }
            std::vector<Scheme> schemes;
            std::stringstream ss(schemes_str);
            std::string tok;
            while (std::getline(ss, tok, ',')) schemes.push_back(scheme_from_string(tok));
            auto report = run_bench(model, input, schemes, trials, seed, batch);
            write_file(report_path, report.to_json());
            std::cout << report.to_table();
            return 0;
        }
    } catch (const std::exception& e) {
        json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    }
    return 2;
}

} // namespace artemis::cli
