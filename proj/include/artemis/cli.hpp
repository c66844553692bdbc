#ifndef ARTEMIS_CLI_HPP
#define ARTEMIS_CLI_HPP

#include <string>
#include <vector>

#include "artemis/inference_circuit.hpp"

namespace artemis::cli {

enum class Scheme { None, Artemis, Strawman, Hash };

Scheme scheme_from_string(const std::string& s);
std::string scheme_name(Scheme s);

struct BenchEntry {
    std::string scheme;
    bool skipped = false;
    std::string skip_reason;
    size_t trials = 0;
    double prover_ms = 0;
    double verifier_ms = 0;
    size_t proof_bytes = 0;
    size_t grid_rows = 0;
    size_t grid_columns = 0;
    uint32_t log_n = 0;
    double prover_overhead = 0; // vs the no-commitment scheme
    double verifier_overhead = 0;
};

struct BenchReport {
    uint32_t schema_version = 1;
    size_t trials = 0;
    uint64_t seed = 0;
    size_t batch = 1;
    size_t total_weights = 0;
    std::vector<BenchEntry> entries;

    std::string to_json() const;
    std::string to_table() const;
};

BenchReport run_bench(const zkml::ModelSpec& model, const std::vector<int64_t>& input,
                      const std::vector<Scheme>& schemes, size_t trials, uint64_t seed,
                      size_t batch = 1);

int run(int argc, const char* const* argv);

} // namespace artemis::cli

#endif
