#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "learnlab/detprobe.hpp"
#include "learnlab/experiment.hpp"
#include "learnlab/fdcheck.hpp"
#include "learnlab/pk_recursion.hpp"
#include "learnlab/witness.hpp"

namespace learnlab {

using Json = nlohmann::ordered_json;

// Embedded in every report so a run can be replayed bit-exactly from the
// report alone.
struct RunManifest {
    std::string subcommand;
    Json config;
    uint64_t master_seed = 0;
    std::string artifact_version = "0.1.0";
    std::vector<std::string> output_paths;
};

Json manifest_json(const RunManifest& m);

Json params_json(const ParamVec& p);
Json pk_report_json(const PkSequence& seq);
Json pk_report_json(const PkSequence& seq, const std::vector<int>& selected, int p);
Json detprobe_report_json(const DetProbeReport& r);
Json witness_report_json(const WitnessReport& r);
Json fdcheck_report_json(const FdCheckReport& r);
Json experiment_config_json(const ExperimentConfig& cfg);
Json experiment_report_json(const ExperimentReport& r);

// One row per run: seed, final_error, iterations, grad_norm, diverged.
std::string experiment_csv(const ExperimentReport& r);

// Strict parse: unknown keys are errors, absent keys take defaults.
ExperimentConfig experiment_config_from_json(const Json& j);

// Write-temp-then-rename in the target directory.
void atomic_write_text(const std::string& path, const std::string& text);

}  // namespace learnlab
