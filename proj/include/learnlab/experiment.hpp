#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "learnlab/activation.hpp"
#include "learnlab/network.hpp"
#include "learnlab/witness.hpp"

namespace learnlab {

struct OptimizerSettings {
    double step = 0.05;
    double momentum = 0.9;
    int max_iterations = 20000;
    double grad_tolerance = 1e-10;

    void validate() const;
};

struct ExperimentConfig {
    Dims dims{2, 2, 50};
    ActKind f_kind = ActKind::Tanh;
    ActKind g_kind = ActKind::Tanh;
    double teacher_range = 1.0;
    double input_lo = -2.0;
    double input_hi = 2.0;
    int runs = 20;
    OptimizerSettings opt;
    uint64_t master_seed = 1;
    bool overdetermined = true;

    // overdetermined mode additionally requires p > q.
    void validate() const;
};

// Full-batch gradient descent with classical momentum:
// velocity <- momentum * velocity - step * grad; x <- x + velocity.
// Stops on gradient norm < tolerance or iteration cap; non-finite loss or
// gradient marks the result diverged instead of throwing.
using ValGrad = std::function<double(const std::vector<double>&, std::vector<double>&)>;

struct GdResult {
    std::vector<double> x;
    int iterations = 0;
    double grad_norm = 0.0;
    bool diverged = false;
    std::vector<double> trace;
};

GdResult momentum_gd(const ValGrad& valgrad, std::vector<double> x0,
                     const OptimizerSettings& settings);

struct Instance {
    ParamVec teacher;
    TrainingSet data;
};

// Teacher uniform in [-teacher_range, teacher_range]^q, gamma sampled with
// 1e-6 distinctness rejection, zeta = forward(teacher, gamma_i) with no noise.
Instance generate_instance(const ExperimentConfig& cfg);

struct TrainResult {
    ParamVec params;
    ParamVec init;
    double final_error = 0.0;
    int iterations = 0;
    double grad_norm = 0.0;
    bool diverged = false;
    std::vector<double> trace;
};

TrainResult train_student_from(const ExperimentConfig& cfg, const TrainingSet& data,
                               const ParamVec& init);

// Random initialization in the teacher range drawn from run_seed, then
// train_student_from. Deterministic given (cfg, data, run_seed).
TrainResult train_student(const ExperimentConfig& cfg, const TrainingSet& data, uint64_t run_seed);

struct RunRecord {
    uint64_t seed = 0;
    ParamVec init;
    double final_error = 0.0;
    int iterations = 0;
    double grad_norm = 0.0;
    bool diverged = false;
};

struct ExperimentReport {
    ExperimentConfig cfg;
    ParamVec teacher;
    std::vector<std::vector<double>> gamma;
    std::vector<double> zeta;
    double teacher_residual = 0.0;
    std::vector<RunRecord> runs;
    double min_error = 0.0;
    double median_error = 0.0;
    double max_error = 0.0;
    double error_threshold = 1e-2;
    double fraction_above_threshold = 0.0;
    int diverged_runs = 0;
};

// N student runs from seeds derive_seed(master, run_index + 1); instance from
// derive_seed(master, 0). Diverged runs count as above-threshold and are
// excluded from min/median/max.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

// The candidate learner the witness probes: backprop on TrainingSet(gamma, zeta)
// from one fixed initialization drawn when the learner is built.
PiMap make_backprop_learner(const ExperimentConfig& cfg,
                            const std::vector<std::vector<double>>& gamma);

}  // namespace learnlab
