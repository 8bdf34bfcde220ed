#include "learnlab/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "learnlab/rng.hpp"

namespace learnlab {

void OptimizerSettings::validate() const {
    if (!(step >= 0.0) || !std::isfinite(step)) throw std::invalid_argument("step must be finite and >= 0");
    if (!(momentum >= 0.0 && momentum < 1.0)) throw std::invalid_argument("momentum must be in [0, 1)");
    if (max_iterations < 0) throw std::invalid_argument("max_iterations must be >= 0");
    if (!(grad_tolerance >= 0.0)) throw std::invalid_argument("grad_tolerance must be >= 0");
}

void ExperimentConfig::validate() const {
    dims.validate();
    opt.validate();
    if (!(teacher_range > 0.0)) throw std::invalid_argument("teacher_range must be > 0");
    if (!(input_lo < input_hi)) throw std::invalid_argument("input range must be nonempty");
    if (runs < 1) throw std::invalid_argument("runs must be >= 1");
    if (overdetermined && dims.p <= dims.q())
        throw std::invalid_argument("overdetermined mode requires p > q = m(n+2)+1");
}

namespace {

double l2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

ParamVec sample_params(Rng& rng, const Dims& dims, double range) {
    std::vector<double> flat = rng.uniform_vec(static_cast<size_t>(dims.q()), -range, range);
    return ParamVec::from_flat(dims, flat);
}

}  // namespace

GdResult momentum_gd(const ValGrad& valgrad, std::vector<double> x0,
                     const OptimizerSettings& settings) {
    settings.validate();
    GdResult res;
    res.x = std::move(x0);
    std::vector<double> grad(res.x.size(), 0.0);
    std::vector<double> velocity(res.x.size(), 0.0);

    int iter = 0;
    for (;; ++iter) {
        double loss = valgrad(res.x, grad);
        res.trace.push_back(loss);
        res.grad_norm = l2(grad);
        if (!std::isfinite(loss) || !std::isfinite(res.grad_norm)) {
            res.diverged = true;
            break;
        }
        if (res.grad_norm < settings.grad_tolerance || iter >= settings.max_iterations) break;
        for (size_t j = 0; j < res.x.size(); ++j) {
            velocity[j] = settings.momentum * velocity[j] - settings.step * grad[j];
            res.x[j] += velocity[j];
        }
    }
    res.iterations = iter;
    return res;
}

Instance generate_instance(const ExperimentConfig& cfg) {
    cfg.validate();
    Rng rng(derive_seed(cfg.master_seed, 0));
    ParamVec teacher = sample_params(rng, cfg.dims, cfg.teacher_range);
    std::vector<std::vector<double>> gamma =
        sample_distinct_points(rng, static_cast<size_t>(cfg.dims.p),
                               static_cast<size_t>(cfg.dims.n), cfg.input_lo, cfg.input_hi);
    Activation f(cfg.f_kind), g(cfg.g_kind);
    std::vector<double> zeta(gamma.size());
    for (size_t i = 0; i < gamma.size(); ++i) zeta[i] = forward(cfg.dims, f, g, teacher, gamma[i]);
    return {std::move(teacher), TrainingSet(std::move(gamma), std::move(zeta))};
}

TrainResult train_student_from(const ExperimentConfig& cfg, const TrainingSet& data,
                               const ParamVec& init) {
    init.check_shapes(cfg.dims);
    Activation f(cfg.f_kind), g(cfg.g_kind);
    const Dims dims = cfg.dims;
    ValGrad valgrad = [&](const std::vector<double>& x, std::vector<double>& grad) {
        ParamVec params = ParamVec::from_flat(dims, x);
        grad = error_gradient(dims, f, g, params, data);
        return quadratic_error(dims, f, g, params, data);
    };

    GdResult gd = momentum_gd(valgrad, init.flatten(), cfg.opt);

    TrainResult res;
    res.params = ParamVec::from_flat(dims, gd.x);
    res.init = init;
    res.final_error = gd.trace.empty() ? 0.0 : gd.trace.back();
    res.iterations = gd.iterations;
    res.grad_norm = gd.grad_norm;
    res.diverged = gd.diverged;
    res.trace = std::move(gd.trace);
    return res;
}

TrainResult train_student(const ExperimentConfig& cfg, const TrainingSet& data, uint64_t run_seed) {
    cfg.validate();
    Rng rng(run_seed);
    ParamVec init = sample_params(rng, cfg.dims, cfg.teacher_range);
    return train_student_from(cfg, data, init);
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    Instance inst = generate_instance(cfg);
    Activation f(cfg.f_kind), g(cfg.g_kind);

    ExperimentReport rep;
    rep.cfg = cfg;
    rep.teacher = inst.teacher;
    rep.gamma = inst.data.gamma;
    rep.zeta = inst.data.zeta;
    rep.teacher_residual = quadratic_error(cfg.dims, f, g, inst.teacher, inst.data);

    std::vector<double> finals;
    int above = 0;
    for (int i = 0; i < cfg.runs; ++i) {
        uint64_t run_seed = derive_seed(cfg.master_seed, static_cast<uint64_t>(i) + 1);
        TrainResult tr = train_student(cfg, inst.data, run_seed);
        RunRecord rec;
        rec.seed = run_seed;
        rec.init = tr.init;
        rec.final_error = tr.final_error;
        rec.iterations = tr.iterations;
        rec.grad_norm = tr.grad_norm;
        rec.diverged = tr.diverged;
        rep.runs.push_back(std::move(rec));

        if (tr.diverged) {
            ++rep.diverged_runs;
            ++above;
        } else {
            finals.push_back(tr.final_error);
            if (tr.final_error > rep.error_threshold) ++above;
        }
    }
    rep.fraction_above_threshold = static_cast<double>(above) / cfg.runs;

    if (!finals.empty()) {
        std::sort(finals.begin(), finals.end());
        rep.min_error = finals.front();
        rep.max_error = finals.back();
        size_t mid = finals.size() / 2;
        rep.median_error =
            finals.size() % 2 == 1 ? finals[mid] : 0.5 * (finals[mid - 1] + finals[mid]);
    }
    return rep;
}

PiMap make_backprop_learner(const ExperimentConfig& cfg,
                            const std::vector<std::vector<double>>& gamma) {
    cfg.validate();
    Rng rng(derive_seed(cfg.master_seed, 1));
    ParamVec init = sample_params(rng, cfg.dims, cfg.teacher_range);
    return [cfg, gamma, init](const std::vector<double>& zeta) {
        TrainingSet data(gamma, zeta);
        return train_student_from(cfg, data, init).params;
    };
}

}  // namespace learnlab
