#include <cstdint>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "learnlab/detprobe.hpp"
#include "learnlab/experiment.hpp"
#include "learnlab/fdcheck.hpp"
#include "learnlab/pk_recursion.hpp"
#include "learnlab/report_json.hpp"
#include "learnlab/rng.hpp"
#include "learnlab/witness.hpp"

namespace {

using namespace learnlab;

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 2;
constexpr int kExitSearchFailed = 3;
constexpr int kExitUsage = 64;
constexpr int kExitUnsupported = 65;

uint64_t auto_seed() {
    std::random_device rd;
    return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

void emit(const Json& report, const std::string& out_path) {
    std::string text = report.dump(2);
    text += '\n';
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        atomic_write_text(out_path, text);
        std::fprintf(stderr, "report written to %s\n", out_path.c_str());
    }
}

std::vector<std::string> out_paths(const std::string& out) {
    if (out.empty()) return {"(stdout)"};
    return {out};
}

struct GradCheckArgs {
    int m = 0, n = 0, p = 0;
    std::string activation;
    uint64_t seed = 0;
    bool seed_set = false;
    std::string out;
};

int run_grad_check(const GradCheckArgs& a) {
    Dims dims{a.m, a.n, a.p};
    Activation f = Activation::from_name(a.activation);
    Activation g = f;

    Rng rng(a.seed);
    ParamVec params = ParamVec::from_flat(
        dims, rng.uniform_vec(static_cast<size_t>(dims.q()), -1.0, 1.0));
    auto gamma = sample_distinct_points(rng, static_cast<size_t>(a.p),
                                        static_cast<size_t>(a.n), -2.0, 2.0);
    std::vector<double> zeta = rng.uniform_vec(static_cast<size_t>(a.p), -1.0, 1.0);
    std::vector<double> rho = rng.uniform_vec(static_cast<size_t>(a.n), -2.0, 2.0);
    TrainingSet data(gamma, zeta);

    FdCheckReport r_grad = check_error_gradient(dims, f, g, params, data);
    FdCheckReport r_jac = check_theta_jacobian(dims, f, g, gamma, params);
    FdCheckReport r_tan = check_beta_tangent(dims, f, g, rho, gamma);
    bool pass = r_grad.pass() && r_jac.pass() && r_tan.pass();

    RunManifest man;
    man.subcommand = "grad-check";
    man.config = Json{{"m", a.m}, {"n", a.n}, {"p", a.p}, {"activation", a.activation},
                      {"seed", a.seed}};
    man.master_seed = a.seed;
    man.output_paths = out_paths(a.out);

    Json report{{"manifest", manifest_json(man)},
                {"dims", Json{{"m", a.m}, {"n", a.n}, {"p", a.p}, {"q", dims.q()}}},
                {"activation", a.activation},
                {"seed", a.seed},
                {"error_gradient", fdcheck_report_json(r_grad)},
                {"theta_jacobian", fdcheck_report_json(r_jac)},
                {"beta_tangent", fdcheck_report_json(r_tan)},
                {"pass", pass}};
    emit(report, a.out);
    return pass ? kExitOk : kExitTolerance;
}

struct PkArgs {
    std::string activation;
    int kmax = kPkDefaultMax;
    int p = 0;
    std::string out;
};

int run_pk(const PkArgs& a) {
    Activation act = Activation::from_name(a.activation);
    auto data = act.algdiff();
    if (!data) {
        std::fprintf(stderr, "%s has no polynomial algebro-differential data\n", act.name());
        return kExitUnsupported;
    }
    PkSequence seq = pk_sequence(data->G, data->g0, a.kmax, act.name());
    Json body = a.p > 0
                    ? pk_report_json(seq, select_indices(data->G, data->g0, a.p), a.p)
                    : pk_report_json(seq);

    RunManifest man;
    man.subcommand = "pk";
    man.config = Json{{"activation", a.activation}, {"kmax", a.kmax}, {"p", a.p}};
    man.output_paths = out_paths(a.out);

    Json report{{"manifest", manifest_json(man)}};
    report.update(body);
    emit(report, a.out);
    return kExitOk;
}

struct DetProbeArgs {
    std::string activation;
    int p = 0;
    uint64_t seed = 0;
    int max_attempts = 100;
    double tol = 1e-12;
    std::string out;
};

int run_det_probe(const DetProbeArgs& a) {
    Activation g = Activation::from_name(a.activation);
    DetProbeReport rep = probe_nonvanishing(g, a.p, a.seed, a.max_attempts, a.tol);

    RunManifest man;
    man.subcommand = "det-probe";
    man.config = Json{{"activation", a.activation}, {"p", a.p}, {"seed", a.seed},
                      {"max_attempts", a.max_attempts}, {"tol", a.tol}};
    man.master_seed = a.seed;
    man.output_paths = out_paths(a.out);

    Json report{{"manifest", manifest_json(man)}};
    report.update(detprobe_report_json(rep));
    emit(report, a.out);
    return rep.success ? kExitOk : kExitSearchFailed;
}

struct WitnessArgs {
    int m = 0, n = 0, p = 0;
    std::string activation = "tanh";
    std::string f_name, g_name;
    uint64_t seed = 0;
    int max_attempts = 100;
    double tol = 1e-12;
    std::string out;
};

int run_witness(const WitnessArgs& a) {
    std::string fn = a.f_name.empty() ? a.activation : a.f_name;
    std::string gn = a.g_name.empty() ? a.activation : a.g_name;
    Activation f = Activation::from_name(fn);
    Activation g = Activation::from_name(gn);
    Dims dims{a.m, a.n, a.p};

    WitnessReport rep = unfeasibility_witness(f, g, dims, a.seed, a.max_attempts, a.tol);

    RunManifest man;
    man.subcommand = "witness";
    man.config = Json{{"m", a.m}, {"n", a.n}, {"p", a.p}, {"f", fn}, {"g", gn},
                      {"seed", a.seed}, {"max_attempts", a.max_attempts}, {"tol", a.tol}};
    man.master_seed = a.seed;
    man.output_paths = out_paths(a.out);

    Json report{{"manifest", manifest_json(man)}};
    report.update(witness_report_json(rep));
    emit(report, a.out);

    if (!rep.search_success || rep.verdict == "rank-deficient-family") return kExitSearchFailed;
    return kExitOk;
}

struct TrainArgs {
    std::string config_path;
    std::string out;
    std::string csv;
};

int run_train(const TrainArgs& a) {
    Json cfg_json = Json::object();
    if (!a.config_path.empty()) {
        std::ifstream in(a.config_path);
        if (!in) throw std::invalid_argument("cannot open config file " + a.config_path);
        cfg_json = Json::parse(in);
    }
    ExperimentConfig cfg = experiment_config_from_json(cfg_json);
    ExperimentReport rep = run_experiment(cfg);

    RunManifest man;
    man.subcommand = "train";
    man.config = experiment_config_json(cfg);
    man.master_seed = cfg.master_seed;
    man.output_paths = out_paths(a.out);
    if (!a.csv.empty()) man.output_paths.push_back(a.csv);

    Json report{{"manifest", manifest_json(man)}};
    report.update(experiment_report_json(rep));
    emit(report, a.out);
    if (!a.csv.empty()) {
        atomic_write_text(a.csv, experiment_csv(rep));
        std::fprintf(stderr, "csv written to %s\n", a.csv.c_str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification laboratory for three-layer network learnability probes"};
    app.set_version_flag("--version", "0.1.0");
    app.require_subcommand(1);

    const std::vector<std::string> kActs{"logistic", "tanh", "sin"};
    const auto act_check = CLI::IsMember(kActs);
    const auto pos_check = CLI::Range(1, 1 << 20);

    GradCheckArgs gc;
    CLI::App* gc_cmd = app.add_subcommand("grad-check", "Finite-difference gradient and Jacobian checks");
    gc_cmd->add_option("--m", gc.m, "hidden units")->required()->check(pos_check);
    gc_cmd->add_option("--n", gc.n, "input dimension")->required()->check(pos_check);
    gc_cmd->add_option("--p", gc.p, "training points")->required()->check(pos_check);
    gc_cmd->add_option("--activation", gc.activation, "activation for f and g")->required()->check(act_check);
    CLI::Option* gc_seed = gc_cmd->add_option("--seed", gc.seed, "RNG seed (auto if absent)");
    gc_cmd->add_option("--out", gc.out, "report path (stdout if absent)");

    PkArgs pk;
    CLI::App* pk_cmd = app.add_subcommand("pk", "Polynomial recursion P_0 = T, P_{k+1} = P_k' G");
    pk_cmd->add_option("--activation", pk.activation, "activation")->required()->check(act_check);
    pk_cmd->add_option("--kmax", pk.kmax, "last index")->check(CLI::Range(0, kPkMaxCap));
    pk_cmd->add_option("--p", pk.p, "select the first p nonvanishing indices")->check(pos_check);
    pk_cmd->add_option("--out", pk.out, "report path (stdout if absent)");

    DetProbeArgs dp;
    CLI::App* dp_cmd = app.add_subcommand("det-probe", "Determinant nonvanishing probe");
    dp_cmd->add_option("--activation", dp.activation, "activation")->required()->check(act_check);
    dp_cmd->add_option("--p", dp.p, "matrix size")->required()->check(pos_check);
    CLI::Option* dp_seed = dp_cmd->add_option("--seed", dp.seed, "RNG seed (auto if absent)");
    dp_cmd->add_option("--max-attempts", dp.max_attempts, "attempt budget")->check(pos_check);
    dp_cmd->add_option("--tol", dp.tol, "scaled-determinant threshold");
    dp_cmd->add_option("--out", dp.out, "report path (stdout if absent)");

    WitnessArgs wt;
    CLI::App* wt_cmd = app.add_subcommand("witness", "Rank-contradiction witness");
    wt_cmd->add_option("--m", wt.m, "hidden units")->required()->check(pos_check);
    wt_cmd->add_option("--n", wt.n, "input dimension")->required()->check(pos_check);
    wt_cmd->add_option("--p", wt.p, "tangent count")->required()->check(pos_check);
    wt_cmd->add_option("--activation", wt.activation, "activation for f and g")->check(act_check);
    wt_cmd->add_option("--f", wt.f_name, "output activation override")->check(act_check);
    wt_cmd->add_option("--g", wt.g_name, "hidden activation override")->check(act_check);
    CLI::Option* wt_seed = wt_cmd->add_option("--seed", wt.seed, "RNG seed (auto if absent)");
    wt_cmd->add_option("--max-attempts", wt.max_attempts, "attempt budget")->check(pos_check);
    wt_cmd->add_option("--tol", wt.tol, "scaled-determinant threshold");
    wt_cmd->add_option("--out", wt.out, "report path (stdout if absent)");

    TrainArgs tr;
    CLI::App* tr_cmd = app.add_subcommand("train", "Teacher-student training experiment");
    tr_cmd->add_option("--config", tr.config_path, "JSON config (defaults if absent)");
    tr_cmd->add_option("--out", tr.out, "report path (stdout if absent)");
    tr_cmd->add_option("--csv", tr.csv, "per-run CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    auto fill_seed = [](CLI::Option* opt, uint64_t& seed) {
        if (opt->count() == 0) {
            seed = auto_seed();
            std::fprintf(stderr, "seed %llu (auto-generated)\n",
                         static_cast<unsigned long long>(seed));
        }
    };

    try {
        if (gc_cmd->parsed()) {
            fill_seed(gc_seed, gc.seed);
            return run_grad_check(gc);
        }
        if (pk_cmd->parsed()) return run_pk(pk);
        if (dp_cmd->parsed()) {
            fill_seed(dp_seed, dp.seed);
            return run_det_probe(dp);
        }
        if (wt_cmd->parsed()) {
            fill_seed(wt_seed, wt.seed);
            return run_witness(wt);
        }
        if (tr_cmd->parsed()) return run_train(tr);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
