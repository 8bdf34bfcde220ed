#include "learnlab/report_json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace learnlab {

namespace {

Json poly_json(const RationalPoly& p) {
    Json coeffs = Json::array();
    for (const Rat& c : p.coeffs()) coeffs.push_back(rat_str(c));
    return Json{{"coeffs", coeffs}, {"pretty", p.to_string()}};
}

Json dims_json(const Dims& d) {
    return Json{{"m", d.m}, {"n", d.n}, {"p", d.p}, {"q", d.q()}};
}

}  // namespace

Json manifest_json(const RunManifest& m) {
    return Json{{"subcommand", m.subcommand},
                {"config", m.config},
                {"master_seed", m.master_seed},
                {"artifact_version", m.artifact_version},
                {"output_paths", m.output_paths}};
}

Json params_json(const ParamVec& p) {
    return Json{{"v", p.v}, {"s", p.s}, {"w", p.w}, {"t", p.t}};
}

Json pk_report_json(const PkSequence& seq) {
    Json entries = Json::array();
    for (const PkEntry& e : seq.entries) {
        entries.push_back(Json{{"k", e.k},
                               {"poly", poly_json(e.poly)},
                               {"value_at_g0", rat_str(e.value_at_g0)},
                               {"value_at_g0_double", rat_double(e.value_at_g0)}});
    }
    return Json{{"kind", seq.kind},
                {"G", poly_json(seq.G)},
                {"g0", rat_str(seq.g0)},
                {"entries", entries}};
}

Json pk_report_json(const PkSequence& seq, const std::vector<int>& selected, int p) {
    Json j = pk_report_json(seq);
    j["p"] = p;
    j["selected_indices"] = selected;
    return j;
}

Json detprobe_report_json(const DetProbeReport& r) {
    Json attempts = Json::array();
    for (const DetAttempt& a : r.attempts) {
        attempts.push_back(Json{
            {"a", a.a}, {"b", a.b}, {"det", a.det}, {"scaled", a.scaled}, {"pass", a.pass}});
    }
    Json residuals = Json::array();
    for (const IdentityResidual& ir : r.identity_residuals)
        residuals.push_back(Json{{"name", ir.name}, {"residual", ir.residual}});
    return Json{{"kind", r.kind},
                {"p", r.p},
                {"seed", r.seed},
                {"max_attempts", r.max_attempts},
                {"tol", r.tol},
                {"success", r.success},
                {"success_attempt", r.success_attempt},
                {"attempts", attempts},
                {"identity_residuals", residuals}};
}

Json witness_report_json(const WitnessReport& r) {
    return Json{{"dims", dims_json(r.dims)},
                {"f", r.f_kind},
                {"g", r.g_kind},
                {"seed", r.seed},
                {"search_success", r.search_success},
                {"search_attempts", r.search_attempts},
                {"rho", r.rho},
                {"gamma", r.gamma},
                {"scaled_det", r.scaled_det},
                {"sigma", r.sigma},
                {"tangent_rank", r.tangent_rank},
                {"q", r.q},
                {"verdict", r.verdict},
                {"narrative", r.narrative},
                {"footer", r.footer}};
}

Json fdcheck_report_json(const FdCheckReport& r) {
    return Json{{"components_checked", r.components_checked},
                {"failures", r.failures},
                {"worst_abs_diff", r.worst_abs_diff},
                {"worst_location", r.worst_location},
                {"pass", r.pass()}};
}

Json experiment_config_json(const ExperimentConfig& cfg) {
    return Json{{"m", cfg.dims.m},
                {"n", cfg.dims.n},
                {"p", cfg.dims.p},
                {"f", Activation(cfg.f_kind).name()},
                {"g", Activation(cfg.g_kind).name()},
                {"teacher_range", cfg.teacher_range},
                {"input_range", Json::array({cfg.input_lo, cfg.input_hi})},
                {"runs", cfg.runs},
                {"optimizer", Json{{"step", cfg.opt.step},
                                   {"momentum", cfg.opt.momentum},
                                   {"max_iterations", cfg.opt.max_iterations},
                                   {"grad_tolerance", cfg.opt.grad_tolerance}}},
                {"master_seed", cfg.master_seed},
                {"overdetermined", cfg.overdetermined}};
}

Json experiment_report_json(const ExperimentReport& r) {
    Json runs = Json::array();
    for (const RunRecord& rec : r.runs) {
        runs.push_back(Json{{"seed", rec.seed},
                            {"init", params_json(rec.init)},
                            {"final_error", rec.final_error},
                            {"iterations", rec.iterations},
                            {"grad_norm", rec.grad_norm},
                            {"diverged", rec.diverged}});
    }
    return Json{{"config", experiment_config_json(r.cfg)},
                {"teacher", params_json(r.teacher)},
                {"gamma", r.gamma},
                {"zeta", r.zeta},
                {"teacher_residual", r.teacher_residual},
                {"runs", runs},
                {"summary", Json{{"min_error", r.min_error},
                                 {"median_error", r.median_error},
                                 {"max_error", r.max_error},
                                 {"error_threshold", r.error_threshold},
                                 {"fraction_above_threshold", r.fraction_above_threshold},
                                 {"diverged_runs", r.diverged_runs}}}};
}

std::string experiment_csv(const ExperimentReport& r) {
    std::ostringstream os;
    os << "seed,final_error,iterations,grad_norm,diverged\n";
    os.precision(17);
    for (const RunRecord& rec : r.runs) {
        os << rec.seed << ',' << rec.final_error << ',' << rec.iterations << ',' << rec.grad_norm
           << ',' << (rec.diverged ? 1 : 0) << '\n';
    }
    return os.str();
}

namespace {

void check_keys(const Json& j, std::initializer_list<const char*> allowed,
                const char* where) {
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* k : allowed)
            if (item.key() == k) {
                ok = true;
                break;
            }
        if (!ok) throw std::invalid_argument(std::string("unknown key \"") + item.key() + "\" in " + where);
    }
}

}  // namespace

ExperimentConfig experiment_config_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    check_keys(j,
               {"m", "n", "p", "f", "g", "teacher_range", "input_range", "runs", "optimizer",
                "master_seed", "overdetermined"},
               "config");

    ExperimentConfig cfg;
    if (j.contains("m")) cfg.dims.m = j.at("m").get<int>();
    if (j.contains("n")) cfg.dims.n = j.at("n").get<int>();
    if (j.contains("p")) cfg.dims.p = j.at("p").get<int>();
    if (j.contains("f")) cfg.f_kind = Activation::from_name(j.at("f").get<std::string>()).kind();
    if (j.contains("g")) cfg.g_kind = Activation::from_name(j.at("g").get<std::string>()).kind();
    if (j.contains("teacher_range")) cfg.teacher_range = j.at("teacher_range").get<double>();
    if (j.contains("input_range")) {
        const Json& r = j.at("input_range");
        if (!r.is_array() || r.size() != 2)
            throw std::invalid_argument("input_range must be [lo, hi]");
        cfg.input_lo = r[0].get<double>();
        cfg.input_hi = r[1].get<double>();
    }
    if (j.contains("runs")) cfg.runs = j.at("runs").get<int>();
    if (j.contains("optimizer")) {
        const Json& o = j.at("optimizer");
        if (!o.is_object()) throw std::invalid_argument("optimizer must be a JSON object");
        check_keys(o, {"step", "momentum", "max_iterations", "grad_tolerance"}, "optimizer");
        if (o.contains("step")) cfg.opt.step = o.at("step").get<double>();
        if (o.contains("momentum")) cfg.opt.momentum = o.at("momentum").get<double>();
        if (o.contains("max_iterations")) cfg.opt.max_iterations = o.at("max_iterations").get<int>();
        if (o.contains("grad_tolerance")) cfg.opt.grad_tolerance = o.at("grad_tolerance").get<double>();
    }
    if (j.contains("master_seed")) cfg.master_seed = j.at("master_seed").get<uint64_t>();
    if (j.contains("overdetermined")) cfg.overdetermined = j.at("overdetermined").get<bool>();
    cfg.validate();
    return cfg;
}

void atomic_write_text(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << text;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

}  // namespace learnlab
