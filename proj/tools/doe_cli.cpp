#include <CLI11.hpp>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "doe/harness.hpp"

namespace {

struct CommonOptions {
    std::string config_file;
    std::string seed;
    std::string replicates;
    std::string out_dir;
    std::string criteria;
    std::string restriction;
    bool paper_scale = false;
    std::string threads;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_file, "JSON config/manifest file");
    cmd->add_option("--seed", opts.seed, "master seed (u64)");
    cmd->add_option("--replicates", opts.replicates, "replicate count");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--criteria", opts.criteria, "comma-separated criterion list");
    cmd->add_option("--restriction", opts.restriction, "free|lh|mixed");
    cmd->add_flag("--paper-scale", opts.paper_scale, "restore the original study budgets");
    cmd->add_option("--threads", opts.threads, "worker threads (0 = hardware)");
}

doe::ExperimentConfig build_config(doe::StudyId study, const CommonOptions& opts) {
    doe::ExperimentConfig cfg;
    if (!opts.config_file.empty()) {
        std::ifstream in(opts.config_file);
        if (!in) throw std::invalid_argument("cannot open config file " + opts.config_file);
        nlohmann::json j;
        in >> j;
        cfg = doe::ExperimentConfig::from_json(j);
    }
    cfg.study = study;
    if (!opts.seed.empty()) cfg.seed = std::stoull(opts.seed);
    if (!opts.replicates.empty()) cfg.replicates = std::stoi(opts.replicates);
    if (!opts.out_dir.empty()) cfg.out_dir = opts.out_dir;
    if (!opts.threads.empty()) cfg.threads = std::stoi(opts.threads);
    if (!opts.criteria.empty()) {
        cfg.criteria.clear();
        std::string token;
        std::stringstream ss(opts.criteria);
        while (std::getline(ss, token, ',')) {
            const auto id = doe::parse_criterion(token);
            if (!id) throw std::invalid_argument("unknown criterion: " + token);
            cfg.criteria.push_back(*id);
        }
    }
    if (!opts.restriction.empty()) {
        const auto r = doe::parse_restriction(opts.restriction);
        if (!r) throw std::invalid_argument("unknown restriction: " + opts.restriction);
        cfg.restrictions = {*r};
    }
    if (opts.paper_scale) cfg.apply_paper_scale();
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal design-of-experiments generation and sensitivity benchmarking"};
    app.require_subcommand(1);

    struct SubCmd {
        doe::StudyId study;
        CLI::App* cmd;
        CommonOptions opts;
    };
    std::vector<SubCmd> subs;
    const std::pair<doe::StudyId, const char*> entries[] = {
        {doe::StudyId::Tournament, "mutual cross-evaluation of optimal designs"},
        {doe::StudyId::Projection, "redundant points of projected optimal designs"},
        {doe::StudyId::Sequential, "batch extension of optimal designs"},
        {doe::StudyId::SaAnalytical, "sensitivity errors on the analytical suite"},
        {doe::StudyId::SaTruss, "sensitivity errors on the truss benchmarks"},
        {doe::StudyId::Landscape, "criterion value scans over the grid"},
    };
    for (const auto& [study, help] : entries) {
        SubCmd sub;
        sub.study = study;
        sub.cmd = app.add_subcommand(std::string(doe::to_string(study)), help);
        subs.push_back(std::move(sub));
    }
    for (auto& sub : subs) add_common_flags(sub.cmd, sub.opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    for (const auto& sub : subs) {
        if (!sub.cmd->parsed()) continue;
        doe::ExperimentConfig cfg;
        try {
            cfg = build_config(sub.study, sub.opts);
        } catch (const std::exception& e) {
            std::cerr << "config error: " << e.what() << "\n";
            return 2;
        }
        try {
            doe::run_study(cfg);
        } catch (const std::exception& e) {
            std::cerr << "runtime error: " << e.what() << "\n";
            return 3;
        }
        std::cout << "study " << doe::to_string(sub.study) << " written to " << cfg.out_dir
                  << "\n";
        return 0;
    }
    return 2;
}
