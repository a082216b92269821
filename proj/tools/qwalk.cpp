// qwalk command-line front end: run a single walk or sweep a list of
// rotation angles, writing distribution/entropy/sigma data and SVG plots.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qwalk/reports.hpp"

namespace {

using qwalk::Angle;
using qwalk::RunSpec;

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

RunSpec::Initial parse_initial(const std::string& s)
{
    if (s == "up") return RunSpec::Initial::Up;
    if (s == "down") return RunSpec::Initial::Down;
    if (s == "bell1") return RunSpec::Initial::Bell1;
    if (s == "bell2") return RunSpec::Initial::Bell2;
    throw std::invalid_argument("--initial: unknown value \"" + s +
                                "\" (expected up, down, bell1, bell2)");
}

void apply_emit_list(const std::string& list, RunSpec& spec)
{
    spec.emit_dist = spec.emit_entropy = spec.emit_sigma = spec.emit_plot = false;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "dist") spec.emit_dist = true;
        else if (item == "entropy") spec.emit_entropy = true;
        else if (item == "sigma") spec.emit_sigma = true;
        else if (item == "plot") spec.emit_plot = true;
        else
            throw std::invalid_argument("--emit: unknown item \"" + item +
                                        "\" (expected dist, entropy, sigma, plot)");
    }
}

struct CliOptions {
    std::string family = "single";
    std::string mode = "pdc";
    std::string theta;
    std::string initial;
    std::string eta = "pi/4";
    std::string out;
    std::string format = "csv";
    std::string emit;
    std::string angles;  // sweep only
    int steps = 30;
    bool compare_pic = false;
};

RunSpec build_spec(const CliOptions& opt, bool needs_theta)
{
    RunSpec spec;
    if (opt.family == "single") spec.family = RunSpec::Family::Single;
    else if (opt.family == "entangled") spec.family = RunSpec::Family::Entangled;
    else throw std::invalid_argument("--family: expected single or entangled");

    if (opt.mode == "pdc") spec.mode = qwalk::CoinMode::PositionDependent;
    else if (opt.mode == "pic") spec.mode = qwalk::CoinMode::PositionIndependent;
    else throw std::invalid_argument("--mode: expected pdc or pic");

    if (needs_theta) {
        if (opt.theta.empty()) throw std::invalid_argument("--theta: required");
        try {
            spec.theta = qwalk::parse_angle(opt.theta);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string("--theta: ") + e.what());
        }
    }
    if (!opt.initial.empty()) {
        spec.initial = parse_initial(opt.initial);
    } else {
        spec.initial = spec.family == RunSpec::Family::Single ? RunSpec::Initial::Up
                                                              : RunSpec::Initial::Bell1;
    }
    try {
        spec.eta = qwalk::parse_angle(opt.eta);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("--eta: ") + e.what());
    }
    spec.steps = opt.steps;
    spec.compare_pic = opt.compare_pic;
    spec.output_dir = opt.out;

    if (opt.format == "csv") spec.format = RunSpec::Format::Csv;
    else if (opt.format == "json") spec.format = RunSpec::Format::Json;
    else throw std::invalid_argument("--format: expected csv or json");

    if (!opt.emit.empty()) apply_emit_list(opt.emit, spec);
    return spec;
}

std::vector<Angle> parse_angle_list(const std::string& list)
{
    std::vector<Angle> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(qwalk::parse_angle(item));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string("--angles: ") + e.what());
        }
    }
    if (out.empty()) throw std::invalid_argument("--angles: at least one angle required");
    return out;
}

void add_common_flags(CLI::App* cmd, CliOptions& opt)
{
    cmd->add_option("--family", opt.family, "Walk family: single or entangled");
    cmd->add_option("--mode", opt.mode, "Coin mode: pdc (position-dependent) or pic");
    cmd->add_option("--initial", opt.initial,
                    "Initial state: up, down (single) or bell1, bell2 (entangled)");
    cmd->add_option("--steps", opt.steps, "Number of walk steps");
    cmd->add_option("--eta", opt.eta, "Entanglement angle for bell states, e.g. pi/4");
    cmd->add_option("--out", opt.out, "Output directory")->required();
    cmd->add_option("--format", opt.format, "Data file format: csv or json");
    cmd->add_option("--emit", opt.emit, "Comma list of outputs: dist,entropy,sigma,plot");
    cmd->add_flag("--compare-pic", opt.compare_pic,
                  "Overlay the position-independent walk in the plots");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"One-dimensional quantum walks with position-dependent coins"};
    app.require_subcommand(1);

    CliOptions run_opt;
    CLI::App* run = app.add_subcommand("run", "Run one walk and write its data files");
    add_common_flags(run, run_opt);
    run->add_option("--theta", run_opt.theta, "Rotation angle, e.g. 0, pi/4, 7pi/45")
        ->required();

    CliOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Run several angles into per-angle subdirectories plus summary.csv");
    add_common_flags(sweep, sweep_opt);
    sweep->add_option("--angles", sweep_opt.angles, "Comma list of angles, e.g. pi/6,pi/4")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run->parsed()) {
            const RunSpec spec = build_spec(run_opt, true);
            const qwalk::RunResult result = qwalk::cmd_run(spec);
            std::cout << qwalk::walk_class_label(result.walk_class) << "\n";
        } else {
            const std::vector<Angle> angles = parse_angle_list(sweep_opt.angles);
            const RunSpec base = build_spec(sweep_opt, false);
            qwalk::cmd_sweep(angles, base);
            for (const Angle& a : angles)
                std::cout << a.str() << ": "
                          << qwalk::walk_class_label(qwalk::classify(a)) << "\n";
        }
    } catch (const qwalk::IoError& e) {
        std::cerr << "qwalk: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "qwalk: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "qwalk: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
