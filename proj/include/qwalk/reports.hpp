// reports.hpp: run configuration and file emission (per-run CSV/JSON data,
// SVG plots, sweep summaries). All I/O of the project lives here.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/entangled.hpp"
#include "qwalk/observables.hpp"

namespace qwalk {

struct RunSpec {
    enum class Family { Single, Entangled };
    enum class Initial { Up, Down, Bell1, Bell2 };
    enum class Format { Csv, Json };

    Family family = Family::Single;
    CoinMode mode = CoinMode::PositionDependent;
    Angle theta;
    Initial initial = Initial::Up;
    int steps = 30;
    Angle eta{1, 4};

    bool emit_dist = true;
    bool emit_entropy = true;
    bool emit_sigma = true;
    bool emit_plot = false;
    bool compare_pic = false;

    std::filesystem::path output_dir;
    Format format = Format::Csv;
};

struct RunResult {
    WalkClass walk_class = WalkClass::Unclassified;
    DistributionReport report;                       // final step
    std::vector<std::filesystem::path> files_written;
};

// Raised on filesystem/stream failures so the CLI can map them to a distinct
// exit status.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Value formatted with 12 significant digits, locale-independent.
std::string format_value(double v);

// Validates the spec (throws std::invalid_argument naming the flag), runs the
// walk, writes the requested files into output_dir, and returns the final
// report plus the class label the CLI prints.
RunResult cmd_run(const RunSpec& spec);

// One subdirectory per angle (canonical name, '/' as '_'), each populated as
// in cmd_run, plus a top-level summary.csv.
void cmd_sweep(const std::vector<Angle>& angles, const RunSpec& base);

}  // namespace qwalk
