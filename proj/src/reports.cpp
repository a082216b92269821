#include "qwalk/reports.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "json.hpp"

#include "qwalk/svg.hpp"

namespace qwalk {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunData {
    DistributionReport report;  // final step
    std::vector<std::pair<int, double>> s_position, s_coin, sigma;
};

// Streams the evolution, keeping one state and the per-step curve values
// instead of the whole history.
RunData run_family(const RunSpec& spec, CoinMode mode)
{
    const bool single = spec.family == RunSpec::Family::Single;
    const InitialSpin spin =
        spec.initial == RunSpec::Initial::Up ? InitialSpin::Up : InitialSpin::Down;
    const BellChoice choice{spec.initial == RunSpec::Initial::Bell1
                                ? BellChoice::Kind::PhiPlusLike
                                : BellChoice::Kind::PsiPlusLike,
                            spec.eta};
    const int half_width = spec.steps > 0 ? spec.steps : 1;

    RunData data;
    WalkState state =
        single ? make_initial(spin, half_width) : make_bell_initial(choice, half_width);
    for (int t = 1; t <= spec.steps; ++t) {
        state = single ? step(state, spec.theta, mode)
                       : entangled_step(state, spec.theta, mode);
        const auto p = position_probabilities(state);
        data.s_position.emplace_back(t, shannon_entropy_position(p));
        data.s_coin.emplace_back(t, shannon_entropy_coin(state));
        data.sigma.emplace_back(t, standard_deviation(p));
    }
    data.report = make_report(state, spec.theta);
    return data;
}

void validate(const RunSpec& spec)
{
    const bool bell = spec.initial == RunSpec::Initial::Bell1 ||
                      spec.initial == RunSpec::Initial::Bell2;
    if (spec.family == RunSpec::Family::Single && bell)
        throw std::invalid_argument(
            "--initial: bell states require --family entangled (use up or down)");
    if (spec.family == RunSpec::Family::Entangled && !bell)
        throw std::invalid_argument(
            "--initial: the entangled family requires bell1 or bell2");
    if (spec.steps < 0) throw std::invalid_argument("--steps: must be >= 0");
    if (spec.output_dir.empty()) throw std::invalid_argument("--out: output directory required");
}

void write_file(const fs::path& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

// Distribution rows: every parity-matching site in [support_min, support_max],
// with explicit zeros at unoccupied ones.
std::vector<std::pair<int, double>> dist_rows(const DistributionReport& report)
{
    std::vector<std::pair<int, double>> rows;
    for (int x = report.support_min; x <= report.support_max; x += 2) {
        const auto it = report.probabilities.find(x);
        rows.emplace_back(x, it == report.probabilities.end() ? 0.0 : it->second);
    }
    return rows;
}

std::string dist_csv(const DistributionReport& report)
{
    std::string out = "x,probability\n";
    for (const auto& [x, p] : dist_rows(report))
        out += std::to_string(x) + "," + format_value(p) + "\n";
    return out;
}

std::string dist_json(const DistributionReport& report)
{
    json rows = json::array();
    for (const auto& [x, p] : dist_rows(report)) rows.push_back({{"x", x}, {"probability", p}});
    return rows.dump(2) + "\n";
}

std::string curves_csv(const std::vector<std::pair<int, double>>& sp,
                       const std::vector<std::pair<int, double>>& sc)
{
    std::string out = "step,s_position,s_coin\n";
    for (std::size_t i = 0; i < sp.size(); ++i)
        out += std::to_string(sp[i].first) + "," + format_value(sp[i].second) + "," +
               format_value(sc[i].second) + "\n";
    return out;
}

std::string curves_json(const std::vector<std::pair<int, double>>& sp,
                        const std::vector<std::pair<int, double>>& sc)
{
    json rows = json::array();
    for (std::size_t i = 0; i < sp.size(); ++i)
        rows.push_back({{"step", sp[i].first},
                        {"s_position", sp[i].second},
                        {"s_coin", sc[i].second}});
    return rows.dump(2) + "\n";
}

std::string sigma_csv(const std::vector<std::pair<int, double>>& curve)
{
    std::string out = "step,sigma\n";
    for (const auto& [t, v] : curve) out += std::to_string(t) + "," + format_value(v) + "\n";
    return out;
}

std::string sigma_json(const std::vector<std::pair<int, double>>& curve)
{
    json rows = json::array();
    for (const auto& [t, v] : curve) rows.push_back({{"step", t}, {"sigma", v}});
    return rows.dump(2) + "\n";
}

std::vector<std::pair<double, double>> as_points(const std::vector<std::pair<int, double>>& c)
{
    std::vector<std::pair<double, double>> out;
    out.reserve(c.size());
    for (const auto& [t, v] : c) out.emplace_back(t, v);
    return out;
}

std::string mode_label(CoinMode mode, RunSpec::Family family)
{
    if (family == RunSpec::Family::Single)
        return mode == CoinMode::PositionDependent ? "PDC" : "PIC";
    return mode == CoinMode::PositionDependent ? "PDEC" : "PIEC";
}

}  // namespace

std::string format_value(double v)
{
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, p);
}

RunResult cmd_run(const RunSpec& spec)
{
    validate(spec);

    std::error_code ec;
    fs::create_directories(spec.output_dir, ec);
    if (ec) throw IoError("cannot create " + spec.output_dir.string() + ": " + ec.message());

    const RunData data = run_family(spec, spec.mode);
    // The overlay walk uses the position-independent coin with everything
    // else unchanged; only the plots show it.
    std::optional<RunData> overlay;
    if (spec.compare_pic && spec.mode == CoinMode::PositionDependent && spec.emit_plot)
        overlay = run_family(spec, CoinMode::PositionIndependent);

    RunResult result;
    result.walk_class = classify(spec.theta);
    result.report = data.report;

    const bool csv = spec.format == RunSpec::Format::Csv;
    const char* ext = csv ? ".csv" : ".json";
    const auto emit = [&](const std::string& stem, const std::string& contents) {
        const fs::path path = spec.output_dir / (stem + ext);
        write_file(path, contents);
        result.files_written.push_back(path);
    };
    const auto emit_svg = [&](const std::string& stem, const PlotSpec& plot) {
        const fs::path path = spec.output_dir / (stem + ".svg");
        write_file(path, render_plot_svg(plot));
        result.files_written.push_back(path);
    };

    const std::string theta_str = spec.theta.str();
    const std::string label = mode_label(spec.mode, spec.family);

    if (spec.emit_dist)
        emit("dist", csv ? dist_csv(data.report) : dist_json(data.report));

    const auto& sp = data.s_position;
    const auto& sc = data.s_coin;
    const auto& sg = data.sigma;
    if (spec.emit_entropy) emit("entropy", csv ? curves_csv(sp, sc) : curves_json(sp, sc));
    if (spec.emit_sigma) emit("sigma", csv ? sigma_csv(sg) : sigma_json(sg));

    if (spec.emit_plot) {
        PlotSpec dist_plot{"Probability distribution, theta = " + theta_str + ", T = " +
                               std::to_string(spec.steps),
                           "position", "probability", {}};
        std::vector<std::pair<double, double>> pts;
        for (const auto& [x, p] : dist_rows(data.report)) pts.emplace_back(x, p);
        dist_plot.series.push_back({label, pts, "#1f4e9c", false, true});
        if (overlay) {
            std::vector<std::pair<double, double>> opts;
            for (const auto& [x, p] : dist_rows(overlay->report)) opts.emplace_back(x, p);
            dist_plot.series.push_back({mode_label(CoinMode::PositionIndependent, spec.family),
                                        opts, "#c0392b", true, false});
        }
        emit_svg("dist", dist_plot);

        PlotSpec entropy_plot{"Shannon entropy, theta = " + theta_str, "step", "entropy", {}};
        entropy_plot.series.push_back({label + " S_P", as_points(sp), "#1f4e9c", false, false});
        entropy_plot.series.push_back({label + " S_C", as_points(sc), "#1f4e9c", true, false});
        if (overlay) {
            const std::string olabel = mode_label(CoinMode::PositionIndependent, spec.family);
            entropy_plot.series.push_back(
                {olabel + " S_P", as_points(overlay->s_position), "#c0392b", false, false});
            entropy_plot.series.push_back(
                {olabel + " S_C", as_points(overlay->s_coin), "#c0392b", true, false});
        }
        emit_svg("entropy", entropy_plot);

        PlotSpec sigma_plot{"Standard deviation, theta = " + theta_str, "step", "sigma", {}};
        sigma_plot.series.push_back({label, as_points(sg), "#1f4e9c", false, false});
        std::vector<std::pair<double, double>> classical;
        for (int t = 1; t <= spec.steps; ++t)
            classical.emplace_back(t, std::sqrt(static_cast<double>(t)));
        sigma_plot.series.push_back({"classical sqrt(T)", classical, "#c0392b", true, false});
        if (overlay) {
            sigma_plot.series.push_back({mode_label(CoinMode::PositionIndependent, spec.family),
                                         as_points(overlay->sigma), "#7a7a7a", true, false});
        }
        emit_svg("sigma", sigma_plot);
    }
    return result;
}

void cmd_sweep(const std::vector<Angle>& angles, const RunSpec& base)
{
    if (angles.empty()) throw std::invalid_argument("--angles: at least one angle required");
    if (base.output_dir.empty()) throw std::invalid_argument("--out: output directory required");

    std::string summary = "angle,class,flip_site,s_position,sigma,support_width\n";
    for (const Angle& theta : angles) {
        RunSpec spec = base;
        spec.theta = theta;
        spec.output_dir = base.output_dir / theta.dir_name();
        const RunResult result = cmd_run(spec);
        const DistributionReport& r = result.report;
        summary += theta.str();
        summary += ",";
        summary += walk_class_label(result.walk_class);
        summary += ",";
        if (r.flip_site) summary += std::to_string(*r.flip_site);
        summary += "," + format_value(r.s_position);
        summary += "," + format_value(r.sigma);
        summary += "," + std::to_string(r.support_max - r.support_min + 1);
        summary += "\n";
    }
    write_file(base.output_dir / "summary.csv", summary);
}

}  // namespace qwalk
