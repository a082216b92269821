#include "qwalk/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace qwalk {

namespace {

void check_distribution(const std::map<int, double>& probabilities)
{
    double total = 0.0;
    for (const auto& [x, p] : probabilities) {
        if (p < 0.0)
            throw std::invalid_argument("distribution: negative probability at x=" +
                                        std::to_string(x));
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-10)
        throw std::invalid_argument("distribution: probabilities sum to " +
                                    std::to_string(total) + ", expected 1");
}

}  // namespace

const char* walk_class_label(WalkClass cls)
{
    switch (cls) {
        case WalkClass::FreeLocalized: return "Free localized walk";
        case WalkClass::BoundedLocalized: return "Bounded localized walk";
        case WalkClass::Periodic: return "Periodic walk";
        case WalkClass::BoundedClassicalLike: return "Bounded classical-like walk";
        case WalkClass::ClassicalLike: return "Classical-like walk";
        case WalkClass::FastClassicalLike: return "Fast classical-like walk";
        case WalkClass::SemiClassicalLike: return "Semi-classical-like walk";
        case WalkClass::BoundedSemiClassicalLike: return "Bounded semi-classical-like walk";
        case WalkClass::FastSemiClassicalLike: return "Fast semi-classical-like walk";
        case WalkClass::BoundedQuantumLike: return "Bounded quantum-like walk";
        case WalkClass::Unclassified: return "Unclassified";
    }
    return "Unclassified";
}

std::map<int, double> position_probabilities(const WalkState& state)
{
    std::map<int, double> out;
    for (int x = -state.half_width; x <= state.half_width; ++x) {
        const double p = state.site_probability(x);
        if (p > kOccupiedThreshold) out[x] = p;
    }
    return out;
}

double shannon_entropy_position(const std::map<int, double>& probabilities)
{
    check_distribution(probabilities);
    double s = 0.0;
    for (const auto& [x, p] : probabilities)
        if (p > 0.0) s -= p * std::log(p);
    return s < 0.0 ? 0.0 : s;  // -0.0 from a lone p=1 term
}

double shannon_entropy_coin(const WalkState& state)
{
    double s = 0.0;
    for (int c = 0; c < state.coin_dim; ++c) {
        double p = 0.0;
        for (int x = -state.half_width; x <= state.half_width; ++x)
            p += std::norm(state.at(x, c));
        if (p > kOccupiedThreshold) s -= p * std::log(p);
    }
    return s < 0.0 ? 0.0 : s;
}

double standard_deviation(const std::map<int, double>& probabilities)
{
    check_distribution(probabilities);
    double mean = 0.0, second = 0.0;
    for (const auto& [x, p] : probabilities) {
        mean += p * x;
        second += p * static_cast<double>(x) * x;
    }
    const double var = second - mean * mean;
    return var > 0.0 ? std::sqrt(var) : 0.0;
}

std::optional<std::int64_t> flip_site(const Angle& theta)
{
    return theta.first_cos_zero();
}

WalkClass classify(const Angle& theta)
{
    struct Row { std::int64_t num, den; WalkClass cls; };
    static constexpr Row kTable[] = {
        {0, 1, WalkClass::FreeLocalized},
        {1, 2, WalkClass::BoundedLocalized},
        {1, 4, WalkClass::Periodic},
        {1, 6, WalkClass::BoundedClassicalLike},
        {7, 45, WalkClass::ClassicalLike},
        {1, 5, WalkClass::FastClassicalLike},
        {2, 5, WalkClass::SemiClassicalLike},
        {1, 20, WalkClass::BoundedSemiClassicalLike},
        {1, 3, WalkClass::FastSemiClassicalLike},
        {1, 90, WalkClass::BoundedQuantumLike},
    };
    for (const Row& row : kTable)
        if (theta.num == row.num && theta.den == row.den) return row.cls;
    return WalkClass::Unclassified;
}

std::vector<std::pair<int, double>> curve_over_steps(const std::vector<WalkState>& history,
                                                     CurveKind kind)
{
    std::vector<std::pair<int, double>> out;
    for (std::size_t t = 1; t < history.size(); ++t) {
        const WalkState& state = history[t];
        double value = 0.0;
        switch (kind) {
            case CurveKind::EntropyPosition:
                value = shannon_entropy_position(position_probabilities(state));
                break;
            case CurveKind::EntropyCoin:
                value = shannon_entropy_coin(state);
                break;
            case CurveKind::Sigma:
                value = standard_deviation(position_probabilities(state));
                break;
        }
        out.emplace_back(static_cast<int>(t), value);
    }
    return out;
}

DistributionReport make_report(const WalkState& state, const Angle& theta)
{
    DistributionReport report;
    report.step = state.steps_taken;
    report.probabilities = position_probabilities(state);
    report.s_position = shannon_entropy_position(report.probabilities);
    report.s_coin = shannon_entropy_coin(state);
    report.sigma = standard_deviation(report.probabilities);
    report.support_min = report.probabilities.begin()->first;
    report.support_max = report.probabilities.rbegin()->first;
    report.flip_site = flip_site(theta);
    return report;
}

}  // namespace qwalk
