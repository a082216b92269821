// observables.hpp: quantities derived from a walk state or a state history.
// Position marginals, Shannon entropies, standard deviation, support bounds,
// and the rotation-angle classification.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/walk.hpp"

namespace qwalk {

// Positions with probability at or below this are treated as unoccupied;
// separates interference/parity zeros from round-off.
inline constexpr double kOccupiedThreshold = 1e-15;

enum class WalkClass {
    FreeLocalized,
    BoundedLocalized,
    Periodic,
    BoundedClassicalLike,
    ClassicalLike,
    FastClassicalLike,
    SemiClassicalLike,
    BoundedSemiClassicalLike,
    FastSemiClassicalLike,
    BoundedQuantumLike,
    Unclassified,
};

// Human-readable name, e.g. "Bounded classical-like walk".
const char* walk_class_label(WalkClass cls);

// P(x) = sum over coin components of |amplitude|^2; sub-threshold entries
// omitted.
std::map<int, double> position_probabilities(const WalkState& state);

// Natural-log Shannon entropy of a position distribution. Throws on negative
// entries or a total off 1 by more than 1e-10.
double shannon_entropy_position(const std::map<int, double>& probabilities);

// Entropy of the coin marginal P_i = sum_x |amplitude(x, i)|^2.
double shannon_entropy_coin(const WalkState& state);

// Population standard deviation sqrt(E[x^2] - E[x]^2) of the distribution.
double standard_deviation(const std::map<int, double>& probabilities);

// Smallest x > 0 where the coin becomes a pure spin flip (cos(x*theta) = 0);
// the walker cannot pass such a site.
std::optional<std::int64_t> flip_site(const Angle& theta);

// Exact lookup of the reduced angle against the named walk classes.
WalkClass classify(const Angle& theta);

enum class CurveKind { EntropyPosition, EntropyCoin, Sigma };

// One (step, value) pair per step 1..T of a recorded history.
std::vector<std::pair<int, double>> curve_over_steps(const std::vector<WalkState>& history,
                                                     CurveKind kind);

struct DistributionReport {
    int step = 0;
    std::map<int, double> probabilities;
    double s_position = 0.0;
    double s_coin = 0.0;
    double sigma = 0.0;
    int support_min = 0;
    int support_max = 0;
    std::optional<std::int64_t> flip_site;
};

DistributionReport make_report(const WalkState& state, const Angle& theta);

}  // namespace qwalk
