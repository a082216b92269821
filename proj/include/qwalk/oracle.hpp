// oracle.hpp: reference implementations used only by tests and validation.
//
// Everything here recomputes the dynamics from the operator definitions with
// plain std::cos/std::sin on raw radians: no code is shared with the stepped
// evolution path, so agreement between the two is a real cross-check.

#pragma once

#include <complex>
#include <map>
#include <vector>

#include "qwalk/angle.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::oracle {

// Full walk operator as one dense matrix over position ⊗ coin space,
// dimension (2*half_width+1)*coin_dim. The shift wraps cyclically at the
// lattice edge; with half_width > T those entries are never reached, and the
// operator stays exactly unitary.
struct DenseOperator {
    int half_width = 0;
    int coin_dim = 0;
    int dim = 0;
    std::vector<std::complex<double>> entries;  // row-major dim x dim

    std::complex<double>& at(int r, int c) { return entries[static_cast<std::size_t>(r) * dim + c]; }
    const std::complex<double>& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * dim + c]; }

    std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& v) const;

    // max |(U U^dag - I)_{rc}|
    double unitarity_residual() const;
};

// coin_dim 2 or 4; half_width >= 1.
DenseOperator build_dense_walk_operator(const Angle& theta, CoinMode mode, int coin_dim,
                                        int half_width);

// T-fold dense application to a state's amplitude vector.
std::vector<std::complex<double>> dense_evolve(const DenseOperator& op,
                                               std::vector<std::complex<double>> amps,
                                               int steps);

// Product of cos(n*theta) for n = 0..steps-1: the amplitude riding the
// right-moving front of a spin-up walker.
double closed_form_leading_amplitude(const Angle& theta, int steps);

// sqrt(T), the spread of a simple classical random walk.
double classical_sigma(int steps);

// Recurring distribution shapes of the bounded walks at theta = pi/4.
enum class PeriodicConfig {
    Localized,   // single site at probability 1
    TwoPeaks,    // x = ±1 at 1/2 each
    ThreePeaks,  // x = 0 at 1/2, x = ±2 at 1/4 each
    Other,       // anything else (e.g. the off-center pair {0, ±2} at 1/2 each)
};

// Tags every step 0..max_steps of the single-coin spin-up walk by dense
// evolution. Only theta = pi/4 is supported.
std::map<PeriodicConfig, std::vector<int>> periodic_fixture_steps(const Angle& theta,
                                                                  int max_steps = 60);

enum class EntangledConfig {
    Localized,  // probability 1 at x = 0
    TwoPeaks,   // x = ±1 at 1/2 each
    FiveSite,   // x = 0, ±1 at 1/4 each and x = ±2 at 1/8 each
    Other,
};

// Same tagging for the entangled walk started from the |00>+|11> Bell state.
std::map<EntangledConfig, std::vector<int>> entangled_fixture_steps(const Angle& theta,
                                                                    int max_steps = 60);

}  // namespace qwalk::oracle
