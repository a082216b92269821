// walk.hpp: single-coin discrete-time walk on a 1D lattice.
//
// State lives in position ⊗ coin space. One step applies the coin at every
// site, then the conditional shift (spin up moves right, spin down left).

#pragma once

#include <array>
#include <complex>
#include <vector>

#include "qwalk/angle.hpp"

namespace qwalk {

using Complex = std::complex<double>;
using Mat2 = std::array<std::array<double, 2>, 2>;

enum class CoinMode { PositionDependent, PositionIndependent };
enum class InitialSpin { Up, Down };

// Complex amplitudes over a lattice x in [-half_width, half_width] with
// coin_dim internal components per site. Operations return fresh snapshots;
// a constructed state is never mutated in place.
struct WalkState {
    int steps_taken = 0;
    int half_width = 1;
    int coin_dim = 2;
    std::vector<Complex> amps;  // (2*half_width+1) * coin_dim, grouped by site

    int lattice_size() const { return 2 * half_width + 1; }

    Complex& at(int x, int c) { return amps[static_cast<std::size_t>(x + half_width) * coin_dim + c]; }
    const Complex& at(int x, int c) const { return amps[static_cast<std::size_t>(x + half_width) * coin_dim + c]; }

    double norm_sq() const;
    // Sum of |amplitude|^2 over the coin components at x.
    double site_probability(int x) const;
};

// Coin rotation at site x: [[cos phi, sin phi], [sin phi, -cos phi]] with
// phi = x*theta (position-dependent) or phi = theta (position-independent).
// Real, symmetric, unitary, det -1; exact zeros at the spin-flip sites.
Mat2 coin_matrix_at(const Angle& theta, CoinMode mode, int x);

// Walker at the origin with the chosen spin. half_width >= 1.
WalkState make_initial(InitialSpin spin, int half_width);

// Coin applied at every site; occupancy pattern unchanged.
WalkState apply_coin(const WalkState& state, const Angle& theta, CoinMode mode);

// Spin-up amplitudes move x -> x+1, spin-down x -> x-1. Throws
// std::length_error if nonzero amplitude would leave the lattice;
// size half_width >= steps to avoid that.
WalkState apply_shift(const WalkState& state);

// One walk step: coin, then shift; steps_taken incremented.
WalkState step(const WalkState& state, const Angle& theta, CoinMode mode);

// `steps` applications of the walk step to a fresh initial state, on a
// lattice of half_width max(steps, 1).
WalkState evolve(InitialSpin spin, const Angle& theta, CoinMode mode, int steps);

// Same, but returns every state: index t holds the state after t steps
// (index 0 is the initial state).
std::vector<WalkState> evolve_history(InitialSpin spin, const Angle& theta, CoinMode mode,
                                      int steps);

}  // namespace qwalk
