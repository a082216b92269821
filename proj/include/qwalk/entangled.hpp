// entangled.hpp: walk driven by two identical entangled coins.
//
// The coin space is four-dimensional with basis order |00>, |01>, |10>, |11>
// (indices 0..3). The coin is the tensor square of the single coin; the shift
// moves |00> right, |11> left, and holds |01>, |10> in place.

#pragma once

#include "qwalk/walk.hpp"

namespace qwalk {

using Mat4 = std::array<std::array<double, 4>, 4>;

// Basis index -> lattice displacement per step: {+1, 0, 0, -1}.
inline constexpr std::array<int, 4> kEntangledShift = {1, 0, 0, -1};

struct BellChoice {
    enum class Kind {
        PhiPlusLike,  // cos(eta)|00> + sin(eta)|11>
        PsiPlusLike,  // cos(eta)|01> + sin(eta)|10>
    };
    Kind kind = Kind::PhiPlusLike;
    Angle eta{1, 4};  // entanglement parameter; pi/4 is maximal

    static BellChoice phi_plus(Angle eta = Angle{1, 4}) { return {Kind::PhiPlusLike, eta}; }
    static BellChoice psi_plus(Angle eta = Angle{1, 4}) { return {Kind::PsiPlusLike, eta}; }
};

// Tensor square M ⊗ M of coin_matrix_at(theta, mode, x); real, symmetric,
// unitary, det +1.
Mat4 entangled_coin_matrix_at(const Angle& theta, CoinMode mode, int x);

// Walker at the origin in the chosen (generally entangled) coin state.
WalkState make_bell_initial(const BellChoice& choice, int half_width);

WalkState entangled_step(const WalkState& state, const Angle& theta, CoinMode mode);

WalkState entangled_evolve(const BellChoice& choice, const Angle& theta, CoinMode mode,
                           int steps);

std::vector<WalkState> entangled_evolve_history(const BellChoice& choice, const Angle& theta,
                                                CoinMode mode, int steps);

}  // namespace qwalk
