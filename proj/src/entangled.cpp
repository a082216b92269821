#include "qwalk/entangled.hpp"

#include <stdexcept>

namespace qwalk {

Mat4 entangled_coin_matrix_at(const Angle& theta, CoinMode mode, int x)
{
    const Mat2 m = coin_matrix_at(theta, mode, x);
    Mat4 out{};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    out[2 * a + b][2 * c + d] = m[a][c] * m[b][d];
    return out;
}

WalkState make_bell_initial(const BellChoice& choice, int half_width)
{
    if (half_width < 1) throw std::invalid_argument("make_bell_initial: half_width must be >= 1");
    WalkState state;
    state.steps_taken = 0;
    state.half_width = half_width;
    state.coin_dim = 4;
    state.amps.assign(static_cast<std::size_t>(state.lattice_size()) * 4, Complex{});
    const double c = choice.eta.cos_at();
    const double s = choice.eta.sin_at();
    if (choice.kind == BellChoice::Kind::PhiPlusLike) {
        state.at(0, 0) = c;
        state.at(0, 3) = s;
    } else {
        state.at(0, 1) = c;
        state.at(0, 2) = s;
    }
    return state;
}

WalkState entangled_step(const WalkState& state, const Angle& theta, CoinMode mode)
{
    if (state.coin_dim != 4)
        throw std::invalid_argument("entangled_step: expected coin_dim 4");
    const int hw = state.half_width;

    WalkState coined = state;
    for (int x = -hw; x <= hw; ++x) {
        const Mat4 m = entangled_coin_matrix_at(theta, mode, x);
        std::array<Complex, 4> in;
        for (int c = 0; c < 4; ++c) in[c] = state.at(x, c);
        for (int r = 0; r < 4; ++r) {
            Complex acc = 0.0;
            for (int c = 0; c < 4; ++c) acc += m[r][c] * in[c];
            coined.at(x, r) = acc;
        }
    }

    if (coined.at(hw, 0) != 0.0 || coined.at(-hw, 3) != 0.0)
        throw std::length_error("entangled_step: amplitude would leave the lattice; "
                                "size half_width >= steps");

    WalkState out = coined;
    for (Complex& a : out.amps) a = 0.0;
    for (int x = -hw; x <= hw; ++x) {
        if (x < hw) out.at(x + 1, 0) = coined.at(x, 0);
        out.at(x, 1) = coined.at(x, 1);
        out.at(x, 2) = coined.at(x, 2);
        if (x > -hw) out.at(x - 1, 3) = coined.at(x, 3);
    }
    out.steps_taken = state.steps_taken + 1;
    return out;
}

WalkState entangled_evolve(const BellChoice& choice, const Angle& theta, CoinMode mode,
                           int steps)
{
    if (steps < 0) throw std::invalid_argument("entangled_evolve: steps must be >= 0");
    WalkState state = make_bell_initial(choice, steps > 0 ? steps : 1);
    for (int t = 0; t < steps; ++t) state = entangled_step(state, theta, mode);
    return state;
}

std::vector<WalkState> entangled_evolve_history(const BellChoice& choice, const Angle& theta,
                                                CoinMode mode, int steps)
{
    if (steps < 0) throw std::invalid_argument("entangled_evolve: steps must be >= 0");
    std::vector<WalkState> history;
    history.reserve(static_cast<std::size_t>(steps) + 1);
    history.push_back(make_bell_initial(choice, steps > 0 ? steps : 1));
    for (int t = 0; t < steps; ++t) history.push_back(entangled_step(history.back(), theta, mode));
    return history;
}

}  // namespace qwalk
