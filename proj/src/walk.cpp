#include "qwalk/walk.hpp"

#include <stdexcept>

namespace qwalk {

double WalkState::norm_sq() const
{
    double n = 0.0;
    for (const Complex& a : amps) n += std::norm(a);
    return n;
}

double WalkState::site_probability(int x) const
{
    double p = 0.0;
    for (int c = 0; c < coin_dim; ++c) p += std::norm(at(x, c));
    return p;
}

Mat2 coin_matrix_at(const Angle& theta, CoinMode mode, int x)
{
    const std::int64_t k = (mode == CoinMode::PositionDependent) ? x : 1;
    const double c = theta.cos_at(k);
    const double s = theta.sin_at(k);
    return Mat2{{{c, s}, {s, -c}}};
}

WalkState make_initial(InitialSpin spin, int half_width)
{
    if (half_width < 1) throw std::invalid_argument("make_initial: half_width must be >= 1");
    WalkState state;
    state.steps_taken = 0;
    state.half_width = half_width;
    state.coin_dim = 2;
    state.amps.assign(static_cast<std::size_t>(state.lattice_size()) * 2, Complex{});
    state.at(0, spin == InitialSpin::Up ? 0 : 1) = 1.0;
    return state;
}

WalkState apply_coin(const WalkState& state, const Angle& theta, CoinMode mode)
{
    if (state.coin_dim != 2)
        throw std::invalid_argument("apply_coin: expected coin_dim 2");
    WalkState out = state;
    for (int x = -state.half_width; x <= state.half_width; ++x) {
        const Mat2 m = coin_matrix_at(theta, mode, x);
        const Complex up = state.at(x, 0);
        const Complex down = state.at(x, 1);
        out.at(x, 0) = m[0][0] * up + m[0][1] * down;
        out.at(x, 1) = m[1][0] * up + m[1][1] * down;
    }
    return out;
}

WalkState apply_shift(const WalkState& state)
{
    if (state.coin_dim != 2)
        throw std::invalid_argument("apply_shift: expected coin_dim 2");
    const int hw = state.half_width;
    if (state.at(hw, 0) != 0.0 || state.at(-hw, 1) != 0.0)
        throw std::length_error("apply_shift: amplitude would leave the lattice; "
                                "size half_width >= steps");
    WalkState out = state;
    for (Complex& a : out.amps) a = 0.0;
    for (int x = -hw; x < hw; ++x) out.at(x + 1, 0) = state.at(x, 0);
    for (int x = -hw + 1; x <= hw; ++x) out.at(x - 1, 1) = state.at(x, 1);
    return out;
}

WalkState step(const WalkState& state, const Angle& theta, CoinMode mode)
{
    WalkState out = apply_shift(apply_coin(state, theta, mode));
    out.steps_taken = state.steps_taken + 1;
    return out;
}

WalkState evolve(InitialSpin spin, const Angle& theta, CoinMode mode, int steps)
{
    if (steps < 0) throw std::invalid_argument("evolve: steps must be >= 0");
    WalkState state = make_initial(spin, steps > 0 ? steps : 1);
    for (int t = 0; t < steps; ++t) state = step(state, theta, mode);
    return state;
}

std::vector<WalkState> evolve_history(InitialSpin spin, const Angle& theta, CoinMode mode,
                                      int steps)
{
    if (steps < 0) throw std::invalid_argument("evolve: steps must be >= 0");
    std::vector<WalkState> history;
    history.reserve(static_cast<std::size_t>(steps) + 1);
    history.push_back(make_initial(spin, steps > 0 ? steps : 1));
    for (int t = 0; t < steps; ++t) history.push_back(step(history.back(), theta, mode));
    return history;
}

}  // namespace qwalk
