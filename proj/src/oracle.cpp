#include "qwalk/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace qwalk::oracle {

namespace {

using Complex = std::complex<double>;

int wrap(int ix, int n) { return (ix % n + n) % n; }

// Position probabilities of a flat amplitude vector laid out like WalkState.
std::map<int, double> vector_probabilities(const std::vector<Complex>& amps, int half_width,
                                           int coin_dim)
{
    std::map<int, double> out;
    for (int ix = 0; ix < 2 * half_width + 1; ++ix) {
        double p = 0.0;
        for (int c = 0; c < coin_dim; ++c)
            p += std::norm(amps[static_cast<std::size_t>(ix) * coin_dim + c]);
        if (p > 1e-15) out[ix - half_width] = p;
    }
    return out;
}

bool near(double a, double b) { return std::abs(a - b) < 1e-9; }

}  // namespace

std::vector<Complex> DenseOperator::apply(const std::vector<Complex>& v) const
{
    if (static_cast<int>(v.size()) != dim)
        throw std::invalid_argument("DenseOperator::apply: vector has wrong dimension");
    std::vector<Complex> out(v.size());
    for (int r = 0; r < dim; ++r) {
        Complex acc = 0.0;
        for (int c = 0; c < dim; ++c) acc += at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

double DenseOperator::unitarity_residual() const
{
    double worst = 0.0;
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            Complex acc = 0.0;
            for (int k = 0; k < dim; ++k) acc += at(r, k) * std::conj(at(c, k));
            const double expected = (r == c) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(acc - expected));
        }
    }
    return worst;
}

DenseOperator build_dense_walk_operator(const Angle& theta, CoinMode mode, int coin_dim,
                                        int half_width)
{
    if (half_width < 1)
        throw std::invalid_argument("build_dense_walk_operator: half_width must be >= 1");
    if (coin_dim != 2 && coin_dim != 4)
        throw std::invalid_argument("build_dense_walk_operator: coin_dim must be 2 or 4");

    const int n = 2 * half_width + 1;
    DenseOperator op;
    op.half_width = half_width;
    op.coin_dim = coin_dim;
    op.dim = n * coin_dim;
    op.entries.assign(static_cast<std::size_t>(op.dim) * op.dim, Complex{});

    // Shift * block-diagonal coin, assembled column by column: the coin
    // column at (x, c) lands on the row at (x + displacement, r).
    for (int ix = 0; ix < n; ++ix) {
        const int x = ix - half_width;
        const double phi =
            (mode == CoinMode::PositionDependent ? x : 1) * theta.radians();
        const double co = std::cos(phi);
        const double si = std::sin(phi);
        const double m2[2][2] = {{co, si}, {si, -co}};

        for (int col = 0; col < coin_dim; ++col) {
            for (int row = 0; row < coin_dim; ++row) {
                double entry;
                int displacement;
                if (coin_dim == 2) {
                    entry = m2[row][col];
                    displacement = (row == 0) ? 1 : -1;
                } else {
                    entry = m2[row / 2][col / 2] * m2[row % 2][col % 2];
                    displacement = (row == 0) ? 1 : (row == 3) ? -1 : 0;
                }
                if (entry == 0.0) continue;
                const int target = wrap(ix + displacement, n);
                op.at(target * coin_dim + row, ix * coin_dim + col) += entry;
            }
        }
    }
    return op;
}

std::vector<Complex> dense_evolve(const DenseOperator& op, std::vector<Complex> amps, int steps)
{
    for (int t = 0; t < steps; ++t) amps = op.apply(amps);
    return amps;
}

double closed_form_leading_amplitude(const Angle& theta, int steps)
{
    if (steps < 1)
        throw std::invalid_argument("closed_form_leading_amplitude: steps must be >= 1");
    double product = 1.0;
    for (int n = 0; n < steps; ++n) product *= std::cos(n * theta.radians());
    return product;
}

double classical_sigma(int steps)
{
    if (steps < 0) throw std::invalid_argument("classical_sigma: steps must be >= 0");
    return std::sqrt(static_cast<double>(steps));
}

std::map<PeriodicConfig, std::vector<int>> periodic_fixture_steps(const Angle& theta,
                                                                  int max_steps)
{
    if (!(theta == Angle{1, 4}))
        throw std::invalid_argument("periodic_fixture_steps: only pi/4 is supported");

    const int hw = max_steps + 1;  // one spare column so the cyclic edge is never reached
    const DenseOperator op = build_dense_walk_operator(theta, CoinMode::PositionDependent, 2, hw);
    std::vector<Complex> amps(static_cast<std::size_t>(op.dim));
    amps[static_cast<std::size_t>(hw) * 2] = 1.0;  // x = 0, spin up

    std::map<PeriodicConfig, std::vector<int>> out;
    for (int t = 0; t <= max_steps; ++t) {
        if (t > 0) amps = op.apply(amps);
        const std::map<int, double> p = vector_probabilities(amps, hw, 2);
        PeriodicConfig tag = PeriodicConfig::Other;
        if (p.size() == 1 && near(p.begin()->second, 1.0)) {
            tag = PeriodicConfig::Localized;
        } else if (p.size() == 2 && p.count(-1) && p.count(1) && near(p.at(-1), 0.5) &&
                   near(p.at(1), 0.5)) {
            tag = PeriodicConfig::TwoPeaks;
        } else if (p.size() == 3 && p.count(0) && p.count(-2) && p.count(2) &&
                   near(p.at(0), 0.5) && near(p.at(-2), 0.25) && near(p.at(2), 0.25)) {
            tag = PeriodicConfig::ThreePeaks;
        }
        out[tag].push_back(t);
    }
    return out;
}

std::map<EntangledConfig, std::vector<int>> entangled_fixture_steps(const Angle& theta,
                                                                    int max_steps)
{
    if (!(theta == Angle{1, 4}))
        throw std::invalid_argument("entangled_fixture_steps: only pi/4 is supported");

    const int hw = max_steps + 1;
    const DenseOperator op = build_dense_walk_operator(theta, CoinMode::PositionDependent, 4, hw);
    std::vector<Complex> amps(static_cast<std::size_t>(op.dim));
    const double r = std::sqrt(0.5);
    amps[static_cast<std::size_t>(hw) * 4 + 0] = r;  // |00> at x = 0
    amps[static_cast<std::size_t>(hw) * 4 + 3] = r;  // |11> at x = 0

    std::map<EntangledConfig, std::vector<int>> out;
    for (int t = 0; t <= max_steps; ++t) {
        if (t > 0) amps = op.apply(amps);
        const std::map<int, double> p = vector_probabilities(amps, hw, 4);
        EntangledConfig tag = EntangledConfig::Other;
        if (p.size() == 1 && near(p.begin()->second, 1.0)) {
            tag = EntangledConfig::Localized;
        } else if (p.size() == 2 && p.count(-1) && p.count(1) && near(p.at(-1), 0.5) &&
                   near(p.at(1), 0.5)) {
            tag = EntangledConfig::TwoPeaks;
        } else if (p.size() == 5 && p.count(0) && near(p.at(0), 0.25) &&
                   p.count(-1) && near(p.at(-1), 0.25) && p.count(1) && near(p.at(1), 0.25) &&
                   p.count(-2) && near(p.at(-2), 0.125) && p.count(2) && near(p.at(2), 0.125)) {
            tag = EntangledConfig::FiveSite;
        }
        out[tag].push_back(t);
    }
    return out;
}

}  // namespace qwalk::oracle
