// angle.hpp: rotation angles as exact rational multiples of pi.
//
// The walk dynamics hinge on whether cos(x*theta) is exactly zero (the coin
// becomes a pure spin flip there, reflecting the walker). Deciding that with
// floating-point comparisons is hopeless, so angles are kept as reduced
// fractions of pi and the trig evaluation returns exact values at the
// quarter- and sixth-pi residues.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qwalk {

// Reduced fraction num/den of pi; den >= 1, num may be zero or negative.
struct Angle {
    std::int64_t num = 0;
    std::int64_t den = 1;

    // Reduces to lowest terms and normalizes the sign onto the numerator.
    static Angle of(std::int64_t num, std::int64_t den);

    double radians() const;
    bool is_zero() const { return num == 0; }

    // cos / sin of (multiplier * angle). Exact 0, ±1, ±1/2, ±sqrt(1/2),
    // ±sqrt(3)/4 values where the reduced residue lands on them; otherwise
    // std::cos/std::sin of the residue folded into the first quadrant.
    double cos_at(std::int64_t multiplier = 1) const;
    double sin_at(std::int64_t multiplier = 1) const;

    // Smallest x > 0 with cos(x * angle) == 0, solved on the integers:
    // 2*x*|num| ≡ den (mod 2*den). Empty when no such site exists
    // (zero angle, or odd denominator).
    std::optional<std::int64_t> first_cos_zero() const;

    // Canonical text form: "0", "pi", "pi/4", "7pi/45", "2pi", "-pi/3".
    std::string str() const;
    // str() with '/' replaced by '_', usable as a directory name.
    std::string dir_name() const;

    friend bool operator==(const Angle&, const Angle&) = default;
};

// Accepts "0", "pi", "<num>pi", "pi/<den>", "<num>pi/<den>", with an
// optional leading '-'. Bare nonzero integers are rejected.
// Throws std::invalid_argument naming the offending token.
Angle parse_angle(std::string_view text);

// cos(pi * num / den) with exact special-angle handling; den > 0.
double cos_pi_frac(std::int64_t num, std::int64_t den);
double sin_pi_frac(std::int64_t num, std::int64_t den);

}  // namespace qwalk
