#include "qwalk/angle.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qwalk {

namespace {

constexpr double kSqrt3Over2 = 0.8660254037844386467637;  // sqrt(3)/2
constexpr double kSqrt1Over2 = 0.7071067811865475244008;  // sqrt(1/2)

// cos(pi * m / den) for m already folded into [0, den/2] (first quadrant).
double cos_first_quadrant(std::int64_t m, std::int64_t den)
{
    if (m == 0) return 1.0;
    if (2 * m == den) return 0.0;
    if (6 * m == den) return kSqrt3Over2;
    if (4 * m == den) return kSqrt1Over2;
    if (3 * m == den) return 0.5;
    return std::cos(std::numbers::pi * static_cast<double>(m) / static_cast<double>(den));
}

// Solves a*x ≡ b (mod m) for the smallest x >= 1, via extended gcd.
std::optional<std::int64_t> smallest_congruence_solution(std::int64_t a, std::int64_t b,
                                                         std::int64_t m)
{
    std::int64_t old_r = a, r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r; old_r = r; r = t;
        t = old_s - q * s; old_s = s; s = t;
    }
    const std::int64_t g = old_r;  // gcd(a, m); old_s is a's Bezout coefficient
    if (g == 0 || b % g != 0) return std::nullopt;
    const std::int64_t mg = m / g;
    // x = (b/g) * inv(a/g mod mg), all mod mg
    std::int64_t inv = old_s % mg;
    if (inv < 0) inv += mg;
    std::int64_t x = static_cast<std::int64_t>(
        static_cast<__int128>(b / g) % mg * inv % mg);
    if (x == 0) x = mg;
    return x;
}

bool consume_integer(std::string_view& s, std::int64_t& out)
{
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == 0) return false;
    out = 0;
    for (std::size_t k = 0; k < i; ++k) {
        if (out > (INT64_MAX - (s[k] - '0')) / 10)
            throw std::invalid_argument("angle: integer overflow in \"" + std::string(s) + "\"");
        out = out * 10 + (s[k] - '0');
    }
    s.remove_prefix(i);
    return true;
}

}  // namespace

Angle Angle::of(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw std::invalid_argument("angle: denominator must be nonzero");
    if (den < 0) { den = -den; num = -num; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
    return Angle{num, den};
}

double Angle::radians() const
{
    return std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
}

double cos_pi_frac(std::int64_t num, std::int64_t den)
{
    const std::int64_t period = 2 * den;
    std::int64_t m = num % period;
    if (m < 0) m += period;
    if (m > den) m = period - m;          // cos(2pi - x) = cos(x), now m in [0, den]
    if (2 * m > den)                      // cos(pi - x) = -cos(x)
        return -cos_first_quadrant(den - m, den);
    return cos_first_quadrant(m, den);
}

double sin_pi_frac(std::int64_t num, std::int64_t den)
{
    // sin(x) = cos(pi/2 - x)
    return cos_pi_frac(den - 2 * num, 2 * den);
}

double Angle::cos_at(std::int64_t multiplier) const
{
    return cos_pi_frac(multiplier * num, den);
}

double Angle::sin_at(std::int64_t multiplier) const
{
    return sin_pi_frac(multiplier * num, den);
}

std::optional<std::int64_t> Angle::first_cos_zero() const
{
    if (num == 0) return std::nullopt;
    const std::int64_t a = (2 * (num < 0 ? -num : num)) % (2 * den);
    return smallest_congruence_solution(a, den, 2 * den);
}

std::string Angle::str() const
{
    if (num == 0) return "0";
    std::string s;
    if (num == -1) s = "-pi";
    else if (num == 1) s = "pi";
    else s = std::to_string(num) + "pi";
    if (den != 1) s += "/" + std::to_string(den);
    return s;
}

std::string Angle::dir_name() const
{
    std::string s = str();
    for (char& c : s)
        if (c == '/') c = '_';
    return s;
}

Angle parse_angle(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("angle: empty string");

    bool negative = false;
    if (s.front() == '-') { negative = true; s.remove_prefix(1); }

    std::int64_t num = 1;
    const bool had_digits = consume_integer(s, num);

    if (s.empty()) {
        // bare integer: only "0" denotes an angle (zero); anything else is
        // ambiguous (radians? degrees?) and rejected
        if (had_digits && num == 0) return Angle::of(0, 1);
        throw std::invalid_argument("angle: bare integer \"" + std::string(text) +
                                    "\" (use forms like \"pi/4\" or \"7pi/45\")");
    }
    if (!s.starts_with("pi"))
        throw std::invalid_argument("angle: expected \"pi\" at \"" + std::string(s) + "\"");
    s.remove_prefix(2);

    std::int64_t den = 1;
    if (!s.empty()) {
        if (s.front() != '/')
            throw std::invalid_argument("angle: unexpected token \"" + std::string(s) + "\"");
        s.remove_prefix(1);
        if (!consume_integer(s, den) || !s.empty())
            throw std::invalid_argument("angle: bad denominator in \"" + std::string(text) + "\"");
        if (den == 0)
            throw std::invalid_argument("angle: zero denominator in \"" + std::string(text) + "\"");
    }
    return Angle::of(negative ? -num : num, den);
}

}  // namespace qwalk
