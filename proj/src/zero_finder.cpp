#include "besselcross/zero_finder.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "besselcross/errors.hpp"
#include "series_kernel.hpp"

namespace bxc {

namespace {

using detail::Argument;
using detail::Denominator;
using detail::LinearFactor;
using detail::Shape;

constexpr double kPi = std::numbers::pi;

constexpr std::array<std::pair<ZeroTag, std::string_view>, 12> kNames = {{
    {ZeroTag::J, "J"},
    {ZeroTag::GAMMA, "GAMMA"},
    {ZeroTag::GAMMA_PRIME, "GAMMA_PRIME"},
    {ZeroTag::T, "T"},
    {ZeroTag::ZETA, "ZETA"},
    {ZeroTag::XI, "XI"},
    {ZeroTag::THETA_CAP, "THETA_CAP"},
    {ZeroTag::OMEGA, "OMEGA"},
    {ZeroTag::CONVEX_G, "CONVEX_G"},
    {ZeroTag::CONVEX_H, "CONVEX_H"},
    {ZeroTag::CONVEX_V, "CONVEX_V"},
    {ZeroTag::CONVEX_W, "CONVEX_W"},
}};

Shape shape_of(ZeroTag tag) {
    const LinearFactor quarter{1, 4, 0};  // 4n+1
    const LinearFactor unit{1, 1, 0};     // n+1
    switch (tag) {
        case ZeroTag::J: return {Denominator::Bessel, {}, true};
        case ZeroTag::GAMMA: return {Denominator::CrossProduct, {}, true};
        case ZeroTag::GAMMA_PRIME: return {Denominator::CrossProduct, {{1, 4, 2}}, true};
        case ZeroTag::T: return {Denominator::Product, {{0, 4, 2}}, true};
        case ZeroTag::ZETA: return {Denominator::CrossProduct, {quarter}, true};
        case ZeroTag::XI: return {Denominator::CrossProduct, {unit}, true};
        case ZeroTag::THETA_CAP: return {Denominator::Product, {quarter}, true};
        case ZeroTag::OMEGA: return {Denominator::Product, {unit}, true};
        case ZeroTag::CONVEX_G: return {Denominator::CrossProduct, {quarter, quarter}, true};
        case ZeroTag::CONVEX_H: return {Denominator::CrossProduct, {unit, unit}, true};
        case ZeroTag::CONVEX_V: return {Denominator::Product, {quarter, quarter}, true};
        case ZeroTag::CONVEX_W: return {Denominator::Product, {unit, unit}, true};
    }
    return {};
}

// Family whose consecutive zeros bracket each zero of `tag` (Rolle/Dini
// interlacing), with a zero of index 0 at the origin.
ZeroTag parent_of(ZeroTag tag) {
    switch (tag) {
        case ZeroTag::GAMMA_PRIME:
        case ZeroTag::ZETA:
        case ZeroTag::XI: return ZeroTag::GAMMA;
        case ZeroTag::T:
        case ZeroTag::THETA_CAP:
        case ZeroTag::OMEGA: return ZeroTag::J;
        case ZeroTag::CONVEX_G: return ZeroTag::ZETA;
        case ZeroTag::CONVEX_H: return ZeroTag::XI;
        case ZeroTag::CONVEX_V: return ZeroTag::THETA_CAP;
        case ZeroTag::CONVEX_W: return ZeroTag::OMEGA;
        default: return tag;
    }
}

int sign_of(double v) { return (v > 0) - (v < 0); }

struct Located {
    double x;
    double residual;
    double scale;
};

// Safeguarded Newton inside a sign-change bracket. Endpoint signs may be
// supplied by the caller (0 means unknown) to save two series evaluations.
Located polish(ZeroTag tag, double nu, double lo, double hi, double guess, int slo = 0, int shi = 0) {
    if (slo == 0) {
        const FnValue f = zero_function(tag, nu, lo);
        if (f.value == 0.0) return {lo, 0.0, std::fabs(lo * f.derivative)};
        slo = sign_of(f.value);
    }
    if (shi == 0) {
        const FnValue f = zero_function(tag, nu, hi);
        if (f.value == 0.0) return {hi, 0.0, std::fabs(hi * f.derivative)};
        shi = sign_of(f.value);
    }
    if (slo == shi) {
        throw BracketError("no sign change of " + std::string(to_string(tag)) + " on [" + std::to_string(lo) +
                           ", " + std::to_string(hi) + "] at nu = " + std::to_string(nu));
    }
    double x = (guess >= lo && guess <= hi) ? guess : 0.5 * (lo + hi);
    double dx_old = hi - lo;
    double dx = dx_old;
    FnValue v = zero_function(tag, nu, x);
    for (int it = 0; it < 300; ++it) {
        if (v.value == 0.0) return {x, 0.0, std::fabs(x * v.derivative)};
        (sign_of(v.value) == slo ? lo : hi) = x;
        // Bisect when Newton would leave the bracket or is not shrinking the
        // step at least twice as fast as the step before last.
        const bool leaves = ((x - hi) * v.derivative - v.value) * ((x - lo) * v.derivative - v.value) > 0;
        const bool slow = std::fabs(2.0 * v.value) > std::fabs(dx_old * v.derivative);
        dx_old = dx;
        if (leaves || slow || !std::isfinite(v.value / v.derivative)) {
            dx = 0.5 * (hi - lo);
            x = lo + dx;
        } else {
            dx = v.value / v.derivative;
            x -= dx;
        }
        v = zero_function(tag, nu, x);
        if (std::fabs(dx) <= 4e-16 * std::fabs(x) || (hi - lo) <= 4e-16 * std::fabs(x)) {
            return {x, std::fabs(v.value), std::fabs(x * v.derivative)};
        }
    }
    throw ConvergenceError("zero polishing did not converge for " + std::string(to_string(tag)));
}

ZeroTable j_table(double nu, int n_max) {
    ZeroTable t{{ZeroTag::J, nu}, {}, {}, {}, {}};
    const double h = kPi / 8;
    const int scan_cap = 200 + static_cast<int>(4 * std::max(0.0, nu));
    double prev = 0.0;
    double dprev = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const int expected = (n % 2 == 1) ? 1 : -1;  // sign of the series on (j_{n-1}, j_n)
        double x;
        if (n == 1) {
            // Rayleigh sum of order one gives j_{nu,1}^4 > 16 (nu+1)^2 (nu+2).
            x = 0.99 * std::pow(16.0 * (nu + 1) * (nu + 1) * (nu + 2), 0.25);
        } else {
            x = prev + std::max(kPi / 2, dprev - kPi / 8);
            int shrink = 0;
            while (sign_of(zero_function(ZeroTag::J, nu, x).value) != expected) {
                x = prev + 0.5 * (x - prev);
                if (++shrink > 40) throw BracketError("J zero scan lost its starting sign");
            }
        }
        double lo = x;
        double hi = x + h;
        int steps = 0;
        while (sign_of(zero_function(ZeroTag::J, nu, hi).value) == expected) {
            lo = hi;
            hi += h;
            if (++steps > scan_cap) throw ConvergenceError("J zero scan exceeded its step cap");
        }
        const double guess = n >= 3 ? prev + dprev : 0.5 * (lo + hi);
        const Located z = polish(ZeroTag::J, nu, lo, hi, guess, expected, -expected);
        t.zeros.push_back(z.x);
        t.residuals.push_back(z.residual);
        t.scales.push_back(z.scale);
        t.brackets.push_back({lo, hi});
        if (n >= 2) dprev = z.x - prev;
        prev = z.x;
    }
    return t;
}

void push_located(ZeroTable& t, ZeroTag tag, double nu, double lo, double hi) {
    const auto& z = t.zeros;
    double guess = 0.5 * (lo + hi);
    if (z.size() >= 2) guess = 2 * z[z.size() - 1] - z[z.size() - 2];
    const Located loc = polish(tag, nu, lo, hi, guess);
    t.zeros.push_back(loc.x);
    t.residuals.push_back(loc.residual);
    t.scales.push_back(loc.scale);
    t.brackets.push_back({lo, hi});
}

ZeroTable table_from_parent(ZeroTag tag, double nu, const std::vector<double>& parent, int n_max) {
    ZeroTable t{{tag, nu}, {}, {}, {}, {}};
    for (int n = 1; n <= n_max; ++n) {
        const double lo = n == 1 ? 0.0 : parent[n - 2];
        push_located(t, tag, nu, lo, parent[n - 1]);
    }
    return t;
}

ZeroTable gamma_from(const ZeroTable& j0, const ZeroTable& j1, int n_max) {
    const double nu = j0.family.nu;
    ZeroTable t{{ZeroTag::GAMMA, nu}, {}, {}, {}, {}};
    for (int n = 1; n <= n_max; ++n) {
        push_located(t, ZeroTag::GAMMA, nu, j0.zeros[n - 1], std::min(j0.zeros[n], j1.zeros[n - 1]));
    }
    return t;
}

ZeroTable build(ZeroTag tag, double nu, int n_max) {
    switch (tag) {
        case ZeroTag::J: return j_table(nu, n_max);
        case ZeroTag::GAMMA: return gamma_from(j_table(nu, n_max + 1), j_table(nu + 1, n_max), n_max);
        default: {
            const ZeroTable parent = build(parent_of(tag), nu, n_max);
            return table_from_parent(tag, nu, parent.zeros, n_max);
        }
    }
}

}  // namespace

std::string_view to_string(ZeroTag t) {
    for (const auto& [tag, name] : kNames) {
        if (tag == t) return name;
    }
    return "?";
}

ZeroTag zero_tag_from_string(std::string_view s) {
    std::string up(s);
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
    for (const auto& [tag, name] : kNames) {
        if (name == up) return tag;
    }
    throw DomainError("unknown zero family '" + std::string(s) + "'");
}

void check_admissible(ZeroTag tag, double nu) {
    if (!std::isfinite(nu) || !(nu > -1.0)) throw DomainError("order must satisfy nu > -1");
    if (tag == ZeroTag::GAMMA_PRIME && !(nu > -0.5)) {
        throw DomainError("zeros of Phi' require nu > -1/2");
    }
    if (tag == ZeroTag::T && !(nu > 0.0)) throw DomainError("zeros of Pi' require nu > 0");
}

FnValue zero_function(ZeroTag tag, double nu, double x) {
    const Argument arg = tag == ZeroTag::J ? Argument{x, 2, 2} : Argument{x, 4, 4};
    const auto s = detail::sum_series(shape_of(tag), nu, arg, detail::kInternalCap);
    const double d = x == 0.0 ? 0.0 : s.nsum * detail::derivative_factor(arg);
    return {s.sum, d};
}

double bessel_zero(double nu, int n, const Config& cfg) {
    check_admissible(ZeroTag::J, nu);
    if (n < 1 || n > cfg.zero_cap) throw DomainError("zero index must lie in [1, zero_cap]");
    return j_table(nu, n).zeros.back();
}

ZeroTable zeros(ZeroFamily family, int n_max, const Config& cfg) {
    check_admissible(family.tag, family.nu);
    if (n_max < 1 || n_max > cfg.zero_cap) throw DomainError("n_max must lie in [1, zero_cap]");
    return build(family.tag, family.nu, n_max);
}

ZeroTable gamma_zeros_from_bessel(const ZeroTable& j_nu, const ZeroTable& j_nu1, int n_max) {
    if (j_nu.family.tag != ZeroTag::J || j_nu1.family.tag != ZeroTag::J || j_nu1.family.nu != j_nu.family.nu + 1) {
        throw DomainError("expected the Bessel zero tables of orders nu and nu + 1");
    }
    if (n_max < 1 || static_cast<int>(j_nu.zeros.size()) < n_max + 1 ||
        static_cast<int>(j_nu1.zeros.size()) < n_max) {
        throw DomainError("Bessel zero tables are too short for the requested count");
    }
    return gamma_from(j_nu, j_nu1, n_max);
}

}  // namespace bxc
