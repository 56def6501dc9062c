#include "besselcross/radii.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "besselcross/errors.hpp"
#include "besselcross/special_fn.hpp"
#include "series_kernel.hpp"

namespace bxc {

namespace {

bool phi_based(Kind k) { return k == Kind::F || k == Kind::G || k == Kind::H; }
bool quartic_variable(Kind k) { return k == Kind::H || k == Kind::W; }

std::string upper(std::string_view s) {
    std::string u(s);
    std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return std::toupper(c); });
    return u;
}

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in [0, 1)");
}

void check_order(Kind k, Mode m, double nu) {
    if (!std::isfinite(nu) || !(nu > -1.0)) throw DomainError("order must satisfy nu > -1");
    if (k == Kind::F && nu == -0.5) throw RemovableExponentError("f is undefined at nu = -1/2");
    if (k == Kind::U && nu == 0.0) throw RemovableExponentError("u is undefined at nu = 0");
    if (m == Mode::CONVEX) {
        if (k == Kind::F && !(nu > -0.5)) throw DomainError("convexity of f requires nu > -1/2");
        if (k == Kind::U && !(nu > 0.0)) throw DomainError("convexity of u requires nu > 0");
    }
}

struct Trio {
    double f0, f1, f2;  // function, first and second derivative
};

Trio phi_or_pi(Kind k, double nu, double s, const Config& cfg, bool second) {
    const bool phi = phi_based(k);
    Trio t{};
    t.f0 = eval({phi ? Family::PHI : Family::PI, nu}, s, cfg).value;
    t.f1 = eval({phi ? Family::PHI_D1 : Family::PI_D1, nu}, s, cfg).value;
    t.f2 = second ? eval({phi ? Family::PHI_D2 : Family::PI_D2, nu}, s, cfg).value : 0.0;
    return t;
}

// Constant c in  s F'(s) - c F(s) = 0.
double starlike_constant(Kind k, double nu, double alpha) {
    switch (k) {
        case Kind::F: return alpha * (2 * nu + 1);
        case Kind::G: return alpha + 2 * nu;
        case Kind::H: return 4 * alpha + 2 * nu - 3;
        case Kind::U: return 2 * alpha * nu;
        case Kind::V: return alpha + 2 * nu - 1;
        case Kind::W: return 2 * (2 * alpha + nu - 2);
    }
    return 0;
}

// 1 + s k''(s)/k'(s) for f and u, from the two logarithmic derivatives of the
// ascending series. Written this way it equals exactly 1 at s = 0 and has no
// cancellation for small s.
double convex_ratio_form(Kind k, double nu, double s, const Config& cfg) {
    using detail::Argument;
    using detail::Denominator;
    using detail::Shape;
    if (!std::isfinite(s) || std::fabs(s) > cfg.z_max) throw DomainError("|z| exceeds z_max");
    const bool phi = k == Kind::F;
    const Denominator d = phi ? Denominator::CrossProduct : Denominator::Product;
    const detail::LinearFactor w = phi ? detail::LinearFactor{1, 4, 2} : detail::LinearFactor{0, 4, 2};
    const Argument arg{s, 4, 4};
    const auto s0 = detail::sum_series(Shape{d, {}, true}, nu, arg, cfg.series_cap);
    const auto s1 = detail::sum_series(Shape{d, {w}, true}, nu, arg, cfg.series_cap);
    const double expo = phi ? 1.0 / (2 * nu + 1) : 1.0 / (2 * nu);
    return 1.0 + 4.0 * s1.nsum / s1.sum + (expo - 1.0) * 4.0 * s0.nsum / s0.sum;
}

double first_zero(ZeroTag tag, double nu, const Config& cfg) { return zeros({tag, nu}, 1, cfg).zeros[0]; }

// Smallest root of `fn` on (0, pole): scan 64 cells plus a point just below
// the pole, then bisect to adjacent doubles. fn must be positive near 0.
template <class Fn>
Bracket smallest_root(Fn fn, double pole) {
    double prev = 0.0;
    double hit = -1.0;
    for (int i = 1; i <= 65; ++i) {
        const double x = i <= 63 ? pole * i / 64.0 : (i == 64 ? pole * (1 - 1e-6) : pole * (1 - 1e-9));
        const double v = fn(x);
        if (!(v > 0)) {
            hit = x;
            break;
        }
        prev = x;
    }
    if (hit < 0) throw BracketError("characteristic equation shows no sign change below its first pole");
    double lo = prev, hi = hit;
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (fn(mid) > 0 ? lo : hi) = mid;
    }
    return {lo, hi};
}

RadiusResult finish(Kind k, Bracket b, double pole, double residual, double scale, Branch br) {
    RadiusResult r;
    auto map = [&](double s) { return quartic_variable(k) ? s * s * s * s : s; };
    const double s = std::fabs(residual) == 0 ? b.lo : 0.5 * (b.lo + b.hi);
    r.radius = map(s);
    r.bracket = {map(b.lo), map(b.hi)};
    r.pole = map(pole);
    r.equation_residual = std::fabs(residual);
    r.residual_scale = scale;
    r.branch = br;
    return r;
}

}  // namespace

std::string_view to_string(Kind k) {
    switch (k) {
        case Kind::F: return "f";
        case Kind::G: return "g";
        case Kind::H: return "h";
        case Kind::U: return "u";
        case Kind::V: return "v";
        case Kind::W: return "w";
    }
    return "?";
}

std::string_view to_string(Mode m) { return m == Mode::STARLIKE ? "starlike" : "convex"; }
std::string_view to_string(Branch b) { return b == Branch::PRINCIPAL ? "principal" : "rotated"; }

Kind kind_from_string(std::string_view s) {
    const std::string u = upper(s);
    if (u == "F") return Kind::F;
    if (u == "G") return Kind::G;
    if (u == "H") return Kind::H;
    if (u == "U") return Kind::U;
    if (u == "V") return Kind::V;
    if (u == "W") return Kind::W;
    throw DomainError("unknown kind '" + std::string(s) + "'");
}

Mode mode_from_string(std::string_view s) {
    const std::string u = upper(s);
    if (u == "STARLIKE") return Mode::STARLIKE;
    if (u == "CONVEX") return Mode::CONVEX;
    throw DomainError("unknown mode '" + std::string(s) + "'");
}

bool in_rotated_window(Kind k, double nu) {
    if (k == Kind::F) return nu > -1.0 && nu < -0.5;
    if (k == Kind::U) return nu > -1.0 && nu < 0.0;
    return false;
}

double to_series_argument(Kind k, double radius) {
    return quartic_variable(k) ? std::pow(radius, 0.25) : radius;
}

double starlike_equation(Kind k, double nu, double alpha, double s, const Config& cfg) {
    const Trio t = phi_or_pi(k, nu, s, cfg, false);
    return s * t.f1 - starlike_constant(k, nu, alpha) * t.f0;
}

double convex_equation(Kind k, double nu, double alpha, double s, const Config& cfg) {
    if (k == Kind::F || k == Kind::U) return convex_ratio_form(k, nu, s, cfg) - alpha;
    const Trio t = phi_or_pi(k, nu, s, cfg, true);
    // lead + s (a F' + s F'') / (b F + s F') = target
    double lead = 0, a = 0, b = 0, target = alpha;
    switch (k) {
        case Kind::G: lead = -2 * nu; a = 1 - 2 * nu; b = -2 * nu; break;
        case Kind::H: lead = 3 - 2 * nu; a = 4 - 2 * nu; b = 3 - 2 * nu; target = 4 * alpha; break;
        case Kind::V: lead = 1 - 2 * nu; a = 2 - 2 * nu; b = 1 - 2 * nu; break;
        case Kind::W: lead = 4 - 2 * nu; a = 5 - 2 * nu; b = 4 - 2 * nu; target = 4 * alpha; break;
        default: break;
    }
    return lead + s * (a * t.f1 + s * t.f2) / (b * t.f0 + s * t.f1) - target;
}

RadiusResult radius_starlike(const RadiusQuery& q, const Config& cfg) {
    check_alpha(q.alpha);
    check_order(q.kind, Mode::STARLIKE, q.nu);
    if (in_rotated_window(q.kind, q.nu)) {
        throw BranchError("order lies in the rotated window; use the rotated starlikeness solver");
    }
    const double pole = first_zero(phi_based(q.kind) ? ZeroTag::GAMMA : ZeroTag::J, q.nu, cfg);
    auto fn = [&](double s) { return starlike_equation(q.kind, q.nu, q.alpha, s, cfg); };
    const Bracket b = smallest_root(fn, pole);
    const double s = 0.5 * (b.lo + b.hi);
    const Trio t = phi_or_pi(q.kind, q.nu, s, cfg, false);
    const double c = starlike_constant(q.kind, q.nu, q.alpha);
    // E = F (s F'/F - c) and s F'/F is of order one, so |F| (1 + |c|) sets the scale.
    const double scale = std::fabs(s * t.f1) + (1 + std::fabs(c)) * std::fabs(t.f0);
    return finish(q.kind, b, pole, s * t.f1 - c * t.f0, scale, Branch::PRINCIPAL);
}

RadiusResult radius_starlike_rotated(Kind k, double nu, double alpha, const Config& cfg) {
    check_alpha(alpha);
    if (!in_rotated_window(k, nu)) {
        throw DomainError("rotated starlikeness applies only to f with nu in (-1,-1/2) or u with nu in (-1,0)");
    }
    const RotatedKind rk = k == Kind::F ? RotatedKind::F_BRANCH : RotatedKind::U_BRANCH;
    const double target = k == Kind::F ? alpha * (2 * nu + 1) : 2 * alpha * nu;
    auto fn = [&](double r) { return target - rotated_ratio(rk, nu, r, cfg); };
    double lo = 0.0, hi = 1.0;
    while (fn(hi) > 0) {
        lo = hi;
        hi *= 2;
        if (hi > cfg.z_max) throw BracketError("rotated quotient never reaches its target below z_max");
    }
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (fn(mid) > 0 ? lo : hi) = mid;
    }
    const double r = 0.5 * (lo + hi);
    RadiusResult res;
    res.radius = r;
    res.bracket = {lo, hi};
    res.equation_residual = std::fabs(fn(r));
    res.residual_scale = std::max(1.0, std::fabs(target));
    res.branch = Branch::ROTATED;
    res.pole = INFINITY;
    return res;
}

RadiusResult radius_convex(const RadiusQuery& q, const Config& cfg) {
    check_alpha(q.alpha);
    check_order(q.kind, Mode::CONVEX, q.nu);
    ZeroTag pole_tag = ZeroTag::GAMMA_PRIME;
    switch (q.kind) {
        case Kind::F: pole_tag = ZeroTag::GAMMA_PRIME; break;
        case Kind::G: pole_tag = ZeroTag::ZETA; break;
        case Kind::H: pole_tag = ZeroTag::XI; break;
        case Kind::U: pole_tag = ZeroTag::T; break;
        case Kind::V: pole_tag = ZeroTag::THETA_CAP; break;
        case Kind::W: pole_tag = ZeroTag::OMEGA; break;
    }
    const double pole = first_zero(pole_tag, q.nu, cfg);
    auto fn = [&](double s) { return convex_equation(q.kind, q.nu, q.alpha, s, cfg); };
    const Bracket b = smallest_root(fn, pole);
    const double s = 0.5 * (b.lo + b.hi);
    const double target = quartic_variable(q.kind) ? 4 * q.alpha : q.alpha;
    return finish(q.kind, b, pole, fn(s), std::max(1.0, target), Branch::PRINCIPAL);
}

}  // namespace bxc
