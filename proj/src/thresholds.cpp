#include "besselcross/thresholds.hpp"

#include <cmath>
#include <functional>

#include "besselcross/errors.hpp"
#include "besselcross/rayleigh.hpp"
#include "besselcross/special_fn.hpp"
#include "series_kernel.hpp"

namespace bxc {

namespace {

using detail::Argument;
using detail::Denominator;
using detail::LinearFactor;
using detail::Shape;

// Y = 1 in the reduced series of Phi and Pi.
constexpr Argument kAtOne{1.0, 4, 4};

void check_alpha(double alpha) {
    if (!(alpha >= 0 && alpha < 1)) throw DomainError("alpha must lie in [0, 1)");
}

void check_convex_kind(Kind k) {
    if (k == Kind::F || k == Kind::U) throw DomainError("convexity thresholds exist only for g, h, v and w");
}

Denominator denominator_of(Kind k) {
    return (k == Kind::G || k == Kind::H || k == Kind::F) ? Denominator::CrossProduct : Denominator::Product;
}

// k'(z) = sum w_n c_n z^{w_n - 1} with w_n = 4n+1 for g, v and n+1 for h, w.
LinearFactor exponent_of(Kind k, double shift = 0) {
    return (k == Kind::G || k == Kind::V) ? LinearFactor{1 - shift, 4, 0} : LinearFactor{1 - shift, 1, 0};
}

int sign_of(double v) { return (v > 0) - (v < 0); }

ThresholdResult find_root(const std::function<double(double)>& f, double lo, double hi) {
    ThresholdResult r;
    bool found = false;
    double a = lo;
    double fa = f(a);
    const int steps = static_cast<int>(std::ceil((hi - lo) / kNuScanStep));
    for (int i = 1; i <= steps; ++i) {
        const double b = i == steps ? hi : lo + i * kNuScanStep;
        const double fb = f(b);
        if (sign_of(fa) != sign_of(fb) || fa == 0) {
            ++r.sign_changes;
            if (!found) {
                r.bracket = {a, b};
                found = true;
            }
        }
        a = b;
        fa = fb;
    }
    if (!found) throw BracketError("no sign change of the threshold equation on the scan grid");

    double x0 = r.bracket.lo, x1 = r.bracket.hi;
    double f0 = f(x0);
    if (f0 == 0) {
        r.nu = x0;
        r.bracket = {x0, x0};
        return r;
    }
    while (x1 - x0 > kNuTolerance) {
        const double mid = 0.5 * (x0 + x1);
        if (mid <= x0 || mid >= x1) break;
        const double fm = f(mid);
        if (fm == 0) {
            x0 = x1 = mid;
            break;
        }
        if (sign_of(fm) == sign_of(f0)) {
            x0 = mid;
            f0 = fm;
        } else {
            x1 = mid;
        }
    }
    r.nu = 0.5 * (x0 + x1);
    r.bracket = {x0, x1};
    return r;
}

struct LogDerivatives {
    double d1;  // R'(1)/R(1)
    double d2;  // R''(1)/R(1)
};

LogDerivatives log_derivatives(Denominator denom, double nu) {
    const auto r = detail::sum_series(Shape{denom, {}, true}, nu, kAtOne, detail::kInternalCap);
    const auto r2 = detail::sum_series(Shape{denom, {{-1, 1, 0}}, true}, nu, kAtOne, detail::kInternalCap);
    return {r.nsum / r.sum, r2.nsum / r.sum};
}

ZeroSumValue shifted_sums(ZeroTag tag, double nu, int n_terms, const Config& cfg, double& s1, double& e1,
                          double& s2, double& e2) {
    ZeroSumValue out;
    for (int n = n_terms;; n = std::min(2 * n, cfg.zero_cap - 1)) {
        const ZeroSet set = zero_set(tag, nu, n, cfg);
        const DirectSum a = sum_over_zeros(set, Summand::SHIFTED, 1, cfg);
        const DirectSum b = sum_over_zeros(set, Summand::SHIFTED_SQUARE, 1, cfg);
        s1 = a.value;
        e1 = a.tail_bound;
        s2 = b.value;
        e2 = b.tail_bound;
        out.terms = n;
        const bool tight = a.tail_bound <= 1e-9 * std::fabs(a.partial) && b.tail_bound <= 1e-9 * std::fabs(b.partial);
        if (tight || n >= cfg.zero_cap - 1) break;
    }
    return out;
}

}  // namespace

double starlike_lhs(Kind k, double nu, double alpha, const Config& cfg) {
    check_alpha(alpha);
    if (!(nu > -1)) throw DomainError("nu must exceed -1");
    const double j0 = bessel_j(nu, 1, cfg), j1 = bessel_j(nu + 1, 1, cfg);
    const double i0 = bessel_i(nu, 1, cfg), i1 = bessel_i(nu + 1, 1, cfg);
    const double phi = j1 * i0 + j0 * i1;
    const double pi = j0 * i0;
    const double d = j0 * i1 - j1 * i0;
    switch (k) {
        case Kind::F: return 2 * pi - (alpha * (2 * nu + 1) + 1) * phi;
        case Kind::G: return 2 * pi - (alpha + 2 * nu + 1) * phi;
        case Kind::H: return pi - (2 * alpha + nu - 1) * phi;
        case Kind::U: return d + 2 * nu * (1 - alpha) * pi;
        case Kind::V: return d + (1 - alpha) * pi;
        case Kind::W: return d + 4 * (1 - alpha) * pi;
    }
    throw DomainError("unknown kind");
}

double convex_lhs(Kind k, double nu, double alpha, const Config&) {
    check_alpha(alpha);
    check_convex_kind(k);
    if (!(nu > -1)) throw DomainError("nu must exceed -1");
    const Shape s{denominator_of(k), {exponent_of(k), exponent_of(k, alpha)}, true};
    return detail::sum_series(s, nu, kAtOne, detail::kInternalCap).sum;
}

double convexity_ratio(Kind k, double nu, const Config&) {
    check_convex_kind(k);
    if (!(nu > -1)) throw DomainError("nu must exceed -1");
    const auto num = detail::sum_series(Shape{denominator_of(k), {exponent_of(k), exponent_of(k)}, true}, nu, kAtOne,
                                        detail::kInternalCap);
    const auto den =
        detail::sum_series(Shape{denominator_of(k), {exponent_of(k)}, true}, nu, kAtOne, detail::kInternalCap);
    return num.sum / den.sum;
}

ThresholdResult starlike_threshold(const ThresholdQuery& q, const Config& cfg) {
    check_alpha(q.alpha);
    return find_root([&](double nu) { return starlike_lhs(q.kind, nu, q.alpha, cfg); }, kNuScanLo, kNuScanHi);
}

ThresholdResult convex_threshold(const ThresholdQuery& q, const Config& cfg) {
    check_alpha(q.alpha);
    check_convex_kind(q.kind);
    return find_root([&](double nu) { return convex_lhs(q.kind, nu, q.alpha, cfg); }, kNuScanLo, kNuScanHi);
}

SpecialRoots special_roots(const Config& cfg) {
    SpecialRoots r{};
    r.nu_circ = find_root([&](double nu) { return bessel_j(nu, 1, cfg); }, kNuScanLo, 0.0).nu;
    r.nu_star = find_root([&](double nu) { return eval({Family::PHI, nu}, 1, cfg).value; }, kNuScanLo, 0.0).nu;
    return r;
}

ZeroSumValue convexity_ratio_from_zeros(Kind k, double nu, int n_terms, const Config& cfg) {
    check_convex_kind(k);
    const ZeroTag tag = denominator_of(k) == Denominator::CrossProduct ? ZeroTag::GAMMA : ZeroTag::J;
    const double m = (k == Kind::G || k == Kind::V) ? 4 : 1;
    double s1, e1, s2, e2;
    ZeroSumValue out = shifted_sums(tag, nu, n_terms, cfg, s1, e1, s2, e2);
    const double q = 1 - m * s1;
    out.value = 1 - m * s1 - m * m * s2 / q;
    const double d1 = m + m * m * m * s2 / (q * q);
    const double d2 = m * m / std::fabs(q);
    out.error = d1 * e1 + d2 * e2;
    return out;
}

double underline_function(double nu, const Config&) {
    if (!(nu > -1)) throw DomainError("nu must exceed -1");
    const LogDerivatives ld = log_derivatives(Denominator::Product, nu);
    const double s1 = -ld.d1;
    const double t = -(ld.d2 - ld.d1 * ld.d1);
    return 2 * s1 + t - 1;
}

ZeroSumValue underline_function_from_zeros(double nu, int n_terms, const Config& cfg) {
    double s1, e1, s2, e2;
    ZeroSumValue out = shifted_sums(ZeroTag::J, nu, n_terms, cfg, s1, e1, s2, e2);
    out.value = s1 + s2 - 1;
    out.error = e1 + e2;
    return out;
}

ThresholdResult underline_nu(const Config& cfg) {
    // Below nu_circ the first zero of J_nu drops under 1 and the sums lose
    // their meaning, so the scan starts just above it.
    const double start = special_roots(cfg).nu_circ + 1e-9;
    return find_root([&](double nu) { return underline_function(nu, cfg); }, start, kNuScanHi);
}

}  // namespace bxc
