#include "besselcross/rayleigh.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <string>
#include <utility>

#include "nu_polynomials.hpp"

namespace bxc {

namespace {

constexpr std::array<std::pair<SumFamily, std::string_view>, 12> kNames = {{
    {SumFamily::TAU, "TAU"},
    {SumFamily::SIGMA, "SIGMA"},
    {SumFamily::RHO, "RHO"},
    {SumFamily::ETA, "ETA"},
    {SumFamily::VARRHO, "VARRHO"},
    {SumFamily::Q, "Q"},
    {SumFamily::KAPPA, "KAPPA"},
    {SumFamily::ALPHA_H, "ALPHA_H"},
    {SumFamily::EPSILON, "EPSILON"},
    {SumFamily::IOTA, "IOTA"},
    {SumFamily::J4, "J4"},
    {SumFamily::GAMMA4, "GAMMA4"},
}};

using detail::NuPoly;
using detail::poch;
using detail::poly;

template <class S>
S closed_form(SumFamily f, int k, const S& nu) {
    const S one(1);
    const S a1 = nu + 1;
    auto P = [&](const S& a, int n) { return poch(a, n); };
    auto np = [&](int i) { return detail::eval_nu_polynomial(i, nu); };
    auto pw = [](int e) { return S(1L << e); };
    auto sq = [](const S& x) { return S(x * x); };
    const S a2 = nu + 2;
    const S t = 2 * nu + 1;
    switch (f) {
        case SumFamily::TAU:
            switch (k) {
                case 1: return S((2 * nu + 5) / (16 * t * P(a1, 3)));
                case 2:
                    return S(poly(nu, {20, 184, 529, 473}) / (pw(8) * sq(t) * P(a1, 3) * P(a1, 5)));
                case 3: return S(np(1) / (pw(11) * t * sq(t) * sq(P(a1, 3)) * P(a1, 7)));
                case 4: return S(np(2) / (pw(16) * sq(sq(t)) * sq(P(a1, 3)) * P(a1, 5) * P(a1, 9)));
            }
            break;
        case SumFamily::SIGMA:
            switch (k) {
                case 1: return S(5 / (16 * P(a1, 3)));
                case 2: return S(poly(nu, {16, 189, 473}) / (pw(8) * P(a1, 3) * P(a1, 5)));
                case 3: return S(np(3) / (pw(11) * sq(P(a1, 3)) * P(a1, 7)));
                case 4: return S(np(4) / (pw(16) * sq(P(a1, 3)) * P(a1, 5) * P(a1, 9)));
            }
            break;
        case SumFamily::RHO:
            switch (k) {
                case 1: return S(one / (8 * P(a1, 3)));
                case 2: return S(poly(nu, {1, 24, 71}) / (pw(8) * P(a1, 3) * P(a1, 5)));
                case 3: return S(np(5) / (pw(12) * sq(P(a1, 3)) * P(a1, 7)));
                case 4: return S(np(6) / (pw(16) * sq(P(a1, 3)) * P(a1, 5) * P(a1, 9)));
            }
            break;
        case SumFamily::ETA:
            switch (k) {
                case 1: return S(one / (16 * nu * sq(a1)));
                case 2: return S(poly(nu, {5, 15, 12}) / (pw(8) * P(nu, 3) * P(nu, 4) * sq(a1)));
                case 3: return S(np(7) / (pw(11) * nu * P(nu, 4) * P(nu, 6) * sq(sq(a1))));
                case 4: return S(np(8) / (pw(16) * sq(P(nu, 3)) * P(nu, 5) * P(nu, 8) * sq(sq(a1))));
            }
            break;
        case SumFamily::VARRHO:
            switch (k) {
                case 1: return S(5 / (16 * sq(a1) * a2));
                case 2: return S(poly(nu, {16, 157, 291}) / (pw(8) * P(a1, 4) * sq(a1) * a1 * a2));
                case 3: return S(np(9) / (pw(11) * P(a1, 3) * P(a1, 6) * sq(sq(a1)) * a2));
                case 4: return S(np(10) / (pw(16) * P(a1, 4) * P(a1, 8) * sq(sq(a1)) * sq(a1) * sq(a2)));
            }
            break;
        case SumFamily::Q:
            switch (k) {
                case 1: return S(one / (8 * sq(a1) * a2));
                case 2: return S(poly(nu, {1, 22, 45}) / (pw(8) * P(a1, 4) * sq(a1) * a1 * a2));
                case 3: return S(np(11) / (pw(12) * P(a1, 3) * P(a1, 6) * sq(sq(a1)) * a2));
                case 4: return S(np(12) / (pw(16) * P(a1, 4) * P(a1, 8) * sq(sq(a1)) * sq(a1) * sq(a2)));
            }
            break;
        case SumFamily::KAPPA:
            switch (k) {
                case 1: return S(25 / (16 * P(a1, 3)));
                case 2: return S(np(13) / (pw(8) * P(a1, 3) * P(a1, 5)));
                case 3: return S(3 * np(14) / (pw(11) * sq(P(a1, 3)) * P(a1, 7)));
            }
            break;
        case SumFamily::ALPHA_H:
            switch (k) {
                case 1: return S(one / (4 * P(a1, 3)));
                case 2: return S(np(15) / (pw(8) * P(a1, 3) * P(a1, 5)));
                case 3: return S(3 * np(16) / (pw(11) * sq(P(a1, 3)) * P(a1, 7)));
            }
            break;
        case SumFamily::EPSILON:
            switch (k) {
                case 1: return S(25 / (16 * sq(a1) * a2));
                case 2: return S(np(17) / (pw(8) * P(a1, 4) * sq(a1) * a1 * a2));
                case 3: return S(np(18) / (pw(11) * P(a1, 3) * P(a1, 6) * sq(sq(a1)) * a2));
            }
            break;
        case SumFamily::IOTA:
            switch (k) {
                case 1: return S(one / (4 * sq(a1) * a2));
                case 2: return S(np(19) / (pw(8) * P(a1, 4) * sq(a1) * a1 * a2));
                case 3: return S(np(20) / (pw(11) * P(a1, 3) * P(a1, 6) * sq(sq(a1)) * a2));
            }
            break;
        case SumFamily::J4:
            if (k == 1) return S(one / (16 * sq(a1) * a2));
            break;
        case SumFamily::GAMMA4:
            if (k == 1) return S(one / (16 * P(a1, 3)));
            break;
    }
    throw DomainError("power-sum index k out of range for " + std::string(to_string(f)));
}

bool cross_type(SumFamily f) {
    switch (f) {
        case SumFamily::TAU:
        case SumFamily::SIGMA:
        case SumFamily::RHO:
        case SumFamily::KAPPA:
        case SumFamily::ALPHA_H:
        case SumFamily::GAMMA4: return true;
        default: return false;
    }
}

template <class S>
S weight(SumFamily f, int n, const S& nu) {
    switch (f) {
        case SumFamily::TAU: return S(2 * nu + 4 * n + 1);
        case SumFamily::ETA: return S(nu + 2 * n);
        case SumFamily::SIGMA:
        case SumFamily::VARRHO: return S(4 * n + 1);
        case SumFamily::RHO:
        case SumFamily::Q: return S(n + 1);
        case SumFamily::KAPPA:
        case SumFamily::EPSILON: return S((4 * n + 1) * (4 * n + 1));
        case SumFamily::ALPHA_H:
        case SumFamily::IOTA: return S((n + 1) * (n + 1));
        case SumFamily::J4:
        case SumFamily::GAMMA4: return S(1);
    }
    return S(1);
}

template <class S>
std::vector<S> coefficients(SumFamily f, const S& nu, int count) {
    check_admissible(f, static_cast<double>(detail::to_double(nu)));
    const S second = cross_type(f) ? S(nu + 2) : S(nu + 1);
    std::vector<S> a;
    a.reserve(count);
    const S w0 = weight(f, 0, nu);
    S d(1);  // 16^n n! (nu+1)_n (second)_{2n}
    for (int n = 0; n < count; ++n) {
        if (n > 0) d *= S(16 * n) * S(nu + n) * S(second + (2 * n - 2)) * S(second + (2 * n - 1));
        S c = weight(f, n, nu) / (d * w0);
        if (n % 2 == 1) c = -c;
        a.push_back(c);
    }
    return a;
}

double summand(Summand s, int k, double x) {
    const double x4 = x * x * x * x;
    switch (s) {
        case Summand::POWER: return std::pow(x, -4.0 * k);
        case Summand::SHIFTED: return 1.0 / (x4 - 1.0);
        case Summand::SHIFTED_SQUARE: return x4 / ((x4 - 1.0) * (x4 - 1.0));
    }
    return 0;
}

// |d log f / d log x|
double log_sensitivity(Summand s, int k, double x) {
    const double x4 = x * x * x * x;
    switch (s) {
        case Summand::POWER: return 4.0 * k;
        case Summand::SHIFTED: return 4.0 * x4 / (x4 - 1.0);
        case Summand::SHIFTED_SQUARE: return 4.0 * (x4 + 1.0) / (x4 - 1.0);
    }
    return 0;
}

// Integral of the summand from X to infinity. For the shifted summands the
// integrand is expanded in powers of X^{-4}.
double tail_integral(Summand s, int k, double X) {
    if (s == Summand::POWER) return std::pow(X, 1.0 - 4.0 * k) / (4.0 * k - 1.0);
    const double inv4 = 1.0 / (X * X * X * X);
    double pw = X * inv4;  // X^{1-4m} at m = 1
    double total = 0;
    for (int m = 1; m < 10000; ++m) {
        const double c = s == Summand::SHIFTED ? 1.0 : m;
        const double term = c * pw / (4.0 * m - 1.0);
        total += term;
        if (term < 1e-20 * total) break;
        pw *= inv4;
    }
    return total;
}

// Enclosure of sum_{m>=1} f(x_N + m*s) for spacings s in [s_lo, s_hi], f
// convex and decreasing.
TailEnclosure spacing_envelope(Summand s, int k, double xN, double s_lo, double s_hi) {
    const double upper = tail_integral(s, k, xN + 0.5 * s_lo) / s_lo;
    const double lower = tail_integral(s, k, xN + s_hi) / s_hi + 0.5 * summand(s, k, xN + s_hi);
    return {lower, upper};
}

struct Partial {
    double sum;
    double zero_error;
    TailEnclosure envelope;
};

Partial partial_and_envelope(const ZeroTable& t, int count, Summand s, int k) {
    const auto& z = t.zeros;
    const std::size_t n = static_cast<std::size_t>(count);
    long double acc = 0;
    double err = 0;
    for (std::size_t i = n; i-- > 0;) {
        const double f = summand(s, k, z[i]);
        acc += f;
        const double rel = (t.scales[i] > 0 ? t.residuals[i] / t.scales[i] : 0.0) + 4e-16;
        err += f * log_sensitivity(s, k, z[i]) * rel;
    }
    const double d = z[n - 1] - z[n - 2];
    const double s_lo = std::min(d, std::numbers::pi);
    const double s_hi = std::max(d, std::numbers::pi);
    return {static_cast<double>(acc), err, spacing_envelope(s, k, z[n - 1], s_lo, s_hi)};
}

}  // namespace

std::string_view to_string(SumFamily f) {
    for (const auto& [fam, name] : kNames) {
        if (fam == f) return name;
    }
    return "?";
}

SumFamily sum_family_from_string(std::string_view s) {
    std::string up(s);
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
    for (const auto& [fam, name] : kNames) {
        if (name == up) return fam;
    }
    throw DomainError("unknown sum family '" + std::string(s) + "'");
}

int max_k(SumFamily f) {
    switch (f) {
        case SumFamily::KAPPA:
        case SumFamily::ALPHA_H:
        case SumFamily::EPSILON:
        case SumFamily::IOTA: return 3;
        case SumFamily::J4:
        case SumFamily::GAMMA4: return 1;
        default: return 4;
    }
}

void check_admissible(SumFamily f, double nu) {
    if (!std::isfinite(nu) || !(nu > -1.0)) throw DomainError("order must satisfy nu > -1");
    if (f == SumFamily::TAU && !(nu > -0.5)) throw DomainError("TAU sums require nu > -1/2");
    if (f == SumFamily::ETA && !(nu > 0.0)) throw DomainError("ETA sums require nu > 0");
}

ZeroTag zero_tag_of(SumFamily f) {
    switch (f) {
        case SumFamily::TAU: return ZeroTag::GAMMA_PRIME;
        case SumFamily::SIGMA: return ZeroTag::ZETA;
        case SumFamily::RHO: return ZeroTag::XI;
        case SumFamily::ETA: return ZeroTag::T;
        case SumFamily::VARRHO: return ZeroTag::THETA_CAP;
        case SumFamily::Q: return ZeroTag::OMEGA;
        case SumFamily::KAPPA: return ZeroTag::CONVEX_G;
        case SumFamily::ALPHA_H: return ZeroTag::CONVEX_H;
        case SumFamily::EPSILON: return ZeroTag::CONVEX_V;
        case SumFamily::IOTA: return ZeroTag::CONVEX_W;
        case SumFamily::J4: return ZeroTag::J;
        case SumFamily::GAMMA4: return ZeroTag::GAMMA;
    }
    return ZeroTag::J;
}

double closed_form_sum(SumFamily f, int k, double nu) {
    check_admissible(f, nu);
    if (k < 1 || k > max_k(f)) throw DomainError("power-sum index k out of range");
    return closed_form<double>(f, k, nu);
}

mpq_class closed_form_sum(SumFamily f, int k, const mpq_class& nu) {
    check_admissible(f, nu.get_d());
    if (k < 1 || k > max_k(f)) throw DomainError("power-sum index k out of range");
    mpq_class r = closed_form<mpq_class>(f, k, nu);
    r.canonicalize();
    return r;
}

std::vector<double> reduced_coefficients(SumFamily f, double nu, int count) {
    return coefficients<double>(f, nu, count);
}

std::vector<mpq_class> reduced_coefficients(SumFamily f, const mpq_class& nu, int count) {
    auto a = coefficients<mpq_class>(f, nu, count);
    for (auto& x : a) x.canonicalize();
    return a;
}

PowerSums closed_form_sums(SumFamily f, double nu) {
    PowerSums p{f, nu, SumMethod::CLOSED_FORM, {}};
    for (int k = 1; k <= max_k(f); ++k) p.values.push_back(closed_form_sum(f, k, nu));
    return p;
}

PowerSums newton_sums(SumFamily f, double nu, int k_max) {
    if (k_max < 1) throw DomainError("k_max must be positive");
    PowerSums p{f, nu, SumMethod::NEWTON, {}};
    p.values = newton_power_sums(reduced_coefficients(f, nu, k_max + 1), k_max);
    return p;
}

ZeroSet zero_set(ZeroTag tag, double nu, int n_terms, const Config& cfg) {
    if (n_terms < 2) throw DomainError("direct sums need at least two zeros");
    ZeroSet set;
    set.terms = n_terms;
    if (tag == ZeroTag::GAMMA) {
        check_admissible(tag, nu);
        if (n_terms + 1 > cfg.zero_cap) throw DomainError("n_terms must stay below zero_cap");
        set.interlacing.push_back(zeros({ZeroTag::J, nu}, n_terms + 1, cfg));
        set.interlacing.push_back(zeros({ZeroTag::J, nu + 1}, n_terms, cfg));
        set.own = gamma_zeros_from_bessel(set.interlacing[0], set.interlacing[1], n_terms);
    } else {
        set.own = zeros({tag, nu}, n_terms, cfg);
    }
    return set;
}

DirectSum sum_over_zeros(const ZeroSet& set, Summand s, int k, const Config& cfg) {
    if (k < 1) throw DomainError("power-sum index k must be positive");
    const int n_terms = set.terms;
    const ZeroTable& table = set.own;
    if (s != Summand::POWER && !(table.zeros.front() > 1.0)) {
        throw DomainError("shifted sums require the first zero to exceed 1");
    }
    const Partial own = partial_and_envelope(table, n_terms, s, k);
    DirectSum r;
    r.partial = own.sum;
    r.terms = n_terms;
    r.tail = own.envelope;
    // J zeros have monotone spacing (increasing for |nu| < 1/2, decreasing
    // above), so the envelope built from the last gap and pi is a proof.
    r.rigorous = table.family.tag == ZeroTag::J;
    if (table.family.tag == ZeroTag::GAMMA && set.interlacing.size() == 2) {
        // j_{nu,n} < gamma_{nu,n} < j_{nu+1,n}
        const Partial j0 = partial_and_envelope(set.interlacing[0], n_terms, s, k);
        const Partial j1 = partial_and_envelope(set.interlacing[1], n_terms, s, k);
        const TailEnclosure proven{j1.envelope.lo, j0.envelope.hi};
        const TailEnclosure cut{std::max(proven.lo, r.tail.lo), std::min(proven.hi, r.tail.hi)};
        r.tail = cut.lo <= cut.hi ? cut : proven;
        r.rigorous = true;
    }
    const double mid = 0.5 * (r.tail.lo + r.tail.hi);
    const double half = 0.5 * (r.tail.hi - r.tail.lo);
    r.value = r.partial + mid;
    r.tail_bound = cfg.tail_safety * half + own.zero_error + 1e-15 * std::fabs(r.value);
    return r;
}

DirectSum sum_over_zeros(ZeroTag tag, double nu, Summand s, int k, int n_terms, const Config& cfg) {
    if (k < 1) throw DomainError("power-sum index k must be positive");
    return sum_over_zeros(zero_set(tag, nu, n_terms, cfg), s, k, cfg);
}

DirectSum direct_sum(SumFamily f, double nu, int k, int n_terms, const Config& cfg) {
    check_admissible(f, nu);
    if (k < 1) throw DomainError("power-sum index k must be positive");
    return sum_over_zeros(zero_tag_of(f), nu, Summand::POWER, k, n_terms, cfg);
}

}  // namespace bxc
