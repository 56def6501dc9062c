#include "besselcross/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "besselcross/errors.hpp"
#include "besselcross/rayleigh.hpp"
#include "nu_polynomials.hpp"

namespace bxc {

namespace {

using detail::eval_nu_polynomial;
using detail::poch;

using Pairs = std::vector<std::pair<double, double>>;

double root(double x, int m) { return std::pow(x, 1.0 / m); }

struct Displayed {
    double crude;
    Pairs pairs;
};

Displayed starlike_displayed(Kind kind, double nu) {
    auto n = [nu](int i) { return eval_nu_polynomial(i, nu); };
    auto P = [](double a, int k) { return poch(a, k); };
    const double p3 = P(nu + 1, 3), p5 = P(nu + 1, 5), p7 = P(nu + 1, 7);
    switch (kind) {
        case Kind::F: {
            const double c = 20 * nu * nu * nu + 184 * nu * nu + 529 * nu + 473;
            const double e = 2 * nu + 1;
            return {root(4 * p3 * e, 4),
                    {{root(16 * e * p3 / (2 * nu + 5), 4), root(16 * e * (2 * nu + 5) * p5 / c, 4)},
                     {root(256 * e * e * p3 * p5 / c, 8),
                      root(8 * p3 * (nu + 6) * (nu + 7) * e * c / n(1), 4)},
                     {root(2048 * e * e * e * p3 * p3 * p7 / n(1), 12),
                      root(32 * p5 * (nu + 8) * (nu + 9) * e * n(1) / n(2), 4)}}};
        }
        case Kind::G: {
            const double c = 16 * nu * nu + 189 * nu + 473;
            return {root(4 * p3, 4),
                    {{root(16 * p3 / 5, 4), root(80 * p5 / c, 4)},
                     {root(256 * p3 * p5 / c, 8), root(8 * p3 * (nu + 6) * (nu + 7) * c / n(3), 4)},
                     {root(2048 * p3 * p3 * p7 / n(3), 12),
                      root(32 * p5 * (nu + 8) * (nu + 9) * n(3) / n(4), 4)}}};
        }
        case Kind::H: {
            const double c = nu * nu + 24 * nu + 71;
            return {16 * p3,
                    {{8 * p3, 32 * p5 / c},
                     {16 * std::sqrt(p3 * p5 / c), 16 * p3 * (nu + 6) * (nu + 7) * c / n(5)},
                     {16 * std::cbrt(p3 * p3 * p7 / n(5)), 16 * p5 * (nu + 8) * (nu + 9) * n(5) / n(6)}}};
        }
        case Kind::U: {
            const double c = 5 * nu * nu + 15 * nu + 12;
            const double sq = (nu + 1) * (nu + 1);
            return {root(8 * nu * sq * (nu + 2), 4),
                    {{2 * root(nu * sq, 4), 2 * root(P(nu, 4) * P(nu + 1, 2) / c, 4)},
                     {2 * root(P(nu, 3) * P(nu, 4) * sq / c, 8),
                      root(8 * nu * sq * P(nu + 3, 3) * c / n(7), 4)},
                     {root(2048 * nu * P(nu, 4) * P(nu, 6) * sq * sq / n(7), 12),
                      2 * root(2 * nu * sq * (nu + 2) * (nu + 2) * (nu + 4) * (nu + 6) * (nu + 7) * n(7) / n(8),
                               4)}}};
        }
        case Kind::V: {
            const double c = 16 * nu * nu + 157 * nu + 291;
            const double sq = (nu + 1) * (nu + 1);
            return {root(4 * sq * (nu + 2), 4),
                    {{2 * root(sq * (nu + 2) / 5, 4), 2 * root(5 * (nu + 1) * P(nu + 1, 4) / c, 4)},
                     {2 * root(P(nu + 1, 4) * sq * (nu + 1) * (nu + 2) / c, 8),
                      root(8 * (nu + 1) * p3 * P(nu + 5, 2) * c / n(9), 4)},
                     {root(2048 * p3 * P(nu + 1, 6) * sq * sq * (nu + 2) / n(9), 12),
                      2 * root(2 * sq * (nu + 2) * (nu + 4) * P(nu + 7, 2) * n(9) / n(10), 4)}}};
        }
        case Kind::W: {
            const double c = nu * nu + 22 * nu + 45;
            const double b = (nu + 1) * (nu + 1) * (nu + 2);
            return {16 * b,
                    {{8 * b, 32 * (nu + 1) * P(nu + 1, 4) / c},
                     {16 * b * std::sqrt((nu + 3) * (nu + 4) / c),
                      16 * (nu + 1) * p3 * P(nu + 5, 2) * c / n(11)},
                     {16 * b * std::cbrt((nu + 3) * P(nu + 3, 4) / n(11)),
                      16 * b * (nu + 4) * (nu + 7) * (nu + 8) * n(11) / n(12)}}};
        }
    }
    throw DomainError("unknown kind");
}

Displayed convex_displayed(Kind kind, double nu) {
    auto n = [nu](int i) { return eval_nu_polynomial(i, nu); };
    auto P = [](double a, int k) { return poch(a, k); };
    const double p3 = P(nu + 1, 3), p5 = P(nu + 1, 5);
    const double b = (nu + 1) * (nu + 1) * (nu + 2);
    switch (kind) {
        case Kind::G:
            return {root(4 * p3 / 5, 4),
                    {{2 * root(p3 / 25, 4), 2 * root(25 * p5 / n(13), 4)},
                     {2 * root(p3 * p5 / n(13), 8), root(8 * p3 * (nu + 6) * (nu + 7) * n(13) / (3 * n(14)), 4)}}};
        case Kind::H:
            return {8 * p3,
                    {{4 * p3, 64 * p5 / n(15)},
                     {16 * p3 * std::sqrt(P(nu + 4, 2) / n(15)), 8 * p3 * P(nu + 6, 2) * n(15) / (3 * n(16))}}};
        case Kind::V:
            return {root(4 * b / 5, 4),
                    {{2 * root(b / 25, 4), 2 * root(25 * (nu + 1) * P(nu + 1, 4) / n(17), 4)},
                     {2 * root(P(nu + 1, 4) * (nu + 1) * b / n(17), 8),
                      root(8 * (nu + 1) * p3 * P(nu + 5, 2) * n(17) / n(18), 4)}}};
        case Kind::W:
            return {8 * b,
                    {{4 * b, 64 * (nu + 1) * P(nu + 1, 4) / n(19)},
                     {16 * b * std::sqrt((nu + 3) * (nu + 4) / n(19)),
                      8 * (nu + 1) * p3 * P(nu + 5, 2) * n(19) / n(20)}}};
        default:
            throw DomainError("convexity bounds exist only for g, h, v and w");
    }
}

SumFamily sum_family(Kind kind, Mode mode) {
    if (mode == Mode::STARLIKE) {
        switch (kind) {
            case Kind::F: return SumFamily::TAU;
            case Kind::G: return SumFamily::SIGMA;
            case Kind::H: return SumFamily::RHO;
            case Kind::U: return SumFamily::ETA;
            case Kind::V: return SumFamily::VARRHO;
            case Kind::W: return SumFamily::Q;
        }
    }
    switch (kind) {
        case Kind::G: return SumFamily::KAPPA;
        case Kind::H: return SumFamily::ALPHA_H;
        case Kind::V: return SumFamily::EPSILON;
        case Kind::W: return SumFamily::IOTA;
        default: throw DomainError("convexity bounds exist only for g, h, v and w");
    }
}

bool quartic(Kind kind) { return kind != Kind::H && kind != Kind::W; }

void check_range(Kind kind, Mode mode, double nu) {
    if (!std::isfinite(nu)) throw DomainError("nu must be finite");
    if (mode == Mode::STARLIKE && kind == Kind::F && !(nu > -0.5))
        throw DomainError("the f bounds require nu > -1/2");
    if (mode == Mode::STARLIKE && kind == Kind::U && !(nu > 0)) throw DomainError("the u bounds require nu > 0");
    if (!(nu > -1)) throw DomainError("the bounds require nu > -1");
}

BoundChain build(Kind kind, Mode mode, double nu) {
    check_range(kind, mode, nu);
    const Displayed d = mode == Mode::STARLIKE ? starlike_displayed(kind, nu) : convex_displayed(kind, nu);

    BoundChain c;
    c.kind = kind;
    c.mode = mode;
    c.nu = nu;
    c.crude_upper = d.crude;
    for (const auto& [lo, hi] : d.pairs) {
        c.lowers.push_back(lo);
        c.uppers.push_back(hi);
    }

    const SumFamily fam = sum_family(kind, mode);
    const bool q = quartic(kind);
    std::vector<double> p;
    for (int k = 1; k <= static_cast<int>(d.pairs.size()) + 1; ++k) p.push_back(closed_form_sum(fam, k, nu));
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        const int k = static_cast<int>(i) + 1;
        const double lo = q ? std::pow(p[i], -1.0 / (4 * k)) : std::pow(p[i], -1.0 / k);
        const double hi = q ? std::pow(p[i] / p[i + 1], 0.25) : p[i] / p[i + 1];
        c.template_lowers.push_back(lo);
        c.template_uppers.push_back(hi);
        c.max_template_deviation = std::max(
            {c.max_template_deviation, std::fabs(lo - c.lowers[i]) / std::fabs(lo),
             std::fabs(hi - c.uppers[i]) / std::fabs(hi)});
    }

    double critical = nu + 1;
    if (mode == Mode::STARLIKE && kind == Kind::F) critical = std::min(critical, 2 * nu + 1);
    if (mode == Mode::STARLIKE && kind == Kind::U) critical = std::min(critical, nu);
    c.ill_conditioned = critical < 1e-6;
    return c;
}

void judge(BoundChain& c) {
    c.lowers_increasing = std::is_sorted(c.lowers.begin(), c.lowers.end(), std::less_equal<>());
    c.uppers_decreasing = std::is_sorted(c.uppers.begin(), c.uppers.end(), std::greater_equal<>());
    c.inside_pairs = true;
    for (std::size_t i = 0; i < c.lowers.size(); ++i)
        c.inside_pairs = c.inside_pairs && c.lowers[i] < c.radius && c.radius < c.uppers[i];
    c.below_crude = c.radius < c.crude_upper;
    c.verdict = c.lowers_increasing && c.uppers_decreasing && c.inside_pairs && c.below_crude;
}

}  // namespace

BoundChain starlike_bounds(Kind k, double nu) { return build(k, Mode::STARLIKE, nu); }
BoundChain convex_bounds(Kind k, double nu) { return build(k, Mode::CONVEX, nu); }

BoundChain starlike_chain(Kind k, double nu, const Config& cfg) {
    BoundChain c = starlike_bounds(k, nu);
    c.radius = radius_starlike({k, Mode::STARLIKE, 0.0, nu}, cfg).radius;
    judge(c);
    return c;
}

BoundChain convex_chain(Kind k, double nu, const Config& cfg) {
    BoundChain c = convex_bounds(k, nu);
    c.radius = radius_convex({k, Mode::CONVEX, 0.0, nu}, cfg).radius;
    judge(c);
    return c;
}

}  // namespace bxc
