#include "besselcross/special_fn.hpp"

#include <mpfr.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
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

constexpr std::array<std::pair<Family, std::string_view>, 20> kNames = {{
    {Family::PHI, "PHI"},
    {Family::PI, "PI"},
    {Family::PHI_D1, "PHI_D1"},
    {Family::PHI_D2, "PHI_D2"},
    {Family::PI_D1, "PI_D1"},
    {Family::PI_D2, "PI_D2"},
    {Family::F, "F"},
    {Family::G, "G"},
    {Family::H, "H"},
    {Family::U, "U"},
    {Family::V, "V"},
    {Family::W, "W"},
    {Family::G_D1, "G_D1"},
    {Family::H_D1, "H_D1"},
    {Family::V_D1, "V_D1"},
    {Family::W_D1, "W_D1"},
    {Family::ROT_PHI_NUM, "ROT_PHI_NUM"},
    {Family::ROT_PHI_DEN, "ROT_PHI_DEN"},
    {Family::ROT_PI_NUM, "ROT_PI_NUM"},
    {Family::ROT_PI_DEN, "ROT_PI_DEN"},
}};

bool uses_product(Family f) {
    switch (f) {
        case Family::PI:
        case Family::PI_D1:
        case Family::PI_D2:
        case Family::U:
        case Family::V:
        case Family::W:
        case Family::V_D1:
        case Family::W_D1:
        case Family::ROT_PI_NUM:
        case Family::ROT_PI_DEN:
            return true;
        default:
            return false;
    }
}

// Series weight for each family (the factor multiplying c_n y^n).
std::vector<LinearFactor> weight_of(Family f) {
    switch (f) {
        case Family::PHI_D1: return {{1, 4, 2}};
        case Family::PHI_D2: return {{1, 4, 2}, {0, 4, 2}};
        case Family::PI_D1: return {{0, 4, 2}};
        case Family::PI_D2: return {{0, 4, 2}, {-1, 4, 2}};
        case Family::G_D1:
        case Family::V_D1: return {{1, 4, 0}};
        case Family::H_D1:
        case Family::W_D1: return {{1, 1, 0}};
        case Family::ROT_PHI_NUM: return {{1, 4, 2}};
        case Family::ROT_PI_NUM: return {{0, 4, 2}};
        default: return {};
    }
}

bool is_rotated(Family f) {
    return f == Family::ROT_PHI_NUM || f == Family::ROT_PHI_DEN || f == Family::ROT_PI_NUM ||
           f == Family::ROT_PI_DEN;
}

// h and w live in the variable whose fourth root is the Phi/Pi argument.
bool fourth_power_variable(Family f) {
    return f == Family::H || f == Family::W || f == Family::H_D1 || f == Family::W_D1;
}

struct Prefactor {
    double coef;      // multiplies the series
    double exponent;  // power of z carried outside (0 when none)
};

double checked(double v, const char* what) {
    if (!std::isfinite(v)) throw OverflowError(std::string(what) + " overflows double range");
    return v;
}

// Product c * (z/2)^p with the z = 0 limit handled explicitly.
double scaled_power(double c, double z, double p, double w0) {
    if (z == 0.0) {
        if (p > 0) return 0.0;
        if (p == 0) return c * w0;
        if (w0 == 0.0) return 0.0;
        throw DomainError("function is singular at z = 0 for this order");
    }
    return checked(c * std::pow(z / 2.0, p), "prefactor");
}

}  // namespace

std::string_view to_string(Family f) {
    for (const auto& [fam, name] : kNames) {
        if (fam == f) return name;
    }
    return "?";
}

Family family_from_string(std::string_view s) {
    std::string up(s);
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
    for (const auto& [fam, name] : kNames) {
        if (name == up) return fam;
    }
    throw DomainError("unknown series family '" + std::string(s) + "'");
}

void check_admissible(Family f, double nu) {
    if (!std::isfinite(nu) || !(nu > -1.0)) throw DomainError("order must satisfy nu > -1");
    if (f == Family::F && nu == -0.5) {
        throw RemovableExponentError("f is undefined at nu = -1/2: exponent 1/(2nu+1) diverges");
    }
    if (f == Family::U && nu == 0.0) {
        throw RemovableExponentError("u is undefined at nu = 0: exponent 1/(2nu) diverges");
    }
}

EvalResult eval(const SeriesSpec& spec, double z, const Config& cfg) {
    const Family f = spec.family;
    const double nu = spec.nu;
    check_admissible(f, nu);
    if (!std::isfinite(z) || std::fabs(z) > cfg.z_max) {
        throw DomainError("|z| exceeds z_max = " + std::to_string(cfg.z_max));
    }

    Shape shape{uses_product(f) ? Denominator::Product : Denominator::CrossProduct, weight_of(f),
                !is_rotated(f)};
    const Argument arg = fourth_power_variable(f) ? Argument{z, 1, 4} : Argument{z, 4, 4};

    const bool needs_nonneg = f == Family::PHI || f == Family::PI || f == Family::PHI_D1 ||
                              f == Family::PHI_D2 || f == Family::PI_D1 || f == Family::PI_D2 ||
                              f == Family::F || f == Family::U;
    if (needs_nonneg && z < 0) throw DomainError("negative argument requires a complex power");

    const auto s = detail::sum_series(shape, nu, arg, cfg.series_cap);
    const double w0 = detail::weight_at(shape, nu, 0);
    EvalResult r;
    r.truncation_index = s.info.terms;

    const double g1 = gamma(nu + 1.0);
    const double gphi = g1 * gamma(nu + 2.0);
    const double gpi = g1 * g1;

    double coef = 1.0;  // value = coef * sum (exponent folded in)
    switch (f) {
        case Family::PHI: coef = scaled_power(2.0 / gphi, z, 2 * nu + 1, w0); break;
        case Family::PI: coef = scaled_power(1.0 / gpi, z, 2 * nu, w0); break;
        case Family::PHI_D1: coef = scaled_power(1.0 / gphi, z, 2 * nu, w0); break;
        case Family::PHI_D2: coef = scaled_power(0.5 / gphi, z, 2 * nu - 1, w0); break;
        case Family::PI_D1: coef = scaled_power(0.5 / gpi, z, 2 * nu - 1, w0); break;
        case Family::PI_D2: coef = scaled_power(0.25 / gpi, z, 2 * nu - 2, w0); break;
        case Family::G:
        case Family::V:
        case Family::H:
        case Family::W: coef = z; break;
        case Family::ROT_PHI_NUM:
        case Family::ROT_PHI_DEN: coef = 1.0 / gphi; break;
        case Family::ROT_PI_NUM:
        case Family::ROT_PI_DEN: coef = 1.0 / gpi; break;
        case Family::F:
        case Family::U: {
            const double p = f == Family::F ? 1.0 / (2 * nu + 1) : 1.0 / (2 * nu);
            if (!(s.sum > 0)) throw DomainError("normalized power is undefined where the series is not positive");
            const double root = checked(std::pow(s.sum, p), "normalized function");
            r.value = z * root;
            r.est_tail = std::fabs(r.value * p) * 2.0 * s.info.first_dropped / s.sum;
            return r;
        }
        default: break;
    }
    r.value = checked(coef * s.sum, "series value");
    r.est_tail = 2.0 * std::fabs(coef) * s.info.first_dropped;
    return r;
}

namespace {

// Reduced Bessel series sum_k (-+1)^k (x/2)^{2k} / (k! (nu+1)_k) into `out`.
void bessel_reduced(double nu, double x, bool alternating, int cap, detail::MpSum& out) {
    detail::sum_series(Shape{Denominator::Bessel, {}, alternating}, nu, Argument{x, 2, 2}, cap, out);
}

double bessel_common(double nu, double x, bool alternating, const Config& cfg) {
    if (!std::isfinite(nu) || !(nu > -1.0)) throw DomainError("Bessel order must satisfy nu > -1");
    if (!std::isfinite(x) || std::fabs(x) > cfg.z_max) throw DomainError("|x| exceeds z_max");
    if (x < 0) throw DomainError("negative argument requires a complex power");
    detail::MpSum s;
    bessel_reduced(nu, x, alternating, cfg.series_cap, s);
    const double coef = scaled_power(1.0 / gamma(nu + 1.0), x, nu, 1.0);
    return checked(coef * mpfr_get_d(s.sum, MPFR_RNDN), "Bessel value");
}

}  // namespace

double bessel_j(double nu, double x, const Config& cfg) { return bessel_common(nu, x, true, cfg); }
double bessel_i(double nu, double x, const Config& cfg) { return bessel_common(nu, x, false, cfg); }

double phi_as_crossproduct(double nu, double z, const Config& cfg) {
    if (!std::isfinite(nu) || !(nu > -1.0)) throw DomainError("order must satisfy nu > -1");
    if (!std::isfinite(z) || std::fabs(z) > cfg.z_max) throw DomainError("|z| exceeds z_max");
    if (z < 0) throw DomainError("negative argument requires a complex power");
    if (z == 0.0) return 0.0;
    detail::MpSum j0, j1, i0, i1;
    bessel_reduced(nu, z, true, cfg.series_cap, j0);
    bessel_reduced(nu + 1, z, true, cfg.series_cap, j1);
    bessel_reduced(nu, z, false, cfg.series_cap, i0);
    bessel_reduced(nu + 1, z, false, cfg.series_cap, i1);
    // J_{nu+1} I_nu + J_nu I_{nu+1}
    //   = (z/2)^{2nu+1} / (Gamma(nu+1) Gamma(nu+2)) * (j1 i0 + j0 i1)
    const mpfr_prec_t p = std::max({mpfr_get_prec(j0.sum), mpfr_get_prec(j1.sum), mpfr_get_prec(i0.sum),
                                    mpfr_get_prec(i1.sum)});
    mpfr_t a, b;
    mpfr_init2(a, p);
    mpfr_init2(b, p);
    mpfr_mul(a, j1.sum, i0.sum, MPFR_RNDN);
    mpfr_mul(b, j0.sum, i1.sum, MPFR_RNDN);
    mpfr_add(a, a, b, MPFR_RNDN);
    const double bracket = mpfr_get_d(a, MPFR_RNDN);
    mpfr_clear(a);
    mpfr_clear(b);
    const double coef = std::pow(z / 2.0, 2 * nu + 1) / (gamma(nu + 1.0) * gamma(nu + 2.0));
    return checked(coef * bracket, "cross-product value");
}

double rotated_ratio(RotatedKind kind, double nu, double r, const Config& cfg) {
    if (kind == RotatedKind::F_BRANCH && !(nu > -1.0 && nu < -0.5)) {
        throw DomainError("F branch ratio requires nu in (-1, -1/2)");
    }
    if (kind == RotatedKind::U_BRANCH && !(nu > -1.0 && nu < 0.0)) {
        throw DomainError("U branch ratio requires nu in (-1, 0)");
    }
    if (!std::isfinite(r) || r < 0 || r > cfg.z_max) throw DomainError("radius must lie in [0, z_max]");
    const bool phi = kind == RotatedKind::F_BRANCH;
    const Denominator d = phi ? Denominator::CrossProduct : Denominator::Product;
    const LinearFactor w = phi ? LinearFactor{1, 4, 2} : LinearFactor{0, 4, 2};
    const Argument arg{r, 4, 4};
    detail::MpSum num, den;
    detail::sum_series(Shape{d, {w}, false}, nu, arg, cfg.series_cap, num);
    detail::sum_series(Shape{d, {}, false}, nu, arg, cfg.series_cap, den);
    mpfr_div(num.sum, num.sum, den.sum, MPFR_RNDN);
    return mpfr_get_d(num.sum, MPFR_RNDN);
}

}  // namespace bxc
