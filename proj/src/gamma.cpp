#include <array>
#include <cmath>
#include <numbers>

#include "besselcross/errors.hpp"
#include "besselcross/special_fn.hpp"

namespace bxc {

namespace {

// Lanczos approximation, g = 7, nine coefficients.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

// sin(pi x) with the argument reduced exactly before scaling by pi.
double sinpi(double x) {
    double r = std::fmod(x, 2.0);  // exact
    if (r > 1.0) r -= 2.0;
    if (r < -1.0) r += 2.0;
    double sign = 1.0;
    if (r < 0) {
        r = -r;
        sign = -1.0;
    }
    if (r > 0.5) r = 1.0 - r;  // exact for r in (0.5, 1]
    return sign * std::sin(std::numbers::pi * r);
}

double lanczos(double x) {
    // valid for x >= 0.5
    const double xm = x - 1.0;
    double a = kLanczos[0];
    const double t = xm + kLanczosG + 0.5;
    for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (xm + static_cast<double>(i));
    // t^(xm+0.5) split in two halves so that large x does not overflow early
    const double h = std::pow(t, 0.5 * (xm + 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * h * (h * std::exp(-t)) * a;
}

}  // namespace

double gamma(double x) {
    if (std::isnan(x)) throw DomainError("gamma of NaN");
    if (x <= 0 && x == std::floor(x)) throw PoleError("gamma has a pole at nonpositive integers");
    if (x >= 1.0 && x <= 171.0 && x == std::floor(x)) {
        double f = 1.0;
        for (int k = 2; k < static_cast<int>(x); ++k) f *= k;
        return f;
    }
    if (x < 0.5) return std::numbers::pi / (sinpi(x) * lanczos(1.0 - x));
    const double g = lanczos(x);
    if (!std::isfinite(g)) throw OverflowError("gamma overflows double range");
    return g;
}

}  // namespace bxc
