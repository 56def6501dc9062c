#pragma once

#include <string_view>
#include <vector>

#include "besselcross/config.hpp"

namespace bxc {

enum class ZeroTag {
    J,            // J_nu
    GAMMA,        // Phi_nu
    GAMMA_PRIME,  // Phi'_nu
    T,            // Pi'_nu
    ZETA,         // z Phi' - 2nu Phi
    XI,           // z Phi' - (2nu-3) Phi
    THETA_CAP,    // z Pi' - (2nu-1) Pi
    OMEGA,        // z Pi' - (2nu-4) Pi
    // Zeros of (z k')' for k = g, h, v, w; the h and w variants are reported
    // as fourth roots, i.e. in the Phi/Pi argument.
    CONVEX_G,
    CONVEX_H,
    CONVEX_V,
    CONVEX_W,
};

std::string_view to_string(ZeroTag t);
ZeroTag zero_tag_from_string(std::string_view s);

struct ZeroFamily {
    ZeroTag tag;
    double nu;
};

struct Bracket {
    double lo;
    double hi;
};

struct ZeroTable {
    ZeroFamily family;
    std::vector<double> zeros;
    std::vector<double> residuals;  // |R(x)| of the reduced target function
    std::vector<double> scales;     // |x R'(x)|, the local scale of R
    std::vector<Bracket> brackets;  // the sign-change bracket each zero was polished in
};

void check_admissible(ZeroTag tag, double nu);

// Reduced target function: the defining combination with its positive
// power-of-z prefactor removed, so it equals a positive constant at 0.
struct FnValue {
    double value;
    double derivative;
};
FnValue zero_function(ZeroTag tag, double nu, double x);

double bessel_zero(double nu, int n, const Config& cfg = {});
ZeroTable zeros(ZeroFamily family, int n_max, const Config& cfg = {});

// GAMMA zeros located between j_{nu,n} and min(j_{nu,n+1}, j_{nu+1,n}) from
// tables already at hand; j_nu needs n_max + 1 zeros, j_nu1 needs n_max.
ZeroTable gamma_zeros_from_bessel(const ZeroTable& j_nu, const ZeroTable& j_nu1, int n_max);

}  // namespace bxc
