#pragma once

#include <string>
#include <string_view>

#include "besselcross/config.hpp"

namespace bxc {

// Every entire function handled by the library, as an ascending series in z.
enum class Family {
    PHI,     // cross-product  J_{nu+1} I_nu + J_nu I_{nu+1}
    PI,      // product        J_nu I_nu
    PHI_D1,
    PHI_D2,
    PI_D1,
    PI_D2,
    F,
    G,
    H,
    U,
    V,
    W,
    G_D1,
    H_D1,
    V_D1,
    W_D1,
    ROT_PHI_NUM,
    ROT_PHI_DEN,
    ROT_PI_NUM,
    ROT_PI_DEN,
};

std::string_view to_string(Family f);
Family family_from_string(std::string_view s);  // case-insensitive

struct SeriesSpec {
    Family family;
    double nu;
};

struct EvalResult {
    double value = 0.0;
    int truncation_index = 0;  // index of the first term not included
    double est_tail = 0.0;     // absolute, twice the first dropped term
};

enum class RotatedKind { F_BRANCH, U_BRANCH };

double gamma(double x);

// Throws DomainError when nu is not admissible for the family.
void check_admissible(Family f, double nu);

EvalResult eval(const SeriesSpec& spec, double z, const Config& cfg = {});

double bessel_j(double nu, double x, const Config& cfg = {});
double bessel_i(double nu, double x, const Config& cfg = {});

// J_{nu+1} I_nu + J_nu I_{nu+1} assembled from four separate Bessel series.
double phi_as_crossproduct(double nu, double z, const Config& cfg = {});

// Ratio of the positive-coefficient series obtained by evaluating the
// logarithmic derivative of Phi (F_BRANCH) or Pi (U_BRANCH) on the ray
// arg z = pi/4.
double rotated_ratio(RotatedKind kind, double nu, double r, const Config& cfg = {});

}  // namespace bxc
