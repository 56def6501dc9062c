#pragma once

#include <string_view>

#include "besselcross/config.hpp"
#include "besselcross/zero_finder.hpp"

namespace bxc {

enum class Kind { F, G, H, U, V, W };
enum class Mode { STARLIKE, CONVEX };
enum class Branch { PRINCIPAL, ROTATED };

std::string_view to_string(Kind k);
std::string_view to_string(Mode m);
std::string_view to_string(Branch b);
Kind kind_from_string(std::string_view s);
Mode mode_from_string(std::string_view s);

struct RadiusQuery {
    Kind kind;
    Mode mode;
    double alpha;
    double nu;
};

struct RadiusResult {
    double radius = 0;             // in the normalized function's own variable
    double equation_residual = 0;  // |E(radius)|
    double residual_scale = 0;     // magnitude of the terms that cancel in E
    Bracket bracket{0, 0};         // final bisection bracket, same variable as radius
    Branch branch = Branch::PRINCIPAL;
    double pole = 0;               // first singularity bounding the search, same variable
};

// True when the principal starlikeness equation does not apply and the
// rotated series must be used instead.
bool in_rotated_window(Kind k, double nu);

// Converts a radius to the Phi/Pi argument: the fourth root for h and w.
double to_series_argument(Kind k, double radius);

// Left-hand sides of the characteristic equations, in the Phi/Pi argument s.
double starlike_equation(Kind k, double nu, double alpha, double s, const Config& cfg = {});
double convex_equation(Kind k, double nu, double alpha, double s, const Config& cfg = {});

RadiusResult radius_starlike(const RadiusQuery& q, const Config& cfg = {});
RadiusResult radius_starlike_rotated(Kind k, double nu, double alpha, const Config& cfg = {});
RadiusResult radius_convex(const RadiusQuery& q, const Config& cfg = {});

}  // namespace bxc
