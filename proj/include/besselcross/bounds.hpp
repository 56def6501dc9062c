#pragma once

#include <vector>

#include "besselcross/config.hpp"
#include "besselcross/radii.hpp"

namespace bxc {

struct BoundChain {
    Kind kind = Kind::F;
    Mode mode = Mode::STARLIKE;
    double nu = 0;
    double crude_upper = 0;
    std::vector<double> lowers;  // k = 1, 2, ...
    std::vector<double> uppers;
    // The same bounds rebuilt from the power sums as p_k^{-1/k} and
    // p_k/p_{k+1} (fourth roots for f, g, u, v); agreement validates the
    // displayed closed forms.
    std::vector<double> template_lowers;
    std::vector<double> template_uppers;
    double max_template_deviation = 0;  // relative
    bool ill_conditioned = false;       // a critical factor is below 1e-6

    double radius = 0;  // radius at alpha = 0 the chain sandwiches
    bool lowers_increasing = false;
    bool uppers_decreasing = false;
    bool inside_pairs = false;
    bool below_crude = false;
    bool verdict = false;
};

// Bounds only; radius and verdict fields are left unset.
BoundChain starlike_bounds(Kind k, double nu);
BoundChain convex_bounds(Kind k, double nu);

// Bounds plus the root-found radius at alpha = 0 and the sandwich verdict.
BoundChain starlike_chain(Kind k, double nu, const Config& cfg = {});
BoundChain convex_chain(Kind k, double nu, const Config& cfg = {});

}  // namespace bxc
