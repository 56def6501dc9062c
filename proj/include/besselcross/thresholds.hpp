#pragma once

#include "besselcross/config.hpp"
#include "besselcross/radii.hpp"

namespace bxc {

struct ThresholdQuery {
    Kind kind;
    Mode mode;
    double alpha;
};

struct ThresholdResult {
    double nu = 0;
    Bracket bracket{0, 0};
    int sign_changes = 0;  // over the whole scan grid; 1 when the root is unique there
};

// Scan grid for every root search in nu.
inline constexpr double kNuScanLo = -0.999;
inline constexpr double kNuScanHi = 10.0;
inline constexpr double kNuScanStep = 0.05;
inline constexpr double kNuTolerance = 1e-12;

// Left-hand sides whose root in nu is the threshold. The starlike ones are
// built from J and I at 1; the convex ones are k''(1) + (1 - alpha) k'(1)
// summed directly from the normalized series.
double starlike_lhs(Kind k, double nu, double alpha, const Config& cfg = {});
double convex_lhs(Kind k, double nu, double alpha, const Config& cfg = {});

ThresholdResult starlike_threshold(const ThresholdQuery& q, const Config& cfg = {});
ThresholdResult convex_threshold(const ThresholdQuery& q, const Config& cfg = {});

struct SpecialRoots {
    double nu_circ;  // J_nu(1) = 0
    double nu_star;  // first zero of the cross-product equal to 1
};

SpecialRoots special_roots(const Config& cfg = {});

// 1 + k''(1)/k'(1) rewritten through sums over the zeros x of the family
// behind k:  K = 1 - m S1 - m^2 S2 / (1 - m S1), where S1 = sum 1/(x^4 - 1),
// S2 = sum x^4/(x^4 - 1)^2, and m = 4 for g, v and 1 for h, w.
struct ZeroSumValue {
    double value = 0;
    double error = 0;  // propagated from the tail enclosures
    int terms = 0;
};

ZeroSumValue convexity_ratio_from_zeros(Kind k, double nu, int n_terms = 200, const Config& cfg = {});
// The same quantity from the series at 1.
double convexity_ratio(Kind k, double nu, const Config& cfg = {});

// sum 1/(j^4 - 1) + sum j^4/(j^4 - 1)^2 - 1 over the zeros of J_nu, from the
// series and from the zeros. Its root is the lower end of the range where
// the convexity ratio of w is monotone.
double underline_function(double nu, const Config& cfg = {});
ZeroSumValue underline_function_from_zeros(double nu, int n_terms = 200, const Config& cfg = {});
ThresholdResult underline_nu(const Config& cfg = {});

}  // namespace bxc
