#pragma once

#include <gmpxx.h>

#include <string_view>
#include <vector>

#include "besselcross/config.hpp"
#include "besselcross/errors.hpp"
#include "besselcross/zero_finder.hpp"

namespace bxc {

// Power sums p_k = sum_n x_n^{-4k} over one zero family. ALPHA_H is the sum
// over zeros of (z h')'; the suffix keeps it apart from the order alpha of
// the radius problems.
enum class SumFamily { TAU, SIGMA, RHO, ETA, VARRHO, Q, KAPPA, ALPHA_H, EPSILON, IOTA, J4, GAMMA4 };

std::string_view to_string(SumFamily f);
SumFamily sum_family_from_string(std::string_view s);

int max_k(SumFamily f);
void check_admissible(SumFamily f, double nu);
ZeroTag zero_tag_of(SumFamily f);

double closed_form_sum(SumFamily f, int k, double nu);
mpq_class closed_form_sum(SumFamily f, int k, const mpq_class& nu);

// Coefficients a_0 = 1, a_1, ... of the reduced series R(Y) whose zeros are
// the fourth powers of the family's zeros, so that R(Y) = prod (1 - Y/x_n^4).
std::vector<double> reduced_coefficients(SumFamily f, double nu, int count);
std::vector<mpq_class> reduced_coefficients(SumFamily f, const mpq_class& nu, int count);

// Newton's identities: given a_0 = 1, a_1..a_K of prod(1 - Y/X_n), return
// p_k = sum X_n^{-k} for k = 1..k_max (index k-1).
template <class S>
std::vector<S> newton_power_sums(const std::vector<S>& a, int k_max) {
    if (a.empty() || a[0] != S(1)) throw DomainError("reduced series must have constant term 1");
    if (static_cast<int>(a.size()) <= k_max) throw DomainError("not enough coefficients for requested k");
    // e_k = (-1)^k a_k
    std::vector<S> e(k_max + 1), p(k_max + 1);
    for (int k = 0; k <= k_max; ++k) e[k] = (k % 2 == 0) ? S(a[k]) : S(-a[k]);
    for (int k = 1; k <= k_max; ++k) {
        S s = ((k - 1) % 2 == 0 ? S(1) : S(-1)) * S(k) * e[k];
        for (int i = 1; i < k; ++i) {
            const S term = e[k - i] * p[i];
            if ((k - i - 1) % 2 == 0) {
                s += term;
            } else {
                s -= term;
            }
        }
        p[k] = s;
    }
    return std::vector<S>(p.begin() + 1, p.end());
}

enum class SumMethod { CLOSED_FORM, NEWTON, DIRECT };

struct PowerSums {
    SumFamily family;
    double nu;
    SumMethod method;
    std::vector<double> values;  // values[k-1] = p_k
};

PowerSums closed_form_sums(SumFamily f, double nu);
PowerSums newton_sums(SumFamily f, double nu, int k_max);

// Summand applied to each zero x: x^{-4k}, 1/(x^4-1) or x^4/(x^4-1)^2.
enum class Summand { POWER, SHIFTED, SHIFTED_SQUARE };

struct TailEnclosure {
    double lo;
    double hi;
};

struct DirectSum {
    double value = 0;       // partial sum plus tail midpoint
    double tail_bound = 0;  // half-width times safety plus zero and rounding error
    double partial = 0;
    TailEnclosure tail{0, 0};
    int terms = 0;
    bool rigorous = false;  // true when the tail enclosure rests on proven spacing or interlacing
};

// Zeros of one family together with, for GAMMA, the Bessel tables of
// orders nu and nu + 1 that interlace them. Lets several sums share one
// zero computation.
struct ZeroSet {
    ZeroTable own;
    std::vector<ZeroTable> interlacing;
    int terms = 0;
};

ZeroSet zero_set(ZeroTag tag, double nu, int n_terms, const Config& cfg = {});

// Sum over the first n_terms zeros of `tag` plus an enclosure of the rest.
DirectSum sum_over_zeros(ZeroTag tag, double nu, Summand s, int k, int n_terms, const Config& cfg = {});
DirectSum sum_over_zeros(const ZeroSet& set, Summand s, int k, const Config& cfg = {});

DirectSum direct_sum(SumFamily f, double nu, int k, int n_terms, const Config& cfg = {});

}  // namespace bxc
