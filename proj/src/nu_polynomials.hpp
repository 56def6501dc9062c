#pragma once

// Integer-coefficient polynomials in nu that appear in the closed forms of
// the higher power sums and in the bound chains built from them. Stored once,
// highest degree first; index 0 is unused.

#include <gmpxx.h>

#include <array>
#include <initializer_list>
#include <vector>

namespace bxc::detail {

using NuPoly = std::vector<long>;

inline const std::array<NuPoly, 21>& nu_polynomials() {
    static const std::array<NuPoly, 21> table = {{
        {},
        {168, 2876, 18590, 57349, 84874, 48267},
        {6864, 245792, 3802808, 33438984, 184372941, 661304856, 1542867228, 2256870262, 1877042671,
         675828138},
        {32, 824, 7969, 32944, 48267},
        {256, 13568, 312736, 4085373, 32951080, 167370756, 521177838, 907600351, 675828138},
        {1, 37, 593, 3275, 5598},
        {1, 68, 2062, 36519, 388627, 2477862, 9218508, 18391471, 15167442},
        {21, 173, 533, 717, 360},
        {429, 8688, 76280, 377494, 1148139, 2194202, 2574064, 1698048, 483840},
        {32, 792, 7753, 35977, 78453, 64469},
        {256, 11520, 224672, 2469757, 16606040, 69429816, 175324950, 243560267, 142215442},
        {1, 36, 584, 3554, 8919, 7834},
        {1, 60, 1610, 25303, 229535, 1199202, 3542412, 5461979, 3396826},
        {544, 5301, 12257},
        {2112, 48784, 417279, 1556904, 2123797},
        {7, 108, 293},
        {3, 91, 1059, 4965, 7834},
        {544, 4213, 7419},
        {6336, 140016, 1212429, 5112301, 10459449, 8300897},
        {7, 94, 183},
        {9, 264, 3108, 16222, 37827, 32138},
    }};
    return table;
}

template <class S>
S poly(const S& x, std::initializer_list<long> c) {
    S r(0);
    for (long v : c) r = S(r * x + S(v));
    return r;
}

template <class S>
S eval_nu_polynomial(int i, const S& nu) {
    S r(0);
    for (long v : nu_polynomials().at(i)) r = S(r * nu + S(v));
    return r;
}

// (a)_n
template <class S>
S poch(const S& a, int n) {
    S r(1);
    for (int i = 0; i < n; ++i) r *= S(a + i);
    return r;
}

inline double to_double(double x) { return x; }
inline double to_double(const mpq_class& x) { return x.get_d(); }

}  // namespace bxc::detail
