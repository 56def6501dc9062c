#pragma once

// Ascending-series engine shared by every module. Sums are accumulated in
// MPFR at a precision sized to the largest term so that the alternating
// series stay accurate far beyond the range where double cancellation would
// destroy them. The result is rounded to double only at the end.

#include <mpfr.h>

#include <vector>

namespace bxc::detail {

// Term ratio D_n / D_{n-1} of the series denominator.
enum class Denominator {
    Bessel,        // n (nu+n)                         : n! (nu+1)_n
    CrossProduct,  // n (nu+n) (nu+2n) (nu+2n+1)       : n! (nu+1)_n (nu+2)_{2n}
    Product,       // n (nu+n) (nu+2n-1) (nu+2n)       : n! (nu+1)_n (nu+1)_{2n}
};

// c0 + cn*n + cnu*nu
struct LinearFactor {
    double c0;
    long cn;
    long cnu;
};

struct Shape {
    Denominator denom;
    std::vector<LinearFactor> weight;  // product of factors; empty means 1
    bool alternating = true;
};

// y = base^power / 2^shift, formed exactly.
struct Argument {
    double base;
    int power;
    int shift;
};

struct SumInfo {
    int terms = 0;              // index of the first dropped term
    double first_dropped = 0.0; // |w(n) y^n / D_n| of that term
    double max_term = 0.0;
    long prec = 0;
};

// RAII holder for the two accumulated sums,
//   sum  = sum_n s_n w(n) y^n / D_n
//   nsum = sum_n s_n n w(n) y^n / D_n
// where s_n is (-1)^n for alternating shapes and 1 otherwise.
struct MpSum {
    mpfr_t sum;
    mpfr_t nsum;
    SumInfo info;
    MpSum();
    ~MpSum();
    MpSum(const MpSum&) = delete;
    MpSum& operator=(const MpSum&) = delete;
};

struct SumResult {
    double sum;
    double nsum;
    SumInfo info;
};

constexpr int kInternalCap = 20000;

void sum_series(const Shape& shape, double nu, const Argument& arg, int cap, MpSum& out);
SumResult sum_series(const Shape& shape, double nu, const Argument& arg, int cap);

// d/dbase of the series equals nsum * power / base.
inline double derivative_factor(const Argument& arg) { return arg.power / arg.base; }

double weight_at(const Shape& shape, double nu, int n);

}  // namespace bxc::detail
