#include "series_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "besselcross/errors.hpp"

namespace bxc::detail {

namespace {

constexpr mpfr_prec_t kExactPrec = 512;

class Var {
public:
    explicit Var(mpfr_prec_t p) { mpfr_init2(v_, p); }
    ~Var() { mpfr_clear(v_); }
    Var(const Var&) = delete;
    Var& operator=(const Var&) = delete;
    mpfr_ptr operator*() { return v_; }

private:
    mpfr_t v_;
};

double ratio_d(Denominator d, double nu, int n) {
    const double m = n;
    switch (d) {
        case Denominator::Bessel: return m * (nu + m);
        case Denominator::CrossProduct: return m * (nu + m) * (nu + 2 * m) * (nu + 2 * m + 1);
        case Denominator::Product: return m * (nu + m) * (nu + 2 * m - 1) * (nu + 2 * m);
    }
    return 1.0;
}

void ratio_mp(mpfr_ptr out, mpfr_ptr tmp, Denominator d, double nu, long n) {
    auto factor = [&](long shift) {
        mpfr_set_d(tmp, nu, MPFR_RNDN);
        mpfr_add_si(tmp, tmp, shift, MPFR_RNDN);
        mpfr_mul(out, out, tmp, MPFR_RNDN);
    };
    mpfr_set_si(out, n, MPFR_RNDN);
    factor(n);
    if (d == Denominator::CrossProduct) {
        factor(2 * n);
        factor(2 * n + 1);
    } else if (d == Denominator::Product) {
        factor(2 * n - 1);
        factor(2 * n);
    }
}

void weight_mp(mpfr_ptr out, mpfr_ptr tmp, const Shape& s, double nu, long n) {
    mpfr_set_ui(out, 1, MPFR_RNDN);
    for (const auto& f : s.weight) {
        mpfr_set_d(tmp, nu, MPFR_RNDN);
        mpfr_mul_si(tmp, tmp, f.cnu, MPFR_RNDN);
        mpfr_add_d(tmp, tmp, f.c0, MPFR_RNDN);
        mpfr_add_si(tmp, tmp, f.cn * n, MPFR_RNDN);
        mpfr_mul(out, out, tmp, MPFR_RNDN);
    }
}

}  // namespace

double weight_at(const Shape& shape, double nu, int n) {
    double w = 1.0;
    for (const auto& f : shape.weight) w *= f.c0 + static_cast<double>(f.cn) * n + f.cnu * nu;
    return w;
}

MpSum::MpSum() {
    mpfr_init2(sum, 64);
    mpfr_init2(nsum, 64);
}

MpSum::~MpSum() {
    mpfr_clear(sum);
    mpfr_clear(nsum);
}

void sum_series(const Shape& shape, double nu, const Argument& arg, int cap, MpSum& out) {
    if (!(nu > -1.0) || !std::isfinite(nu)) throw DomainError("series order must exceed -1");
    if (!std::isfinite(arg.base)) throw DomainError("series argument is not finite");

    // Pre-pass in log2 space: locate the peak term and size the precision.
    const double log2y =
        arg.base == 0.0 ? -INFINITY : arg.power * std::log2(std::fabs(arg.base)) - arg.shift;
    double lt = 0.0;
    double maxlog = std::log2(std::max(std::fabs(weight_at(shape, nu, 0)), 1e-300));
    int n_end = 0;
    if (arg.base != 0.0) {
        for (int n = 1; n <= cap; ++n) {
            lt += log2y - std::log2(ratio_d(shape.denom, nu, n));
            const double w = std::fabs(weight_at(shape, nu, n));
            if (w > 0) maxlog = std::max(maxlog, lt + std::log2(w) + std::log2(static_cast<double>(n)));
            n_end = n;
            if (log2y < std::log2(ratio_d(shape.denom, nu, n)) && lt < maxlog - 400) break;
        }
    }
    const double scale_bits = (std::fabs(nu) + 1.0) * std::log2(std::max(2.0, std::fabs(arg.base)));
    long prec = 96 + static_cast<long>(std::ceil(std::max(0.0, maxlog) + scale_bits)) +
                static_cast<long>(std::ceil(std::log2(n_end + 2.0)));
    prec = std::clamp<long>(prec, 96, 200000);

    mpfr_set_prec(out.sum, prec);
    mpfr_set_prec(out.nsum, prec);
    out.info = SumInfo{};
    out.info.prec = prec;

    Var y(kExactPrec + 64), r(kExactPrec), w(kExactPrec), tmp(kExactPrec);
    Var t(prec), term(prec), nterm(prec), maxabs(prec);

    mpfr_set_d(*y, arg.base, MPFR_RNDN);
    mpfr_pow_ui(*y, *y, static_cast<unsigned long>(arg.power), MPFR_RNDN);
    mpfr_div_2si(*y, *y, arg.shift, MPFR_RNDN);

    mpfr_set_ui(*t, 1, MPFR_RNDN);
    weight_mp(*w, *tmp, shape, nu, 0);
    mpfr_set(out.sum, *w, MPFR_RNDN);
    mpfr_set_zero(out.nsum, 1);
    mpfr_abs(*maxabs, *w, MPFR_RNDN);

    if (arg.base == 0.0) {
        out.info.terms = 1;
        out.info.max_term = mpfr_get_d(*maxabs, MPFR_RNDN);
        return;
    }

    const double log2y_d = log2y;
    int quiet = 0;
    for (long n = 1;; ++n) {
        if (n > cap) {
            throw ConvergenceError("ascending series did not converge within " + std::to_string(cap) +
                                   " terms");
        }
        ratio_mp(*r, *tmp, shape.denom, nu, n);
        mpfr_mul(*t, *t, *y, MPFR_RNDN);
        mpfr_div(*t, *t, *r, MPFR_RNDN);
        if (shape.alternating) mpfr_neg(*t, *t, MPFR_RNDN);
        weight_mp(*w, *tmp, shape, nu, n);
        mpfr_mul(*term, *t, *w, MPFR_RNDN);
        mpfr_mul_si(*nterm, *term, n, MPFR_RNDN);

        mpfr_add(out.sum, out.sum, *term, MPFR_RNDN);
        mpfr_add(out.nsum, out.nsum, *nterm, MPFR_RNDN);
        if (mpfr_cmpabs(*nterm, *maxabs) > 0) mpfr_abs(*maxabs, *nterm, MPFR_RNDN);

        const bool past_peak = log2y_d < std::log2(ratio_d(shape.denom, nu, static_cast<int>(n) + 1));
        if (!past_peak) {
            quiet = 0;
            continue;
        }
        auto small_vs = [&](mpfr_srcptr a, mpfr_srcptr ref) {
            if (mpfr_zero_p(a)) return true;
            if (mpfr_zero_p(ref)) return false;
            return mpfr_get_exp(a) < mpfr_get_exp(ref) - 57;
        };
        const bool below_noise =
            mpfr_zero_p(*nterm) || mpfr_get_exp(*nterm) < mpfr_get_exp(*maxabs) - (prec - 8);
        const bool tiny = below_noise || (small_vs(*term, out.sum) && small_vs(*nterm, out.nsum));
        quiet = tiny ? quiet + 1 : 0;
        if (quiet >= 3) {
            // Form the first dropped term without adding it.
            ratio_mp(*r, *tmp, shape.denom, nu, n + 1);
            mpfr_mul(*t, *t, *y, MPFR_RNDN);
            mpfr_div(*t, *t, *r, MPFR_RNDN);
            weight_mp(*w, *tmp, shape, nu, n + 1);
            mpfr_mul(*term, *t, *w, MPFR_RNDN);
            out.info.terms = static_cast<int>(n + 1);
            out.info.first_dropped = std::fabs(mpfr_get_d(*term, MPFR_RNDN));
            break;
        }
    }
    out.info.max_term = mpfr_get_d(*maxabs, MPFR_RNDN);
}

SumResult sum_series(const Shape& shape, double nu, const Argument& arg, int cap) {
    MpSum s;
    sum_series(shape, nu, arg, cap, s);
    return SumResult{mpfr_get_d(s.sum, MPFR_RNDN), mpfr_get_d(s.nsum, MPFR_RNDN), s.info};
}

}  // namespace bxc::detail
