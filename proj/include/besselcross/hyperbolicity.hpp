#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bxc {

// Exact polynomial over Q, coefficients in ascending degree. The zero
// polynomial has no coefficients; otherwise the last one is nonzero.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<mpq_class> ascending);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpq_class>& coefficients() const { return c_; }
    const mpq_class& leading() const { return c_.back(); }

    mpq_class operator()(const mpq_class& x) const;
    RationalPoly derivative() const;

    // Quotient and remainder of Euclidean division by d (d nonzero).
    std::pair<RationalPoly, RationalPoly> divide(const RationalPoly& d) const;

    bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

private:
    void trim();
    std::vector<mpq_class> c_;
};

// Monic greatest common divisor; gcd(0, 0) is the zero polynomial.
RationalPoly gcd(RationalPoly a, RationalPoly b);

// Factors f_1, f_2, ... with p = lc * prod f_i^i and every f_i square-free.
std::vector<RationalPoly> square_free_decomposition(const RationalPoly& p);

// Open interval (lo, hi); a missing end means infinite.
struct Interval {
    std::optional<mpq_class> lo;
    std::optional<mpq_class> hi;
};

// Distinct real roots of a square-free polynomial in the interval, by Sturm.
int sturm_count(const RationalPoly& square_free, const Interval& iv);

// Real roots in the interval counted with multiplicity.
int real_root_count(const RationalPoly& p, const Interval& iv = {});

enum class PolyFamily { PHI, PI };

std::string_view to_string(PolyFamily f);
PolyFamily poly_family_from_string(std::string_view s);

// Parses "P/Q", an integer or a terminating decimal into an exact rational.
mpq_class parse_rational(std::string_view s);

inline constexpr int kMaxJensenDegree = 64;

// Jensen polynomial of degree n of the reduced series:
//   sum_k C(n,k) (-x)^k / ((nu+1)_k (nu+2)_{2k})   for PHI,
//   sum_k C(n,k) (-x)^k / ((nu+1)_k (nu+1)_{2k})   for PI.
RationalPoly jensen_poly(PolyFamily f, const mpq_class& nu, int n);

// 1F3(-n; nu+1, a, b; x) with (a, b) = ((nu+2)/2, (nu+3)/2) for PHI and
// ((nu+1)/2, (nu+2)/2) for PI. Equals jensen_poly evaluated at 4x.
RationalPoly hypergeometric_poly(PolyFamily f, const mpq_class& nu, int n);

struct HyperbolicityReport {
    PolyFamily family;
    mpq_class nu;
    int n_max = 0;
    std::vector<int> positive_root_counts;  // index n, n = 0..n_max
    std::vector<int> failures;              // n where the count differs from n
    bool hypergeometric_match = true;       // rescaled 1F3 equals Jensen for every n
    bool certified = false;
};

HyperbolicityReport certify_hyperbolic(PolyFamily f, const mpq_class& nu, int n_max);

}  // namespace bxc
