#include "besselcross/hyperbolicity.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <string>
#include <utility>

#include "besselcross/errors.hpp"

namespace bxc {

RationalPoly::RationalPoly(std::vector<mpq_class> ascending) : c_(std::move(ascending)) {
    for (auto& x : c_) x.canonicalize();
    trim();
}

void RationalPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class RationalPoly::operator()(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

RationalPoly RationalPoly::derivative() const {
    std::vector<mpq_class> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return RationalPoly(std::move(d));
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divide(const RationalPoly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<mpq_class> r = c_;
    const int dd = d.degree();
    std::vector<mpq_class> q(std::max(0, degree() - dd + 1));
    for (int i = degree(); i >= dd; --i) {
        if (r[i] == 0) continue;
        const mpq_class f = r[i] / d.leading();
        q[i - dd] = f;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * d.c_[j];
    }
    return {RationalPoly(std::move(q)), RationalPoly(std::move(r))};
}

namespace {

RationalPoly monic(const RationalPoly& p) {
    if (p.is_zero()) return p;
    std::vector<mpq_class> c = p.coefficients();
    const mpq_class l = p.leading();
    for (auto& x : c) x /= l;
    return RationalPoly(std::move(c));
}

RationalPoly subtract(const RationalPoly& a, const RationalPoly& b) {
    std::vector<mpq_class> c(std::max(a.coefficients().size(), b.coefficients().size()));
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) c[i] += a.coefficients()[i];
    for (std::size_t i = 0; i < b.coefficients().size(); ++i) c[i] -= b.coefficients()[i];
    return RationalPoly(std::move(c));
}

// Integer polynomials, ascending, with the leading coefficient last.
using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Removes the positive content, which leaves every sign unchanged.
void make_primitive(ZPoly& p) {
    mpz_class g = 0;
    for (const auto& x : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1) {
        for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
}

ZPoly to_integer(const RationalPoly& p) {
    mpz_class l = 1;
    for (const auto& x : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    ZPoly z;
    for (const auto& x : p.coefficients()) z.push_back(mpz_class(x.get_num() * (l / x.get_den())));
    make_primitive(z);
    return z;
}

ZPoly derivative(const ZPoly& p) {
    ZPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
    make_primitive(d);
    return d;
}

// lc(b)^(deg a - deg b + 1) a mod b.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
    const std::size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    while (a.size() >= b.size()) {
        const mpz_class la = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& x : a) x *= lb;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        a.pop_back();
        trim(a);
    }
    return a;
}

// Sturm sequence up to positive factors: p, p', then -rem at each step.
std::vector<ZPoly> sturm_chain(const ZPoly& p) {
    std::vector<ZPoly> chain{p, derivative(p)};
    while (chain.back().size() > 1) {
        const ZPoly& a = chain[chain.size() - 2];
        const ZPoly& b = chain.back();
        ZPoly r = pseudo_remainder(a, b);
        if (r.empty()) break;
        const std::size_t delta = a.size() - b.size() + 1;
        // prem = lc(b)^delta rem, so -rem has the sign of -prem unless that power is negative.
        if (!(sgn(b.back()) < 0 && delta % 2 == 1)) {
            for (auto& x : r) x = -x;
        }
        make_primitive(r);
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_at(const ZPoly& p, const mpq_class& x) {
    mpq_class r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return sgn(r);
}

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int variations_at(const std::vector<ZPoly>& chain, const mpq_class& x) {
    std::vector<int> s;
    for (const auto& q : chain) s.push_back(sign_at(q, x));
    return variations(s);
}

int variations_at_infinity(const std::vector<ZPoly>& chain, bool negative) {
    std::vector<int> s;
    for (const auto& q : chain) {
        int sign = sgn(q.back());
        if (negative && q.size() % 2 == 0) sign = -sign;
        s.push_back(sign);
    }
    return variations(s);
}

mpq_class binomial(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return mpq_class(r);
}

mpq_class poch(const mpq_class& a, int n) {
    mpq_class r = 1;
    for (int i = 0; i < n; ++i) r *= a + i;
    return r;
}

void check_order(const mpq_class& nu, int n) {
    if (!(nu > -1)) throw DomainError("nu must exceed -1");
    if (n < 0 || n > kMaxJensenDegree) throw DomainError("degree must lie in [0, 64]");
}

}  // namespace

RationalPoly gcd(RationalPoly a, RationalPoly b) {
    while (!b.is_zero()) {
        RationalPoly r = a.divide(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

std::vector<RationalPoly> square_free_decomposition(const RationalPoly& p) {
    // Yun's algorithm over a field of characteristic zero.
    std::vector<RationalPoly> out;
    if (p.degree() < 1) return out;
    const RationalPoly dp = p.derivative();
    RationalPoly a = gcd(p, dp);
    RationalPoly b = p.divide(a).first;
    RationalPoly c = dp.divide(a).first;
    RationalPoly d = subtract(c, b.derivative());
    while (b.degree() > 0) {
        RationalPoly f = gcd(b, d);
        out.push_back(f);
        b = b.divide(f).first;
        c = d.divide(f).first;
        d = subtract(c, b.derivative());
    }
    return out;
}

namespace {

int count_with_chain(const std::vector<ZPoly>& chain, const Interval& iv) {
    const int v_minus = variations_at_infinity(chain, true);
    // Roots in (-inf, x] number v_minus - V(x) for square-free p.
    auto up_to = [&](const std::optional<mpq_class>& x) {
        return x ? v_minus - variations_at(chain, *x) : v_minus - variations_at_infinity(chain, false);
    };
    int count = up_to(iv.hi) - (iv.lo ? up_to(iv.lo) : 0);
    if (iv.hi && sign_at(chain.front(), *iv.hi) == 0) --count;
    return count;
}

}  // namespace

int sturm_count(const RationalPoly& p, const Interval& iv) {
    if (p.is_zero()) throw DomainError("the zero polynomial has no finite root count");
    if (p.degree() == 0) return 0;
    if (iv.lo && iv.hi && !(*iv.lo < *iv.hi)) return 0;
    return count_with_chain(sturm_chain(to_integer(p)), iv);
}

int real_root_count(const RationalPoly& p, const Interval& iv) {
    if (p.is_zero()) throw DomainError("the zero polynomial has no finite root count");
    if (p.degree() == 0) return 0;
    if (iv.lo && iv.hi && !(*iv.lo < *iv.hi)) return 0;
    // The last element of the chain is gcd(p, p') up to a constant; when it
    // is constant p is square-free and the chain already answers.
    const auto chain = sturm_chain(to_integer(p));
    if (chain.back().size() == 1) return count_with_chain(chain, iv);
    const auto factors = square_free_decomposition(p);
    int total = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        total += static_cast<int>(i + 1) * sturm_count(factors[i], iv);
    }
    return total;
}

std::string_view to_string(PolyFamily f) { return f == PolyFamily::PHI ? "PHI" : "PI"; }

PolyFamily poly_family_from_string(std::string_view s) {
    std::string up(s);
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char ch) { return std::toupper(ch); });
    if (up == "PHI") return PolyFamily::PHI;
    if (up == "PI") return PolyFamily::PI;
    throw DomainError("unknown polynomial family '" + std::string(s) + "'");
}

mpq_class parse_rational(std::string_view s) {
    static const std::regex grammar(R"(([+-]?)(?:(\d+)/(\d+)|(\d+)|(\d*)\.(\d+)))");
    const std::string t(s);
    std::smatch m;
    if (!std::regex_match(t, m, grammar)) {
        throw DomainError("'" + t + "' is not a rational number (use P/Q or a decimal)");
    }
    const bool negative = m[1] == "-";
    mpq_class r;
    if (m[2].matched) {
        const mpz_class den(m[3].str(), 10);
        if (den == 0) throw DomainError("'" + t + "' has a zero denominator");
        r = mpq_class(mpz_class(m[2].str(), 10), den);
    } else if (m[4].matched) {
        r = mpq_class(mpz_class(m[4].str(), 10));
    } else {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, m[6].length());
        r = mpq_class(mpz_class(m[5].str() + m[6].str(), 10), scale);
    }
    r.canonicalize();
    return negative ? mpq_class(-r) : r;
}

RationalPoly jensen_poly(PolyFamily f, const mpq_class& nu, int n) {
    check_order(nu, n);
    const mpq_class second = f == PolyFamily::PHI ? mpq_class(nu + 2) : mpq_class(nu + 1);
    std::vector<mpq_class> c;
    for (int k = 0; k <= n; ++k) {
        const mpq_class den = poch(nu + 1, k) * poch(second, 2 * k);
        if (den == 0) throw DomainError("Pochhammer symbol vanishes at this nu");
        mpq_class v = binomial(n, k) / den;
        if (k % 2 == 1) v = -v;
        c.push_back(v);
    }
    return RationalPoly(std::move(c));
}

RationalPoly hypergeometric_poly(PolyFamily f, const mpq_class& nu, int n) {
    check_order(nu, n);
    const mpq_class a = f == PolyFamily::PHI ? mpq_class((nu + 2) / 2) : mpq_class((nu + 1) / 2);
    const mpq_class b = f == PolyFamily::PHI ? mpq_class((nu + 3) / 2) : mpq_class((nu + 2) / 2);
    std::vector<mpq_class> c;
    mpq_class fact = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) fact *= k;
        const mpq_class den = poch(nu + 1, k) * poch(a, k) * poch(b, k) * fact;
        if (den == 0) throw DomainError("Pochhammer symbol vanishes at this nu");
        c.push_back(poch(mpq_class(-n), k) / den);
    }
    return RationalPoly(std::move(c));
}

HyperbolicityReport certify_hyperbolic(PolyFamily f, const mpq_class& nu, int n_max) {
    check_order(nu, n_max);
    HyperbolicityReport r;
    r.family = f;
    r.nu = nu;
    r.n_max = n_max;
    const Interval positive{mpq_class(0), std::nullopt};
    for (int n = 0; n <= n_max; ++n) {
        const RationalPoly p = jensen_poly(f, nu, n);
        const int count = real_root_count(p, positive);
        r.positive_root_counts.push_back(count);
        if (count != n) r.failures.push_back(n);

        // Rescale x -> x/4: coefficient k gains a factor 4^k.
        std::vector<mpq_class> scaled = p.coefficients();
        mpq_class s = 1;
        for (auto& x : scaled) {
            x *= s;
            s *= 4;
        }
        if (!(RationalPoly(scaled) == hypergeometric_poly(f, nu, n))) r.hypergeometric_match = false;
    }
    r.certified = r.failures.empty() && r.hypergeometric_match;
    return r;
}

}  // namespace bxc
