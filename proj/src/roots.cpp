#include "weil/roots.hpp"

#include <algorithm>

#include "weil/errors.hpp"

namespace weil {

namespace {

std::vector<Rational> to_rat(const std::vector<Integer>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& a : v) out.emplace_back(a);
    return out;
}

std::vector<Rational> derivative(const std::vector<Rational>& p) {
    std::vector<Rational> d;
    long n = static_cast<long>(p.size()) - 1;
    for (long i = 0; i < n; ++i) d.push_back(p[static_cast<size_t>(i)] * Rational(n - i));
    return d;
}

void trim(std::vector<Rational>& a) {
    size_t i = 0;
    while (i < a.size() && a[i] == 0) ++i;
    a.erase(a.begin(), a.begin() + static_cast<long>(i));
}

std::vector<Rational> poly_sub(std::vector<Rational> a, const std::vector<Rational>& b) {
    // align by degree (descending coefficients)
    if (b.size() > a.size()) a.insert(a.begin(), b.size() - a.size(), Rational(0));
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= b[i];
    trim(a);
    return a;
}

std::vector<Rational> poly_mod(std::vector<Rational> a, const std::vector<Rational>& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a[0] / b[0];
        for (size_t i = 0; i < b.size(); ++i) a[i] -= f * b[i];
        a.erase(a.begin());
        trim(a);
    }
    return a;
}

std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a[0] != 1) {
        Rational lead = a[0];
        for (auto& c : a) c /= lead;
    }
    return a;
}

std::vector<Rational> poly_div_exact(const std::vector<Rational>& a,
                                     const std::vector<Rational>& b) {
    std::vector<Rational> rem = a, quot;
    while (rem.size() >= b.size() && !rem.empty()) {
        Rational f = rem[0] / b[0];
        quot.push_back(f);
        for (size_t i = 0; i < b.size(); ++i) rem[i] -= f * b[i];
        rem.erase(rem.begin());
    }
    return quot;
}

// Yun's algorithm: P = prod factors[i].first ^ factors[i].second, each factor
// squarefree and pairwise coprime.
std::vector<std::pair<std::vector<Rational>, int>> squarefree_decomposition(
    const std::vector<Rational>& P) {
    std::vector<std::pair<std::vector<Rational>, int>> out;
    auto g = poly_gcd(P, derivative(P));
    if (g.size() <= 1) {
        out.emplace_back(P, 1);
        return out;
    }
    auto b = poly_div_exact(P, g);
    auto c = poly_div_exact(derivative(P), g);
    auto d = poly_sub(c, derivative(b));
    int i = 1;
    while (b.size() > 1) {
        auto f = poly_gcd(b, d);
        if (f.size() > 1) out.emplace_back(f, i);
        b = poly_div_exact(b, f);
        c = poly_div_exact(d, f);
        d = poly_sub(c, derivative(b));
        ++i;
    }
    return out;
}

Complex eval_poly(const std::vector<Real>& coeffs, const Complex& z) {
    Complex acc(z.prec());
    for (const auto& c : coeffs) {
        acc = acc * z;
        acc.re += c;
    }
    return acc;
}

// Ehrlich-Aberth on a squarefree integer polynomial
std::vector<Complex> aberth_roots(const std::vector<Integer>& sqz, long precision_bits) {
    const long n = static_cast<long>(sqz.size()) - 1;
    if (n <= 0) return {};
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits + 64);

    std::vector<Real> C, D;
    for (const auto& a : sqz) C.push_back(Real::from(a, prec));
    for (long i = 0; i < n; ++i)
        D.push_back(Real::from(sqz[static_cast<size_t>(i)] * (n - i), prec));

    // Cauchy-style radius: 1 + max |a_i / a_0|
    Real radius = Real::from(1, prec);
    for (size_t i = 1; i < sqz.size(); ++i) {
        Real t = Real::from(abs(sqz[i]), prec) / Real::from(abs(sqz[0]), prec);
        if (t > radius) radius = t;
    }
    radius += Real::from(1, prec);

    std::vector<Complex> z;
    Real pi = Real::pi(prec);
    for (long i = 0; i < n; ++i) {
        Real theta = pi * Real::from(2 * i + 1, prec) / Real::from(n, prec) +
                     Real::from(1, prec) / Real::from(n + 3, prec);
        Complex zi(prec);
        mpfr_cos(zi.re.raw(), theta.raw(), MPFR_RNDN);
        mpfr_sin(zi.im.raw(), theta.raw(), MPFR_RNDN);
        zi.re *= radius;
        zi.im *= radius;
        z.push_back(zi);
    }

    const Real tol = Real::pow2(-(precision_bits + 16), prec);
    bool converged = false;
    for (int iter = 0; iter < 500 && !converged; ++iter) {
        converged = true;
        for (long i = 0; i < n; ++i) {
            Complex& zi = z[static_cast<size_t>(i)];
            Complex pv = eval_poly(C, zi);
            Complex dv = eval_poly(D, zi);
            if (dv.abs2().is_zero()) {
                zi.re += tol + Real::from(1, prec) / Real::from(7 + i, prec);
                converged = false;
                continue;
            }
            Complex w = pv / dv;
            Complex s(prec);
            for (long j = 0; j < n; ++j) {
                if (j == i) continue;
                s = s + Complex(Real::from(1, prec), Real(prec)) /
                            (zi - z[static_cast<size_t>(j)]);
            }
            Complex denom = Complex(Real::from(1, prec), Real(prec)) - w * s;
            Complex corr = w / denom;
            zi = zi - corr;
            Real step = corr.abs();
            Real scale = zi.abs() + Real::from(1, prec);
            if (step > tol * scale) converged = false;
        }
    }
    if (!converged) throw error("root iteration did not converge; retry at higher precision");
    return z;
}

} // namespace

std::vector<Complex> complex_roots(const std::vector<Integer>& coeffs, long precision_bits) {
    if (precision_bits < 64)
        throw precondition_error("root finding needs at least 64 bits of precision");
    if (coeffs.size() < 2) return {};

    std::vector<Complex> out;
    for (const auto& [factor, mult] : squarefree_decomposition(to_rat(coeffs))) {
        Integer den = 1;
        for (const auto& c : factor) den = lcm(den, denominator(c));
        std::vector<Integer> fz;
        fz.reserve(factor.size());
        for (const auto& c : factor) fz.push_back(Integer(c.get_num()) * (den / c.get_den()));
        auto roots = aberth_roots(fz, precision_bits);
        for (const auto& r : roots)
            for (int m = 0; m < mult; ++m) out.push_back(r);
    }

    std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
        Real aa = a.arg(), ba = b.arg();
        if (aa < ba) return true;
        if (ba < aa) return false;
        return a.re < b.re;
    });
    return out;
}

std::vector<Complex> weil_roots(const WeilPolynomial& P, long precision_bits, bool* weil_ok) {
    auto roots = complex_roots(P.coeffs, precision_bits);
    if (weil_ok) {
        const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits + 64);
        Real sq = Real::from(P.q, prec).sqrt();
        Real bound = Real::pow2(-(precision_bits / 2), prec);
        bool ok = roots.size() == static_cast<size_t>(2 * P.g);
        for (const auto& r : roots) {
            Real dev = (r.abs() - sq).abs();
            if (!(dev < bound)) ok = false;
        }
        *weil_ok = ok;
    }
    return roots;
}

} // namespace weil
