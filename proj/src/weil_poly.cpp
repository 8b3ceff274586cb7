#include "weil/weil_poly.hpp"

#include <sstream>

namespace weil {

std::string WeilPolynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        const Integer& a = coeffs[i];
        if (a == 0) continue;
        int deg = 2 * g - static_cast<int>(i);
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0)
            os << "-";
        Integer absa = abs(a);
        if (absa != 1 || deg == 0) os << absa.get_str();
        if (deg > 0) {
            if (absa != 1) os << "*";
            os << "T";
            if (deg > 1) os << "^" << deg;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

long prime_of_prime_power(const Integer& q, int* k_out) {
    if (q < 2) throw validation_error("q must be at least 2");
    Integer m = q;
    long p = 0;
    for (long d = 2; Integer(d) * d <= m; ++d) {
        if (m % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) {
        // q itself prime
        if (k_out) *k_out = 1;
        if (!q.fits_slong_p()) throw validation_error("prime part of q too large");
        return q.get_si();
    }
    int k = 0;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    if (m != 1)
        throw validation_error("q = " + q.get_str() + " is not a prime power");
    if (k_out) *k_out = k;
    return p;
}

WeilPolynomial parse_weil(const std::vector<Integer>& coeffs, const Integer& q,
                          bool half_list) {
    WeilPolynomial P;
    P.q = q;
    P.p = prime_of_prime_power(q, &P.k);

    if (half_list) {
        P.g = static_cast<int>(coeffs.size());
        if (P.g < 1) throw validation_error("need at least a_1");
        P.coeffs.resize(static_cast<size_t>(2 * P.g + 1));
        P.coeffs[0] = 1;
        for (int i = 1; i <= P.g; ++i) P.coeffs[static_cast<size_t>(i)] = coeffs[static_cast<size_t>(i - 1)];
        Integer qpow = 1;
        for (int i = 1; i <= P.g; ++i) {
            qpow *= q;
            P.coeffs[static_cast<size_t>(P.g + i)] = qpow * P.coeffs[static_cast<size_t>(P.g - i)];
        }
        return P;
    }

    if (coeffs.size() < 3 || coeffs.size() % 2 == 0)
        throw validation_error("full coefficient list must have odd length 2g+1 >= 3");
    P.g = static_cast<int>(coeffs.size() / 2);
    if (coeffs[0] != 1) throw validation_error("polynomial must be monic (a_0 = 1)");
    P.coeffs = coeffs;
    Integer qpow = 1;
    for (int i = 1; i <= P.g; ++i) {
        qpow *= q;
        if (P.coeffs[static_cast<size_t>(P.g + i)] != qpow * P.coeffs[static_cast<size_t>(P.g - i)])
            throw validation_error("functional equation violated at a_" +
                                   std::to_string(P.g + i) + " (expected q^i * a_" +
                                   std::to_string(P.g - i) + ")");
    }
    return P;
}

std::vector<Rational> newton_slopes_of(const WeilPolynomial& P) {
    // points (i, v_p(a_i)/k), zero coefficients omitted
    struct Pt {
        long x;
        Rational y;
    };
    std::vector<Pt> pts;
    for (size_t i = 0; i < P.coeffs.size(); ++i) {
        if (P.coeffs[i] == 0) continue;
        Integer a = abs(P.coeffs[i]);
        long v = 0;
        while (a % P.p == 0) {
            a /= P.p;
            ++v;
        }
        pts.push_back({static_cast<long>(i), make_rational(v, P.k)});
    }
    // lower hull, monotone scan
    std::vector<Pt> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull[hull.size() - 1];
            // pop b if it lies on or above segment a->pt
            if ((b.y - a.y) * (pt.x - a.x) >= (pt.y - a.y) * (b.x - a.x))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    std::vector<Rational> slopes;
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        Rational s = (hull[i + 1].y - hull[i].y) / Rational(hull[i + 1].x - hull[i].x);
        for (long j = 0; j < hull[i + 1].x - hull[i].x; ++j) slopes.push_back(s);
    }
    return slopes;
}

NewtonPolygon newton_polygon_of(const WeilPolynomial& P) {
    return NewtonPolygon(newton_slopes_of(P));
}

} // namespace weil
