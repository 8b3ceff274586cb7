#include "weil/analyzer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "weil/roots.hpp"

namespace weil {

namespace {

// theta_1..theta_g: principal arguments of the normalized eigenvalues, one
// per conjugate pair, ascending. Real eigenvalues contribute 0 or pi.
std::vector<Real> pair_angles(const WeilPolynomial& P, long precision_bits, bool* weil_ok) {
    auto roots = weil_roots(P, precision_bits, weil_ok);
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits + 64);
    Real sq = Real::from(P.q, prec).sqrt();
    Real eps = Real::pow2(-(precision_bits / 2), prec);

    std::vector<Real> upper, reals;
    for (const auto& r : roots) {
        Complex lambda{r.re / sq, r.im / sq};
        if (lambda.im.abs() < eps) {
            reals.push_back(lambda.arg()); // 0 or pi
        } else if (lambda.im > Real(prec)) {
            upper.push_back(lambda.arg());
        }
    }
    // real roots pair with themselves (multiplicity is even for them)
    std::sort(reals.begin(), reals.end(), [](const Real& a, const Real& b) { return a < b; });
    for (size_t i = 0; i + 1 < reals.size(); i += 2) upper.push_back(reals[i]);
    std::sort(upper.begin(), upper.end(), [](const Real& a, const Real& b) { return a < b; });
    if (upper.size() != static_cast<size_t>(P.g))
        throw error("conjugate pairing failed: got " + std::to_string(upper.size()) +
                    " angles for g = " + std::to_string(P.g));
    return upper;
}

// accepted integer relations at one precision, as rows (c_1..c_g, m)
IntMat relations_at(const WeilPolynomial& P, long precision_bits, bool* weil_ok) {
    const int g = P.g;
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits + 64);
    auto thetas = pair_angles(P, precision_bits, weil_ok);

    Real pi = Real::pi(prec);
    std::vector<Real> xs;
    for (const auto& t : thetas) xs.push_back(t / pi);
    xs.push_back(Real::from(1, prec));

    // classical integer-relation embedding, scaled by 2^(precision/2)
    const long scale_bits = precision_bits / 2;
    Real scale = Real::pow2(scale_bits, prec);
    const size_t n = static_cast<size_t>(g) + 1;
    IntMat basis(n, IntVec(n + 1, Integer(0)));
    for (size_t i = 0; i < n; ++i) {
        basis[i][i] = 1;
        basis[i][n] = (xs[i] * scale).round();
    }
    lll_reduce(basis);

    // accept rows whose exact residual clears the noise floor: true relations
    // sit near 2^-precision, continued-fraction artifacts near 2^-(precision/2)
    Real tol = Real::pow2(-(3 * precision_bits / 4), prec);
    IntMat accepted;
    for (const auto& row : basis) {
        IntVec v(row.begin(), row.begin() + static_cast<long>(n));
        bool nonzero = std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
        if (!nonzero) continue;
        Real resid(prec);
        for (size_t i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            resid += Real::from(v[i], prec) * xs[i];
        }
        if (resid.abs() < tol) accepted.push_back(std::move(v));
    }
    return accepted;
}

} // namespace

long default_unity_order_bound(int g) {
    // lcm of all n with phi(n) <= 24 g
    long bound = 24L * g;
    auto phi = [](long n) {
        long r = n;
        for (long p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                while (n % p == 0) n /= p;
                r -= r / p;
            }
        if (n > 1) r -= r / n;
        return r;
    };
    Integer L = 1;
    for (long n = 1; n <= 6 * bound; ++n)
        if (phi(n) <= bound) L = lcm(L, Integer(n));
    if (!L.fits_slong_p()) return 1L << 62;
    return L.get_si();
}

RelationLattice relation_lattice(const WeilPolynomial& P, const AnalyzerOptions& opts,
                                 Certification* cert) {
    if (opts.precision_bits < 64)
        throw precondition_error("precision_bits must be at least 64");

    long p = opts.precision_bits;
    for (;;) {
        bool ok1 = false, ok2 = false;
        IntMat h1 = hermite_normal_form(relations_at(P, p, &ok1));
        IntMat h2 = hermite_normal_form(relations_at(P, 2 * p, &ok2));

        RelationLattice L;
        L.g = P.g;
        L.precision_bits = p;
        L.residual_bound = std::pow(2.0, static_cast<double>(-(3 * p / 4)));

        if (h1 == h2) {
            L.basis = std::move(h1);
            if (cert) *cert = Certification::stable_across_precisions;
            return L;
        }
        if (4 * p > opts.max_precision) {
            // disagreement persists: keep only relations certified at both
            // precisions and report the lattice as numeric
            IntMat kept;
            for (const auto& v : h1)
                if (in_rational_span(h2, v)) kept.push_back(v);
            L.basis = hermite_normal_form(kept);
            if (cert) *cert = Certification::numeric;
            return L;
        }
        p *= 2;
    }
}

std::vector<ExceptionalWitness> exceptional_relations(const RelationLattice& L,
                                                      long max_unity_order) {
    const int g = L.g;
    std::vector<ExceptionalWitness> out;
    if (L.basis.empty()) return out;

    // solve for the rational combination hitting c on the first g coordinates;
    // projection preserves rank since (0,...,0,m) is never a relation
    IntMat proj;
    for (const auto& row : L.basis) proj.emplace_back(row.begin(), row.begin() + g);
    std::vector<int> assign(static_cast<size_t>(g), 0);
    while (true) {
        int np = 0, nm = 0;
        for (int v : assign) {
            if (v == 1) ++np;
            if (v == -1) ++nm;
        }
        if ((np + nm) % 2 == 0 && np + nm > 0) {
            IntVec c(static_cast<size_t>(g));
            for (int i = 0; i < g; ++i) c[static_cast<size_t>(i)] = assign[static_cast<size_t>(i)];
            if (in_rational_span(proj, c)) {
                // recover m' by solving sum y_j basis_j = (c, m')
                // RREF solve over Q
                const size_t k = L.basis.size();
                RatMatrix A(static_cast<size_t>(g), k);
                for (size_t j = 0; j < k; ++j)
                    for (int i = 0; i < g; ++i)
                        A.at(static_cast<size_t>(i), j) = Rational(L.basis[j][static_cast<size_t>(i)]);
                // solve A y = c by elimination on augmented matrix
                RatMatrix aug(static_cast<size_t>(g), k + 1);
                for (int i = 0; i < g; ++i) {
                    for (size_t j = 0; j < k; ++j) aug.at(static_cast<size_t>(i), j) = A.at(static_cast<size_t>(i), j);
                    aug.at(static_cast<size_t>(i), k) = Rational(c[static_cast<size_t>(i)]);
                }
                // gaussian elimination
                std::vector<Rational> y(k, Rational(0));
                {
                    size_t r = 0;
                    std::vector<long> pivot_of_col(k, -1);
                    for (size_t cc = 0; cc < k && r < aug.rows(); ++cc) {
                        size_t piv = r;
                        while (piv < aug.rows() && aug.at(piv, cc) == 0) ++piv;
                        if (piv == aug.rows()) continue;
                        for (size_t t = 0; t <= k; ++t) std::swap(aug.at(r, t), aug.at(piv, t));
                        Rational d = aug.at(r, cc);
                        for (size_t t = cc; t <= k; ++t) aug.at(r, t) /= d;
                        for (size_t i2 = 0; i2 < aug.rows(); ++i2) {
                            if (i2 == r || aug.at(i2, cc) == 0) continue;
                            Rational f = aug.at(i2, cc);
                            for (size_t t = cc; t <= k; ++t) aug.at(i2, t) -= f * aug.at(r, t);
                        }
                        pivot_of_col[cc] = static_cast<long>(r);
                        ++r;
                    }
                    for (size_t cc = 0; cc < k; ++cc)
                        if (pivot_of_col[cc] >= 0)
                            y[cc] = aug.at(static_cast<size_t>(pivot_of_col[cc]), k);
                }
                Rational mprime(0);
                for (size_t j = 0; j < k; ++j)
                    mprime += y[j] * Rational(L.basis[j][static_cast<size_t>(g)]);
                // zeta = exp(-i pi m'): order = 2b / gcd(a, 2b) for m' = a/b
                Integer a = mprime.get_num(), b = mprime.get_den();
                Integer twob = 2 * b, gcd_ab;
                mpz_gcd(gcd_ab.get_mpz_t(), a.get_mpz_t(), twob.get_mpz_t());
                Integer ord = twob / gcd_ab;
                if (ord <= max_unity_order) {
                    std::vector<int> tp, tm;
                    for (int i = 0; i < g; ++i) {
                        if (assign[static_cast<size_t>(i)] == 1) tp.push_back(i);
                        if (assign[static_cast<size_t>(i)] == -1) tm.push_back(i);
                    }
                    out.push_back(make_witness(std::move(tp), std::move(tm)));
                }
            }
        }
        int pos = 0;
        while (pos < g) {
            int& v = assign[static_cast<size_t>(pos)];
            if (v == 0) {
                v = 1;
                break;
            }
            if (v == 1) {
                v = -1;
                break;
            }
            v = 0;
            ++pos;
        }
        if (pos == g) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

AnalyzerReport analyze(const WeilPolynomial& P, const AnalyzerOptions& opts) {
    AnalyzerReport rep;
    rep.newton = newton_slopes_of(P);
    try {
        NewtonPolygon np(rep.newton);
        rep.newton_valid = true;
    } catch (const validation_error&) {
        rep.newton_valid = false;
    }

    Certification cert = Certification::numeric;
    rep.relations = relation_lattice(P, opts, &cert);
    rep.certification = cert;
    rep.angle_rank = P.g - static_cast<int>(rep.relations.rank());

    bool ok = false;
    weil_roots(P, opts.precision_bits, &ok);
    rep.is_weil = ok;

    long bound = opts.max_unity_order > 0 ? opts.max_unity_order
                                          : default_unity_order_bound(P.g);
    rep.exceptional = exceptional_relations(rep.relations, bound);
    return rep;
}

std::string AnalyzerReport::to_json(const WeilPolynomial& P) const {
    std::ostringstream os;
    os << "{\"schema\":\"weil-lab/1\",\"g\":" << P.g << ",\"p\":" << P.p
       << ",\"q\":" << P.q.get_str() << ",\"coefficients\":[";
    for (size_t i = 0; i < P.coeffs.size(); ++i) {
        if (i) os << ",";
        os << P.coeffs[i].get_str();
    }
    os << "],\"newton\":[";
    for (size_t i = 0; i < newton.size(); ++i) {
        if (i) os << ",";
        os << "\"" << rational_to_string(newton[i]) << "\"";
    }
    os << "],\"newton_valid\":" << (newton_valid ? "true" : "false")
       << ",\"is_weil\":" << (is_weil ? "true" : "false")
       << ",\"angle_rank\":" << angle_rank << ",\"lattice_rank\":" << relations.rank()
       << ",\"relations\":[";
    for (size_t i = 0; i < relations.basis.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (size_t j = 0; j < relations.basis[i].size(); ++j) {
            if (j) os << ",";
            os << relations.basis[i][j].get_str();
        }
        os << "]";
    }
    os << "],\"precision_bits\":" << relations.precision_bits << ",\"exceptional\":[";
    for (size_t i = 0; i < exceptional.size(); ++i) {
        if (i) os << ",";
        os << "{\"t_plus\":[";
        for (size_t j = 0; j < exceptional[i].t_plus.size(); ++j) {
            if (j) os << ",";
            os << exceptional[i].t_plus[j] + 1;
        }
        os << "],\"t_minus\":[";
        for (size_t j = 0; j < exceptional[i].t_minus.size(); ++j) {
            if (j) os << ",";
            os << exceptional[i].t_minus[j] + 1;
        }
        os << "],\"codim_bound\":" << exceptional[i].codim_bound << "}";
    }
    os << "],\"certification\":\""
       << (certification == Certification::stable_across_precisions
               ? "stable-across-precisions"
               : "numeric")
       << "\"}";
    return os.str();
}

} // namespace weil
