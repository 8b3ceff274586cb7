#include <doctest.h>

#include <cmath>
#include <complex>

#include "weil/analyzer.hpp"
#include "weil/labels.hpp"
#include "weil/roots.hpp"

using namespace weil;

namespace {

// Independent small-instance oracle: every subset product of normalized
// eigenvalues lambda^{+-1} over balanced signed subsets, checked against all
// roots of unity of order <= bound in double precision.
std::vector<ExceptionalWitness> witnesses_by_products(const WeilPolynomial& P, long bound) {
    auto roots = complex_roots(P.coeffs, 128);
    double sq = std::sqrt(Integer(P.q).get_d());
    std::vector<std::complex<double>> upper;
    for (const auto& r : roots) {
        double re = r.re.to_double() / sq, im = r.im.to_double() / sq;
        if (im > 1e-12) upper.emplace_back(re, im);
    }
    REQUIRE(upper.size() == static_cast<size_t>(P.g));

    std::vector<ExceptionalWitness> out;
    const int g = P.g;
    std::vector<int> assign(static_cast<size_t>(g), 0);
    while (true) {
        int np = 0, nm = 0;
        for (int v : assign) {
            if (v == 1) ++np;
            if (v == -1) ++nm;
        }
        if ((np + nm) % 2 == 0 && np + nm > 0) {
            std::complex<double> prod(1, 0);
            for (int i = 0; i < g; ++i) {
                if (assign[static_cast<size_t>(i)] == 1) prod *= upper[static_cast<size_t>(i)];
                if (assign[static_cast<size_t>(i)] == -1) prod /= upper[static_cast<size_t>(i)];
            }
            bool near_unity = false;
            for (long n = 1; n <= bound && !near_unity; ++n)
                for (long k = 0; k < n; ++k) {
                    std::complex<double> zeta =
                        std::polar(1.0, 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n));
                    if (std::abs(prod - zeta) < 1e-9) {
                        near_unity = true;
                        break;
                    }
                }
            if (near_unity) {
                std::vector<int> tp, tm;
                for (int i = 0; i < g; ++i) {
                    if (assign[static_cast<size_t>(i)] == 1) tp.push_back(i);
                    if (assign[static_cast<size_t>(i)] == -1) tm.push_back(i);
                }
                out.push_back(make_witness(std::move(tp), std::move(tm)));
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

} // namespace

TEST_CASE("roots of quadratics") {
    // T^2 + 2: +- i sqrt(2)
    auto rs = complex_roots({Integer(1), Integer(0), Integer(2)}, 128);
    REQUIRE(rs.size() == 2);
    for (const auto& r : rs) {
        CHECK(std::abs(r.re.to_double()) < 1e-30);
        CHECK(std::abs(std::abs(r.im.to_double()) - std::sqrt(2.0)) < 1e-12);
    }

    // T^2 - T + 2: (1 +- i sqrt 7)/2, modulus sqrt 2
    auto P = parse_weil({Integer(-1)}, Integer(2), true);
    bool ok = false;
    auto rs2 = weil_roots(P, 128, &ok);
    CHECK(ok);
    REQUIRE(rs2.size() == 2);
    CHECK(std::abs(rs2[0].re.to_double() - 0.5) < 1e-12);
    CHECK(std::abs(std::abs(rs2[0].im.to_double()) - std::sqrt(7.0) / 2) < 1e-12);
}

TEST_CASE("repeated roots through the squarefree decomposition") {
    // (T^2 + 2)^2
    std::vector<Integer> sq{1, 0, 4, 0, 4};
    auto rs = complex_roots(sq, 128);
    CHECK(rs.size() == 4);
}

TEST_CASE("relation lattice on elliptic cases") {
    AnalyzerOptions opts;

    // supersingular: lambda = +-i, so 2 theta = pi: lattice [[2, -1]]
    auto ss = parse_weil({Integer(0)}, Integer(2), true);
    Certification cert;
    auto L = relation_lattice(ss, opts, &cert);
    CHECK(cert == Certification::stable_across_precisions);
    REQUIRE(L.rank() == 1);
    CHECK(L.basis[0] == IntVec{Integer(2), Integer(-1)});

    // ordinary: no relation
    auto ord = parse_weil({Integer(-1)}, Integer(2), true);
    auto L2 = relation_lattice(ord, opts, &cert);
    CHECK(L2.rank() == 0);
    CHECK(cert == Certification::stable_across_precisions);
}

TEST_CASE("analyze the corpus labels") {
    struct Expect {
        const char* label;
        int delta;
        bool exceptional;
    };
    for (const Expect& e : {Expect{"3.2.ac_b_a", 2, false}, Expect{"4.3.ae_k_ay_bw", 3, true},
                            Expect{"4.2.ac_b_c_ag", 3, true}, Expect{"5.2.ae_g_ae_b_a", 4, false}}) {
        auto P = decode_label(e.label);
        auto rep = analyze(P);
        CHECK(rep.is_weil);
        CHECK(rep.newton_valid);
        CHECK(rep.angle_rank == e.delta);
        CHECK(static_cast<int>(rep.relations.rank()) == P.g - e.delta);
        CHECK(!rep.exceptional.empty() == e.exceptional);
        CHECK(rep.certification == Certification::stable_across_precisions);
    }

    // frozen witness shapes
    auto rep = analyze(decode_label("4.3.ae_k_ay_bw"));
    REQUIRE(rep.exceptional.size() == 2);
    CHECK(rep.exceptional[0].t_plus == std::vector<int>{0, 2, 3});
    CHECK(rep.exceptional[0].t_minus == std::vector<int>{1});
    CHECK(rep.exceptional[0].codim_bound == 2);
}

TEST_CASE("g=1 never has exceptional relations") {
    for (const char* lbl : {"1.2.a", "1.2.ab", "1.3.ac"}) {
        auto rep = analyze(decode_label(lbl));
        CHECK(rep.exceptional.empty());
    }
}

TEST_CASE("subset-product oracle agrees on small instances") {
    // 2.2.a_a is T^4 + 4 (supersingular): its relations include one-sided
    // balanced subsets, which the raw analyzer reports as-is
    for (const char* lbl : {"1.2.a", "1.2.ab", "3.2.ac_b_a", "2.2.a_a"}) {
        auto P = decode_label(lbl);
        auto rep = analyze(P);
        auto oracle = witnesses_by_products(P, 24);
        CHECK(rep.exceptional == oracle);
    }
}

TEST_CASE("not a weil polynomial") {
    // T^2 - 3T + 2 satisfies the functional equation (roots multiply to q)
    // but the roots are 1 and 2, so the modulus check flags it
    auto P = parse_weil({Integer(1), Integer(-3), Integer(2)}, Integer(2));
    bool ok = true;
    weil_roots(P, 128, &ok);
    CHECK(!ok);
}

TEST_CASE("roots pair off to q, and corpus polygons validate") {
    const long prec = 128;
    for (const char* lbl :
         {"3.2.ac_b_a", "4.3.ae_k_ay_bw", "4.4.ab_af_a_bc", "4.2.ac_b_c_ag", "4.2.ac_b_ac_f",
          "4.2.ad_c_g_ap", "4.3.ab_a_g_ag", "4.2.ad_e_ag_k", "4.4.ae_k_ay_ca", "4.2.ac_a_e_ag",
          "5.2.ae_g_ae_b_a", "5.2.ac_b_a_a_a", "5.2.a_ac_ae_c_m"}) {
        auto P = decode_label(lbl);
        bool ok = false;
        auto roots = weil_roots(P, prec, &ok);
        CHECK(ok);

        // conjugate-pair closure: each root has a partner multiplying to q
        double q = Integer(P.q).get_d();
        for (const auto& r : roots) {
            bool paired = false;
            for (const auto& s : roots) {
                Complex prod = r * s;
                if (std::abs(prod.re.to_double() - q) < 1e-9 &&
                    std::abs(prod.im.to_double()) < 1e-9)
                    paired = true;
            }
            CHECK(paired);
        }

        // the slope multiset of a genuine polynomial is a valid polygon
        CHECK_NOTHROW(newton_polygon_of(P));
    }
}

TEST_CASE("doubling the starting precision changes nothing") {
    for (const char* lbl : {"3.2.ac_b_a", "4.3.ae_k_ay_bw"}) {
        auto P = decode_label(lbl);
        AnalyzerOptions lo, hi;
        hi.precision_bits = 384;
        auto a = analyze(P, lo);
        auto b = analyze(P, hi);
        CHECK(a.relations.rank() == b.relations.rank());
        CHECK(a.relations.basis == b.relations.basis);
        CHECK(a.exceptional == b.exceptional);
    }
}

TEST_CASE("unity-order default bound") {
    CHECK(default_unity_order_bound(1) >= 12);
    CHECK(default_unity_order_bound(6) > default_unity_order_bound(1));
}

TEST_CASE("report json") {
    auto P = decode_label("1.2.a");
    auto rep = analyze(P);
    auto s = rep.to_json(P);
    CHECK(s.find("\"schema\":\"weil-lab/1\"") != std::string::npos);
    CHECK(s.find("\"angle_rank\"") != std::string::npos);
}
