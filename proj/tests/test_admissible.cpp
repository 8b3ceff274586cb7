#include <doctest.h>

#include <random>

#include "weil/admissible.hpp"
#include "weil/enumerate.hpp"

using namespace weil;

namespace {

WeightedPermRep make_rep(const std::string& slopes, const std::vector<std::string>& gens) {
    NewtonPolygon np = NewtonPolygon::from_string(slopes);
    int g = np.g();
    std::vector<SignedPerm> ps;
    for (const auto& s : gens) ps.push_back(parse_cycles(s, g));
    ps.push_back(conjugation_element(g));
    return WeightedPermRep(weight_from_newton(np), PermGroup::generate(g, ps));
}

} // namespace

TEST_CASE("local conditions on small chains") {
    // D = G0 = G1 = Z/3: all quotients trivial, fine at p = 3
    PermGroup z3 = PermGroup::generate(3, {parse_cycles("(1 2 3)(1~ 2~ 3~)", 3)});
    CHECK(check_local_galois_conditions({z3, z3, z3, 3}));
    // but G1 = Z/3 is not a 2-group
    CHECK(!check_local_galois_conditions({z3, z3, z3, 2}));

    // D = G0 cyclic of order 4, G1 trivial: conjugation is trivial, so the
    // tame generator must satisfy tau^(p-1) = e
    PermGroup c4 = PermGroup::generate(2, {parse_cycles("(1 2 1~ 2~)", 2)});
    PermGroup triv = trivial_group(2);
    CHECK(!check_local_galois_conditions({c4, c4, triv, 3}));
    CHECK(check_local_galois_conditions({c4, c4, triv, 5}));

    CHECK_THROWS_AS(check_local_galois_conditions({c4, c4, triv, 4}), validation_error);
}

TEST_CASE("the trivial chain always passes") {
    for (int g = 1; g <= 3; ++g) {
        PermGroup triv = trivial_group(g);
        for (int p : {2, 3, 5, 7, kGenericPrime})
            CHECK(check_local_galois_conditions({triv, triv, triv, p}));
    }
}

TEST_CASE("abelian closed form is an oracle for condition (iv)") {
    // for abelian D with G1 trivial: conditions hold iff D/G0 cyclic, G0 cyclic
    // of order coprime to p, and some generator tau of G0 has tau^(p-1) = e
    // (conjugation in an abelian group is trivial)
    std::mt19937 rng(5);
    auto W = all_hyperoctahedral(3);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 100; ++trial) {
        PermGroup D = PermGroup::generate(3, {W[rng() % W.size()]});
        // cyclic D, hence abelian; sample G0 = a subgroup of D
        auto subs = all_subgroups(D);
        const PermGroup& G0 = subs[rng() % subs.size()];
        PermGroup triv = trivial_group(3);
        for (int p : {2, 3, 5, 7}) {
            if (D.order() % static_cast<size_t>(p) == 0) continue; // tame case only
            bool expected = false;
            // closed form: G0 cyclic (it is, subgroup of cyclic), D/G0 cyclic
            // (quotient of cyclic), exists tau generating G0 with tau^p = tau
            for (const auto& t : G0.elements()) {
                if (PermGroup::generate(3, {t}).order() != G0.order()) continue;
                SignedPerm tp = identity_perm(3);
                for (int i = 0; i < p; ++i) tp = compose(tp, t);
                if (tp == t) expected = true;
            }
            CHECK(check_local_galois_conditions({D, G0, triv, p}) == expected);
            ++checked;
        }
    }
    CHECK(checked >= 60);
}

TEST_CASE("strong orbit condition") {
    auto ord = make_rep("0,0,1,1", {"(1 2 1~ 2~)"});
    CHECK(strong_orbit_condition(ord, trivial_group(2)));

    auto ss = make_rep("1/2,1/2,1/2,1/2", {"(1 2)(1~ 2~)", "(1 1~)"});
    CHECK(!strong_orbit_condition(ss, trivial_group(2)));
    CHECK(strong_orbit_condition(ss, PermGroup::generate(2, {conjugation_element(2)})));

    // D not inside Stab(w): precondition failure
    PermGroup flip = PermGroup::generate(2, {parse_cycles("(1 1~)", 2)});
    CHECK_THROWS_AS(strong_orbit_condition(ord, flip), precondition_error);
}

TEST_CASE("ordinary pairs are strongly admissible at every p") {
    auto ord = make_rep("0,0,1,1", {"(1 2 1~ 2~)"});
    for (int p : {2, 3, 5, 7, kGenericPrime}) {
        auto rep = find_admissible_filtrations(ord, p, false);
        CHECK(rep.weak);
        CHECK(rep.strong);
        REQUIRE(!rep.witnesses.empty());
        // the trivial filtration is among the witnesses
        bool has_trivial = false;
        for (const auto& f : rep.witnesses)
            if (f.D.order() == 1) has_trivial = true;
        CHECK(has_trivial);
    }
    CHECK_THROWS_AS(find_admissible_filtrations(ord, 6, false), validation_error);
}

TEST_CASE("supersingular needs the conjugation element in D") {
    auto ss = make_rep("1/2,1/2,1/2,1/2", {"(1 2)(1~ 2~)", "(1 1~)"});
    auto rep = find_admissible_filtrations(ss, 3, true);
    CHECK(rep.strong);
    for (size_t i = 0; i < rep.witnesses.size(); ++i) {
        CHECK(rep.witness_strong[i]);
        // every strong witness here has even weight sums, forcing |D| even
        CHECK(rep.witnesses[i].D.order() % 2 == 0);
    }
}

TEST_CASE("every strong witness is weak") {
    auto rho = make_rep("0,0,1/2,1/2,1,1", {"(1 2~ 3~)(2 3 1~)", "(1 2~)(2 1~)"});
    for (int p : {2, 3, kGenericPrime}) {
        auto rep = find_admissible_filtrations(rho, p, true);
        for (size_t i = 0; i < rep.witnesses.size(); ++i) {
            CHECK(rep.witness_strong[i]);
            CHECK(check_local_galois_conditions(rep.witnesses[i]));
        }
        if (rep.strong) CHECK(rep.weak);
    }
}

TEST_CASE("trivial-D strong condition is exactly integral weights (g <= 3)") {
    for (int g = 2; g <= 3; ++g) {
        for (const auto& np : all_newton_polygons(g)) {
            WeightFunction w = weight_from_newton(np);
            bool integral = np.is_ordinary();
            for (const auto& cls : enumerate_transitive_subgroups(w)) {
                WeightedPermRep rho(w, cls.group);
                CHECK(strong_orbit_condition(rho, trivial_group(g)) == integral);
            }
        }
    }
}
