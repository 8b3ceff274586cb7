#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weil/intlattice.hpp"
#include "weil/newton.hpp"
#include "weil/weil_poly.hpp"
#include "weil/wpr.hpp"

namespace weil {

enum class Certification { numeric, stable_across_precisions };

// Integer relations sum c_i * theta_i + m * pi = 0 among the principal
// arguments theta_1..theta_g of the normalized eigenvalues (one per conjugate
// pair). Basis rows are (c_1..c_g, m) in Hermite normal form.
struct RelationLattice {
    int g = 0;
    IntMat basis; // HNF, rank = basis.size()
    long precision_bits = 0;
    double residual_bound = 0; // all certified residuals are below this

    std::size_t rank() const { return basis.size(); }
};

struct AnalyzerReport {
    std::vector<Rational> newton;   // slope multiset (raw, even if not a valid polygon)
    bool newton_valid = false;      // satisfies the polygon invariants
    bool is_weil = false;           // all roots have modulus sqrt(q) numerically
    int angle_rank = 0;             // g - rank(lattice)
    RelationLattice relations;
    std::vector<ExceptionalWitness> exceptional;
    Certification certification = Certification::numeric;

    std::string to_json(const WeilPolynomial& P) const;
};

struct AnalyzerOptions {
    long precision_bits = 192;  // first pass; certification re-runs at double
    long max_precision = 3072;  // give up (certification = numeric) beyond this
    long max_unity_order = 0;   // 0: derived default lcm{n : phi(n) <= 24g}
};

// Remark-4.4-style numerical pass: roots, angles, LLL integer-relation
// detection at precision and 2x precision, stable relations only.
RelationLattice relation_lattice(const WeilPolynomial& P, const AnalyzerOptions& opts,
                                 Certification* cert = nullptr);

// Balanced signed subsets c in {-1,0,1}^g with even positive support lying in
// the rational span of the lattice, with the implied root of unity of order
// at most the configured bound. Sorted by total size then lexicographically.
std::vector<ExceptionalWitness> exceptional_relations(const RelationLattice& L,
                                                      long max_unity_order);

long default_unity_order_bound(int g);

AnalyzerReport analyze(const WeilPolynomial& P, const AnalyzerOptions& opts = {});

} // namespace weil
