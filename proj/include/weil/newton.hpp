#pragma once

#include <string>
#include <vector>

#include "weil/rational.hpp"

namespace weil {

// A multiset of 2g slopes in [0,1], ascending, with slope s and 1-s occurring
// equally often and every slope's multiplicity divisible by its denominator
// (equivalently: the polygon's break points are lattice points).
class NewtonPolygon {
public:
    explicit NewtonPolygon(std::vector<Rational> slopes);

    int g() const { return static_cast<int>(slopes_.size()) / 2; }
    const std::vector<Rational>& slopes() const { return slopes_; }

    bool is_supersingular() const;
    bool is_ordinary() const;

    // (slope, horizontal length) per distinct slope, ascending.
    std::vector<std::pair<Rational, int>> segments() const;

    std::string to_string() const; // "0,0,1/2,1/2,1,1"
    static NewtonPolygon from_string(const std::string& csv);

    bool operator==(const NewtonPolygon& o) const { return slopes_ == o.slopes_; }

private:
    std::vector<Rational> slopes_;
};

// w on the 2g symbol indices; w[i] ascending for i < g, w[x] + w[conj(x)] = 1.
class WeightFunction {
public:
    WeightFunction(int g, std::vector<Rational> values);

    int g() const { return g_; }
    const Rational& operator()(int x) const { return values_[static_cast<size_t>(x)]; }
    const std::vector<Rational>& values() const { return values_; }

    NewtonPolygon newton_polygon() const;

    bool is_supersingular() const;
    bool is_ordinary() const;

    bool operator==(const WeightFunction& o) const {
        return g_ == o.g_ && values_ == o.values_;
    }

private:
    int g_;
    std::vector<Rational> values_;
};

// Lower half of the ascending slopes goes to symbols 1..g, complements to the
// barred symbols. Throws validation_error naming the violated constraint.
WeightFunction weight_from_newton(const NewtonPolygon& np);

// True iff the horizontal lengths of the distinct-slope segments have gcd 1.
// When true, every transitive group containing the conjugation element gives
// a geometrically simple pair with this polygon.
bool gcd_simplicity_criterion(const NewtonPolygon& np);

// All valid Newton polygons for dimension g, deterministic order.
std::vector<NewtonPolygon> all_newton_polygons(int g);

} // namespace weil
