#include "weil/newton.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "weil/perm.hpp"

namespace weil {

NewtonPolygon::NewtonPolygon(std::vector<Rational> slopes) : slopes_(std::move(slopes)) {
    if (slopes_.empty() || slopes_.size() % 2 != 0)
        throw validation_error("newton polygon: need 2g slopes, got " +
                               std::to_string(slopes_.size()));
    if (!std::is_sorted(slopes_.begin(), slopes_.end()))
        std::sort(slopes_.begin(), slopes_.end());
    for (const auto& s : slopes_)
        if (s < 0 || s > 1)
            throw validation_error("newton polygon: slope " + rational_to_string(s) +
                                   " outside [0,1]");
    std::map<Rational, int> mult;
    for (const auto& s : slopes_) mult[s]++;
    for (const auto& [s, m] : mult) {
        Rational c = Rational(1) - s;
        auto it = mult.find(c);
        int mc = (it == mult.end()) ? 0 : it->second;
        if (mc != m)
            throw validation_error("newton polygon: slope " + rational_to_string(s) +
                                   " occurs " + std::to_string(m) + " times but " +
                                   rational_to_string(c) + " occurs " + std::to_string(mc) +
                                   " times (multiset must be symmetric under s -> 1-s)");
        Integer den = denominator(s);
        if (m % den != 0)
            throw validation_error("newton polygon: slope " + rational_to_string(s) +
                                   " has multiplicity " + std::to_string(m) +
                                   " not divisible by its denominator " + den.get_str() +
                                   " (break points must be lattice points)");
    }
}

bool NewtonPolygon::is_supersingular() const {
    return std::all_of(slopes_.begin(), slopes_.end(),
                       [](const Rational& s) { return s == Rational(1, 2); });
}

bool NewtonPolygon::is_ordinary() const {
    return std::all_of(slopes_.begin(), slopes_.end(),
                       [](const Rational& s) { return s == 0 || s == 1; });
}

std::vector<std::pair<Rational, int>> NewtonPolygon::segments() const {
    std::vector<std::pair<Rational, int>> segs;
    for (const auto& s : slopes_) {
        if (!segs.empty() && segs.back().first == s)
            segs.back().second++;
        else
            segs.emplace_back(s, 1);
    }
    return segs;
}

std::string NewtonPolygon::to_string() const {
    std::string out;
    for (size_t i = 0; i < slopes_.size(); ++i) {
        if (i) out += ",";
        out += rational_to_string(slopes_[i]);
    }
    return out;
}

NewtonPolygon NewtonPolygon::from_string(const std::string& csv) {
    return NewtonPolygon(rationals_from_csv(csv));
}

WeightFunction::WeightFunction(int g, std::vector<Rational> values)
    : g_(g), values_(std::move(values)) {
    if (g_ < 1 || values_.size() != static_cast<size_t>(2 * g_))
        throw validation_error("weight function: need 2g values");
    for (int i = 0; i + 1 < g_; ++i)
        if (values_[static_cast<size_t>(i)] > values_[static_cast<size_t>(i + 1)])
            throw validation_error("weight function: weights must be nondecreasing on 1..g");
    for (int i = 0; i < g_; ++i)
        if (values_[static_cast<size_t>(i)] +
                values_[static_cast<size_t>(conjugate_symbol(i, g_))] != 1)
            throw validation_error("weight function: w(i) + w(i~) must equal 1");
    newton_polygon(); // validates the induced slope multiset
}

NewtonPolygon WeightFunction::newton_polygon() const {
    return NewtonPolygon(values_);
}

bool WeightFunction::is_supersingular() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Rational& s) { return s == Rational(1, 2); });
}

bool WeightFunction::is_ordinary() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Rational& s) { return s == 0 || s == 1; });
}

WeightFunction weight_from_newton(const NewtonPolygon& np) {
    const int g = np.g();
    std::vector<Rational> w(static_cast<size_t>(2 * g));
    for (int i = 0; i < g; ++i) {
        w[static_cast<size_t>(i)] = np.slopes()[static_cast<size_t>(i)];
        w[static_cast<size_t>(conjugate_symbol(i, g))] =
            Rational(1) - np.slopes()[static_cast<size_t>(i)];
    }
    return WeightFunction(g, std::move(w));
}

bool gcd_simplicity_criterion(const NewtonPolygon& np) {
    Integer acc = 0;
    for (const auto& [s, len] : np.segments()) {
        Integer l(len);
        mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), l.get_mpz_t());
    }
    return acc == 1;
}

namespace {

// A slope s = n/d < 1/2 appears with multiplicity divisible by d and its
// mirror 1-s matches it, so 2m symbols per choice with d | m <= g; the slack
// is filled with 1/2 (automatically even).
void extend(const std::vector<Rational>& pool, size_t idx, int used, int g,
            std::vector<std::pair<Rational, int>>& cur, std::vector<NewtonPolygon>& out) {
    if (idx == pool.size()) {
        int half = 2 * g - used;
        std::vector<Rational> slopes;
        for (auto& [s, m] : cur)
            for (int i = 0; i < m; ++i) slopes.push_back(s);
        for (int i = 0; i < half; ++i) slopes.push_back(Rational(1, 2));
        for (auto it = cur.rbegin(); it != cur.rend(); ++it)
            for (int i = 0; i < it->second; ++i) slopes.push_back(Rational(1) - it->first);
        out.emplace_back(std::move(slopes));
        return;
    }
    const Rational& s = pool[idx];
    long d = denominator(s).get_si();
    extend(pool, idx + 1, used, g, cur, out);
    for (long m = d; used + 2 * m <= 2 * g; m += d) {
        cur.emplace_back(s, static_cast<int>(m));
        extend(pool, idx + 1, used + static_cast<int>(2 * m), g, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<NewtonPolygon> all_newton_polygons(int g) {
    std::vector<Rational> pool; // reduced slopes < 1/2; need denominator <= g
    for (int d = 1; d <= g; ++d)
        for (int n = 0; 2 * n < d; ++n) {
            if (std::gcd(n, d) != 1) continue;
            pool.emplace_back(n, d);
        }
    std::sort(pool.begin(), pool.end());
    std::vector<NewtonPolygon> out;
    std::vector<std::pair<Rational, int>> cur;
    extend(pool, 0, 0, g, cur, out);
    std::sort(out.begin(), out.end(), [](const NewtonPolygon& a, const NewtonPolygon& b) {
        return a.slopes() < b.slopes();
    });
    return out;
}

} // namespace weil
