#include "weil/intlattice.hpp"

#include <algorithm>

#include "weil/ratmatrix.hpp"

namespace weil {

namespace {

Rational dot_zq(const IntVec& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += Rational(a[i]) * b[i];
    return s;
}

struct GramSchmidt {
    std::vector<std::vector<Rational>> bstar;
    std::vector<std::vector<Rational>> mu;
    std::vector<Rational> norm2;

    void compute(const IntMat& b) {
        const size_t n = b.size();
        bstar.assign(n, {});
        mu.assign(n, std::vector<Rational>(n, Rational(0)));
        norm2.assign(n, Rational(0));
        for (size_t i = 0; i < n; ++i) {
            std::vector<Rational> v(b[i].size());
            for (size_t k = 0; k < v.size(); ++k) v[k] = Rational(b[i][k]);
            for (size_t j = 0; j < i; ++j) {
                if (norm2[j] == 0) {
                    mu[i][j] = 0;
                    continue;
                }
                mu[i][j] = dot_zq(b[i], bstar[j]) / norm2[j];
                if (mu[i][j] != 0)
                    for (size_t k = 0; k < v.size(); ++k) v[k] -= mu[i][j] * bstar[j][k];
            }
            Rational n2(0);
            for (const auto& x : v) n2 += x * x;
            bstar[i] = std::move(v);
            norm2[i] = n2;
        }
    }
};

Integer round_nearest(const Rational& q) {
    // round half away from zero
    Integer num = q.get_num(), den = q.get_den();
    Integer twice = 2 * num;
    Integer r;
    if (num >= 0)
        mpz_fdiv_q(r.get_mpz_t(), Integer(twice + den).get_mpz_t(), Integer(2 * den).get_mpz_t());
    else
        mpz_cdiv_q(r.get_mpz_t(), Integer(twice - den).get_mpz_t(), Integer(2 * den).get_mpz_t());
    return r;
}

} // namespace

void lll_reduce(IntMat& b) {
    const size_t n = b.size();
    if (n <= 1) return;
    const Rational delta(3, 4);
    GramSchmidt gs;
    gs.compute(b);

    size_t k = 1;
    while (k < n) {
        // size reduction
        for (size_t j = k; j-- > 0;) {
            Integer r = round_nearest(gs.mu[k][j]);
            if (r != 0) {
                for (size_t t = 0; t < b[k].size(); ++t) b[k][t] -= r * b[j][t];
                gs.compute(b);
            }
        }
        // Lovasz condition (treat zero-norm b*[k-1] as satisfied)
        Rational lhs = gs.norm2[k];
        Rational rhs = (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.norm2[k - 1];
        if (gs.norm2[k - 1] == 0 || lhs >= rhs) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gs.compute(b);
            k = (k > 1) ? k - 1 : 1;
        }
    }
}

IntMat hermite_normal_form(IntMat rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const IntVec& r) {
                                  return std::all_of(r.begin(), r.end(),
                                                     [](const Integer& x) { return x == 0; });
                              }),
               rows.end());
    if (rows.empty()) return rows;
    const size_t cols = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        // gcd-reduce all entries below/at r in column c into row r
        size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (size_t i = r + 1; i < rows.size(); ++i) {
            while (rows[i][c] != 0) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[i][c].get_mpz_t());
                for (size_t t = 0; t < cols; ++t) rows[r][t] -= q * rows[i][t];
                std::swap(rows[r], rows[i]);
            }
        }
        if (rows[r][c] < 0)
            for (size_t t = 0; t < cols; ++t) rows[r][t] = -rows[r][t];
        for (size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
            if (q != 0)
                for (size_t t = 0; t < cols; ++t) rows[i][t] -= q * rows[r][t];
        }
        ++r;
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const IntVec& row) {
                                  return std::all_of(row.begin(), row.end(),
                                                     [](const Integer& x) { return x == 0; });
                              }),
               rows.end());
    return rows;
}

std::size_t int_rank(const IntMat& rows) {
    if (rows.empty()) return 0;
    RatMatrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Rational(rows[i][j]);
    return rank(m);
}

bool in_rational_span(const IntMat& rows, const IntVec& v) {
    IntMat aug = rows;
    aug.push_back(v);
    return int_rank(rows) == int_rank(aug);
}

} // namespace weil
