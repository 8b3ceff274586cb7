#include <doctest.h>

#include <random>

#include "weil/ratmatrix.hpp"

using namespace weil;

namespace {

RatMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Rational(rows[i][j]);
    return m;
}

// independent rank oracle: largest k with a nonzero k x k minor
Rational det_recursive(const RatMatrix& m, std::vector<size_t> rows, std::vector<size_t> cols) {
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    Rational acc(0);
    int sign = 1;
    for (size_t i = 0; i < rows.size(); ++i) {
        std::vector<size_t> rest;
        for (size_t k = 0; k < rows.size(); ++k)
            if (k != i) rest.push_back(rows[k]);
        std::vector<size_t> cs(cols.begin() + 1, cols.end());
        Rational term = m.at(rows[i], cols[0]) * det_recursive(m, rest, cs);
        acc += sign > 0 ? term : -term;
        sign = -sign;
    }
    return acc;
}

size_t rank_by_minors(const RatMatrix& m) {
    size_t best = 0;
    std::vector<size_t> ridx(m.rows()), cidx(m.cols());
    for (size_t i = 0; i < m.rows(); ++i) ridx[i] = i;
    for (size_t j = 0; j < m.cols(); ++j) cidx[j] = j;
    size_t maxk = std::min(m.rows(), m.cols());
    for (size_t k = 1; k <= maxk; ++k) {
        // all k-subsets of rows and columns
        std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
        std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
        bool found = false;
        do {
            std::vector<size_t> rs;
            for (size_t i = 0; i < m.rows(); ++i)
                if (rsel[i]) rs.push_back(i);
            std::fill(csel.begin(), csel.end(), false);
            std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
            do {
                std::vector<size_t> cs;
                for (size_t j = 0; j < m.cols(); ++j)
                    if (csel[j]) cs.push_back(j);
                if (det_recursive(m, rs, cs) != 0) {
                    found = true;
                    break;
                }
            } while (std::prev_permutation(csel.begin(), csel.end()));
            if (found) break;
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
        if (found)
            best = k;
        else
            break;
    }
    return best;
}

} // namespace

TEST_CASE("rank basics") {
    CHECK(rank(RatMatrix(3, 3)) == 0);
    RatMatrix id(4, 4);
    for (size_t i = 0; i < 4; ++i) id.at(i, i) = 1;
    CHECK(rank(id) == 4);

    // the four columns of the C4 case: (0,1,1,0),(0,0,1,1),(1,0,0,1),(1,1,0,0)
    RatMatrix phi = from_rows({{0, 0, 1, 1}, {1, 0, 0, 1}, {1, 1, 0, 0}, {0, 1, 1, 0}});
    CHECK(rank(phi) == 3);
}

TEST_CASE("kernel basics") {
    RatMatrix id(3, 3);
    for (size_t i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(kernel_basis(id).empty());

    RatMatrix row = from_rows({{1, -1}});
    auto k = kernel_basis(row);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == k[0][1]); // (1,1) up to scaling

    RatMatrix phi = from_rows({{0, 0, 1, 1}, {1, 0, 0, 1}, {1, 1, 0, 0}, {0, 1, 1, 0}});
    CHECK(kernel_basis(phi).size() == 1);
}

TEST_CASE("rank properties on random matrices") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 500; ++trial) {
        size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        RatMatrix m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j)
                m.at(i, j) = make_rational(static_cast<long>(rng() % 7) - 3,
                                           1 + static_cast<long>(rng() % 3));
        size_t rk = rank(m);
        CHECK(rk == rank(m.transposed()));
        if (trial < 60) CHECK(rk == rank_by_minors(m)); // independent oracle

        // kernel vectors are exact solutions and count = cols - rank
        auto kb = kernel_basis(m);
        CHECK(kb.size() == c - rk);
        for (const auto& v : kb)
            for (const auto& entry : weil::apply(m, v)) CHECK(entry == 0);

        // invariance under row scaling and swaps
        RatMatrix m2 = m;
        for (size_t i = 0; i < r; ++i) {
            Rational scale = make_rational(1 + static_cast<long>(rng() % 5),
                                           1 + static_cast<long>(rng() % 5));
            for (size_t j = 0; j < c; ++j) m2.at(i, j) = m.at(i, j) * scale;
        }
        if (r >= 2)
            for (size_t j = 0; j < c; ++j) std::swap(m2.at(0, j), m2.at(r - 1, j));
        CHECK(rank(m2) == rk);
    }
}
