#include <doctest.h>

#include <functional>
#include <random>

#include "gns/zlinalg.hpp"

using namespace gns;

static ZMat mat(std::initializer_list<std::initializer_list<long>> rows) {
    ZMat m;
    for (const auto& r : rows) {
        ZVec v;
        for (long x : r) v.push_back(x);
        m.push_back(std::move(v));
    }
    return m;
}

TEST_CASE("det_bareiss on known matrices") {
    CHECK(det_bareiss(mat({{5}})) == 5);
    CHECK(det_bareiss(mat({{1, 2}, {3, 4}})) == -2);
    CHECK(det_bareiss(mat({{0, 1}, {1, 0}})) == -1);
    CHECK(det_bareiss(mat({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}})) == 24);
    CHECK(det_bareiss(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
}

TEST_CASE("det_bareiss agrees with cofactor expansion on random 4x4") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-9, 9);
    // cofactor oracle
    std::function<mpz_class(const ZMat&)> cof = [&](const ZMat& m) -> mpz_class {
        if (m.size() == 1) return m[0][0];
        mpz_class acc = 0;
        for (size_t j = 0; j < m.size(); ++j) {
            ZMat sub;
            for (size_t r = 1; r < m.size(); ++r) {
                ZVec row;
                for (size_t c = 0; c < m.size(); ++c)
                    if (c != j) row.push_back(m[r][c]);
                sub.push_back(std::move(row));
            }
            mpz_class term = m[0][j] * cof(sub);
            acc += (j % 2 == 0) ? term : -term;
        }
        return acc;
    };
    for (int it = 0; it < 30; ++it) {
        ZMat m(4, ZVec(4));
        for (auto& r : m)
            for (auto& x : r) x = d(rng);
        CHECK(det_bareiss(m) == cof(m));
    }
}

TEST_CASE("hnf_columns shape and determinant") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int it = 0; it < 40; ++it) {
        int k = 2 + (it % 3);
        ZMat m(k, ZVec(k));
        do {
            for (auto& r : m)
                for (auto& x : r) x = d(rng);
        } while (det_bareiss(m) == 0);
        Hnf h = hnf_columns(m);
        mpz_class dd = det_bareiss(m);
        mpz_class prod = 1;
        for (int i = 0; i < k; ++i) {
            CHECK(h.h[i][i] > 0);
            prod *= h.h[i][i];
            for (int j = 0; j < i; ++j) CHECK(h.h[i][j] == 0);
            // above-diagonal entries reduced
            for (int j = i + 1; j < k; ++j) {
                CHECK(h.h[i][j] >= 0);
                CHECK(h.h[i][j] < h.h[i][i]);
            }
        }
        CHECK(prod == abs(dd));
    }
}

TEST_CASE("hnf_reduce is idempotent and respects the lattice") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int it = 0; it < 40; ++it) {
        ZMat m(2, ZVec(2));
        do {
            for (auto& r : m)
                for (auto& x : r) x = d(rng);
        } while (det_bareiss(m) == 0);
        Hnf h = hnf_columns(m);
        ZVec x = {d(rng), d(rng)};
        ZVec r = hnf_reduce(h, x);
        CHECK(hnf_reduce(h, r) == r);
        for (int i = 0; i < 2; ++i) {
            CHECK(r[i] >= 0);
            CHECK(r[i] < h.h[i][i]);
        }
        // x - r is a lattice vector: adding any column leaves the residue fixed
        for (int j = 0; j < 2; ++j) {
            ZVec y = x;
            for (int i = 0; i < 2; ++i) y[i] += m[i][j];
            CHECK(hnf_reduce(h, y) == r);
        }
    }
}

TEST_CASE("solve_rational") {
    auto sol = solve_rational(mat({{2, 0}, {0, 4}}), {1, 2});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == mpq_class(1, 2));
    CHECK((*sol)[1] == mpq_class(1, 2));
    CHECK(!solve_rational(mat({{1, 2}, {2, 4}}), {1, 0}).has_value());
}
