#include <doctest.h>

#include <random>

#include "gns/errors.hpp"
#include "gns/opoly.hpp"

using namespace gns;

namespace {

Order zz() { return Order::make({-1, 1}); }  // Z, theta = 1
Order zi() { return Order::make({1, 0, 1}); }

OPoly ip(const Order& o, std::initializer_list<long> cs) {
    std::vector<ZVec> v;
    for (long c : cs) v.push_back(o.from_int(c));
    return op_normalize(o, std::move(v));
}

IntPoly z(std::initializer_list<long> cs) {
    IntPoly p;
    for (long c : cs) p.push_back(c);
    return ip_normalize(p);
}

}  // namespace

TEST_CASE("polynomial ring operations") {
    Order o = zz();
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> d(-6, 6);
    auto rp = [&] {
        std::vector<ZVec> c;
        int deg = (int)(rng() % 4);
        for (int i = 0; i <= deg; ++i) c.push_back(o.from_int(d(rng)));
        return op_normalize(o, std::move(c));
    };
    for (int it = 0; it < 30; ++it) {
        OPoly a = rp(), b = rp(), c = rp();
        CHECK(op_equal(op_mul(o, a, b), op_mul(o, b, a)));
        CHECK(op_equal(op_mul(o, a, op_add(o, b, c)),
                       op_add(o, op_mul(o, a, b), op_mul(o, a, c))));
        CHECK(op_equal(op_sub(o, a, a), OPoly{}));
    }
}

TEST_CASE("division with remainder against a monic modulus") {
    Order o = zz();
    OPoly p = ip(o, {2, 1});  // x + 2
    std::mt19937 rng(29);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int it = 0; it < 20; ++it) {
        std::vector<ZVec> c;
        for (int i = 0; i < 5; ++i) c.push_back(o.from_int(d(rng)));
        OPoly a = op_normalize(o, std::move(c));
        OPoly r = op_rem(o, a, p);
        CHECK(r.deg() < p.deg());
        // a - r is divisible by p and the quotient reconstructs a
        OPoly q = op_divexact(o, op_sub(o, a, r), p);
        CHECK(op_equal(op_add(o, op_mul(o, q, p), r), a));
    }
    CHECK_THROWS_AS(op_divexact(o, ip(o, {1, 1}), ip(o, {0, 1})), NotDivisible);
    CHECK_THROWS_AS(op_rem(o, ip(o, {1}), ip(o, {1, 2})), NotMonic);
}

TEST_CASE("conjugate product") {
    // k = 1: identity
    Order o1 = zz();
    CHECK(conjugate_product(o1, ip(o1, {2, 1})) == z({2, 1}));
    // Z[i], p = x + (1+i): product with the conjugate gives x^2 + 2x + 2
    Order o2 = zi();
    OPoly p = op_normalize(o2, {ZVec{1, 1}, o2.one()});
    CHECK(conjugate_product(o2, p) == z({2, 2, 1}));
    // p = x^2 + i x + 1: (x^2+ix+1)(x^2-ix+1) = x^4 + 3x^2 + 1
    OPoly p2 = op_normalize(o2, {o2.one(), ZVec{0, 1}, o2.one()});
    CHECK(conjugate_product(o2, p2) == z({1, 0, 3, 0, 1}));
    // integer coefficients embed diagonally: product is the square
    OPoly p3 = op_normalize(o2, {o2.from_int(3), o2.one()});
    CHECK(conjugate_product(o2, p3) == z({9, 6, 1}));
}

TEST_CASE("integer polynomial helpers") {
    CHECK(ip_gcd(z({-1, 1}), z({-1, 0, 0, 0, 1})) == z({-1, 1}));
    CHECK(ip_gcd(z({2, 2}), z({3, 3})) == z({1, 1}));
    CHECK(ip_divexact(z({-1, 0, 1}), z({1, 1})) == z({-1, 1}));
    CHECK(ip_reverse(z({1, 2, 3})) == z({3, 2, 1}));
    CHECK(ip_squarefree(z({2, 1})));
    CHECK(!ip_squarefree(z({9, -6, 1})));  // (x-3)^2
}

TEST_CASE("expansivity") {
    CHECK(is_expansive(z({2, 1})) == Expansive::True);    // x + 2
    CHECK(is_expansive(z({-2, 1})) == Expansive::True);   // x - 2
    CHECK(is_expansive(z({-1, 1})) == Expansive::False);  // x - 1, prefilter
    CHECK(is_expansive(z({-1, 0, 0, 0, 1})) == Expansive::False);  // x^4 - 1
    CHECK(is_expansive(z({2, -2, 1})) == Expansive::True);   // roots 1 +- i
    CHECK(is_expansive(z({2, -3, 1})) == Expansive::False);  // root 1
    CHECK(is_expansive(z({-1, -1, 1})) == Expansive::False);  // golden ratio pair
    CHECK(is_expansive(z({9, -6, 1})) == Expansive::True);    // (x-3)^2
    CHECK(is_expansive(z({0, 1})) == Expansive::False);       // root 0
    // reciprocal-gcd prefilter: root pair z, 1/z off the real line
    CHECK(is_expansive(z({2, 3, 2})) == Expansive::False);
}

TEST_CASE("squarefree decomposition over K") {
    Order o = zz();
    // (x-3)^2: one factor of multiplicity 2
    auto f = qp_squarefree_decomposition(o, qp_from_opoly(o, ip(o, {9, -6, 1})));
    REQUIRE(f.size() == 2);
    CHECK(f[0].size() <= 1);  // no simple roots
    REQUIRE(f[1].size() == 2);
    CHECK(f[1][0][0] == -3);
    // squarefree input: a single factor
    auto g = qp_squarefree_decomposition(o, qp_from_opoly(o, ip(o, {2, -2, 1})));
    REQUIRE(g.size() == 1);
    CHECK(g[0].size() == 3);
    // (x-1)^2 (x+2): multiplicities 1 and 2
    auto h = qp_squarefree_decomposition(o, qp_from_opoly(o, ip(o, {2, -3, 0, 1})));
    REQUIRE(h.size() == 2);
    CHECK(h[0].size() == 2);  // x + 2
    CHECK(h[0][0][0] == 2);
    CHECK(h[1].size() == 2);  // x - 1
    CHECK(h[1][0][0] == -1);
}

TEST_CASE("height bound dominates double evaluation") {
    Order o = zi();
    OPoly p = op_normalize(o, {ZVec{3, -2}, ZVec{0, 1}, o.one()});
    Real h = op_height_upper(o, p, 64);
    // |3 - 2i| = sqrt(13) is the largest coefficient conjugate
    CHECK(h.to_double() >= std::sqrt(13.0) - 1e-9);
    CHECK(h.to_double() <= std::sqrt(13.0) + 1e-9);
}
