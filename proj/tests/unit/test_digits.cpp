#include <doctest.h>

#include <memory>
#include <set>

#include "gns/digits.hpp"
#include "gns/errors.hpp"

using namespace gns;

namespace {

Order zz() { return Order::make({-1, 1}); }
Order zi() { return Order::make({1, 0, 1}); }

BoxDomain unit_box1() { return BoxDomain(QVec{0}); }

}  // namespace

TEST_CASE("classical digit sets over the integers") {
    Order o = zz();
    BoxDomain f = unit_box1();
    DigitSet d10 = DigitSet::build(o, f, {10});
    REQUIRE(d10.size() == 10);
    for (long r = 0; r < 10; ++r) CHECK(d10.elements()[r] == ZVec{r});

    // negative base: theta * [0,1) is (theta, 0], so digits shift down
    DigitSet dm2 = DigitSet::build(o, f, {-2});
    REQUIRE(dm2.size() == 2);
    CHECK(dm2.elements()[0] == ZVec{0});
    CHECK(dm2.elements()[1] == ZVec{-1});

    // symmetric window
    BoxDomain sym(QVec{mpq_class(-1, 2)});
    DigitSet d3 = DigitSet::build(o, sym, {3});
    REQUIRE(d3.size() == 3);
    CHECK(d3.elements()[0] == ZVec{0});
    CHECK(d3.elements()[1] == ZVec{1});
    CHECK(d3.elements()[2] == ZVec{-1});
}

TEST_CASE("digit_for returns the digit and the exact quotient") {
    Order o = zz();
    BoxDomain f = unit_box1();
    DigitSet d = DigitSet::build(o, f, {2});
    auto [dig, q] = d.digit_for(o, {7});
    CHECK(dig == ZVec{1});
    CHECK(q == ZVec{3});
    auto [dig2, q2] = d.digit_for(o, {-1});
    CHECK(dig2 == ZVec{1});
    CHECK(q2 == ZVec{-1});
    // consistency: beta = dig + q * theta
    for (long b = -20; b <= 20; ++b) {
        auto [dd, qq] = d.digit_for(o, {b});
        CHECK(o.add(dd, o.mul(qq, {2})) == ZVec{b});
        CHECK(d.contains_element(dd));
    }
}

TEST_CASE("gaussian digit sets") {
    Order o = zi();
    SailDomain sail(0, 1, SailDomain::Variant::norm_form);
    DigitSet ds = DigitSet::build(o, sail, {1, 1});
    REQUIRE(ds.size() == 2);
    CHECK(ds.elements()[0] == ZVec{0, 0});
    CHECK(ds.elements()[1] == ZVec{0, -1});  // -i

    BoxDomain sq(QVec{0, 0});
    DigitSet db = DigitSet::build(o, sq, {-1, 1});
    REQUIRE(db.size() == 2);
    auto [dig, q] = db.digit_for(o, {1, 0});
    CHECK(dig == ZVec{-1, 0});
    CHECK(q == ZVec{-1, -1});  // (1 - (-1)) / (-1+i) = -1-i
}

TEST_CASE("digits are constant on residue classes") {
    Order o = zi();
    BoxDomain sq(QVec{mpq_class(-1, 2), 0});
    ZVec theta = {2, 1};
    DigitSet d = DigitSet::build(o, sq, theta);
    CHECK(d.size() == 5);
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            ZVec beta = {a, b};
            const ZVec& d0 = d.digit_of(o, beta);
            CHECK(d.digit_of(o, o.add(beta, o.mul(theta, {1, 1}))) == d0);
            CHECK(d.digit_of(o, o.sub(beta, theta)) == d0);
        }
}

TEST_CASE("digit set equals the lattice points of the scaled tile") {
    // brute force: d is a digit iff d/theta lies in F
    Order o1 = zz(), o2 = zi();
    BoxDomain f1 = unit_box1();
    BoxDomain f2(QVec{mpq_class(-1, 2), mpq_class(-1, 2)});
    std::vector<std::pair<const FundamentalDomain*, std::pair<const Order*, ZVec>>> cases = {
        {&f1, {&o1, {7}}},    {&f1, {&o1, {-5}}},
        {&f2, {&o2, {2, 1}}}, {&f2, {&o2, {-1, 2}}},
    };
    for (const auto& [f, ot] : cases) {
        const Order& o = *ot.first;
        const ZVec& theta = ot.second;
        DigitSet ds = DigitSet::build(o, *f, theta);
        std::set<ZVec> expect;
        int k = o.degree();
        long R = 12;
        ZVec cur(k, -R);
        while (true) {
            if (f->contains(o.rational_coords(cur, theta))) expect.insert(cur);
            int i = k - 1;
            while (i >= 0 && cur[i] == R) cur[i--] = -R;
            if (i < 0) break;
            ++cur[i];
        }
        std::set<ZVec> got(ds.elements().begin(), ds.elements().end());
        CHECK(got == expect);
        CHECK(mpz_class((long)got.size()) == abs(o.norm(theta)));
    }
}

TEST_CASE("degenerate moduli") {
    Order o = zz();
    BoxDomain f = unit_box1();
    CHECK_THROWS_AS(DigitSet::build(o, f, {0}), ZeroModulus);
    CHECK(DigitSet::build(o, f, {1}).size() == 1);  // lenient by default
    CHECK_THROWS_AS(DigitSet::build(o, f, {1}, true), DegenerateModulus);
    Order g = zi();
    CHECK_THROWS_AS(DigitSet::build(g, BoxDomain(QVec{0, 0}), {0, 1}, true),
                    DegenerateModulus);
}
