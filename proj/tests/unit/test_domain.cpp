#include <doctest.h>

#include <random>

#include "gns/domain.hpp"
#include "gns/errors.hpp"

using namespace gns;

namespace {

QVec qv(std::initializer_list<mpq_class> l) { return QVec(l); }

SailDomain sail_i() { return SailDomain(0, 1, SailDomain::Variant::norm_form); }

// intentionally overlapping tiles, for the tiling harness
struct BrokenBox : FundamentalDomain {
    int dimension() const override { return 1; }
    bool contains(const QVec& b) const override {
        return b[0] >= 0 && b[0] < mpq_class(3, 2);
    }
    ZVec locate(const QVec& b) const override { return {q_floor(b[0])}; }
    std::vector<std::pair<mpq_class, mpq_class>> bounding_box() const override {
        return {{0, mpq_class(3, 2)}};
    }
    std::string describe() const override { return "broken"; }
};

}  // namespace

TEST_CASE("box membership and location") {
    BoxDomain f(qv({0}));
    CHECK(f.contains(qv({0})));
    CHECK(!f.contains(qv({1})));
    CHECK(f.locate(qv({mpq_class(-1, 2)})) == ZVec{-1});
    CHECK(f.locate(qv({mpq_class(7, 3)})) == ZVec{2});
    BoxDomain s(qv({mpq_class(-1, 2)}));
    CHECK(s.contains(qv({mpq_class(-1, 2)})));
    CHECK(!s.contains(qv({mpq_class(1, 2)})));
    CHECK_THROWS_AS(BoxDomain(qv({1})), ValidationError);
}

TEST_CASE("sail membership matches the exact inequalities") {
    SailDomain f = sail_i();
    CHECK(!f.contains(qv({mpq_class(2, 5), mpq_class(1, 10)})));
    CHECK(f.contains(qv({mpq_class(-1, 2), mpq_class(-1, 2)})));
    CHECK(f.contains(qv({0, 0})));
    CHECK(f.locate(qv({mpq_class(2, 5), mpq_class(1, 10)})) == ZVec{1, 0});
    CHECK(f.locate(qv({0, 0})) == ZVec{0, 0});
}

TEST_CASE("locate commutes with lattice translations") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12), tr(-3, 3);
    SailDomain f = sail_i();
    BoxDomain g(qv({mpq_class(-1, 3), 0}));
    for (const FundamentalDomain* d : {(const FundamentalDomain*)&f,
                                       (const FundamentalDomain*)&g}) {
        for (int it = 0; it < 200; ++it) {
            QVec b = {mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))};
            for (auto& q : b) q.canonicalize();
            ZVec m = d->locate(b);
            QVec r = {b[0] - m[0], b[1] - m[1]};
            CHECK(d->contains(r));
            CHECK((d->contains(b) == (m[0] == 0 && m[1] == 0)));
            ZVec z = {tr(rng), tr(rng)};
            QVec bt = {b[0] + z[0], b[1] + z[1]};
            ZVec mt = d->locate(bt);
            CHECK(mt[0] == m[0] + z[0]);
            CHECK(mt[1] == m[1] + z[1]);
        }
    }
}

TEST_CASE("neighbor supersets") {
    BoxDomain b1(qv({0}));
    auto n1 = b1.neighbor_superset();
    CHECK(n1.v.size() == 3);  // {-1, 0, 1}
    BoxDomain b2(qv({0, mpq_class(-1, 2)}));
    CHECK(b2.neighbor_superset().v.size() == 9);
    SailDomain f = sail_i();
    CHECK(f.neighbor_superset().v.size() == 15);  // {-2..2} x {-1..1}
    // contains 0 and the unit vectors
    bool zero = false, e1 = false;
    for (const auto& v : n1.v) {
        if (v[0] == 0) zero = true;
        if (v[0] == 1) e1 = true;
    }
    CHECK(zero);
    CHECK(e1);
}

TEST_CASE("hypothesis flags for boxes") {
    HypothesisFlags f = BoxDomain(qv({0})).hypothesis_flags();
    CHECK(!f.zero_in_int);
    CHECK(f.zero_in_int_plus);
    CHECK(f.zero_in_int_union);
    CHECK(f.zero_in_int_minus_shift);

    HypothesisFlags g = BoxDomain(qv({mpq_class(-1, 2)})).hypothesis_flags();
    CHECK(g.zero_in_int);
    CHECK(g.zero_in_int_plus);
    CHECK(g.zero_in_int_union);
    CHECK(!g.zero_in_int_minus_shift);

    // the square does not fit the framework
    HypothesisFlags s = BoxDomain(qv({0, 0})).hypothesis_flags();
    CHECK(!s.zero_in_int);
    CHECK(!s.zero_in_int_plus);

    CHECK_THROWS_AS(BrokenBox().hypothesis_flags(), UnsupportedDomain);
}

TEST_CASE("tiling verification") {
    CHECK(BoxDomain(qv({0})).verify_tiling(2000, 1).failures == 0);
    CHECK(BoxDomain(qv({mpq_class(-2, 5), 0})).verify_tiling(1000, 2).failures == 0);
    CHECK(sail_i().verify_tiling(10000, 3).failures == 0);
    // half-integer real part (Eisenstein-like lattice)
    SailDomain e(mpq_class(1, 2), mpq_class(3, 4), SailDomain::Variant::norm_form);
    CHECK(e.verify_tiling(5000, 4).failures == 0);
    SailDomain eu(0, 1, SailDomain::Variant::euclidean);
    CHECK(eu.verify_tiling(5000, 5).failures == 0);
    CHECK(BrokenBox().verify_tiling(500, 6).failures > 0);
}
