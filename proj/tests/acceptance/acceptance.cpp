// End-to-end acceptance checks. Runs one numbered scenario per line and
// prints pass/fail with the elapsed time; exits nonzero if anything fails.
// argv[1] is the path to the gns CLI binary (needed for the scan check).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gns/config.hpp"
#include "gns/criteria.hpp"
#include "gns/errors.hpp"

using namespace gns;

namespace {

int g_failures = 0;

void report(int no, bool ok, const std::string& detail, double secs) {
    std::printf("criterion %2d: %s  (%s) [%.2fs]\n", no, ok ? "pass" : "FAIL",
                detail.c_str(), secs);
    if (!ok) ++g_failures;
}

void run(int no, const std::function<std::string()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!detail.empty() && detail.rfind("FAIL", 0) == 0) ok = false;
    report(no, ok, detail, secs);
}

Order zz() { return Order::make({-1, 1}); }
Order zi() { return Order::make({1, 0, 1}); }

DomainPtr box1() { return std::make_shared<BoxDomain>(QVec{0}); }
DomainPtr sym1() { return std::make_shared<BoxDomain>(QVec{mpq_class(-1, 2)}); }

OPoly ip(const Order& o, std::initializer_list<long> cs) {
    std::vector<ZVec> v;
    for (long c : cs) v.push_back(o.from_int(c));
    return op_normalize(o, std::move(v));
}

std::string fail(const std::string& why) { return "FAIL: " + why; }

bool witness_ok(const Order& o, const OPoly& p, const Witness& w) {
    if (w.cycle.empty() || op_equal(w.cycle[0], OPoly{})) return false;
    OPoly lhs = op_normalize(o, std::vector<ZVec>(w.digits));
    OPoly rhs = op_add(o, op_sub(o, op_shift_up(o, w.q1, w.h), w.q1),
                       op_mul(o, w.q2, p));
    return op_equal(lhs, rhs);
}

// forward oracle over Z: every |a| <= 50 must expand to a finite digit string
bool oracle_all_finite(const GnsInstance& g, long range, long cap) {
    for (long a = -range; a <= range; ++a) {
        try {
            auto r = g.expand(ip(g.order(), {a}), cap);
            if (!std::holds_alternative<Expansion>(r)) return false;
        } catch (const StepCapExceeded&) {
            return false;
        }
    }
    return true;
}

std::string c1_base_pm2() {
    Order o = zz();
    GnsInstance plus = GnsInstance::make(o, box1(), ip(o, {2, 1}));
    DecisionReport rp = plus.decide();
    if (rp.verdict != Verdict::FinitenessHolds) return fail("x+2 did not hold");
    if (std::abs(rp.bound_c - 3.0) > 0.01) return fail("x+2 bound C != 3");
    if (rp.states_checked > 7) return fail("x+2 checked more than 7 states");

    GnsInstance minus = GnsInstance::make(o, box1(), ip(o, {-2, 1}));
    DecisionReport rm = minus.decide();
    if (rm.verdict != Verdict::FinitenessFails || !rm.witness)
        return fail("x-2 did not fail with a witness");
    const Witness& w = *rm.witness;
    if (w.h != 1) return fail("x-2 witness is not a fixed point");
    ZVec s = w.cycle[0].c.at(0);
    if (!(s == o.from_int(1) || s == o.from_int(-1)))
        return fail("x-2 fixed point is not a unit");
    if (!witness_ok(o, minus.p(), w)) return fail("x-2 certificate identity broken");
    return "holds with C=3, fails with exact fixed-point certificate";
}

std::string c2_quadratic_oracle(std::vector<std::pair<long, long>>& accepted) {
    Order o = zz();
    DomainPtr f = box1();
    int checked = 0;
    for (long c = 2; c <= 8; ++c)
        for (long b = -(c + 2); b <= c + 2; ++b) {
            GnsInstance g = GnsInstance::make(o, f, ip(o, {c, b, 1}));
            bool dec = g.decide().verdict == Verdict::FinitenessHolds;
            bool orc = oracle_all_finite(g, 50, 10000);
            if (dec != orc)
                return fail("disagreement at b=" + std::to_string(b) +
                            " c=" + std::to_string(c));
            bool region = (b >= -1 && b <= c);
            if (orc != region)
                return fail("accepted region mismatch at b=" + std::to_string(b) +
                            " c=" + std::to_string(c));
            if (dec) accepted.emplace_back(b, c);
            ++checked;
        }
    return std::to_string(checked) + " instances agree with the forward oracle";
}

std::string c3_shifted_gaussian_norms() {
    Order o = zz();
    for (long m = 0; m <= 10; ++m) {
        GnsInstance g = GnsInstance::make(o, box1(), ip(o, {2 + m, -2, 1}));
        if (g.decide().verdict != Verdict::FinitenessFails)
            return fail("x^2-2x+" + std::to_string(2 + m) + " did not fail");
    }
    return "x^2-2x+2+m fails for every m in 0..10";
}

std::string c4_dominant_soundness(std::optional<std::pair<ZVec, ZVec>>& gaussian_pick) {
    Order o = zz();
    DomainPtr f = box1();
    int passes = 0;
    for (long c = 2; c <= 8; ++c)
        for (long b = -(c + 2); b <= c + 2; ++b) {
            GnsInstance g = GnsInstance::make(o, f, ip(o, {c, b, 1}));
            if (!check_dominant(g).pass) continue;
            ++passes;
            if (g.decide().verdict != Verdict::FinitenessHolds)
                return fail("rational pass decided non-finite at b=" +
                            std::to_string(b) + " c=" + std::to_string(c));
        }
    Order gi = zi();
    auto sq = std::make_shared<BoxDomain>(QVec{mpq_class(-1, 2), mpq_class(-1, 2)});
    for (long a0 = -3; a0 <= 3; ++a0)
        for (long b0 = -3; b0 <= 3; ++b0)
            for (long a1 = -3; a1 <= 3; ++a1)
                for (long b1 = -3; b1 <= 3; ++b1) {
                    ZVec p0 = {a0, b0}, p1 = {a1, b1};
                    if (gi.norm(p0) == 0) continue;
                    GnsInstance g = GnsInstance::make(
                        gi, sq, op_normalize(gi, {p0, p1, gi.one()}));
                    if (!check_dominant(g).pass) continue;
                    ++passes;
                    if (g.decide().verdict != Verdict::FinitenessHolds)
                        return fail("gaussian pass decided non-finite at p0=(" +
                                    std::to_string(a0) + "," + std::to_string(b0) +
                                    ") p1=(" + std::to_string(a1) + "," +
                                    std::to_string(b1) + ")");
                    if (!gaussian_pick && ip_squarefree(g.fz()))
                        gaussian_pick = std::make_pair(p0, p1);
                }
    if (passes == 0) return fail("no dominant passes found at all");
    return std::to_string(passes) + " dominant passes, zero exceptions";
}

std::string c5_shift_threshold() {
    Order o = zz();
    DomainPtr f = sym1();
    for (long b = -3; b <= 3; ++b)
        for (long c = -3; c <= 3; ++c) {
            OPoly p = ip(o, {c, b, 1});
            auto r = shift_search(o, f, p, o.one(), ShiftMode::compose, 50);
            if (!r.m)
                return fail("no shift up to 50 for b=" + std::to_string(b) +
                            " c=" + std::to_string(c));
            // the minimal passing shift can be isolated (negative constant
            // terms); the stability claim concerns the eventual threshold, so
            // take the first m whose pass persists through the whole window
            auto stable_at = [&](long m) {
                for (long mp = m; mp <= m + 5; ++mp) {
                    try {
                        GnsInstance g = GnsInstance::make(
                            o, f, taylor_shift(o, p, o.from_int(mp), +1));
                        if (!check_dominant(g).pass) return false;
                    } catch (const Error&) {
                        return false;
                    }
                }
                return true;
            };
            long ms = 0;
            for (long m = *r.m; m <= 50; ++m)
                if (stable_at(m)) {
                    ms = m;
                    break;
                }
            if (ms == 0)
                return fail("no stable shift up to 50 for b=" + std::to_string(b) +
                            " c=" + std::to_string(c));
            for (long mp = ms; mp <= ms + 5; ++mp) {
                GnsInstance g =
                    GnsInstance::make(o, f, taylor_shift(o, p, o.from_int(mp), +1));
                if (g.decide().verdict != Verdict::FinitenessHolds)
                    return fail("shifted instance not finite at b=" + std::to_string(b) +
                                " c=" + std::to_string(c) + " m'=" + std::to_string(mp));
            }
        }
    return "all 49 quadratics reach a stable dominant shift within m <= 50";
}

std::string c6_family() {
    Order o = zz();
    DomainPtr f = box1();
    for (auto cs : {std::initializer_list<long>{0, 0, 1},
                    std::initializer_list<long>{1, 1, 1}}) {
        OPoly p = ip(o, cs);
        auto recs = non_finiteness_family(o, f, p, 2, 12);
        for (const auto& rec : recs) {
            if (!rec.flagged || rec.degenerate || !rec.witness)
                return fail("m=" + std::to_string(rec.m) + " not flagged with witness");
            if (rec.witness->h != 1) return fail("family witness is not h=1");
            OPoly pi = taylor_shift(o, p, o.from_int(rec.m + 1), -1);
            if (!witness_ok(o, pi, *rec.witness))
                return fail("family certificate identity broken at m=" +
                            std::to_string(rec.m));
        }
        for (long m = 2; m <= 12; ++m) {
            GnsInstance g =
                GnsInstance::make(o, f, taylor_shift(o, p, o.from_int(m), -1));
            if (g.decide().verdict != Verdict::FinitenessFails)
                return fail("p(x-" + std::to_string(m) + ") unexpectedly finite");
        }
    }
    auto sym = non_finiteness_family(o, sym1(), ip(o, {0, 0, 1}), 3, 12);
    for (const auto& rec : sym)
        if (rec.flagged)
            return fail("symmetric window flagged m=" + std::to_string(rec.m));
    return "family flags 2..12 with exact h=1 certificates; symmetric window clean";
}

bool digit_set_checks(const Order& o, const FundamentalDomain& f, const ZVec& theta,
                      std::string& why) {
    DigitSet d = DigitSet::build(o, f, theta);
    mpz_class nrm = abs(o.norm(theta));
    if (mpz_class((long)d.size()) != nrm) {
        why = "size != |norm|";
        return false;
    }
    Hnf h = o.residue_hnf(theta);
    std::set<ZVec> keys;
    for (const auto& e : d.elements()) {
        keys.insert(hnf_reduce(h, e));
        if (!f.contains(o.rational_coords(e, theta))) {
            why = "digit quotient escapes the domain";
            return false;
        }
    }
    if (keys.size() != d.size()) {
        why = "digits are congruent";
        return false;
    }
    if (nrm <= 20) {
        // brute force over the coordinate box of theta * (F . omega)
        int k = o.degree();
        auto bb = f.bounding_box();
        std::vector<long> R(k, 1);
        for (int c = 0; c < k; ++c) {
            mpq_class acc = 0;
            for (int j = 0; j < k; ++j) {
                ZVec col(k, 0);
                col[j] = 1;
                ZVec tw = o.mul(theta, col);
                mpq_class mag = std::max(abs(bb[j].first), abs(bb[j].second));
                acc += abs(mpq_class(tw[c])) * mag;
            }
            R[c] = q_floor(acc).get_si() + 2;
        }
        std::set<ZVec> expect;
        ZVec cur(k);
        for (int c = 0; c < k; ++c) cur[c] = -R[c];
        while (true) {
            if (f.contains(o.rational_coords(cur, theta))) expect.insert(cur);
            int i = k - 1;
            while (i >= 0 && cur[i] == R[i]) {
                cur[i] = -R[i];
                --i;
            }
            if (i < 0) break;
            ++cur[i];
        }
        std::set<ZVec> got(d.elements().begin(), d.elements().end());
        if (got != expect) {
            why = "brute-force enumeration differs";
            return false;
        }
    }
    return true;
}

std::string c7_digit_invariants() {
    std::mt19937 rng(2024);
    struct Setup {
        Order o;
        std::vector<DomainPtr> domains;
    };
    Order o11 = Order::make({3, -1, 1});  // x^2 - x + 3
    std::vector<Setup> setups;
    setups.push_back({zz(), {box1(), sym1()}});
    setups.push_back({zi(),
                      {std::make_shared<BoxDomain>(QVec{0, 0}),
                       std::make_shared<BoxDomain>(QVec{mpq_class(-1, 2), mpq_class(-1, 2)}),
                       std::make_shared<SailDomain>(0, 1, SailDomain::Variant::norm_form),
                       std::make_shared<SailDomain>(0, 1, SailDomain::Variant::euclidean)}});
    setups.push_back({o11,
                      {std::make_shared<BoxDomain>(QVec{0, 0}),
                       std::make_shared<SailDomain>(mpq_class(1, 2), mpq_class(11, 4),
                                                    SailDomain::Variant::norm_form)}});
    long total = 0;
    for (const auto& s : setups) {
        int k = s.o.degree();
        std::uniform_int_distribution<long> d(k == 1 ? -200 : -15, k == 1 ? 200 : 15);
        int found = 0;
        while (found < 200) {
            ZVec theta(k);
            for (auto& x : theta) x = d(rng);
            mpz_class nrm = abs(s.o.norm(theta));
            if (nrm < 2 || nrm > 200) continue;
            ++found;
            for (const auto& dom : s.domains) {
                std::string why;
                if (!digit_set_checks(s.o, *dom, theta, why))
                    return fail(why + " for theta with norm " + nrm.get_str() +
                                " in " + dom->describe());
                ++total;
            }
        }
    }
    return std::to_string(total) + " digit sets verified";
}

std::string c8_round_trip(const std::optional<std::pair<ZVec, ZVec>>& gaussian_pick) {
    std::mt19937 rng(77);
    auto check_instance = [&](const GnsInstance& g, long range) -> std::string {
        const Order& o = g.order();
        int k = o.degree();
        std::uniform_int_distribution<long> d(-range, range);
        for (int it = 0; it < 100; ++it) {
            ZVec av(k);
            for (auto& x : av) x = d(rng);
            OPoly a = op_normalize(o, {av});
            auto r = g.expand(a, 100000);
            auto* e = std::get_if<Expansion>(&r);
            if (!e) return "expansion hit a cycle on a finite instance";
            OPoly s = op_normalize(o, std::vector<ZVec>(e->digits));
            if (!op_equal(op_rem(o, op_sub(o, s, a), g.p()), OPoly{}))
                return "digit string is not congruent to the input";
            auto lb = g.length_bound(a);
            if (!lb) return "length bound unavailable on a squarefree instance";
            if ((double)e->length() > *lb) return "length bound violated";
        }
        return "";
    };
    Order o = zz();
    GnsInstance base2 = GnsInstance::make(o, box1(), ip(o, {2, 1}));
    std::string why = check_instance(base2, 1000);
    if (!why.empty()) return fail(why + " (x+2)");
    if (!gaussian_pick) return fail("criterion 4 produced no squarefree gaussian pass");
    Order gi = zi();
    auto sq = std::make_shared<BoxDomain>(QVec{mpq_class(-1, 2), mpq_class(-1, 2)});
    GnsInstance g = GnsInstance::make(
        gi, sq, op_normalize(gi, {gaussian_pick->first, gaussian_pick->second, gi.one()}));
    why = check_instance(g, 50);
    if (!why.empty()) return fail(why + " (gaussian)");
    return "200 round trips congruent and within the length bound";
}

std::string c9_expansivity_necessity() {
    Order o = zz();
    GnsInstance g = GnsInstance::make(o, box1(), ip(o, {2, -3, 1}));
    DecisionReport r = g.decide();
    if (r.verdict != Verdict::FinitenessFails || r.reason != FailReason::NotExpansive)
        return fail("x^2-3x+2 not rejected as non-expansive");
    if (r.states_checked != 0) return fail("states were enumerated before the rejection");
    if (is_expansive({-1, 1}) != Expansive::False) return fail("x-1 not rejected");
    if (is_expansive({-1, 0, 0, 0, 1}) != Expansive::False)
        return fail("x^4-1 not rejected");
    return "non-expansive bases rejected with zero state enumeration";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string c10_scan_determinism(const std::string& cli) {
    if (cli.empty()) return fail("CLI path not provided");
    std::string dir = "/tmp/gns_acceptance";
    if (std::system(("mkdir -p " + dir).c_str()) != 0)
        return fail("could not create the scratch directory");
    auto write_cfg = [&](const std::string& name, const std::string& out) {
        std::ofstream f(dir + "/" + name);
        f << "[order]\nmin_poly = -1 1\n[domain]\nfamily = box\noffsets = 0\n"
          << "[scan]\ncoeff_lo = 2 -10\ncoeff_hi = 8 10\ncommand = decide\n"
          << "output = " << out << "\n";
        return dir + "/" + name;
    };
    std::string c1p = write_cfg("serial.cfg", dir + "/serial.tsv");
    std::string c4p = write_cfg("par.cfg", dir + "/par.tsv");
    if (std::system((cli + " scan " + c1p + " --workers 1 > /dev/null").c_str()) != 0)
        return fail("serial scan exited nonzero");
    if (std::system((cli + " scan " + c4p + " --workers 4 > /dev/null").c_str()) != 0)
        return fail("parallel scan exited nonzero");
    std::string a = slurp(dir + "/serial.tsv"), b = slurp(dir + "/par.tsv");
    if (a.empty()) return fail("scan produced no output");
    if (a != b) return fail("parallel output differs from serial");
    size_t rows = (size_t)std::count(a.begin(), a.end(), '\n');
    return std::to_string(rows) + " scan rows byte-identical across 1 and 4 workers";
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    std::vector<std::pair<long, long>> accepted;
    std::optional<std::pair<ZVec, ZVec>> gaussian_pick;

    run(1, c1_base_pm2);
    run(2, [&] { return c2_quadratic_oracle(accepted); });
    run(3, c3_shifted_gaussian_norms);
    run(4, [&] { return c4_dominant_soundness(gaussian_pick); });
    run(5, c5_shift_threshold);
    run(6, c6_family);
    run(7, c7_digit_invariants);
    run(8, [&] { return c8_round_trip(gaussian_pick); });
    run(9, c9_expansivity_necessity);
    run(10, [&] { return c10_scan_determinism(cli); });

    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
