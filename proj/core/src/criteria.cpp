#include "gns/criteria.hpp"

#include <set>
#include <sstream>

#include "gns/errors.hpp"

namespace gns {

namespace {

std::string el_str(const ZVec& v) {
    if (v.size() == 1) return v[0].get_str();
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

}  // namespace

std::vector<ZVec> delta_set(const Order& o, const FundamentalDomain& f) {
    if (f.dimension() != o.degree())
        throw ValidationError("domain dimension does not match the order degree");
    // neighbor vectors are coordinate vectors w.r.t. the power basis, so
    // N . omega is N itself
    return f.neighbor_superset().v;
}

std::vector<ZVec> z_set(const Order& o, const OPoly& p, const std::vector<ZVec>& delta,
                        long size_cap) {
    const int n = p.deg();
    if (n < 1) throw ValidationError("z_set: p must have degree >= 1");
    mpz_class tuples = 1;
    for (int j = 0; j < n; ++j) tuples *= (long)delta.size();
    if (tuples > size_cap) throw TooLarge("z_set: |Delta|^n exceeds the cap");

    std::set<ZVec> out;
    std::vector<size_t> idx(n, 0);
    while (true) {
        ZVec sum = o.zero();
        for (int j = 1; j <= n; ++j) {
            const ZVec& pj = (j <= p.deg()) ? p.c[j] : o.one();
            sum = o.add(sum, o.mul(delta[idx[j - 1]], pj));
        }
        out.insert(std::move(sum));
        int j = 0;
        for (; j < n; ++j) {
            if (++idx[j] < delta.size()) break;
            idx[j] = 0;
        }
        if (j == n) break;
    }
    return std::vector<ZVec>(out.begin(), out.end());
}

DominantReport check_dominant(const GnsInstance& inst, long size_cap) {
    const Order& o = inst.order();
    DominantReport rep;
    rep.delta = delta_set(o, inst.domain());
    auto z = z_set(o, inst.p(), rep.delta, size_cap);
    rep.z_size = z.size();
    std::set<ZVec> delta_lookup(rep.delta.begin(), rep.delta.end());
    const DigitSet& d = inst.digit_set();

    // (i) Z + D in D + p0 Delta: the quotient of (zeta + dig) by p0 after
    // removing its digit must lie in Delta
    for (const auto& zeta : z) {
        for (const auto& dig : d.elements()) {
            ZVec e = o.add(zeta, dig);
            auto [dd, q] = d.digit_for(o, e);
            if (!delta_lookup.count(q)) {
                rep.failed_condition = 1;
                rep.counterexample = "zeta=" + el_str(zeta) + " d=" + el_str(dig);
                return rep;
            }
        }
    }
    // (ii) Z in D u (D - p0)
    for (const auto& zeta : z) {
        if (d.contains_element(zeta)) continue;
        if (d.contains_element(o.add(zeta, inst.p0()))) continue;
        rep.failed_condition = 2;
        rep.counterexample = "zeta=" + el_str(zeta);
        return rep;
    }
    // (iii) subset sums of p_1..p_n (p_n = 1) in D
    const int n = inst.n();
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        ZVec sum = o.zero();
        for (int j = 1; j <= n; ++j)
            if (mask & (1ul << (j - 1)))
                sum = o.add(sum, (j <= inst.p().deg()) ? inst.p().c[j] : o.one());
        if (!d.contains_element(sum)) {
            rep.failed_condition = 3;
            rep.counterexample = "sum=" + el_str(sum);
            return rep;
        }
    }
    rep.pass = true;
    return rep;
}

OPoly taylor_shift(const Order& o, const OPoly& p, const ZVec& alpha, int sign) {
    ZVec a = (sign >= 0) ? alpha : o.neg(alpha);
    OPoly lin = op_normalize(o, {a, o.one()});  // x + a
    OPoly res;
    for (int j = p.deg(); j >= 0; --j)
        res = op_add(o, op_mul(o, res, lin), op_constant(o, p.c[j]));
    return res;
}

ShiftSearchResult shift_search(const Order& o, const DomainPtr& f, const OPoly& p,
                               const ZVec& delta_dir, ShiftMode mode, long m_max,
                               long size_cap) {
    ShiftSearchResult res;
    res.m_max = m_max;

    bool direction_ok = delta_dir.size() == (size_t)o.degree() && delta_dir[0] > 0;
    for (size_t i = 1; i < delta_dir.size(); ++i)
        if (delta_dir[i] != 0) direction_ok = false;
    bool flags_ok = false;
    try {
        HypothesisFlags hf = f->hypothesis_flags();
        flags_ok = (mode == ShiftMode::compose)
                       ? (hf.zero_in_int_union && hf.zero_in_int_plus)
                       : hf.zero_in_int;
    } catch (const UnsupportedDomain&) {
    }
    res.hypothesis_met = direction_ok && flags_ok;

    if (o.is_zero(delta_dir)) return res;  // the shift never changes p

    for (long m = 1; m <= m_max; ++m) {
        ZVec shift = o.mul_int(delta_dir, m);
        OPoly pm;
        if (mode == ShiftMode::compose) {
            pm = taylor_shift(o, p, shift, +1);
        } else {
            pm = op_add(o, p, op_constant(o, shift));
        }
        ShiftSearchResult::TrailEntry entry{m, false, -1};
        try {
            GnsInstance inst = GnsInstance::make(o, f, pm);
            DominantReport rep = check_dominant(inst, size_cap);
            entry.pass = rep.pass;
            entry.failed_condition = rep.failed_condition;
        } catch (const TooLarge&) {
            throw;
        } catch (const Error&) {
            // invalid instance (zero modulus, degenerate digits, ...)
        }
        res.trail.push_back(entry);
        if (entry.pass) {
            res.m = m;
            return res;
        }
    }
    return res;
}

std::vector<FamilyRecord> non_finiteness_family(const Order& o, const DomainPtr& f,
                                                const OPoly& p, long m_lo, long m_hi) {
    std::vector<FamilyRecord> out;
    for (long m = m_lo; m <= m_hi; ++m) {
        FamilyRecord rec;
        rec.m = m;
        ZVec d0 = op_eval(o, p, o.from_int(-m));           // p(-m)
        ZVec theta = op_eval(o, p, o.from_int(-m - 1));    // p(-m-1)
        if (o.norm(theta) == 0) {
            rec.degenerate = true;
            out.push_back(std::move(rec));
            continue;
        }
        // p(-m) in D_{F, p(-m-1)} iff its theta-quotient lies in F
        rec.flagged = f->contains(o.rational_coords(d0, theta));
        if (rec.flagged) {
            if (o.is_zero(d0)) {
                rec.degenerate = true;  // an all-zero digit cycle proves nothing
            } else {
                try {
                    OPoly pim = taylor_shift(o, p, o.from_int(m + 1), -1);  // p(x-(m+1))
                    // fixed point: Pi = (x-1) s + d0, T(s) = s with digit d0
                    OPoly lin = op_normalize(o, {o.neg(o.one()), o.one()});
                    OPoly s = op_divexact(o, op_sub(o, pim, op_constant(o, d0)), lin);
                    GnsInstance inst = GnsInstance::make(o, f, pim);
                    rec.witness = inst.witness_certificate({s});
                } catch (const Error&) {
                    rec.degenerate = true;
                }
            }
        }
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace gns
