#ifndef GNS_CRITERIA_HPP
#define GNS_CRITERIA_HPP

#include <optional>
#include <string>
#include <vector>

#include "gns/engine.hpp"

namespace gns {

inline constexpr long kDefaultZCap = 1000000;

struct DominantReport {
    std::vector<ZVec> delta;
    size_t z_size = 0;
    // 0 = pass; otherwise the index of the first failing condition (1..3)
    int failed_condition = 0;
    std::string counterexample;  // offending element(s), human-readable
    bool pass = false;
};

// Delta = N . omega for the conservative neighbor superset N
std::vector<ZVec> delta_set(const Order& o, const FundamentalDomain& f);

// Z = { sum_{j=1..n} delta_j p_j : delta_j in Delta }, p_n = 1; throws
// TooLarge when |Delta|^n exceeds the cap
std::vector<ZVec> z_set(const Order& o, const OPoly& p, const std::vector<ZVec>& delta,
                        long size_cap = kDefaultZCap);

// the three inclusions sufficient for finiteness:
//   (i) Z + D in D + p0 Delta, (ii) Z in D u (D - p0),
//   (iii) all subset sums of p_1..p_n in D
DominantReport check_dominant(const GnsInstance& inst, long size_cap = kDefaultZCap);

// p(x + sign*alpha), exact composition
OPoly taylor_shift(const Order& o, const OPoly& p, const ZVec& alpha, int sign);

enum class ShiftMode { compose, add };

struct ShiftSearchResult {
    std::optional<long> m;  // minimal m in 1..m_max passing the dominant test
    long m_max = 0;
    bool hypothesis_met = false;
    struct TrailEntry {
        long m;
        bool pass;
        int failed_condition;  // 0 = pass, 1..3, or -1 (instance invalid)
    };
    std::vector<TrailEntry> trail;
};

// minimal m such that p(x + m*delta) (compose) or p + m*delta (add) passes
// check_dominant; the result is only an upper bound for the true finiteness
// threshold
ShiftSearchResult shift_search(const Order& o, const DomainPtr& f, const OPoly& p,
                               const ZVec& delta_dir, ShiftMode mode, long m_max,
                               long size_cap = kDefaultZCap);

struct FamilyRecord {
    long m = 0;
    bool flagged = false;     // p(-m) in D_{F, p(-m-1)}
    bool degenerate = false;  // zero digits or invalid modulus, no certificate
    std::optional<Witness> witness;  // h = 1 witness for p(x - (m+1))
};

// the h = 1 non-finiteness family test for m in [m_lo, m_hi]
std::vector<FamilyRecord> non_finiteness_family(const Order& o, const DomainPtr& f,
                                                const OPoly& p, long m_lo, long m_hi);

}  // namespace gns

#endif
