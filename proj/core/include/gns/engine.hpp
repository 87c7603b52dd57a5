#ifndef GNS_ENGINE_HPP
#define GNS_ENGINE_HPP

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "gns/digits.hpp"
#include "gns/opoly.hpp"

namespace gns {

struct Expansion {
    std::vector<ZVec> digits;  // d0 first; empty for 0; last digit nonzero
    size_t length() const { return digits.size(); }
};

// Cycle of the backward division map proving failure of finiteness:
//   sum_j digits[j] x^j = (x^h - 1) q1 + q2 p   (verified exactly)
struct Witness {
    int h = 0;
    std::vector<OPoly> cycle;  // b0, T(b0), ..., T^{h-1}(b0)
    std::vector<ZVec> digits;
    OPoly q1, q2;
};

enum class Verdict { FinitenessHolds, FinitenessFails, Inconclusive };
enum class FailReason { None, NotExpansive, Cycle, DegenerateDigits };

struct DecisionReport {
    Verdict verdict = Verdict::Inconclusive;
    FailReason reason = FailReason::None;
    std::optional<Witness> witness;
    double bound_c = 0.0;          // max per-embedding value bound
    long long box_states = 0;      // size of the coordinate box
    long long states_checked = 0;  // after value pruning
    long long cycles_found = 0;
};

struct StateBound {
    Real c;  // max value bound
    // per coordinate (coefficient j = 0..n-1, coordinate c = 0..k-1, flattened
    // j*k + c): coordinates range over [-box[i], box[i]]
    std::vector<mpz_class> box;
    // per embedding: distinct roots with multiplicities and t=0 value bounds
    std::vector<std::vector<CDisk>> roots;       // [embedding][root]
    std::vector<std::vector<int>> multiplicity;  // same shape
    std::vector<std::vector<Real>> value_bound;  // V_{il}
    mpfr_prec_t prec;

    StateBound() : c(kDefaultPrec), prec(kDefaultPrec) {}
};

// One GNS instance (p, D_{F, p(0)}) over a monogenic order.
class GnsInstance {
  public:
    // throws ValidationError (non-monic, wrong dimension), ZeroModulus
    static GnsInstance make(Order order, DomainPtr domain, OPoly p);

    const Order& order() const { return o_; }
    const FundamentalDomain& domain() const { return *f_; }
    const OPoly& p() const { return p_; }
    int n() const { return p_.deg(); }
    const ZVec& p0() const { return p_.c[0]; }
    const DigitSet& digit_set() const { return digits_; }
    const IntPoly& fz() const { return fz_; }

    struct Step {
        ZVec d0;
        OPoly next;
        ZVec q;
    };
    // T_p: b = d0 + x*next + q*p, deg next < n
    Step backward_step(const OPoly& b) const;

    // digit string of a (reduced mod p) or the nonzero cycle reached;
    // throws StepCapExceeded
    std::variant<Expansion, std::vector<OPoly>> expand(const OPoly& a, long step_cap) const;

    // requires is_expansive(fz) = True; throws EnclosureFailure
    StateBound state_bound(mpfr_prec_t prec) const;

    DecisionReport decide(mpfr_prec_t prec = kDefaultPrec) const;

    // throws ValidationError on a zero cycle, InternalError if the exact
    // identity fails
    Witness witness_certificate(const std::vector<OPoly>& cycle) const;

    // L(a) <= result; nullopt when fz is not squarefree
    std::optional<double> length_bound(const OPoly& a, mpfr_prec_t prec = kDefaultPrec) const;

  private:
    GnsInstance(Order o, DomainPtr f, OPoly p, DigitSet d);

    Order o_;
    DomainPtr f_;
    OPoly p_;
    DigitSet digits_;
    IntPoly fz_;

    // lazy caches guarded by mutability of the callers (single-threaded use)
    mutable std::optional<long> max_len_;  // max expansion length over the box
};

}  // namespace gns

#endif
