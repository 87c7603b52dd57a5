#ifndef GNS_DIGITS_HPP
#define GNS_DIGITS_HPP

#include <map>
#include <string>
#include <vector>

#include "gns/domain.hpp"
#include "gns/order.hpp"

namespace gns {

// The digit set D_{F,theta}: one representative of each residue class modulo
// theta, each lying in theta * (F . omega). Residue order is the deterministic
// mixed-radix order of Order::residues; the zero class always carries digit 0.
class DigitSet {
  public:
    // throws NotTiling, ZeroModulus; DegenerateModulus if |norm| = 1 and
    // strict is set
    static DigitSet build(const Order& o, const FundamentalDomain& f, const ZVec& theta,
                          bool strict = false);

    const ZVec& modulus() const { return theta_; }
    const std::vector<ZVec>& elements() const { return elems_; }
    size_t size() const { return elems_.size(); }

    // the unique digit congruent to beta, and q = (beta - d) / theta
    std::pair<ZVec, ZVec> digit_for(const Order& o, const ZVec& beta) const;
    // digit lookup only
    const ZVec& digit_of(const Order& o, const ZVec& beta) const;
    bool contains_element(const ZVec& d) const;

    // one coordinate vector per line, residue order
    std::string format() const;

  private:
    ZVec theta_;
    Hnf hnf_;
    std::vector<ZVec> elems_;          // by residue index
    std::map<ZVec, size_t> residue_index_;  // HNF-reduced residue -> index
    std::map<ZVec, size_t> element_index_;
};

}  // namespace gns

#endif
