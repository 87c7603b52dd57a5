#include "gns/digits.hpp"

#include <sstream>

#include "gns/errors.hpp"

namespace gns {

DigitSet DigitSet::build(const Order& o, const FundamentalDomain& f, const ZVec& theta,
                         bool strict) {
    if (f.dimension() != o.degree())
        throw ValidationError("domain dimension does not match the order degree");
    DigitSet ds;
    ds.theta_ = theta;
    ds.hnf_ = o.residue_hnf(theta);
    auto residues = o.residues(theta);
    if (strict && residues.size() == 1)
        throw DegenerateModulus();
    for (const auto& rho : residues) {
        // nu = rho - (m . omega) theta with m = locate(rho / theta)
        QVec b = o.rational_coords(rho, theta);
        ZVec m = f.locate(b);
        ZVec d = o.sub(rho, o.mul(m, theta));
        size_t idx = ds.elems_.size();
        ds.elems_.push_back(d);
        ds.residue_index_[hnf_reduce(ds.hnf_, rho)] = idx;
        ds.element_index_[d] = idx;
    }
    return ds;
}

std::pair<ZVec, ZVec> DigitSet::digit_for(const Order& o, const ZVec& beta) const {
    const ZVec& d = digit_of(o, beta);
    auto q = o.exact_div(o.sub(beta, d), theta_);
    if (!q) throw InternalError("digit_for: beta - d not divisible by the modulus");
    return {d, *q};
}

const ZVec& DigitSet::digit_of(const Order& o, const ZVec& beta) const {
    (void)o;
    ZVec key = hnf_reduce(hnf_, beta);
    auto it = residue_index_.find(key);
    if (it == residue_index_.end())
        throw InternalError("digit_of: residue not in the lookup table");
    return elems_[it->second];
}

bool DigitSet::contains_element(const ZVec& d) const {
    return element_index_.count(d) != 0;
}

std::string DigitSet::format() const {
    std::ostringstream os;
    for (const auto& d : elems_) {
        for (size_t i = 0; i < d.size(); ++i) {
            if (i) os << " ";
            os << d[i].get_str();
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace gns
