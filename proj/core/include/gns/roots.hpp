#ifndef GNS_ROOTS_HPP
#define GNS_ROOTS_HPP

#include <functional>
#include <vector>

#include "gns/cdisk.hpp"

namespace gns {

// Produces the coefficient enclosures (ascending degree, leading coefficient
// must not contain zero) at a requested working precision.
using CoeffFn = std::function<std::vector<CDisk>(mpfr_prec_t)>;

// Certified isolation of all complex roots of a squarefree polynomial.
// Returns pairwise disjoint disks, one root in each (counted with
// multiplicity one). Throws EnclosureFailure if the roots cannot be
// separated within the precision cap.
std::vector<CDisk> isolate_roots(const CoeffFn& coeffs, int degree,
                                 mpfr_prec_t start_prec, mpfr_prec_t prec_cap);

}  // namespace gns

#endif
