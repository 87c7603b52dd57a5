#ifndef GNS_OPOLY_HPP
#define GNS_OPOLY_HPP

#include <string>
#include <vector>

#include "gns/order.hpp"

namespace gns {

// Polynomial over an order, coefficients ascending by degree, normalized so
// that the highest stored coefficient is nonzero (zero polynomial = empty).
struct OPoly {
    std::vector<ZVec> c;

    bool is_zero() const { return c.empty(); }
    int deg() const { return (int)c.size() - 1; }  // -1 for zero
};

using IntPoly = std::vector<mpz_class>;  // same conventions

OPoly op_normalize(const Order& o, std::vector<ZVec> coeffs);
OPoly op_from_int_poly(const Order& o, const IntPoly& p);
OPoly op_constant(const Order& o, const ZVec& a);
bool op_equal(const OPoly& a, const OPoly& b);
bool op_monic(const Order& o, const OPoly& p);

OPoly op_add(const Order& o, const OPoly& a, const OPoly& b);
OPoly op_sub(const Order& o, const OPoly& a, const OPoly& b);
OPoly op_neg(const Order& o, const OPoly& a);
OPoly op_mul(const Order& o, const OPoly& a, const OPoly& b);
OPoly op_scale(const Order& o, const OPoly& a, const ZVec& s);
OPoly op_shift_up(const Order& o, const OPoly& a, int e);  // multiply by x^e

// remainder of a modulo monic p (degree < deg p); throws NotMonic
OPoly op_rem(const Order& o, const OPoly& a, const OPoly& p);
// quotient of exact division a / p (throws NotDivisible if not exact, p monic)
OPoly op_divexact(const Order& o, const OPoly& a, const OPoly& p);

ZVec op_eval(const Order& o, const OPoly& a, const ZVec& beta);
CDisk op_eval_embedded(const Order& o, const OPoly& a, int embedding, const CDisk& z,
                       mpfr_prec_t prec);
// coefficients of a under embedding i as complex disks
std::vector<CDisk> op_embedded_coeffs(const Order& o, const OPoly& a, int embedding,
                                      mpfr_prec_t prec);

// certified upper bound of the height max |a_l^(j)|
Real op_height_upper(const Order& o, const OPoly& a, mpfr_prec_t prec);

// the integer polynomial prod_i p^(i)(x), monic for monic p
IntPoly conjugate_product(const Order& o, const OPoly& p);

std::string op_str(const Order& o, const OPoly& a);

// ---- integer polynomial helpers ----
IntPoly ip_normalize(IntPoly p);
IntPoly ip_mul(const IntPoly& a, const IntPoly& b);
IntPoly ip_reverse(const IntPoly& a);
IntPoly ip_derivative(const IntPoly& a);
// primitive gcd over Z (up to sign, content stripped)
IntPoly ip_gcd(IntPoly a, IntPoly b);
IntPoly ip_divexact(const IntPoly& a, const IntPoly& b);
bool ip_squarefree(const IntPoly& a);

enum class Expansive { True, False, Inconclusive };

// certified test: every complex root strictly outside the closed unit disk
Expansive is_expansive(const IntPoly& f, mpfr_prec_t prec_cap = kPrecCap);

// ---- polynomials over K = Q(theta) (rational coordinate coefficients) ----
using QPoly = std::vector<QVec>;  // ascending, normalized

QPoly qp_from_opoly(const Order& o, const OPoly& p);
QPoly qp_normalize(const Order& o, QPoly p);
QPoly qp_derivative(const Order& o, const QPoly& p);
QPoly qp_monic(const Order& o, const QPoly& p);
// remainder of euclidean division (b nonzero)
QPoly qp_rem(const Order& o, const QPoly& a, const QPoly& b);
QPoly qp_divexact(const Order& o, const QPoly& a, const QPoly& b);
QPoly qp_gcd(const Order& o, QPoly a, QPoly b);  // monic gcd
// Yun squarefree decomposition: result[t-1] = monic product of roots of
// multiplicity exactly t (may be constant 1)
std::vector<QPoly> qp_squarefree_decomposition(const Order& o, const QPoly& p);

}  // namespace gns

#endif
