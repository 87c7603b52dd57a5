#ifndef GNS_CDISK_HPP
#define GNS_CDISK_HPP

#include <gmpxx.h>

#include <vector>

#include "gns/real.hpp"

namespace gns {

// Ball arithmetic: a real number known to lie in [c - r, c + r]. Centers are
// rounded to nearest, radii always upward, with an extra ulp bound per
// operation so that containment is preserved under rounding.
struct RBall {
    Real c;
    Real r;

    explicit RBall(mpfr_prec_t prec) : c(prec), r(prec) {}

    static RBall exact_int(const mpz_class& z, mpfr_prec_t prec);
    static RBall exact_rat(const mpq_class& q, mpfr_prec_t prec);
    static RBall from_double(double d, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return c.prec(); }
    bool contains_zero() const;
    // certified bounds on |x| over the ball
    Real abs_upper() const;
    Real abs_lower() const;  // clamped at 0
    double mid() const { return c.to_double(); }
};

RBall rb_add(const RBall& a, const RBall& b);
RBall rb_sub(const RBall& a, const RBall& b);
RBall rb_neg(const RBall& a);
RBall rb_mul(const RBall& a, const RBall& b);
RBall rb_inv(const RBall& a);  // throws EnclosureFailure if ball contains 0
RBall rb_div(const RBall& a, const RBall& b);
RBall rb_sqrt(const RBall& a);  // requires lower bound >= 0
RBall rb_log(const RBall& a);   // requires lower bound > 0

// A complex disk |z - (re + i*im)| <= rad.
struct CDisk {
    Real re;
    Real im;
    Real rad;

    explicit CDisk(mpfr_prec_t prec) : re(prec), im(prec), rad(prec) {}

    static CDisk exact_int(const mpz_class& z, mpfr_prec_t prec);
    static CDisk exact_rat(const mpq_class& q, mpfr_prec_t prec);
    static CDisk from_balls(const RBall& re, const RBall& im);
    static CDisk from_doubles(double re, double im, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return re.prec(); }
    RBall real_part() const;
    RBall imag_part() const;
    bool contains_zero() const;
    Real abs_upper() const;
    Real abs_lower() const;
};

CDisk cd_add(const CDisk& a, const CDisk& b);
CDisk cd_sub(const CDisk& a, const CDisk& b);
CDisk cd_neg(const CDisk& a);
CDisk cd_mul(const CDisk& a, const CDisk& b);
CDisk cd_inv(const CDisk& a);  // throws EnclosureFailure if disk contains 0
CDisk cd_div(const CDisk& a, const CDisk& b);

// true iff the disks have no common point (certified)
bool cd_disjoint(const CDisk& a, const CDisk& b);
// true iff b is contained in a
bool cd_contains(const CDisk& a, const CDisk& b);

// Horner evaluation of sum coeffs[j] z^j at a disk point.
CDisk cd_poly_eval(const std::vector<CDisk>& coeffs, const CDisk& z);

}  // namespace gns

#endif
