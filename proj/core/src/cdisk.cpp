#include "gns/cdisk.hpp"

#include <algorithm>

#include "gns/errors.hpp"

namespace gns {

namespace {

mpfr_prec_t pmax(const RBall& a, const RBall& b) { return std::max(a.prec(), b.prec()); }

// r += ulp-scale bound for the rounding of center c (upward).
void add_ulp(Real& r, const Real& c) {
    Real u(r.prec());
    mpfr_abs(u.get(), c.get(), MPFR_RNDU);
    mpfr_mul_2si(u.get(), u.get(), -(long)c.prec() + 2, MPFR_RNDU);
    mpfr_add(r.get(), r.get(), u.get(), MPFR_RNDU);
}

}  // namespace

RBall RBall::exact_int(const mpz_class& z, mpfr_prec_t prec) {
    RBall b(prec);
    int t = mpfr_set_z(b.c.get(), z.get_mpz_t(), MPFR_RNDN);
    if (t != 0) add_ulp(b.r, b.c);
    return b;
}

RBall RBall::exact_rat(const mpq_class& q, mpfr_prec_t prec) {
    RBall b(prec);
    int t = mpfr_set_q(b.c.get(), q.get_mpq_t(), MPFR_RNDN);
    if (t != 0) add_ulp(b.r, b.c);
    return b;
}

RBall RBall::from_double(double d, mpfr_prec_t prec) {
    RBall b(prec);
    mpfr_set_d(b.c.get(), d, MPFR_RNDN);
    return b;
}

bool RBall::contains_zero() const {
    Real a(prec());
    mpfr_abs(a.get(), c.get(), MPFR_RNDD);
    return mpfr_cmp(a.get(), r.get()) <= 0;
}

Real RBall::abs_upper() const {
    Real a(prec());
    mpfr_abs(a.get(), c.get(), MPFR_RNDU);
    mpfr_add(a.get(), a.get(), r.get(), MPFR_RNDU);
    return a;
}

Real RBall::abs_lower() const {
    Real a(prec());
    mpfr_abs(a.get(), c.get(), MPFR_RNDD);
    mpfr_sub(a.get(), a.get(), r.get(), MPFR_RNDD);
    if (a.is_negative()) mpfr_set_zero(a.get(), 1);
    return a;
}

RBall rb_add(const RBall& a, const RBall& b) {
    RBall o(pmax(a, b));
    mpfr_add(o.c.get(), a.c.get(), b.c.get(), MPFR_RNDN);
    mpfr_add(o.r.get(), a.r.get(), b.r.get(), MPFR_RNDU);
    add_ulp(o.r, o.c);
    return o;
}

RBall rb_sub(const RBall& a, const RBall& b) {
    RBall o(pmax(a, b));
    mpfr_sub(o.c.get(), a.c.get(), b.c.get(), MPFR_RNDN);
    mpfr_add(o.r.get(), a.r.get(), b.r.get(), MPFR_RNDU);
    add_ulp(o.r, o.c);
    return o;
}

RBall rb_neg(const RBall& a) {
    RBall o(a.prec());
    mpfr_neg(o.c.get(), a.c.get(), MPFR_RNDN);
    mpfr_set(o.r.get(), a.r.get(), MPFR_RNDU);
    return o;
}

RBall rb_mul(const RBall& a, const RBall& b) {
    mpfr_prec_t p = pmax(a, b);
    RBall o(p);
    mpfr_mul(o.c.get(), a.c.get(), b.c.get(), MPFR_RNDN);
    // |a||rb| + |b||ra| + ra rb
    Real t(p), u(p);
    mpfr_abs(t.get(), a.c.get(), MPFR_RNDU);
    mpfr_mul(t.get(), t.get(), b.r.get(), MPFR_RNDU);
    mpfr_abs(u.get(), b.c.get(), MPFR_RNDU);
    mpfr_mul(u.get(), u.get(), a.r.get(), MPFR_RNDU);
    mpfr_add(t.get(), t.get(), u.get(), MPFR_RNDU);
    mpfr_mul(u.get(), a.r.get(), b.r.get(), MPFR_RNDU);
    mpfr_add(o.r.get(), t.get(), u.get(), MPFR_RNDU);
    add_ulp(o.r, o.c);
    return o;
}

RBall rb_inv(const RBall& a) {
    mpfr_prec_t p = a.prec();
    Real lo = a.abs_lower();
    if (!(mpfr_sgn(lo.get()) > 0))
        throw EnclosureFailure("rb_inv: ball contains zero");
    RBall o(p);
    mpfr_ui_div(o.c.get(), 1, a.c.get(), MPFR_RNDN);
    // |1/x - 1/c| <= r / (|c| * (|c| - r))  for x in the ball
    Real ac(p), t(p);
    mpfr_abs(ac.get(), a.c.get(), MPFR_RNDD);
    mpfr_mul(t.get(), ac.get(), lo.get(), MPFR_RNDD);
    mpfr_div(o.r.get(), a.r.get(), t.get(), MPFR_RNDU);
    add_ulp(o.r, o.c);
    return o;
}

RBall rb_div(const RBall& a, const RBall& b) { return rb_mul(a, rb_inv(b)); }

RBall rb_sqrt(const RBall& a) {
    mpfr_prec_t p = a.prec();
    RBall o(p);
    Real lo = a.abs_lower();
    Real hi = a.abs_upper();
    // enclose [sqrt(lo), sqrt(hi)] (a must be nonnegative up to its radius)
    Real slo(p), shi(p);
    mpfr_sqrt(slo.get(), lo.get(), MPFR_RNDD);
    mpfr_sqrt(shi.get(), hi.get(), MPFR_RNDU);
    mpfr_add(o.c.get(), slo.get(), shi.get(), MPFR_RNDN);
    mpfr_div_2ui(o.c.get(), o.c.get(), 1, MPFR_RNDN);
    mpfr_sub(o.r.get(), shi.get(), slo.get(), MPFR_RNDU);
    mpfr_div_2ui(o.r.get(), o.r.get(), 1, MPFR_RNDU);
    add_ulp(o.r, o.c);
    add_ulp(o.r, o.r);
    return o;
}

RBall rb_log(const RBall& a) {
    mpfr_prec_t p = a.prec();
    Real lo = a.abs_lower();
    if (!(mpfr_sgn(lo.get()) > 0) || a.c.is_negative())
        throw EnclosureFailure("rb_log: argument not certainly positive");
    Real hi = a.abs_upper();
    Real llo(p), lhi(p);
    mpfr_log(llo.get(), lo.get(), MPFR_RNDD);
    mpfr_log(lhi.get(), hi.get(), MPFR_RNDU);
    RBall o(p);
    mpfr_add(o.c.get(), llo.get(), lhi.get(), MPFR_RNDN);
    mpfr_div_2ui(o.c.get(), o.c.get(), 1, MPFR_RNDN);
    mpfr_sub(o.r.get(), lhi.get(), llo.get(), MPFR_RNDU);
    mpfr_div_2ui(o.r.get(), o.r.get(), 1, MPFR_RNDU);
    add_ulp(o.r, o.c);
    add_ulp(o.r, o.r);
    return o;
}

CDisk CDisk::exact_int(const mpz_class& z, mpfr_prec_t prec) {
    CDisk d(prec);
    int t = mpfr_set_z(d.re.get(), z.get_mpz_t(), MPFR_RNDN);
    if (t != 0) add_ulp(d.rad, d.re);
    return d;
}

CDisk CDisk::exact_rat(const mpq_class& q, mpfr_prec_t prec) {
    CDisk d(prec);
    int t = mpfr_set_q(d.re.get(), q.get_mpq_t(), MPFR_RNDN);
    if (t != 0) add_ulp(d.rad, d.re);
    return d;
}

CDisk CDisk::from_balls(const RBall& re, const RBall& im) {
    CDisk d(std::max(re.prec(), im.prec()));
    mpfr_set(d.re.get(), re.c.get(), MPFR_RNDN);
    mpfr_set(d.im.get(), im.c.get(), MPFR_RNDN);
    mpfr_add(d.rad.get(), re.r.get(), im.r.get(), MPFR_RNDU);
    return d;
}

CDisk CDisk::from_doubles(double re, double im, mpfr_prec_t prec) {
    CDisk d(prec);
    mpfr_set_d(d.re.get(), re, MPFR_RNDN);
    mpfr_set_d(d.im.get(), im, MPFR_RNDN);
    return d;
}

RBall CDisk::real_part() const {
    RBall b(prec());
    b.c = re;
    mpfr_set(b.r.get(), rad.get(), MPFR_RNDU);
    return b;
}

RBall CDisk::imag_part() const {
    RBall b(prec());
    b.c = im;
    mpfr_set(b.r.get(), rad.get(), MPFR_RNDU);
    return b;
}

Real CDisk::abs_upper() const {
    Real h(prec());
    mpfr_hypot(h.get(), re.get(), im.get(), MPFR_RNDU);
    mpfr_add(h.get(), h.get(), rad.get(), MPFR_RNDU);
    add_ulp(h, h);
    return h;
}

Real CDisk::abs_lower() const {
    Real h(prec());
    mpfr_hypot(h.get(), re.get(), im.get(), MPFR_RNDD);
    Real s(prec());
    mpfr_sub(s.get(), h.get(), rad.get(), MPFR_RNDD);
    if (s.is_negative()) mpfr_set_zero(s.get(), 1);
    return s;
}

bool CDisk::contains_zero() const { return !(mpfr_sgn(abs_lower().get()) > 0); }

CDisk cd_add(const CDisk& a, const CDisk& b) {
    CDisk o(std::max(a.prec(), b.prec()));
    mpfr_add(o.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(o.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(o.rad.get(), a.rad.get(), b.rad.get(), MPFR_RNDU);
    add_ulp(o.rad, o.re);
    add_ulp(o.rad, o.im);
    return o;
}

CDisk cd_sub(const CDisk& a, const CDisk& b) { return cd_add(a, cd_neg(b)); }

CDisk cd_neg(const CDisk& a) {
    CDisk o(a.prec());
    mpfr_neg(o.re.get(), a.re.get(), MPFR_RNDN);
    mpfr_neg(o.im.get(), a.im.get(), MPFR_RNDN);
    mpfr_set(o.rad.get(), a.rad.get(), MPFR_RNDU);
    return o;
}

CDisk cd_mul(const CDisk& a, const CDisk& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    CDisk o(p);
    mpfr_fmms(o.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_fmma(o.im.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    // |a| rb + |b| ra + ra rb
    Real t(p), u(p);
    mpfr_hypot(t.get(), a.re.get(), a.im.get(), MPFR_RNDU);
    mpfr_mul(t.get(), t.get(), b.rad.get(), MPFR_RNDU);
    mpfr_hypot(u.get(), b.re.get(), b.im.get(), MPFR_RNDU);
    mpfr_mul(u.get(), u.get(), a.rad.get(), MPFR_RNDU);
    mpfr_add(t.get(), t.get(), u.get(), MPFR_RNDU);
    mpfr_mul(u.get(), a.rad.get(), b.rad.get(), MPFR_RNDU);
    mpfr_add(o.rad.get(), t.get(), u.get(), MPFR_RNDU);
    add_ulp(o.rad, o.re);
    add_ulp(o.rad, o.im);
    add_ulp(o.rad, t);
    return o;
}

CDisk cd_inv(const CDisk& a) {
    mpfr_prec_t p = a.prec();
    Real lo = a.abs_lower();
    if (!(mpfr_sgn(lo.get()) > 0))
        throw EnclosureFailure("cd_inv: disk contains zero");
    CDisk o(p);
    Real n2(p);
    mpfr_fmma(n2.get(), a.re.get(), a.re.get(), a.im.get(), a.im.get(), MPFR_RNDN);
    mpfr_div(o.re.get(), a.re.get(), n2.get(), MPFR_RNDN);
    mpfr_div(o.im.get(), a.im.get(), n2.get(), MPFR_RNDN);
    mpfr_neg(o.im.get(), o.im.get(), MPFR_RNDN);
    // |1/z - 1/c| <= rad / (|c| (|c| - rad));  |c| >= lo + rad >= lo
    Real ac(p), t(p);
    mpfr_hypot(ac.get(), a.re.get(), a.im.get(), MPFR_RNDD);
    mpfr_mul(t.get(), ac.get(), lo.get(), MPFR_RNDD);
    if (!(mpfr_sgn(t.get()) > 0))
        throw EnclosureFailure("cd_inv: disk contains zero");
    mpfr_div(o.rad.get(), a.rad.get(), t.get(), MPFR_RNDU);
    add_ulp(o.rad, o.re);
    add_ulp(o.rad, o.im);
    add_ulp(o.rad, ac);
    return o;
}

CDisk cd_div(const CDisk& a, const CDisk& b) { return cd_mul(a, cd_inv(b)); }

bool cd_disjoint(const CDisk& a, const CDisk& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Real dre(p), dim(p), d(p), rr(p);
    mpfr_sub(dre.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(dim.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_hypot(d.get(), dre.get(), dim.get(), MPFR_RNDD);
    // subtract slack for the subtraction/hypot rounding
    add_ulp(rr, d);
    mpfr_sub(d.get(), d.get(), rr.get(), MPFR_RNDD);
    mpfr_add(rr.get(), a.rad.get(), b.rad.get(), MPFR_RNDU);
    return mpfr_cmp(d.get(), rr.get()) > 0;
}

bool cd_contains(const CDisk& a, const CDisk& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Real dre(p), dim(p), d(p), rr(p);
    mpfr_sub(dre.get(), a.re.get(), b.re.get(), MPFR_RNDU);
    mpfr_sub(dim.get(), a.im.get(), b.im.get(), MPFR_RNDU);
    mpfr_hypot(d.get(), dre.get(), dim.get(), MPFR_RNDU);
    add_ulp(d, d);
    mpfr_add(d.get(), d.get(), b.rad.get(), MPFR_RNDU);
    mpfr_set(rr.get(), a.rad.get(), MPFR_RNDD);
    return mpfr_cmp(d.get(), rr.get()) <= 0;
}

CDisk cd_poly_eval(const std::vector<CDisk>& coeffs, const CDisk& z) {
    mpfr_prec_t p = z.prec();
    if (coeffs.empty()) return CDisk(p);
    CDisk acc = coeffs.back();
    for (size_t j = coeffs.size() - 1; j-- > 0;)
        acc = cd_add(cd_mul(acc, z), coeffs[j]);
    return acc;
}

}  // namespace gns
