#include "gns/roots.hpp"

#include <cmath>
#include <complex>

#include "gns/errors.hpp"

namespace gns {

namespace {

// plain complex point arithmetic at a fixed precision (no radius tracking);
// used only to produce approximations that are certified afterwards
struct CPt {
    Real re, im;
    explicit CPt(mpfr_prec_t p) : re(p), im(p) {}
};

CPt cp_from(const CDisk& d, mpfr_prec_t p) {
    CPt o(p);
    mpfr_set(o.re.get(), d.re.get(), MPFR_RNDN);
    mpfr_set(o.im.get(), d.im.get(), MPFR_RNDN);
    return o;
}

CPt cp_sub(const CPt& a, const CPt& b) {
    CPt o(a.re.prec());
    mpfr_sub(o.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(o.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    return o;
}

CPt cp_add(const CPt& a, const CPt& b) {
    CPt o(a.re.prec());
    mpfr_add(o.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(o.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    return o;
}

CPt cp_mul(const CPt& a, const CPt& b) {
    CPt o(a.re.prec());
    mpfr_fmms(o.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_fmma(o.im.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    return o;
}

CPt cp_div(const CPt& a, const CPt& b) {
    mpfr_prec_t p = a.re.prec();
    Real n2(p);
    mpfr_fmma(n2.get(), b.re.get(), b.re.get(), b.im.get(), b.im.get(), MPFR_RNDN);
    CPt num = cp_mul(a, [&] {
        CPt c(p);
        mpfr_set(c.re.get(), b.re.get(), MPFR_RNDN);
        mpfr_neg(c.im.get(), b.im.get(), MPFR_RNDN);
        return c;
    }());
    CPt o(p);
    mpfr_div(o.re.get(), num.re.get(), n2.get(), MPFR_RNDN);
    mpfr_div(o.im.get(), num.im.get(), n2.get(), MPFR_RNDN);
    return o;
}

bool cp_is_zero(const CPt& a) { return a.re.is_zero() && a.im.is_zero(); }

CPt cp_eval(const std::vector<CPt>& c, const CPt& z) {
    CPt acc = c.back();
    for (size_t j = c.size() - 1; j-- > 0;) acc = cp_add(cp_mul(acc, z), c[j]);
    return acc;
}

double cp_abs(const CPt& a) {
    Real h(a.re.prec());
    mpfr_hypot(h.get(), a.re.get(), a.im.get(), MPFR_RNDN);
    return h.to_double();
}

std::vector<CDisk> derivative(const std::vector<CDisk>& c) {
    std::vector<CDisk> d;
    for (size_t j = 1; j < c.size(); ++j) {
        CDisk t = c[j];
        CDisk m = CDisk::exact_int(mpz_class((long)j), c[j].prec());
        d.push_back(cd_mul(t, m));
    }
    return d;
}

// Weierstrass (Durand-Kerner) sweeps at the given precision.
void dk_sweeps(const std::vector<CPt>& coeffs, std::vector<CPt>& z, int sweeps) {
    const int d = (int)z.size();
    mpfr_prec_t p = coeffs[0].re.prec();
    for (int it = 0; it < sweeps; ++it) {
        double maxupd = 0;
        for (int j = 0; j < d; ++j) {
            CPt den = coeffs.back();  // leading coefficient
            for (int i = 0; i < d; ++i) {
                if (i == j) continue;
                den = cp_mul(den, cp_sub(z[j], z[i]));
            }
            if (cp_is_zero(den)) {
                // perturb coincident approximations
                CPt eps(p);
                mpfr_set_d(eps.re.get(), 1e-6 * (j + 1), MPFR_RNDN);
                mpfr_set_d(eps.im.get(), 2e-6 * (j + 1), MPFR_RNDN);
                z[j] = cp_add(z[j], eps);
                continue;
            }
            CPt upd = cp_div(cp_eval(coeffs, z[j]), den);
            z[j] = cp_sub(z[j], upd);
            maxupd = std::max(maxupd, cp_abs(upd));
        }
        double scale = 1.0;
        for (const auto& zz : z) scale = std::max(scale, cp_abs(zz));
        if (maxupd < scale * std::ldexp(1.0, -(int)p + 4)) break;
    }
}

}  // namespace

std::vector<CDisk> isolate_roots(const CoeffFn& coeff_fn, int degree,
                                 mpfr_prec_t start_prec, mpfr_prec_t prec_cap) {
    if (degree <= 0) return {};
    if (degree == 1) {
        auto c = coeff_fn(std::max<mpfr_prec_t>(start_prec, 64));
        return {cd_neg(cd_div(c[0], c[1]))};
    }

    std::vector<CPt> approx;
    bool have_approx = false;

    for (mpfr_prec_t prec = std::max<mpfr_prec_t>(start_prec, 64);;
         prec *= 2) {
        auto coeffs = coeff_fn(prec);
        if (coeffs.back().contains_zero())
            throw EnclosureFailure("isolate_roots: leading coefficient not separated from 0");

        std::vector<CPt> cpts;
        cpts.reserve(coeffs.size());
        for (const auto& c : coeffs) cpts.push_back(cp_from(c, prec));

        std::vector<CPt> z;
        if (!have_approx) {
            // classical spiral start
            std::complex<double> seed(0.4, 0.9), w(1.0, 0.0);
            for (int j = 0; j < degree; ++j) {
                w *= seed;
                CPt pt(prec);
                mpfr_set_d(pt.re.get(), w.real(), MPFR_RNDN);
                mpfr_set_d(pt.im.get(), w.imag(), MPFR_RNDN);
                z.push_back(pt);
            }
        } else {
            for (int j = 0; j < degree; ++j) {
                CPt pt(prec);
                mpfr_set(pt.re.get(), approx[j].re.get(), MPFR_RNDN);
                mpfr_set(pt.im.get(), approx[j].im.get(), MPFR_RNDN);
                z.push_back(std::move(pt));
            }
        }
        dk_sweeps(cpts, z, 64 + 2 * (int)std::log2((double)prec));
        approx.clear();
        for (auto& pt : z) approx.push_back(pt);
        have_approx = true;

        // certification: each disk of radius deg*|F(z)|/|F'(z)| contains a root
        auto dcoeffs = derivative(coeffs);
        std::vector<CDisk> disks;
        bool ok = true;
        for (int j = 0; j < degree && ok; ++j) {
            CDisk zp(prec);
            mpfr_set(zp.re.get(), z[j].re.get(), MPFR_RNDN);
            mpfr_set(zp.im.get(), z[j].im.get(), MPFR_RNDN);
            CDisk fz = cd_poly_eval(coeffs, zp);
            CDisk fpz = cd_poly_eval(dcoeffs, zp);
            Real lo = fpz.abs_lower();
            if (!(mpfr_sgn(lo.get()) > 0)) {
                ok = false;
                break;
            }
            Real rj(prec);
            mpfr_div(rj.get(), fz.abs_upper().get(), lo.get(), MPFR_RNDU);
            mpfr_mul_ui(rj.get(), rj.get(), (unsigned long)degree, MPFR_RNDU);
            CDisk disk(prec);
            disk.re = zp.re;
            disk.im = zp.im;
            disk.rad = rj;
            disks.push_back(disk);
        }
        if (ok) {
            for (size_t a = 0; a < disks.size() && ok; ++a)
                for (size_t b = a + 1; b < disks.size() && ok; ++b)
                    if (!cd_disjoint(disks[a], disks[b])) ok = false;
        }
        if (ok) return disks;
        if (prec * 2 > prec_cap)
            throw EnclosureFailure("isolate_roots: roots not separated at precision cap");
    }
}

}  // namespace gns
