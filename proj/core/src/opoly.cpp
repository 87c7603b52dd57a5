#include "gns/opoly.hpp"

#include <sstream>

#include "gns/errors.hpp"
#include "gns/roots.hpp"

namespace gns {

OPoly op_normalize(const Order& o, std::vector<ZVec> coeffs) {
    while (!coeffs.empty() && o.is_zero(coeffs.back())) coeffs.pop_back();
    return OPoly{std::move(coeffs)};
}

OPoly op_from_int_poly(const Order& o, const IntPoly& p) {
    std::vector<ZVec> c;
    for (const auto& a : p) c.push_back(o.from_int(a));
    return op_normalize(o, std::move(c));
}

OPoly op_constant(const Order& o, const ZVec& a) {
    if (o.is_zero(a)) return OPoly{};
    return OPoly{{a}};
}

bool op_equal(const OPoly& a, const OPoly& b) { return a.c == b.c; }

bool op_monic(const Order& o, const OPoly& p) {
    return !p.is_zero() && p.c.back() == o.one();
}

OPoly op_add(const Order& o, const OPoly& a, const OPoly& b) {
    std::vector<ZVec> c(std::max(a.c.size(), b.c.size()), o.zero());
    for (size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] = o.add(c[i], b.c[i]);
    return op_normalize(o, std::move(c));
}

OPoly op_neg(const Order& o, const OPoly& a) {
    std::vector<ZVec> c;
    for (const auto& x : a.c) c.push_back(o.neg(x));
    return OPoly{std::move(c)};
}

OPoly op_sub(const Order& o, const OPoly& a, const OPoly& b) {
    return op_add(o, a, op_neg(o, b));
}

OPoly op_mul(const Order& o, const OPoly& a, const OPoly& b) {
    if (a.is_zero() || b.is_zero()) return OPoly{};
    std::vector<ZVec> c(a.c.size() + b.c.size() - 1, o.zero());
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = o.add(c[i + j], o.mul(a.c[i], b.c[j]));
    return op_normalize(o, std::move(c));
}

OPoly op_scale(const Order& o, const OPoly& a, const ZVec& s) {
    std::vector<ZVec> c;
    for (const auto& x : a.c) c.push_back(o.mul(x, s));
    return op_normalize(o, std::move(c));
}

OPoly op_shift_up(const Order& o, const OPoly& a, int e) {
    if (a.is_zero()) return a;
    std::vector<ZVec> c(a.c.size() + e, o.zero());
    for (size_t i = 0; i < a.c.size(); ++i) c[i + e] = a.c[i];
    return OPoly{std::move(c)};
}

OPoly op_rem(const Order& o, const OPoly& a, const OPoly& p) {
    if (!op_monic(o, p)) throw NotMonic("op_rem: divisor must be monic");
    std::vector<ZVec> r = a.c;
    const int dp = p.deg();
    while ((int)r.size() - 1 >= dp) {
        ZVec lead = r.back();
        size_t sh = r.size() - 1 - dp;
        if (!o.is_zero(lead))
            for (int j = 0; j <= dp; ++j)
                r[sh + j] = o.sub(r[sh + j], o.mul(lead, p.c[j]));
        r.pop_back();
    }
    return op_normalize(o, std::move(r));
}

OPoly op_divexact(const Order& o, const OPoly& a, const OPoly& p) {
    if (!op_monic(o, p)) throw NotMonic("op_divexact: divisor must be monic");
    if (a.is_zero()) return OPoly{};
    std::vector<ZVec> r = a.c;
    const int dp = p.deg();
    if ((int)r.size() - 1 < dp) throw NotDivisible("op_divexact: degree too small");
    std::vector<ZVec> q(r.size() - dp, o.zero());
    while ((int)r.size() - 1 >= dp) {
        ZVec lead = r.back();
        size_t sh = r.size() - 1 - dp;
        q[sh] = lead;
        for (int j = 0; j <= dp; ++j)
            r[sh + j] = o.sub(r[sh + j], o.mul(lead, p.c[j]));
        r.pop_back();
    }
    for (const auto& x : r)
        if (!o.is_zero(x)) throw NotDivisible("op_divexact: nonzero remainder");
    return op_normalize(o, std::move(q));
}

ZVec op_eval(const Order& o, const OPoly& a, const ZVec& beta) {
    ZVec acc = o.zero();
    for (size_t j = a.c.size(); j-- > 0;) acc = o.add(o.mul(acc, beta), a.c[j]);
    return acc;
}

std::vector<CDisk> op_embedded_coeffs(const Order& o, const OPoly& a, int embedding,
                                      mpfr_prec_t prec) {
    auto roots = o.conjugate_roots(prec);
    const CDisk& th = roots[embedding];
    std::vector<CDisk> out;
    for (const auto& coeff : a.c) {
        std::vector<CDisk> c;
        for (const auto& b : coeff) c.push_back(CDisk::exact_int(b, prec));
        out.push_back(cd_poly_eval(c, th));
    }
    return out;
}

CDisk op_eval_embedded(const Order& o, const OPoly& a, int embedding, const CDisk& z,
                       mpfr_prec_t prec) {
    auto coeffs = op_embedded_coeffs(o, a, embedding, prec);
    if (coeffs.empty()) return CDisk(prec);
    return cd_poly_eval(coeffs, z);
}

Real op_height_upper(const Order& o, const OPoly& a, mpfr_prec_t prec) {
    Real best(prec);
    for (const auto& coeff : a.c) {
        auto vals = o.conjugate_values(coeff, prec);
        for (const auto& v : vals) {
            Real u = v.abs_upper();
            if (mpfr_cmp(u.get(), best.get()) > 0) best = u;
        }
    }
    return best;
}

// ---------------- integer polynomial helpers ----------------

IntPoly ip_normalize(IntPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

IntPoly ip_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return ip_normalize(c);
}

IntPoly ip_reverse(const IntPoly& a) {
    IntPoly r(a.rbegin(), a.rend());
    return ip_normalize(r);
}

IntPoly ip_derivative(const IntPoly& a) {
    IntPoly d;
    for (size_t j = 1; j < a.size(); ++j) d.push_back(mpz_class((long)j) * a[j]);
    return ip_normalize(d);
}

namespace {

mpz_class ip_content(const IntPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly ip_primitive(IntPoly a) {
    a = ip_normalize(std::move(a));
    if (a.empty()) return a;
    mpz_class g = ip_content(a);
    if (a.back() < 0) g = -g;
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return a;
}

// pseudo-remainder: lc(b)^(da-db+1) * a mod b
IntPoly ip_prem(IntPoly a, const IntPoly& b) {
    const int db = (int)b.size() - 1;
    while ((int)a.size() - 1 >= db && !a.empty()) {
        mpz_class lead = a.back();
        size_t sh = a.size() - 1 - db;
        for (auto& c : a) c *= b.back();
        for (int j = 0; j <= db; ++j) a[sh + j] -= lead * b[j];
        a = ip_normalize(std::move(a));
    }
    return a;
}

}  // namespace

IntPoly ip_gcd(IntPoly a, IntPoly b) {
    a = ip_primitive(std::move(a));
    b = ip_primitive(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        IntPoly r = ip_primitive(ip_prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

IntPoly ip_divexact(const IntPoly& a, const IntPoly& b) {
    IntPoly r = ip_normalize(a);
    if (b.empty()) throw NotDivisible("ip_divexact: division by zero");
    if (r.empty()) return {};
    const int db = (int)b.size() - 1;
    if ((int)r.size() - 1 < db) throw NotDivisible("ip_divexact: degree too small");
    IntPoly q(r.size() - db, 0);
    while ((int)r.size() - 1 >= db) {
        mpz_class lead = r.back();
        if (lead % b.back() != 0) throw NotDivisible("ip_divexact: leading term not divisible");
        mpz_class f;
        mpz_divexact(f.get_mpz_t(), lead.get_mpz_t(), b.back().get_mpz_t());
        size_t sh = r.size() - 1 - db;
        q[sh] = f;
        for (int j = 0; j <= db; ++j) r[sh + j] -= f * b[j];
        while (!r.empty() && r.back() == 0) r.pop_back();
        if ((int)r.size() - 1 < db) break;
    }
    for (const auto& c : r)
        if (c != 0) throw NotDivisible("ip_divexact: nonzero remainder");
    return ip_normalize(q);
}

bool ip_squarefree(const IntPoly& a) {
    IntPoly g = ip_gcd(a, ip_derivative(a));
    return g.size() <= 1;
}

// ---------------- conjugate product via resultant ----------------

namespace {

// Bareiss fraction-free determinant over Z[x]
IntPoly poly_det_bareiss(std::vector<std::vector<IntPoly>> m) {
    const size_t n = m.size();
    if (n == 0) return {mpz_class(1)};
    IntPoly prev = {mpz_class(1)};
    int sign = 1;
    for (size_t p = 0; p + 1 < n; ++p) {
        if (m[p][p].empty()) {
            size_t s = p + 1;
            while (s < n && m[s][p].empty()) ++s;
            if (s == n) return {};
            std::swap(m[p], m[s]);
            sign = -sign;
        }
        for (size_t i = p + 1; i < n; ++i)
            for (size_t j = p + 1; j < n; ++j) {
                IntPoly t = ip_sub(ip_mul(m[i][j], m[p][p]), ip_mul(m[i][p], m[p][j]));
                m[i][j] = t.empty() ? t : ip_divexact(t, prev);
            }
        prev = m[p][p];
    }
    IntPoly d = m[n - 1][n - 1];
    if (sign < 0)
        for (auto& c : d) c = -c;
    return d;
}

}  // namespace

IntPoly conjugate_product(const Order& o, const OPoly& p) {
    const int k = o.degree();
    const int n = p.deg();
    if (p.is_zero()) return {};
    // rewrite p as a polynomial in y (theta) with coefficients in Z[x]
    int m = 0;  // degree in y
    for (const auto& coeff : p.c)
        for (int l = 0; l < k; ++l)
            if (coeff[l] != 0) m = std::max(m, l);
    if (m == 0 || k == 1) {
        IntPoly out;
        for (const auto& coeff : p.c) out.push_back(coeff[0]);
        out = ip_normalize(out);
        // rational coefficients embed diagonally: the product is a k-th power
        IntPoly acc{1};
        for (int i = 0; i < k; ++i) acc = ip_mul(acc, out);
        return acc;
    }
    // P_l(x) = sum_j p[j][l] x^j for l = 0..m
    std::vector<IntPoly> pl(m + 1);
    for (int l = 0; l <= m; ++l) {
        IntPoly q(n + 1, 0);
        for (int j = 0; j <= n; ++j) q[j] = p.c[j][l];
        pl[l] = ip_normalize(q);
    }
    // Sylvester matrix of f (deg k in y) and P (deg m in y) over Z[x]
    const ZVec& f = o.min_poly();
    const size_t dim = (size_t)(k + m);
    std::vector<std::vector<IntPoly>> s(dim, std::vector<IntPoly>(dim));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= k; ++j)
            s[i][i + j] = (f[k - j] == 0) ? IntPoly{} : IntPoly{f[k - j]};
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= m; ++j) s[m + i][i + j] = pl[m - j];
    IntPoly res = poly_det_bareiss(std::move(s));
    res = ip_normalize(res);
    if (res.empty()) throw InternalError("conjugate_product: zero resultant");
    if (op_monic(o, p)) {
        if (res.back() == -1)
            for (auto& c : res) c = -c;
        if (res.back() != 1)
            throw InternalError("conjugate_product: expected monic result");
    }
    return res;
}

// ---------------- expansivity ----------------

Expansive is_expansive(const IntPoly& f_in, mpfr_prec_t prec_cap) {
    IntPoly f = ip_normalize(f_in);
    if (f.empty()) throw ValidationError("is_expansive: zero polynomial");
    if (f.size() == 1) return Expansive::True;  // no roots
    if (f[0] == 0) return Expansive::False;     // root 0
    // roots on the unit circle come in pairs (z, 1/z = conj z), hence divide
    // gcd(f, reverse(f)); a nontrivial gcd also pins a reciprocal root pair
    // with one member inside the closed disk
    if (ip_gcd(f, ip_reverse(f)).size() > 1) return Expansive::False;

    IntPoly sf = f;
    IntPoly g = ip_gcd(f, ip_derivative(f));
    if (g.size() > 1) sf = ip_divexact(f, g);
    const int d = (int)sf.size() - 1;
    CoeffFn fn = [&sf](mpfr_prec_t p) {
        std::vector<CDisk> c;
        for (const auto& a : sf) c.push_back(CDisk::exact_int(a, p));
        return c;
    };
    for (mpfr_prec_t prec = 64; prec <= prec_cap; prec *= 2) {
        std::vector<CDisk> disks;
        try {
            disks = isolate_roots(fn, d, prec, prec_cap);
        } catch (const EnclosureFailure&) {
            return Expansive::Inconclusive;
        }
        bool all_outside = true, undecided = false;
        for (const auto& disk : disks) {
            if (mpfr_cmp_ui(disk.abs_upper().get(), 1) < 0) return Expansive::False;
            if (!(mpfr_cmp_ui(disk.abs_lower().get(), 1) > 0)) {
                all_outside = false;
                undecided = true;
            }
        }
        if (all_outside) return Expansive::True;
        if (!undecided) return Expansive::False;
    }
    return Expansive::Inconclusive;
}

// ---------------- K[x] arithmetic ----------------

namespace {
bool qv_zero(const QVec& a) {
    for (const auto& q : a)
        if (q != 0) return false;
    return true;
}
}  // namespace

QPoly qp_normalize(const Order&, QPoly p) {
    while (!p.empty() && qv_zero(p.back())) p.pop_back();
    return p;
}

QPoly qp_from_opoly(const Order& o, const OPoly& p) {
    QPoly q;
    for (const auto& coeff : p.c) {
        QVec v(o.degree());
        for (int i = 0; i < o.degree(); ++i) v[i] = mpq_class(coeff[i]);
        q.push_back(std::move(v));
    }
    return qp_normalize(o, std::move(q));
}

QPoly qp_derivative(const Order& o, const QPoly& p) {
    QPoly d;
    for (size_t j = 1; j < p.size(); ++j) {
        QVec v(o.degree());
        for (int i = 0; i < o.degree(); ++i) v[i] = mpq_class((long)j) * p[j][i];
        d.push_back(std::move(v));
    }
    return qp_normalize(o, std::move(d));
}

QPoly qp_monic(const Order& o, const QPoly& p) {
    if (p.empty()) return p;
    QVec inv = o.qinv(p.back());
    QPoly out;
    for (const auto& c : p) out.push_back(o.qmul(c, inv));
    return out;
}

QPoly qp_rem(const Order& o, const QPoly& a, const QPoly& b) {
    if (b.empty()) throw NotDivisible("qp_rem: division by zero");
    QPoly r = a;
    const int db = (int)b.size() - 1;
    QVec lcinv = o.qinv(b.back());
    while ((int)r.size() - 1 >= db) {
        QVec f = o.qmul(r.back(), lcinv);
        size_t sh = r.size() - 1 - db;
        for (int j = 0; j <= db; ++j) {
            QVec t = o.qmul(f, b[j]);
            for (int i = 0; i < o.degree(); ++i) r[sh + j][i] -= t[i];
        }
        r.pop_back();
        r = qp_normalize(o, std::move(r));
        if ((int)r.size() - 1 < db) break;
    }
    return qp_normalize(o, std::move(r));
}

QPoly qp_divexact(const Order& o, const QPoly& a, const QPoly& b) {
    if (b.empty()) throw NotDivisible("qp_divexact: division by zero");
    QPoly r = a;
    const int db = (int)b.size() - 1;
    if (r.empty()) return {};
    QVec lcinv = o.qinv(b.back());
    QPoly q((int)r.size() - db >= 0 ? r.size() - db : 0,
            QVec(o.degree(), mpq_class(0)));
    while ((int)r.size() - 1 >= db) {
        QVec f = o.qmul(r.back(), lcinv);
        size_t sh = r.size() - 1 - db;
        q[sh] = f;
        for (int j = 0; j <= db; ++j) {
            QVec t = o.qmul(f, b[j]);
            for (int i = 0; i < o.degree(); ++i) r[sh + j][i] -= t[i];
        }
        r.pop_back();
        r = qp_normalize(o, std::move(r));
    }
    if (!r.empty()) throw NotDivisible("qp_divexact: nonzero remainder");
    return qp_normalize(o, std::move(q));
}

QPoly qp_gcd(const Order& o, QPoly a, QPoly b) {
    a = qp_normalize(o, std::move(a));
    b = qp_normalize(o, std::move(b));
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        QPoly r = qp_rem(o, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return qp_monic(o, a);
}

std::vector<QPoly> qp_squarefree_decomposition(const Order& o, const QPoly& p_in) {
    QPoly p = qp_monic(o, qp_normalize(o, p_in));
    std::vector<QPoly> out;
    if (p.size() <= 1) return out;
    QPoly dp = qp_derivative(o, p);
    QPoly a = qp_gcd(o, p, dp);
    if (a.size() <= 1) {
        out.push_back(p);
        return out;
    }
    QPoly b = qp_divexact(o, p, a);
    QPoly c = qp_divexact(o, dp, a);
    // d = c - b'
    QPoly bp = qp_derivative(o, b);
    auto sub = [&](const QPoly& x, const QPoly& y) {
        QPoly r(std::max(x.size(), y.size()), QVec(o.degree(), mpq_class(0)));
        for (size_t i = 0; i < x.size(); ++i) r[i] = x[i];
        for (size_t i = 0; i < y.size(); ++i)
            for (int j = 0; j < o.degree(); ++j) r[i][j] -= y[i][j];
        return qp_normalize(o, std::move(r));
    };
    QPoly d = sub(c, bp);
    while (b.size() > 1) {
        QPoly fac = qp_gcd(o, b, d);
        if (fac.empty()) throw InternalError("squarefree decomposition failed");
        out.push_back(fac);
        b = qp_divexact(o, b, fac);
        QPoly cc = qp_divexact(o, d, fac);
        d = sub(cc, qp_derivative(o, b));
    }
    return out;
}

std::string op_str(const Order& o, const OPoly& a) {
    auto coord_str = [&](const ZVec& v) {
        if (o.degree() == 1) return v[0].get_str();
        std::string s = "(";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += v[i].get_str();
        }
        return s + ")";
    };
    if (a.is_zero()) return "0";
    std::ostringstream os;
    for (size_t j = 0; j < a.c.size(); ++j) {
        if (j) os << " + ";
        os << coord_str(a.c[j]);
        if (j == 1) os << "*x";
        if (j > 1) os << "*x^" << j;
    }
    return os.str();
}

}  // namespace gns
