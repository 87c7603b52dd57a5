#include "gns/order.hpp"

#include <algorithm>

#include "gns/errors.hpp"
#include "gns/roots.hpp"

namespace gns {

Order Order::make(const ZVec& min_poly, mpfr_prec_t prec_cap) {
    if (min_poly.size() < 2) throw NotMonic("minimal polynomial must have degree >= 1");
    if (min_poly.back() != 1) throw NotMonic("minimal polynomial must be monic");
    Order o;
    o.f_ = min_poly;
    o.k_ = (int)min_poly.size() - 1;
    o.prec_cap_ = prec_cap;

    if (o.k_ >= 2) {
        // cheap necessary irreducibility check: no rational (hence integer) root
        mpz_class c0 = min_poly[0];
        auto eval_at = [&](const mpz_class& x) {
            mpz_class acc = 0;
            for (size_t j = min_poly.size(); j-- > 0;) acc = acc * x + min_poly[j];
            return acc;
        };
        if (c0 == 0) throw RationalRootFound("minimal polynomial has root 0");
        mpz_class d = 1;
        mpz_class bound = abs(c0);
        for (; d * d <= bound; ++d) {
            if (c0 % d != 0) continue;
            mpz_class divs[4] = {d, -d, bound / d, -(bound / d)};
            for (const auto& r : divs)
                if (eval_at(r) == 0)
                    throw RationalRootFound("minimal polynomial has rational root " + r.get_str());
        }
    }

    // power_table: theta^k ... theta^(2k-2) in the power basis
    const int k = o.k_;
    ZVec cur(k, 0);  // theta^k = -(f_0 + ... + f_{k-1} theta^{k-1})
    for (int j = 0; j < k; ++j) cur[j] = -min_poly[j];
    o.power_table_.push_back(cur);
    for (int e = k + 1; e <= 2 * k - 2; ++e) {
        ZVec next(k, 0);
        // multiply cur by theta, reduce the overflow via theta^k
        for (int j = 0; j + 1 < k; ++j) next[j + 1] = cur[j];
        mpz_class top = cur[k - 1];
        for (int j = 0; j < k; ++j) next[j] += top * o.power_table_[0][j];
        o.power_table_.push_back(next);
        cur = next;
    }

    // force computation of certified, pairwise disjoint conjugate enclosures
    o.conjugate_roots(kDefaultPrec);
    return o;
}

ZVec Order::one() const {
    ZVec v(k_, 0);
    v[0] = 1;
    return v;
}

ZVec Order::from_int(const mpz_class& n) const {
    ZVec v(k_, 0);
    v[0] = n;
    return v;
}

bool Order::is_zero(const ZVec& a) const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

ZVec Order::add(const ZVec& a, const ZVec& b) const {
    ZVec v(k_);
    for (int i = 0; i < k_; ++i) v[i] = a[i] + b[i];
    return v;
}

ZVec Order::sub(const ZVec& a, const ZVec& b) const {
    ZVec v(k_);
    for (int i = 0; i < k_; ++i) v[i] = a[i] - b[i];
    return v;
}

ZVec Order::neg(const ZVec& a) const {
    ZVec v(k_);
    for (int i = 0; i < k_; ++i) v[i] = -a[i];
    return v;
}

ZVec Order::mul_int(const ZVec& a, const mpz_class& n) const {
    ZVec v(k_);
    for (int i = 0; i < k_; ++i) v[i] = a[i] * n;
    return v;
}

ZVec Order::reduce_power_products(const std::vector<mpz_class>& conv) const {
    ZVec v(k_, 0);
    for (int i = 0; i < k_ && i < (int)conv.size(); ++i) v[i] = conv[i];
    for (int e = k_; e < (int)conv.size(); ++e)
        for (int j = 0; j < k_; ++j) v[j] += conv[e] * power_table_[e - k_][j];
    return v;
}

QVec Order::reduce_power_products_q(const std::vector<mpq_class>& conv) const {
    QVec v(k_, mpq_class(0));
    for (int i = 0; i < k_ && i < (int)conv.size(); ++i) v[i] = conv[i];
    for (int e = k_; e < (int)conv.size(); ++e)
        for (int j = 0; j < k_; ++j) v[j] += conv[e] * power_table_[e - k_][j];
    for (auto& q : v) q.canonicalize();
    return v;
}

ZVec Order::mul(const ZVec& a, const ZVec& b) const {
    std::vector<mpz_class> conv(2 * k_ - 1, mpz_class(0));
    for (int i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < k_; ++j) conv[i + j] += a[i] * b[j];
    }
    return reduce_power_products(conv);
}

QVec Order::qmul(const QVec& a, const QVec& b) const {
    std::vector<mpq_class> conv(2 * k_ - 1, mpq_class(0));
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) conv[i + j] += a[i] * b[j];
    return reduce_power_products_q(conv);
}

QVec Order::qinv(const QVec& a) const {
    // solve (mul matrix of a) * x = e1 over Q
    std::vector<QVec> m(k_, QVec(k_ + 1, mpq_class(0)));
    // columns: a * omega_j
    for (int j = 0; j < k_; ++j) {
        QVec basis(k_, mpq_class(0));
        basis[j] = 1;
        QVec col = qmul(a, basis);
        for (int i = 0; i < k_; ++i) m[i][j] = col[i];
    }
    for (int i = 0; i < k_; ++i) m[i][k_] = (i == 0) ? 1 : 0;
    // gaussian elimination
    for (int p = 0; p < k_; ++p) {
        int s = p;
        while (s < k_ && m[s][p] == 0) ++s;
        if (s == k_) throw NotDivisible("qinv: element is a zero divisor");
        std::swap(m[p], m[s]);
        for (int i = 0; i < k_; ++i) {
            if (i == p || m[i][p] == 0) continue;
            mpq_class f = m[i][p] / m[p][p];
            for (int j = p; j <= k_; ++j) m[i][j] -= f * m[p][j];
        }
    }
    QVec x(k_);
    for (int i = 0; i < k_; ++i) {
        x[i] = m[i][k_] / m[i][i];
        x[i].canonicalize();
    }
    return x;
}

ZMat Order::mul_matrix(const ZVec& theta_el) const {
    ZMat m(k_, ZVec(k_));
    for (int j = 0; j < k_; ++j) {
        ZVec basis(k_, 0);
        basis[j] = 1;
        ZVec col = mul(theta_el, basis);
        for (int i = 0; i < k_; ++i) m[i][j] = col[i];
    }
    return m;
}

mpz_class Order::norm(const ZVec& theta_el) const { return det_bareiss(mul_matrix(theta_el)); }

std::optional<ZVec> Order::exact_div(const ZVec& beta, const ZVec& theta_el) const {
    auto sol = solve_rational(mul_matrix(theta_el), beta);
    if (!sol) throw ZeroModulus();
    ZVec q(k_);
    for (int i = 0; i < k_; ++i) {
        if ((*sol)[i].get_den() != 1) return std::nullopt;
        q[i] = (*sol)[i].get_num();
    }
    return q;
}

QVec Order::rational_coords(const ZVec& beta, const ZVec& theta_el) const {
    auto sol = solve_rational(mul_matrix(theta_el), beta);
    if (!sol) throw ZeroModulus();
    return *sol;
}

Hnf Order::residue_hnf(const ZVec& theta_el) const {
    ZMat m = mul_matrix(theta_el);
    if (det_bareiss(m) == 0) throw ZeroModulus();
    return hnf_columns(m);
}

std::vector<ZVec> Order::residues(const ZVec& theta_el) const {
    Hnf h = residue_hnf(theta_el);
    std::vector<ZVec> out;
    ZVec idx(k_, 0);
    while (true) {
        out.push_back(idx);
        int j = 0;
        for (; j < k_; ++j) {
            if (++idx[j] < h.h[j][j]) break;
            idx[j] = 0;
        }
        if (j == k_) break;
    }
    return out;
}

std::vector<CDisk> Order::conjugate_roots(mpfr_prec_t prec) const {
    CoeffFn fn = [this](mpfr_prec_t p) {
        std::vector<CDisk> c;
        for (const auto& a : f_) c.push_back(CDisk::exact_int(a, p));
        return c;
    };
    return isolate_roots(fn, k_, prec, prec_cap_);
}

std::vector<CDisk> Order::conjugate_values(const ZVec& beta, mpfr_prec_t prec) const {
    auto roots = conjugate_roots(prec);
    std::vector<CDisk> vals;
    for (const auto& th : roots) {
        std::vector<CDisk> c;
        for (const auto& b : beta) c.push_back(CDisk::exact_int(b, prec));
        vals.push_back(cd_poly_eval(c, th));
    }
    return vals;
}

std::vector<std::vector<CDisk>> Order::embedding_matrix(mpfr_prec_t prec) const {
    auto roots = conjugate_roots(prec);
    std::vector<std::vector<CDisk>> m;
    for (int i = 0; i < k_; ++i) {
        std::vector<CDisk> row;
        CDisk p = CDisk::exact_int(1, prec);
        for (int j = 0; j < k_; ++j) {
            row.push_back(p);
            if (j + 1 < k_) p = cd_mul(p, roots[i]);
        }
        m.push_back(std::move(row));
    }
    return m;
}

std::vector<std::vector<CDisk>> Order::embedding_matrix_inverse(mpfr_prec_t prec) const {
    return cd_mat_inverse(embedding_matrix(prec));
}

std::vector<std::vector<CDisk>> cd_mat_inverse(const std::vector<std::vector<CDisk>>& m) {
    const int n = (int)m.size();
    mpfr_prec_t p = m[0][0].prec();
    std::vector<std::vector<CDisk>> a(m);
    std::vector<std::vector<CDisk>> inv(n, std::vector<CDisk>(n, CDisk(p)));
    for (int i = 0; i < n; ++i) inv[i][i] = CDisk::exact_int(1, p);
    for (int col = 0; col < n; ++col) {
        // pivot: row with largest certified lower bound
        int piv = -1;
        Real best(p);
        for (int r = col; r < n; ++r) {
            Real lo = a[r][col].abs_lower();
            if (piv < 0 || mpfr_cmp(lo.get(), best.get()) > 0) {
                piv = r;
                best = lo;
            }
        }
        if (!(mpfr_sgn(best.get()) > 0))
            throw EnclosureFailure("cd_mat_inverse: pivot not separated from zero");
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        CDisk pinv = cd_inv(a[col][col]);
        for (int j = 0; j < n; ++j) {
            a[col][j] = cd_mul(a[col][j], pinv);
            inv[col][j] = cd_mul(inv[col][j], pinv);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            CDisk f = a[r][col];
            if (f.contains_zero() && f.abs_upper().to_double() == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                a[r][j] = cd_sub(a[r][j], cd_mul(f, a[col][j]));
                inv[r][j] = cd_sub(inv[r][j], cd_mul(f, inv[col][j]));
            }
        }
    }
    return inv;
}

}  // namespace gns
