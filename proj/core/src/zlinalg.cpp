#include "gns/zlinalg.hpp"

#include <cstdlib>

#include "gns/errors.hpp"

namespace gns {

mpz_class det_bareiss(ZMat m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (size_t p = 0; p + 1 < n; ++p) {
        if (m[p][p] == 0) {
            size_t s = p + 1;
            while (s < n && m[s][p] == 0) ++s;
            if (s == n) return 0;
            std::swap(m[p], m[s]);
            sign = -sign;
        }
        for (size_t i = p + 1; i < n; ++i)
            for (size_t j = p + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[p][p] - m[i][p] * m[p][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
        prev = m[p][p];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

Hnf hnf_columns(const ZMat& m) {
    const size_t k = m.size();
    // work with a list of columns
    std::vector<ZVec> cols(k, ZVec(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) cols[j][i] = m[i][j];

    ZMat h(k, ZVec(k, 0));
    std::vector<bool> used(k, false);
    for (size_t row = k; row-- > 0;) {
        // Euclid on the entries of the active columns in this row
        while (true) {
            size_t a = k, b = k;
            for (size_t j = 0; j < k; ++j) {
                if (used[j] || cols[j][row] == 0) continue;
                if (a == k || abs(cols[j][row]) < abs(cols[a][row])) {
                    b = a;
                    a = j;
                } else if (b == k || abs(cols[j][row]) < abs(cols[b][row])) {
                    b = j;
                }
            }
            if (a == k) throw InternalError("hnf_columns: singular matrix");
            if (b == k) {
                if (cols[a][row] < 0)
                    for (auto& e : cols[a]) e = -e;
                for (size_t i = 0; i < k; ++i) h[i][row] = cols[a][i];
                used[a] = true;
                break;
            }
            // truncated quotient leaves |remainder| < |cols[a][row]|
            mpz_class q = cols[b][row] / cols[a][row];
            for (size_t i = 0; i < k; ++i) cols[b][i] -= q * cols[a][i];
        }
    }
    // normalize entries above the diagonal: 0 <= h[i][j] < h[i][i] for i < j
    Hnf out{std::move(h)};
    for (size_t j = 0; j < k; ++j)
        for (size_t i = j; i-- > 0;) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), out.h[i][j].get_mpz_t(), out.h[i][i].get_mpz_t());
            if (q != 0)
                for (size_t r = 0; r <= i; ++r) out.h[r][j] -= q * out.h[r][i];
        }
    return out;
}

ZVec hnf_reduce(const Hnf& hnf, ZVec x) {
    const size_t k = x.size();
    for (size_t j = k; j-- > 0;) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), x[j].get_mpz_t(), hnf.h[j][j].get_mpz_t());
        if (q != 0)
            for (size_t i = 0; i <= j; ++i) x[i] -= q * hnf.h[i][j];
    }
    return x;
}

std::optional<QVec> solve_rational(const ZMat& m, const ZVec& rhs) {
    const size_t n = m.size();
    std::vector<QVec> a(n, QVec(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = mpq_class(m[i][j]);
        a[i][n] = mpq_class(rhs[i]);
    }
    for (size_t p = 0; p < n; ++p) {
        size_t s = p;
        while (s < n && a[s][p] == 0) ++s;
        if (s == n) return std::nullopt;
        std::swap(a[p], a[s]);
        for (size_t i = 0; i < n; ++i) {
            if (i == p || a[i][p] == 0) continue;
            mpq_class f = a[i][p] / a[p][p];
            for (size_t j = p; j <= n; ++j) a[i][j] -= f * a[p][j];
        }
    }
    QVec x(n);
    for (size_t i = 0; i < n; ++i) {
        x[i] = a[i][n] / a[i][i];
        x[i].canonicalize();
    }
    return x;
}

}  // namespace gns
