#include "gns/domain.hpp"

#include <optional>
#include <random>
#include <sstream>

#include "gns/errors.hpp"

namespace gns {

mpz_class q_floor(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

static mpz_class q_ceil(const mpq_class& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

NeighborSet FundamentalDomain::neighbor_superset() const {
    // closed translate bbox + m meets the closed bbox iff m_i in [lo-hi, hi-lo]
    auto bb = bounding_box();
    const int k = dimension();
    std::vector<mpz_class> lo(k), hi(k);
    for (int i = 0; i < k; ++i) {
        lo[i] = q_ceil(bb[i].first - bb[i].second);
        hi[i] = q_floor(bb[i].second - bb[i].first);
    }
    NeighborSet out;
    ZVec cur(k);
    for (int i = 0; i < k; ++i) cur[i] = lo[i];
    while (true) {
        out.v.push_back(cur);
        int j = k - 1;
        for (; j >= 0; --j) {
            if (++cur[j] <= hi[j]) break;
            cur[j] = lo[j];
        }
        if (j < 0) break;
    }
    return out;
}

HypothesisFlags FundamentalDomain::hypothesis_flags() const {
    throw UnsupportedDomain("no analytic hypothesis flags for " + describe());
}

TilingReport FundamentalDomain::verify_tiling(long sample_count, unsigned long seed) const {
    const int k = dimension();
    auto bb = bounding_box();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-4096, 4096);
    std::uniform_int_distribution<long> den(1, 64);
    TilingReport rep;
    for (long s = 0; s < sample_count; ++s) {
        QVec b(k);
        for (int i = 0; i < k; ++i) {
            b[i] = mpq_class(num(rng), den(rng));
            b[i].canonicalize();
        }
        ++rep.samples;
        bool ok = true;
        try {
            ZVec m = locate(b);
            QVec r(k);
            for (int i = 0; i < k; ++i) r[i] = b[i] - m[i];
            if (!contains(r)) ok = false;
        } catch (const NotTiling&) {
            ok = false;
        }
        if (ok) {
            // independent count over the full bbox window
            std::vector<mpz_class> lo(k), hi(k);
            ZVec idx(k);
            for (int i = 0; i < k; ++i) {
                lo[i] = q_ceil(b[i] - bb[i].second);
                hi[i] = q_floor(b[i] - bb[i].first);
                idx[i] = lo[i];
            }
            int matches = 0;
            while (true) {
                QVec r(k);
                for (int i = 0; i < k; ++i) r[i] = b[i] - idx[i];
                if (contains(r)) ++matches;
                int j = k - 1;
                for (; j >= 0; --j) {
                    if (++idx[j] <= hi[j]) break;
                    idx[j] = lo[j];
                }
                if (j < 0) break;
            }
            if (matches != 1) ok = false;
        }
        if (!ok) {
            ++rep.failures;
            if ((int)rep.failed_points.size() < 10) rep.failed_points.push_back(b);
        }
    }
    return rep;
}

// ---------------- box ----------------

BoxDomain::BoxDomain(QVec offsets) : a_(std::move(offsets)) {
    if (a_.empty()) throw ValidationError("box domain needs at least one offset");
    for (auto& q : a_) {
        q.canonicalize();
        if (q > 0 || q + 1 <= 0)
            throw ValidationError("box offsets must satisfy a <= 0 < a + 1");
    }
}

bool BoxDomain::contains(const QVec& b) const {
    if ((int)b.size() != dimension()) throw ValidationError("dimension mismatch");
    for (size_t i = 0; i < a_.size(); ++i)
        if (b[i] < a_[i] || b[i] >= a_[i] + 1) return false;
    return true;
}

ZVec BoxDomain::locate(const QVec& b) const {
    if ((int)b.size() != dimension()) throw ValidationError("dimension mismatch");
    ZVec m(a_.size());
    for (size_t i = 0; i < a_.size(); ++i) m[i] = q_floor(b[i] - a_[i]);
    return m;
}

std::vector<std::pair<mpq_class, mpq_class>> BoxDomain::bounding_box() const {
    std::vector<std::pair<mpq_class, mpq_class>> bb;
    for (const auto& a : a_) bb.emplace_back(a, a + 1);
    return bb;
}

HypothesisFlags BoxDomain::hypothesis_flags() const {
    // 0 is interior in coordinate i iff a_i < 0; the first coordinate is
    // special-cased by each flag's definition
    bool tail_neg = true;
    for (size_t i = 1; i < a_.size(); ++i) tail_neg = tail_neg && a_[i] < 0;
    HypothesisFlags f;
    f.zero_in_int = tail_neg && a_[0] < 0;
    f.zero_in_int_plus = tail_neg;
    f.zero_in_int_union = tail_neg;  // first coordinate covers [a_1 - 1, a_1 + 1)
    f.zero_in_int_minus_shift = tail_neg && a_[0] == 0;  // cl F - e1 = [-1, 0] x ...
    return f;
}

std::string BoxDomain::describe() const {
    std::ostringstream os;
    os << "box(offsets=[";
    for (size_t i = 0; i < a_.size(); ++i) {
        if (i) os << ",";
        os << a_[i].get_str();
    }
    os << "])";
    return os.str();
}

// ---------------- sail ----------------

SailDomain::SailDomain(mpq_class omega_re, mpq_class omega_im_sq, Variant variant)
    : wr_(std::move(omega_re)), ws_(std::move(omega_im_sq)), variant_(variant) {
    wr_.canonicalize();
    ws_.canonicalize();
    if (ws_ <= 0) throw ValidationError("sail domain needs Im(omega)^2 > 0");
}

bool SailDomain::contains(const QVec& b) const {
    if (b.size() != 2) throw ValidationError("dimension mismatch");
    const mpq_class& r1 = b[0];
    const mpq_class& r2 = b[1];
    if (2 * r2 < -1 || 2 * r2 >= 1) return false;
    mpq_class n1, n2;
    if (variant_ == Variant::norm_form) {
        mpq_class q1 = r1 + r2 * wr_;
        n1 = q1 * q1 + r2 * r2 * ws_;
        n2 = (q1 - 1) * (q1 - 1) + r2 * r2 * ws_;
    } else {
        n1 = r1 * r1 + r2 * r2;
        n2 = (r1 - 1) * (r1 - 1) + r2 * r2;
    }
    return n1 < 1 && n2 >= 1;
}

std::vector<std::pair<mpq_class, mpq_class>> SailDomain::bounding_box() const {
    mpq_class half(1, 2);
    if (variant_ == Variant::euclidean)
        return {{mpq_class(-1), mpq_class(1)}, {-half, half}};
    // |r1 + r2 w| < 1 and |r2| <= 1/2 give |r1| < 1 + |Re w|/2
    mpq_class wra = wr_ >= 0 ? wr_ : mpq_class(-wr_);
    mpq_class w = 1 + wra / 2;
    return {{-w, w}, {-half, half}};
}

ZVec SailDomain::locate(const QVec& b) const {
    if (b.size() != 2) throw ValidationError("dimension mismatch");
    // the strip -1/2 <= r2 < 1/2 pins the second coordinate exactly
    mpz_class m2 = q_floor(b[1] + mpq_class(1, 2));
    mpq_class r2 = b[1] - m2;
    auto bb = bounding_box();
    mpz_class lo = q_ceil(b[0] - bb[0].second);
    mpz_class hi = q_floor(b[0] - bb[0].first);
    std::optional<mpz_class> found;
    for (mpz_class m1 = lo; m1 <= hi; ++m1) {
        if (contains({b[0] - m1, r2})) {
            if (found) throw NotTiling("sail locate: multiple matches");
            found = m1;
        }
    }
    if (!found) throw NotTiling("sail locate: no match in window");
    return {*found, m2};
}

HypothesisFlags SailDomain::hypothesis_flags() const {
    // 0 lies on the circle |r - e1 center| = 1 bounding the second inequality:
    // points (eps, 0) with small eps > 0 fall in the excluded disk, so no
    // one-sided or union neighborhood of 0 exists; cl F - e1 touches 0 only
    // at the single boundary point. All four flags are false for every omega
    // and both variants.
    return HypothesisFlags{};
}

std::string SailDomain::describe() const {
    std::ostringstream os;
    os << "sail(omega_re=" << wr_.get_str() << ", omega_im_sq=" << ws_.get_str()
       << ", " << (variant_ == Variant::norm_form ? "norm_form" : "euclidean") << ")";
    return os.str();
}

}  // namespace gns
