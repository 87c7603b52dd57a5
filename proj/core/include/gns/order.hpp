#ifndef GNS_ORDER_HPP
#define GNS_ORDER_HPP

#include <optional>
#include <vector>

#include "gns/cdisk.hpp"
#include "gns/zlinalg.hpp"

namespace gns {

inline constexpr mpfr_prec_t kDefaultPrec = 64;
inline constexpr mpfr_prec_t kPrecCap = 1 << 14;

// A monogenic order Z[theta], theta a root of the monic integer polynomial f.
// Elements are integer coordinate vectors w.r.t. the power basis
// 1, theta, ..., theta^(k-1).
class Order {
  public:
    // throws NotMonic, RationalRootFound, EnclosureFailure
    static Order make(const ZVec& min_poly, mpfr_prec_t prec_cap = kPrecCap);

    int degree() const { return k_; }
    const ZVec& min_poly() const { return f_; }

    ZVec zero() const { return ZVec(k_, 0); }
    ZVec one() const;
    ZVec from_int(const mpz_class& n) const;
    bool is_zero(const ZVec& a) const;

    ZVec add(const ZVec& a, const ZVec& b) const;
    ZVec sub(const ZVec& a, const ZVec& b) const;
    ZVec neg(const ZVec& a) const;
    ZVec mul(const ZVec& a, const ZVec& b) const;
    ZVec mul_int(const ZVec& a, const mpz_class& n) const;

    // matrix of multiplication by theta_el in the power basis (column j is
    // coords(theta_el * omega_j))
    ZMat mul_matrix(const ZVec& theta_el) const;
    mpz_class norm(const ZVec& theta_el) const;

    // quotient beta/theta_el if it lies in the order
    std::optional<ZVec> exact_div(const ZVec& beta, const ZVec& theta_el) const;
    // exact rational coordinates of beta/theta_el (theta_el of nonzero norm)
    QVec rational_coords(const ZVec& beta, const ZVec& theta_el) const;

    // complete residue system modulo theta_el, |norm| elements, deterministic
    // mixed-radix order over the HNF diagonal; throws ZeroModulus
    std::vector<ZVec> residues(const ZVec& theta_el) const;
    Hnf residue_hnf(const ZVec& theta_el) const;

    // certified embeddings
    std::vector<CDisk> conjugate_roots(mpfr_prec_t prec) const;
    std::vector<CDisk> conjugate_values(const ZVec& beta, mpfr_prec_t prec) const;
    // Omega[i][j] encloses omega_j under embedding i, and a certified inverse
    std::vector<std::vector<CDisk>> embedding_matrix(mpfr_prec_t prec) const;
    std::vector<std::vector<CDisk>> embedding_matrix_inverse(mpfr_prec_t prec) const;

    // field arithmetic on rational coordinate vectors (for K = Q(theta))
    QVec qmul(const QVec& a, const QVec& b) const;
    QVec qinv(const QVec& a) const;

    mpfr_prec_t prec_cap() const { return prec_cap_; }

  private:
    Order() = default;
    ZVec reduce_power_products(const std::vector<mpz_class>& conv) const;
    QVec reduce_power_products_q(const std::vector<mpq_class>& conv) const;

    int k_ = 0;
    ZVec f_;
    std::vector<ZVec> power_table_;  // coords of theta^k ... theta^(2k-2)
    mpfr_prec_t prec_cap_ = kPrecCap;
};

// Gaussian elimination on complex disk matrices; throws EnclosureFailure if a
// pivot cannot be separated from zero.
std::vector<std::vector<CDisk>> cd_mat_inverse(const std::vector<std::vector<CDisk>>& m);

}  // namespace gns

#endif
