#ifndef GNS_DOMAIN_HPP
#define GNS_DOMAIN_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gns/zlinalg.hpp"

namespace gns {

// Lattice translates; always contains 0 and semigroup-generates Z^k.
struct NeighborSet {
    std::vector<ZVec> v;
};

struct HypothesisFlags {
    bool zero_in_int = false;          // 0 in int(F)
    bool zero_in_int_plus = false;     // 0 in int_+(F)
    bool zero_in_int_union = false;    // 0 in int(F u (F - e1))
    bool zero_in_int_minus_shift = false;  // 0 in int_-(cl F - e1)
};

struct TilingReport {
    long samples = 0;
    long failures = 0;
    std::vector<QVec> failed_points;  // first few offenders
};

// Bounded fundamental domain F for the translation action of Z^k on R^k,
// with 0 in F. Membership and location are exact on rational points.
class FundamentalDomain {
  public:
    virtual ~FundamentalDomain() = default;

    virtual int dimension() const = 0;
    virtual bool contains(const QVec& b) const = 0;
    // the unique m with b - m in F; throws NotTiling if the candidate window
    // yields no match or several
    virtual ZVec locate(const QVec& b) const = 0;
    // closed per-coordinate interval [lo_i, hi_i] covering F
    virtual std::vector<std::pair<mpq_class, mpq_class>> bounding_box() const = 0;
    virtual std::string describe() const = 0;

    // conservative superset of the true neighbor set, from bounding-box
    // overlap; contains 0 and all +-e_i
    NeighborSet neighbor_superset() const;

    // analytic flags; throws UnsupportedDomain unless overridden
    virtual HypothesisFlags hypothesis_flags() const;

    TilingReport verify_tiling(long sample_count, unsigned long seed) const;
};

// F = prod [a_i, a_i + 1), with a_i <= 0 < a_i + 1.
class BoxDomain : public FundamentalDomain {
  public:
    explicit BoxDomain(QVec offsets);

    int dimension() const override { return (int)a_.size(); }
    bool contains(const QVec& b) const override;
    ZVec locate(const QVec& b) const override;
    std::vector<std::pair<mpq_class, mpq_class>> bounding_box() const override;
    HypothesisFlags hypothesis_flags() const override;
    std::string describe() const override;

    const QVec& offsets() const { return a_; }

  private:
    QVec a_;
};

// The sail for an imaginary quadratic order with basis 1, omega:
//   norm_form:  |r1 + r2 w| < 1,   |r1 - 1 + r2 w| >= 1,  -1/2 <= r2 < 1/2
//   euclidean:  ||(r1,r2)|| < 1,   ||(r1-1,r2)|| >= 1,    -1/2 <= r2 < 1/2
// where |.| uses w = omega_re + sqrt(-omega_im_sq); all comparisons reduce to
// exact rational quadratic forms.
class SailDomain : public FundamentalDomain {
  public:
    enum class Variant { norm_form, euclidean };

    SailDomain(mpq_class omega_re, mpq_class omega_im_sq, Variant variant);

    int dimension() const override { return 2; }
    bool contains(const QVec& b) const override;
    ZVec locate(const QVec& b) const override;
    std::vector<std::pair<mpq_class, mpq_class>> bounding_box() const override;
    HypothesisFlags hypothesis_flags() const override;
    std::string describe() const override;

  private:
    mpq_class wr_, ws_;  // Re(omega), Im(omega)^2 > 0
    Variant variant_;
};

using DomainPtr = std::shared_ptr<const FundamentalDomain>;

mpz_class q_floor(const mpq_class& q);

}  // namespace gns

#endif
