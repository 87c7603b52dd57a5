#ifndef GNS_ZLINALG_HPP
#define GNS_ZLINALG_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace gns {

using ZVec = std::vector<mpz_class>;
using QVec = std::vector<mpq_class>;
using ZMat = std::vector<ZVec>;  // row-major, rectangular

mpz_class det_bareiss(ZMat m);  // fraction-free determinant, m consumed

// Column-style Hermite normal form: H spans the same column lattice as m,
// H upper triangular with positive diagonal. Requires det(m) != 0.
struct Hnf {
    ZMat h;  // k x k, h[i][j] = 0 for i > j, h[j][j] > 0
};
Hnf hnf_columns(const ZMat& m);

// Canonical representative of x modulo the column lattice of H:
// reduces coordinates bottom-up into 0 <= y[j] < h[j][j].
ZVec hnf_reduce(const Hnf& hnf, ZVec x);

// Solve m * x = rhs over Q. Returns nullopt if m is singular.
std::optional<QVec> solve_rational(const ZMat& m, const ZVec& rhs);

}  // namespace gns

#endif
