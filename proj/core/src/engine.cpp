#include "gns/engine.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "gns/errors.hpp"
#include "gns/roots.hpp"

namespace gns {

GnsInstance::GnsInstance(Order o, DomainPtr f, OPoly p, DigitSet d)
    : o_(std::move(o)), f_(std::move(f)), p_(std::move(p)), digits_(std::move(d)) {
    fz_ = conjugate_product(o_, p_);
}

GnsInstance GnsInstance::make(Order order, DomainPtr domain, OPoly p) {
    if (!domain) throw ValidationError("instance needs a domain");
    if (domain->dimension() != order.degree())
        throw ValidationError("domain dimension does not match the order degree");
    if (p.deg() < 1) throw ValidationError("p must have degree >= 1");
    if (!op_monic(order, p)) throw ValidationError("p must be monic");
    DigitSet d = DigitSet::build(order, *domain, p.c[0]);
    return GnsInstance(std::move(order), std::move(domain), std::move(p), std::move(d));
}

GnsInstance::Step GnsInstance::backward_step(const OPoly& b) const {
    ZVec b0 = b.is_zero() ? o_.zero() : b.c[0];
    auto [d0, q] = digits_.digit_for(o_, b0);
    // next = (b - d0 - q p) / x
    OPoly t = op_sub(o_, op_sub(o_, b, op_constant(o_, d0)), op_scale(o_, p_, q));
    if (!t.is_zero() && !o_.is_zero(t.c[0]))
        throw InternalError("backward_step: constant term did not cancel");
    std::vector<ZVec> shifted;
    for (size_t j = 1; j < t.c.size(); ++j) shifted.push_back(t.c[j]);
    return Step{std::move(d0), op_normalize(o_, std::move(shifted)), std::move(q)};
}

namespace {

std::vector<mpz_class> state_key(const OPoly& b, int n, int k) {
    std::vector<mpz_class> key((size_t)n * k, 0);
    for (size_t j = 0; j < b.c.size(); ++j)
        for (int c = 0; c < k; ++c) key[j * k + c] = b.c[j][c];
    return key;
}

}  // namespace

std::variant<Expansion, std::vector<OPoly>> GnsInstance::expand(const OPoly& a,
                                                                long step_cap) const {
    OPoly cur = op_rem(o_, a, p_);
    const int k = o_.degree();
    std::vector<OPoly> path;
    std::map<std::vector<mpz_class>, size_t> seen;
    std::vector<ZVec> digits;
    for (long step = 0; step <= step_cap; ++step) {
        if (cur.is_zero()) {
            while (!digits.empty() && o_.is_zero(digits.back())) digits.pop_back();
            // verify sum d_j x^j == a (mod p)
            OPoly s;
            s.c = digits;
            s = op_normalize(o_, std::move(s.c));
            if (!op_rem(o_, op_sub(o_, s, a), p_).is_zero())
                throw InternalError("expand: digit string does not reproduce a mod p");
            return Expansion{std::move(digits)};
        }
        auto key = state_key(cur, n(), k);
        auto it = seen.find(key);
        if (it != seen.end())
            return std::vector<OPoly>(path.begin() + (long)it->second, path.end());
        seen.emplace(std::move(key), path.size());
        path.push_back(cur);
        Step st = backward_step(cur);
        digits.push_back(st.d0);
        cur = std::move(st.next);
    }
    throw StepCapExceeded("expand: no termination or revisit within the step cap");
}

StateBound GnsInstance::state_bound(mpfr_prec_t start_prec) const {
    const int k = o_.degree();
    const int nn = n();
    // distinct-root factors over K with multiplicities, computed exactly once
    auto factors = qp_squarefree_decomposition(o_, qp_from_opoly(o_, p_));

    for (mpfr_prec_t prec = std::max<mpfr_prec_t>(start_prec, kDefaultPrec);
         prec <= o_.prec_cap(); prec *= 2) {
        try {
            StateBound sb;
            sb.prec = prec;
            sb.c = Real(prec);

            // max |d^(i)| over all digits and embeddings, upper bound
            Real maxd(prec);
            for (const auto& d : digits_.elements())
                for (const auto& v : o_.conjugate_values(d, prec)) {
                    Real u = v.abs_upper();
                    if (mpfr_cmp(u.get(), maxd.get()) > 0) maxd = u;
                }

            bool precise = true;
            sb.roots.assign(k, {});
            sb.multiplicity.assign(k, {});
            sb.value_bound.assign(k, {});
            // per embedding: derivative-value bounds per (root, t < mult)
            std::vector<std::vector<Real>> deriv_bounds(k);

            for (int i = 0; i < k && precise; ++i) {
                for (size_t fi = 0; fi < factors.size() && precise; ++fi) {
                    const QPoly& g = factors[fi];
                    const int mult = (int)fi + 1;
                    const int dg = (int)g.size() - 1;
                    if (dg < 1) continue;
                    CoeffFn fn = [this, &g, i](mpfr_prec_t q) {
                        CDisk th = o_.conjugate_roots(q)[i];
                        std::vector<CDisk> out;
                        for (const auto& coeff : g) {
                            std::vector<CDisk> c;
                            for (const auto& qc : coeff) c.push_back(CDisk::exact_rat(qc, q));
                            out.push_back(cd_poly_eval(c, th));
                        }
                        return out;
                    };
                    auto rts = isolate_roots(fn, dg, prec, o_.prec_cap());
                    for (const auto& al : rts) {
                        Real lo = al.abs_lower();
                        // need |alpha| - 1 and 1 - 1/|alpha| bounded away from 0
                        Real den1(prec);  // lower bound of |alpha| - 1
                        mpfr_sub_ui(den1.get(), lo.get(), 1, MPFR_RNDD);
                        if (!(mpfr_sgn(den1.get()) > 0)) {
                            precise = false;
                            break;
                        }
                        Real inv(prec);  // upper bound of 1/|alpha|
                        mpfr_ui_div(inv.get(), 1, lo.get(), MPFR_RNDU);
                        Real den0(prec);  // lower bound of 1 - 1/|alpha|
                        mpfr_ui_sub(den0.get(), 1, inv.get(), MPFR_RNDD);
                        Real v(prec);  // maxd / (1 - 1/|alpha|) + 1, upward
                        mpfr_div(v.get(), maxd.get(), den0.get(), MPFR_RNDU);
                        mpfr_add_ui(v.get(), v.get(), 1, MPFR_RNDU);
                        sb.roots[i].push_back(al);
                        sb.multiplicity[i].push_back(mult);
                        sb.value_bound[i].push_back(v);
                        if (mpfr_cmp(v.get(), sb.c.get()) > 0) sb.c = v;
                        Real b = v;  // B_0
                        deriv_bounds[i].push_back(b);
                        for (int t = 1; t < mult; ++t) {
                            Real nb(prec);
                            mpfr_mul_ui(nb.get(), b.get(), (unsigned long)t, MPFR_RNDU);
                            mpfr_div(nb.get(), nb.get(), den1.get(), MPFR_RNDU);
                            deriv_bounds[i].push_back(nb);
                            b = nb;
                        }
                    }
                }
            }
            if (!precise) continue;

            // coefficient-conjugate bounds W[i][j] via the confluent
            // Vandermonde system: row (l,t): sum_j falling(j,t) a_l^(j-t) b_j
            std::vector<std::vector<Real>> w(k);
            for (int i = 0; i < k; ++i) {
                std::vector<std::vector<CDisk>> m;
                for (size_t l = 0; l < sb.roots[i].size(); ++l) {
                    for (int t = 0; t < sb.multiplicity[i][l]; ++t) {
                        std::vector<CDisk> row;
                        for (int j = 0; j < nn; ++j) {
                            if (j < t) {
                                row.push_back(CDisk(prec));
                                continue;
                            }
                            mpz_class fall = 1;
                            for (int u = 0; u < t; ++u) fall *= (j - u);
                            CDisk e = CDisk::exact_int(fall, prec);
                            for (int u = 0; u < j - t; ++u) e = cd_mul(e, sb.roots[i][l]);
                            row.push_back(e);
                        }
                        m.push_back(std::move(row));
                    }
                }
                if ((int)m.size() != nn)
                    throw InternalError("state_bound: multiplicities do not sum to deg p");
                auto minv = cd_mat_inverse(m);
                for (int j = 0; j < nn; ++j) {
                    Real bound(prec);
                    for (int s = 0; s < nn; ++s) {
                        Real term(prec);
                        mpfr_mul(term.get(), minv[j][s].abs_upper().get(),
                                 deriv_bounds[i][s].get(), MPFR_RNDU);
                        mpfr_add(bound.get(), bound.get(), term.get(), MPFR_RNDU);
                    }
                    w[i].push_back(bound);
                }
            }

            // coordinate bounds via the inverse embedding matrix
            auto oinv = o_.embedding_matrix_inverse(prec);
            sb.box.assign((size_t)nn * k, 0);
            for (int j = 0; j < nn; ++j)
                for (int c = 0; c < k; ++c) {
                    Real bound(prec);
                    for (int i = 0; i < k; ++i) {
                        Real term(prec);
                        mpfr_mul(term.get(), oinv[c][i].abs_upper().get(), w[i][j].get(),
                                 MPFR_RNDU);
                        mpfr_add(bound.get(), bound.get(), term.get(), MPFR_RNDU);
                    }
                    mpz_class zb;
                    mpfr_get_z(zb.get_mpz_t(), bound.get(), MPFR_RNDD);
                    if (zb < 0) zb = 0;
                    sb.box[(size_t)j * k + c] = zb;
                }
            return sb;
        } catch (const EnclosureFailure&) {
            // retry at higher precision
        }
    }
    throw EnclosureFailure("state_bound: precision cap reached");
}

DecisionReport GnsInstance::decide(mpfr_prec_t prec) const {
    DecisionReport rep;
    if (digits_.size() == 1) {
        // digit set {0}: no nonzero constant has a finite representation
        rep.verdict = Verdict::FinitenessFails;
        rep.reason = FailReason::DegenerateDigits;
        return rep;
    }
    Expansive e = is_expansive(fz_, o_.prec_cap());
    if (e == Expansive::False) {
        rep.verdict = Verdict::FinitenessFails;
        rep.reason = FailReason::NotExpansive;
        return rep;
    }
    if (e == Expansive::Inconclusive) {
        rep.verdict = Verdict::Inconclusive;
        return rep;
    }

    StateBound sb = state_bound(prec);
    const int k = o_.degree();
    const int nn = n();
    const int dim = nn * k;

    double total = 1;
    for (const auto& b : sb.box) total *= 2 * b.get_d() + 1;
    if (total > 2e8) throw TooLarge("decide: state box too large to enumerate");
    rep.box_states = (long long)total;
    rep.bound_c = sb.c.to_double();

    // double-precision data for conservative value pruning
    struct PruneDatum {
        int embedding;
        std::complex<double> alpha;
        double vmax;
    };
    std::vector<PruneDatum> prune;
    std::vector<std::complex<double>> theta(k);
    {
        auto ths = o_.conjugate_roots(sb.prec);
        for (int i = 0; i < k; ++i)
            theta[i] = {ths[i].re.to_double(), ths[i].im.to_double()};
        for (int i = 0; i < k; ++i)
            for (size_t l = 0; l < sb.roots[i].size(); ++l)
                prune.push_back({i,
                                 {sb.roots[i][l].re.to_double(), sb.roots[i][l].im.to_double()},
                                 sb.value_bound[i][l].to_double()});
    }
    // powers of theta per embedding for coefficient evaluation
    std::vector<std::vector<std::complex<double>>> thpow(k);
    for (int i = 0; i < k; ++i) {
        std::complex<double> t(1.0, 0.0);
        for (int c = 0; c < k; ++c) {
            thpow[i].push_back(t);
            t *= theta[i];
        }
    }

    std::map<std::vector<mpz_class>, int> memo;  // 1 = reaches 0, 2 = reaches a cycle
    std::vector<mpz_class> zero_key((size_t)dim, 0);
    memo[zero_key] = 1;

    std::vector<long> cur(dim);
    std::vector<long> lo(dim), hi(dim);
    for (int i = 0; i < dim; ++i) {
        lo[i] = -sb.box[i].get_si();
        hi[i] = sb.box[i].get_si();
        cur[i] = lo[i];
    }

    while (true) {
        // conservative prune: certainly outside every cycle's value bounds
        bool pruned = false;
        for (const auto& pd : prune) {
            std::complex<double> acc(0, 0);
            for (int j = nn - 1; j >= 0; --j) {
                std::complex<double> coeff(0, 0);
                for (int c = 0; c < k; ++c)
                    coeff += (double)cur[(size_t)j * k + c] * thpow[pd.embedding][c];
                acc = acc * pd.alpha + coeff;
            }
            if (std::abs(acc) > pd.vmax * 1.001 + 1.0) {
                pruned = true;
                break;
            }
        }
        if (!pruned) {
            ++rep.states_checked;
            std::vector<ZVec> coeffs(nn, ZVec(k));
            for (int j = 0; j < nn; ++j)
                for (int c = 0; c < k; ++c) coeffs[j][c] = cur[(size_t)j * k + c];
            OPoly b = op_normalize(o_, std::move(coeffs));

            // classify the orbit of b
            std::vector<OPoly> path;
            std::map<std::vector<mpz_class>, size_t> pos;
            OPoly st = b;
            int cls = 0;
            while (true) {
                auto key = state_key(st, nn, k);
                auto mit = memo.find(key);
                if (mit != memo.end()) {
                    cls = mit->second;
                    break;
                }
                auto pit = pos.find(key);
                if (pit != pos.end()) {
                    ++rep.cycles_found;
                    if (!rep.witness) {
                        std::vector<OPoly> cyc(path.begin() + (long)pit->second, path.end());
                        rep.witness = witness_certificate(cyc);
                    }
                    cls = 2;
                    break;
                }
                pos.emplace(std::move(key), path.size());
                path.push_back(st);
                st = backward_step(st).next;
            }
            for (const auto& ps : path) memo[state_key(ps, nn, k)] = cls;
        }

        int j = dim - 1;
        for (; j >= 0; --j) {
            if (++cur[j] <= hi[j]) break;
            cur[j] = lo[j];
        }
        if (j < 0) break;
    }

    if (rep.cycles_found > 0) {
        rep.verdict = Verdict::FinitenessFails;
        rep.reason = FailReason::Cycle;
    } else {
        rep.verdict = Verdict::FinitenessHolds;
    }
    return rep;
}

Witness GnsInstance::witness_certificate(const std::vector<OPoly>& cycle) const {
    if (cycle.empty()) throw ValidationError("witness: empty cycle");
    const int h = (int)cycle.size();
    Witness w;
    w.h = h;
    w.cycle = cycle;
    bool nonzero_digit = false;
    for (int j = 0; j < h; ++j) {
        Step st = backward_step(cycle[j]);
        if (!op_equal(st.next, cycle[(j + 1) % h]))
            throw ValidationError("witness: states do not form a T_p cycle");
        if (!o_.is_zero(st.d0)) nonzero_digit = true;
        w.digits.push_back(std::move(st.d0));
    }
    if (!nonzero_digit) throw ValidationError("witness: cycle digits are all zero");

    OPoly s = op_normalize(o_, w.digits);  // sum d_j x^j
    // b0 = s + x^h b0 + r p  =>  r = (b0 - s - x^h b0) / p
    OPoly num = op_sub(o_, op_sub(o_, cycle[0], s), op_shift_up(o_, cycle[0], h));
    OPoly r = op_divexact(o_, num, p_);
    w.q1 = op_neg(o_, cycle[0]);
    w.q2 = op_neg(o_, r);

    // verify s == (x^h - 1) q1 + q2 p exactly
    std::vector<ZVec> xh(h + 1, o_.zero());
    xh[0] = o_.neg(o_.one());
    xh[h] = o_.one();
    OPoly lhs = op_add(o_, op_mul(o_, op_normalize(o_, std::move(xh)), w.q1),
                       op_mul(o_, w.q2, p_));
    if (!op_equal(lhs, s)) throw InternalError("witness: certificate identity failed");
    return w;
}

std::optional<double> GnsInstance::length_bound(const OPoly& a, mpfr_prec_t prec) const {
    if (!ip_squarefree(fz_)) return std::nullopt;
    StateBound sb = state_bound(prec);
    const int k = o_.degree();

    Real h(sb.prec);  // max log|a^(i)(alpha)| / log|alpha|, upper bound
    for (int i = 0; i < k; ++i) {
        for (size_t l = 0; l < sb.roots[i].size(); ++l) {
            CDisk v = op_eval_embedded(o_, a, i, sb.roots[i][l], sb.prec);
            Real up = v.abs_upper();
            if (mpfr_cmp_ui(up.get(), 1) <= 0) continue;
            Real num(sb.prec), den(sb.prec), term(sb.prec);
            mpfr_log(num.get(), up.get(), MPFR_RNDU);
            mpfr_log(den.get(), sb.roots[i][l].abs_lower().get(), MPFR_RNDD);
            if (!(mpfr_sgn(den.get()) > 0))
                throw EnclosureFailure("length_bound: root not separated from the unit circle");
            mpfr_div(term.get(), num.get(), den.get(), MPFR_RNDU);
            if (mpfr_cmp(term.get(), h.get()) > 0) h = term;
        }
    }

    if (!max_len_) {
        // max expansion length over the whole state box
        const int nn = n();
        const int dim = nn * k;
        std::vector<long> cur(dim), lo(dim), hi(dim);
        for (int i = 0; i < dim; ++i) {
            lo[i] = -sb.box[i].get_si();
            hi[i] = sb.box[i].get_si();
            cur[i] = lo[i];
        }
        long best = 0;
        while (true) {
            std::vector<ZVec> coeffs(nn, ZVec(k));
            for (int j = 0; j < nn; ++j)
                for (int c = 0; c < k; ++c) coeffs[j][c] = cur[(size_t)j * k + c];
            OPoly b = op_normalize(o_, std::move(coeffs));
            auto res = expand(b, 1000000L);
            if (!std::holds_alternative<Expansion>(res))
                throw ValidationError("length_bound: instance has a nonzero cycle");
            best = std::max(best, (long)std::get<Expansion>(res).digits.size());
            int j = dim - 1;
            for (; j >= 0; --j) {
                if (++cur[j] <= hi[j]) break;
                cur[j] = lo[j];
            }
            if (j < 0) break;
        }
        max_len_ = best;
    }
    return h.to_double() + (double)*max_len_;
}

}  // namespace gns
