/*
   Copyright 2026 The hyperzeta authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hyperzeta/ak_prediction.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "hyperzeta/errors.hpp"
#include "hyperzeta/fq_poly.hpp"

namespace hyperzeta {

namespace {

struct EvalShared {
    mpz_class q;
    int k;
    Parity parity;
    long bits;
    long N;
    std::vector<Real> qn_inv;   // q^-n, n = 0..N
    std::vector<Real> qhn_inv;  // q^-(n/2), n = 0..N
    std::vector<mpz_class> i_n;
    std::vector<std::pair<int, int>> pairs;  // 1 <= i <= j <= k, zero-based
    Real one, half;

    EvalShared(const mpz_class& q_, int k_, Parity par, const PrecisionContext& prec)
        : q(q_),
          k(k_),
          parity(par),
          bits(prec.bits()),
          N(prec.truncation),
          one(1, bits),
          half(mpq_class(1, 2), bits) {
        Real qr(q, bits);
        Real qinv = qr.inverse();
        Real qhinv = qr.sqrt().inverse();
        qn_inv.reserve(static_cast<size_t>(N) + 1);
        qhn_inv.reserve(static_cast<size_t>(N) + 1);
        qn_inv.emplace_back(1, bits);
        qhn_inv.emplace_back(1, bits);
        for (long n = 1; n <= N; ++n) {
            qn_inv.push_back(qn_inv.back() * qinv);
            qhn_inv.push_back(qhn_inv.back() * qhinv);
        }
        i_n.resize(static_cast<size_t>(N) + 1);
        for (long n = 1; n <= N; ++n) i_n[static_cast<size_t>(n)] = count_irreducible(static_cast<int>(n), q);
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) pairs.emplace_back(i, j);
    }
};

// Arithmetic Euler product over degrees n <= N (and, for even parity, the
// square-root correction factor), at the point with e^{u_j} = epos[j].
Real arith_product(const EvalShared& sh, const std::vector<Real>& epos,
                   const std::vector<Real>& eneg) {
    const long B = sh.bits;
    const int k = sh.k;
    const Real& one = sh.one;
    Real result(1, B);

    std::vector<Real> xn(eneg);  // e^{-n u_j}
    std::vector<Real> pair_base;
    pair_base.reserve(sh.pairs.size());
    for (const auto& [i, j] : sh.pairs) pair_base.push_back(eneg[static_cast<size_t>(i)] *
                                                            eneg[static_cast<size_t>(j)]);
    std::vector<Real> mn(pair_base);  // e^{-n (u_i+u_j)}

    for (long n = 1; n <= sh.N; ++n) {
        if (n > 1) {
            for (int j = 0; j < k; ++j) xn[static_cast<size_t>(j)] *= eneg[static_cast<size_t>(j)];
            for (size_t t = 0; t < mn.size(); ++t) mn[t] *= pair_base[t];
        }
        const Real& w = sh.qn_inv[static_cast<size_t>(n)];
        const Real& c = sh.qhn_inv[static_cast<size_t>(n)];
        Real pairprod(1, B);
        for (const Real& m : mn) pairprod *= one - w * m;
        Real U(1, B), V(1, B);
        for (int j = 0; j < k; ++j) {
            Real t = c * xn[static_cast<size_t>(j)];
            U *= one - t;
            V *= one + t;
        }
        Real uv = U * V;
        Real factor = pairprod * (((U + V) * sh.half + w * uv) / (uv * (one + w)));
        result *= factor.pow_z(sh.i_n[static_cast<size_t>(n)]);
    }
    if (sh.parity == Parity::even_degree) {
        const Real& c = sh.qhn_inv[1];
        Real pf(1, B);
        for (int j = 0; j < k; ++j)
            pf *= (one - c * epos[static_cast<size_t>(j)]) / (one - c * eneg[static_cast<size_t>(j)]);
        result *= pf.sqrt();
    }
    return result;
}

// prod_{i<=j} (1 - e^{-u_i-u_j}), computed through expm1 so tiny u keep
// full relative accuracy.
Real zeta_denominator(const EvalShared& sh, const std::vector<Real>& u) {
    Real d(1, sh.bits);
    for (const auto& [i, j] : sh.pairs) {
        Real s = u[static_cast<size_t>(i)] + u[static_cast<size_t>(j)];
        if (s.is_zero()) throw pole_error("u_i + u_j = 0 hits a zeta-factor pole");
        d *= -((-s).expm1());
    }
    return d;
}

long ceil_digits_over_log10_q(const mpz_class& q, long digits) {
    double lq = std::log10(mpz_get_d(q.get_mpz_t()));
    return static_cast<long>(std::ceil(static_cast<double>(digits) / lq));
}

struct TermStats {
    long max_exp10 = -1000000000L;
};

}  // namespace

PrecisionContext PrecisionContext::for_prediction(const mpz_class& q, int k, long target_digits,
                                                  int shift_exponent) {
    PrecisionContext prec;
    prec.target_digits = target_digits;
    prec.shift_exponent = shift_exponent;
    prec.working_digits =
        static_cast<long>(shift_exponent) * k * (k + 1) / 2 + target_digits + 40;
    // The degree-n factor deviates from 1 by O(q^-2n) and is raised to the
    // i_n ~ q^n/n power, so its rounding error is amplified by roughly q^n.
    // Keep q^N near 10^(target+10): larger N stops helping and starts
    // feeding amplified roundoff into the product.
    prec.truncation = ceil_digits_over_log10_q(q, target_digits + 10) + 3;
    prec.validate(q, k);
    return prec;
}

void PrecisionContext::validate(const mpz_class& q, int k) const {
    if (k < 1) throw domain_error("PrecisionContext: k must be >= 1");
    if (q < 3 || mpz_even_p(q.get_mpz_t()))
        throw domain_error("PrecisionContext: q must be an odd prime power");
    if (target_digits < 1 || shift_exponent < 1)
        throw precision_error("PrecisionContext: target digits and shift exponent must be positive");
    long need = static_cast<long>(shift_exponent) * k * (k + 1) / 2 + target_digits + 20;
    if (working_digits < need)
        throw precision_error("PrecisionContext: working precision " +
                              std::to_string(working_digits) + " below required " +
                              std::to_string(need));
    long n_need = ceil_digits_over_log10_q(q, target_digits + 5);
    if (truncation < n_need)
        throw precision_error("PrecisionContext: Euler-product truncation " +
                              std::to_string(truncation) + " below required " +
                              std::to_string(n_need));
}

Real euler_P1(const mpz_class& q, const PrecisionContext& prec) {
    EvalShared sh(q, 1, Parity::odd_degree, prec);
    Real r(1, sh.bits);
    for (long n = 1; n <= sh.N; ++n) {
        const Real& w = sh.qn_inv[static_cast<size_t>(n)];
        Real f = sh.one - w * w / (sh.one + w);
        r *= f.pow_z(sh.i_n[static_cast<size_t>(n)]);
    }
    return r;
}

Real prime_deg_sum(const mpz_class& q, const PrecisionContext& prec) {
    EvalShared sh(q, 1, Parity::odd_degree, prec);
    Real r(0, sh.bits);
    for (long n = 1; n <= sh.N; ++n) {
        const Real& w = sh.qn_inv[static_cast<size_t>(n)];
        Real den = sh.one + w - w * w;
        r += Real(mpz_class(n * sh.i_n[static_cast<size_t>(n)]), sh.bits) * w * w / den;
    }
    return r;
}

AKPrediction q1_closed(const mpz_class& q, int d, const PrecisionContext& prec) {
    if (d < 1) throw domain_error("q1_closed: d must be >= 1");
    prec.validate(q, 1);
    const long B = prec.bits();
    Real p1 = euler_P1(q, prec);
    Real s = prime_deg_sum(q, prec);
    Real bracket = Real(d, B) + Real(4, B) * s;
    if (d % 2 == 1) {
        bracket += Real(1, B);
    } else {
        Real root = Real(q, B).sqrt();
        bracket -= Real(2, B) / (root - Real(1, B));
    }
    AKPrediction out;
    out.q = q;
    out.d = d;
    out.k = 1;
    out.value = p1 * bracket * Real(mpq_class(1, 2), B);
    out.certified_digits = prec.target_digits;
    return out;
}

Real H_eval(const std::vector<Real>& u, const mpz_class& q, Parity parity,
            const PrecisionContext& prec) {
    int k = static_cast<int>(u.size());
    prec.validate(q, k);
    EvalShared sh(q, k, parity, prec);
    Real halflogq = Real(q, sh.bits).log() * sh.half;
    for (const Real& uj : u)
        if (!(uj.abs() < halflogq))
            throw domain_error("H_eval: |u_j| must be below (ln q)/2");
    Real den = zeta_denominator(sh, u);  // pole check lives here
    std::vector<Real> epos, eneg;
    epos.reserve(u.size());
    eneg.reserve(u.size());
    for (const Real& uj : u) {
        epos.push_back(uj.exp());
        eneg.push_back((-uj).exp());
    }
    return arith_product(sh, epos, eneg) / den;
}

Real H_regularized(const std::vector<Real>& u, const mpz_class& q, Parity parity,
                   const PrecisionContext& prec) {
    int k = static_cast<int>(u.size());
    prec.validate(q, k);
    EvalShared sh(q, k, parity, prec);
    std::vector<Real> epos, eneg;
    epos.reserve(u.size());
    eneg.reserve(u.size());
    for (const Real& uj : u) {
        epos.push_back(uj.exp());
        eneg.push_back((-uj).exp());
    }
    return arith_product(sh, epos, eneg);
}

AKPrediction qk_direct_with_shifts(const mpz_class& q, int d, int k, const PrecisionContext& prec,
                                   const std::vector<int>& shift_multiples, int threads) {
    if (d < 1) throw domain_error("qk_direct: d must be >= 1");
    if (k < 1) throw domain_error("qk_direct: k must be >= 1");
    prec.validate(q, k);
    if (static_cast<int>(shift_multiples.size()) != k)
        throw domain_error("qk_direct: need one shift multiple per variable");
    for (int i = 0; i < k; ++i) {
        if (shift_multiples[static_cast<size_t>(i)] == 0)
            throw domain_error("qk_direct: zero shift");
        for (int j = i + 1; j < k; ++j)
            if (std::abs(shift_multiples[static_cast<size_t>(i)]) ==
                std::abs(shift_multiples[static_cast<size_t>(j)]))
                throw domain_error("qk_direct: shift magnitudes must be distinct");
    }

    const int lambda = d % 2 == 0 ? 1 : 0;
    const long g = (d - 1 - lambda) / 2;
    const Parity parity = lambda ? Parity::even_degree : Parity::odd_degree;
    EvalShared sh(q, k, parity, prec);
    const long B = sh.bits;

    Real base = Real(10, B).pow_ui(static_cast<unsigned long>(prec.shift_exponent)).inverse();
    std::vector<Real> alpha;
    alpha.reserve(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) alpha.push_back(Real(shift_multiples[static_cast<size_t>(j)], B) * base);
    std::vector<Real> exp_pos, exp_neg;
    exp_pos.reserve(static_cast<size_t>(k));
    exp_neg.reserve(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        exp_pos.push_back(alpha[static_cast<size_t>(j)].exp());
        exp_neg.push_back((-alpha[static_cast<size_t>(j)]).exp());
    }

    const std::uint64_t total = 1ull << k;
    std::vector<Real> terms(total);

    auto eval_range = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<Real> u(static_cast<size_t>(k)), ep(static_cast<size_t>(k)),
            en(static_cast<size_t>(k));
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            Real gexp(1, B);
            for (int j = 0; j < k; ++j) {
                bool minus = (mask >> j) & 1;
                const size_t sj = static_cast<size_t>(j);
                if (minus) {
                    u[sj] = -alpha[sj];
                    ep[sj] = exp_neg[sj];
                    en[sj] = exp_pos[sj];
                } else {
                    u[sj] = alpha[sj];
                    ep[sj] = exp_pos[sj];
                    en[sj] = exp_neg[sj];
                }
                gexp *= ep[sj];
            }
            Real K = arith_product(sh, ep, en) * gexp.pow_ui(static_cast<unsigned long>(g)) /
                     zeta_denominator(sh, u);
            terms[mask] = std::move(K);
        }
    };

    int T = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    T = std::max(1, std::min<int>(T, static_cast<int>(total)));
    if (T == 1) {
        eval_range(0, total);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(T));
        for (int t = 0; t < T; ++t) {
            std::uint64_t lo = total * static_cast<std::uint64_t>(t) / static_cast<std::uint64_t>(T);
            std::uint64_t hi =
                total * static_cast<std::uint64_t>(t + 1) / static_cast<std::uint64_t>(T);
            pool.emplace_back(eval_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    // fixed lexicographic summation order
    Real sum(0, B);
    long max_exp10 = -1000000000L;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (!terms[mask].is_zero()) max_exp10 = std::max(max_exp10, terms[mask].exponent10());
        sum += terms[mask];
    }
    if (sum.is_zero())
        throw precision_error("qk_direct: total cancellation at the working precision");

    long cancelled = max_exp10 - sum.exponent10();
    long stable = prec.working_digits - cancelled;
    if (stable < prec.target_digits)
        throw precision_error("qk_direct: only " + std::to_string(stable) +
                              " stable digits remain after cancellation of " +
                              std::to_string(cancelled));

    AKPrediction out;
    out.q = q;
    out.d = d;
    out.k = k;
    out.value = std::move(sum);
    out.certified_digits =
        std::min<long>(2L * prec.shift_exponent - 10,
                       prec.working_digits - static_cast<long>(prec.shift_exponent) * k * (k + 1) / 2 - 10);
    return out;
}

AKPrediction qk_direct(const mpz_class& q, int d, int k, const PrecisionContext& prec,
                       int threads) {
    std::vector<int> mults(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) mults[static_cast<size_t>(j)] = j + 1;
    return qk_direct_with_shifts(q, d, k, prec, mults, threads);
}

std::vector<Real> qk_coefficients(const mpz_class& q, int k, Parity parity,
                                  const PrecisionContext& prec, int threads) {
    const int m = k * (k + 1) / 2 + 1;  // node count, degree m-1
    PrecisionContext boosted = prec;
    boosted.working_digits += 15L * m;
    const long B = boosted.bits();

    std::vector<Real> values;
    values.reserve(static_cast<size_t>(m));
    std::vector<long> nodes;  // x = 2g
    for (int g = 1; g <= m; ++g) {
        int d = parity == Parity::odd_degree ? 2 * g + 1 : 2 * g + 2;
        values.push_back(qk_direct(q, d, k, boosted, threads).value);
        nodes.push_back(2 * g);
    }
    // Newton divided differences on the integer nodes
    std::vector<Real> dd = values;
    for (int lvl = 1; lvl < m; ++lvl) {
        for (int i = m - 1; i >= lvl; --i) {
            dd[static_cast<size_t>(i)] =
                (dd[static_cast<size_t>(i)] - dd[static_cast<size_t>(i - 1)]) /
                Real(nodes[static_cast<size_t>(i)] - nodes[static_cast<size_t>(i - lvl)], B);
        }
    }
    // expand the Newton form to monomial coefficients in x = 2g
    std::vector<Real> poly;
    poly.push_back(dd[static_cast<size_t>(m - 1)]);
    for (int i = m - 2; i >= 0; --i) {
        Real xi(nodes[static_cast<size_t>(i)], B);
        std::vector<Real> np(poly.size() + 1, Real(0, B));
        for (size_t t = 0; t < poly.size(); ++t) {
            np[t + 1] += poly[t];
            np[t] -= xi * poly[t];
        }
        np[0] += dd[static_cast<size_t>(i)];
        poly = std::move(np);
    }
    std::reverse(poly.begin(), poly.end());  // leading coefficient first
    return poly;
}

std::pair<Real, Real> leading_constants(const mpz_class& q, int k, const PrecisionContext& prec) {
    prec.validate(q, k);
    EvalShared sh(q, k, Parity::odd_degree, prec);
    const long B = sh.bits;
    const unsigned long K = static_cast<unsigned long>(k) * (k + 1) / 2;
    Real ak(1, B);
    for (long n = 1; n <= sh.N; ++n) {
        const Real& w = sh.qn_inv[static_cast<size_t>(n)];
        const Real& c = sh.qhn_inv[static_cast<size_t>(n)];
        Real t = sh.half * ((sh.one - c).pow_ui(static_cast<unsigned long>(k)).inverse() +
                            (sh.one + c).pow_ui(static_cast<unsigned long>(k)).inverse()) +
                 w;
        Real f = (sh.one - w).pow_ui(K) / (sh.one + w) * t;
        ak *= f.pow_z(sh.i_n[static_cast<size_t>(n)]);
    }
    mpq_class ratio = 1;
    for (int j = 1; j <= k; ++j) {
        mpz_class a, b;
        mpz_fac_ui(a.get_mpz_t(), static_cast<unsigned long>(j));
        mpz_fac_ui(b.get_mpz_t(), static_cast<unsigned long>(2 * j));
        ratio *= mpq_class(a, b);
    }
    Real c0 = ak * Real(ratio, B);
    return {ak, c0};
}

Real QkSeries::evaluate(const mpz_class& q, long g, long prec_bits, int max_half_exp) const {
    Real acc(0, prec_bits);
    Real qh_inv = Real(q, prec_bits).sqrt().inverse();
    for (const Term& t : terms) {
        if (max_half_exp >= 0 && t.half_exp > max_half_exp) continue;
        mpq_class val = 0;
        for (size_t i = t.g_poly.size(); i-- > 0;) {
            val = val * g + t.g_poly[i];
        }
        acc += Real(val, prec_bits) * qh_inv.pow_ui(static_cast<unsigned long>(t.half_exp));
    }
    return acc;
}

SeriesCheckReport series_check(const mpz_class& q, int k, Parity parity, long g,
                               const PrecisionContext& prec, int max_half_exp) {
    const QkSeries& data = qk_series_data(k, parity);
    const long B = prec.bits();
    SeriesCheckReport rep;
    rep.series_value = data.evaluate(q, g, B, max_half_exp);
    int d = parity == Parity::odd_degree ? static_cast<int>(2 * g + 1) : static_cast<int>(2 * g + 2);
    rep.direct_value = qk_direct(q, d, k, prec).value;
    rep.abs_dev = (rep.series_value - rep.direct_value).abs();
    rep.rel_dev = rep.abs_dev / rep.direct_value.abs();

    // magnitude of the first omitted term
    Real qh_inv = Real(q, B).sqrt().inverse();
    const QkSeries::Term* next = nullptr;
    int cap = max_half_exp;
    for (const auto& t : data.terms)
        if (cap >= 0 && t.half_exp > cap && (next == nullptr || t.half_exp < next->half_exp))
            next = &t;
    auto term_value = [&](const QkSeries::Term& t) {
        mpq_class val = 0;
        for (size_t i = t.g_poly.size(); i-- > 0;) val = val * g + t.g_poly[i];
        return Real(val, B).abs() * qh_inv.pow_ui(static_cast<unsigned long>(t.half_exp));
    };
    if (next != nullptr) {
        rep.expected_tail = term_value(*next);
        rep.tail_estimate_extrapolated = false;
    } else {
        // extrapolate geometrically from the last two stored terms
        const auto& terms = data.terms;
        Real last = term_value(terms[terms.size() - 1]);
        Real prev = term_value(terms[terms.size() - 2]);
        Real ratio = prev.is_zero() ? Real(1, B) : last / prev;
        rep.expected_tail = last * ratio;
        rep.tail_estimate_extrapolated = true;
    }
    return rep;
}

}  // namespace hyperzeta
