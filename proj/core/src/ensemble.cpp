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

#include "hyperzeta/ensemble.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "hyperzeta/errors.hpp"

namespace hyperzeta {

namespace {

mpz_class q_pow(const mpz_class& q, int e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

using idx_t = FqContext::idx_t;

// gcd(a, a') constant? a has degree da >= 1; a and the scratch b (da slots)
// are clobbered. int_consts[i] = i mod p as a field constant.
bool squarefree_kernel(const FqContext& F, idx_t* a, int da, idx_t* b, const idx_t* int_consts) {
    int db = -1;
    for (int i = 1; i <= da; ++i) {
        b[i - 1] = F.mul(a[i], int_consts[i]);
        if (b[i - 1] != 0) db = i - 1;
    }
    if (db < 0) return false;  // derivative vanishes in characteristic p
    for (;;) {
        idx_t binv = F.inv(b[db]);
        for (int i = da; i >= db; --i) {
            idx_t c = a[i];
            if (c == 0) continue;
            idx_t f = F.mul(c, binv);
            a[i] = 0;
            for (int j = 0; j < db; ++j) a[i - db + j] = F.sub(a[i - db + j], F.mul(f, b[j]));
        }
        int dr = -1;
        for (int i = db - 1; i >= 0; --i)
            if (a[i] != 0) {
                dr = i;
                break;
            }
        if (dr < 0) return db == 0;
        std::swap(a, b);
        da = db;
        db = dr;
    }
}

struct IrreduciblePoly {
    int deg;
    std::vector<idx_t> c;
};

// Enumerates monic degree-d polynomials (c_{d-1} fixed to 0 when reduced)
// with flat index in [begin, end), lexicographic in the coefficient vector,
// and calls sink(coeffs, a_series) for each squarefree one. a_series holds
// the character sums a(0..g), assembled multiplicatively from the symbols
// chi_D(P) over irreducibles P of degree <= g.
template <typename Sink>
void scan_range(const FqContext& F, int d, bool reduced, int g,
                const std::vector<IrreduciblePoly>& irr, bool sign_active, std::uint64_t begin,
                std::uint64_t end, Sink&& sink) {
    const std::uint64_t q = F.order();
    const int nfree = reduced ? d - 1 : d;

    std::vector<idx_t> coeffs(static_cast<size_t>(d) + 1, 0);
    coeffs[static_cast<size_t>(d)] = 1;
    {
        std::uint64_t t = begin;
        for (int i = 0; i < nfree; ++i) {
            coeffs[static_cast<size_t>(i)] = t % q;
            t /= q;
        }
    }
    std::vector<idx_t> int_consts(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) int_consts[static_cast<size_t>(i)] = F.from_int(i);

    std::vector<idx_t> fbuf(static_cast<size_t>(d) + 1), gbuf(static_cast<size_t>(d) + 1);
    std::vector<idx_t> abuf(static_cast<size_t>(d) + 1), bbuf(static_cast<size_t>(d) + 1);
    std::vector<long> ser(static_cast<size_t>(g) + 1);

    for (std::uint64_t m = begin; m < end; ++m) {
        std::copy(coeffs.begin(), coeffs.end(), fbuf.begin());
        if (squarefree_kernel(F, fbuf.data(), d, gbuf.data(), int_consts.data())) {
            std::fill(ser.begin(), ser.end(), 0L);
            ser[0] = 1;
            for (const IrreduciblePoly& P : irr) {
                std::copy(coeffs.begin(), coeffs.end(), abuf.begin());
                std::copy(P.c.begin(), P.c.end(), bbuf.begin());
                int s = detail::symbol_kernel(F, abuf.data(), d, bbuf.data(), P.deg, sign_active);
                if (s > 0)
                    for (int j = P.deg; j <= g; ++j) ser[j] += ser[j - P.deg];
                else if (s < 0)
                    for (int j = P.deg; j <= g; ++j) ser[j] -= ser[j - P.deg];
            }
            sink(coeffs, ser);
        }
        // odometer
        for (int i = 0; i < nfree; ++i) {
            if (++coeffs[static_cast<size_t>(i)] < q) break;
            coeffs[static_cast<size_t>(i)] = 0;
        }
    }
}

std::vector<IrreduciblePoly> irreducible_list(const FqContextPtr& ctx, int g) {
    std::vector<IrreduciblePoly> out;
    for (const FqPoly& f : monic_irreducibles(ctx, g)) out.push_back({f.degree(), f.coeffs()});
    return out;
}

// Central value scaled by q^(g+lambda): L(1/2) q^(g+lambda) = X + Y sqrt(q),
// from the character sums a(0..g), via the coefficient symmetry.
void central_ints(const long* a, int g, int lambda, const std::uint64_t* qpow, long& X, long& Y) {
    long x = 0, y = 0;
    long prefix = 0;
    for (int r = 0; r <= g; ++r) {
        prefix = lambda ? prefix + a[r] : a[r];  // b(r)
        long m = r < g ? 2 : 1;
        if (r % 2 == 0)
            x += m * prefix * static_cast<long>(qpow[g - r / 2]);
        else
            y += m * prefix * static_cast<long>(qpow[g - (r + 1) / 2]);
    }
    if (lambda) {
        long q = static_cast<long>(qpow[1]);
        X = (x - y) * q;
        Y = y * q - x;
    } else {
        X = x;
        Y = y;
    }
}

struct MomentAccum {
    std::vector<mpz_class> sx, sy;
    mpz_class count = 0;
};

}  // namespace

bool EnsembleSpec::effective_reduced() const {
    long p = field->p();
    bool p_divides_d = d % p == 0;
    if (reduced > 0) {
        if (p_divides_d) throw domain_error("EnsembleSpec: reduction requires p not dividing d");
        return true;
    }
    if (reduced == 0) return false;
    return !p_divides_d;
}

mpz_class EnsembleSpec::enumeration_size() const {
    return q_pow(field->q(), effective_reduced() ? d - 1 : d);
}

mpz_class hyperelliptic_count(const mpz_class& q, int d) {
    if (d < 1) throw domain_error("hyperelliptic_count: d must be >= 1");
    if (d == 1) return q;
    return q_pow(q, d) - q_pow(q, d - 1);
}

AlgebraicValue MomentTable::moment(int k) const {
    AlgebraicValue s = sums.at(static_cast<size_t>(k));
    mpq_class inv_count(1, count);
    return s * inv_count;
}

MomentTable moments(const EnsembleSpec& spec, int k_max) {
    if (k_max < 0) throw domain_error("moments: k_max must be >= 0");
    const FqContextPtr& field = spec.field;
    const FqContext& F = *field;
    const int d = spec.d;
    if (d < 1) throw domain_error("moments: d must be >= 1");
    const bool reduced = spec.effective_reduced();

    mpz_class total_z = spec.enumeration_size();
    if (total_z > mpz_class(spec.budget))
        throw budget_error("moments: enumeration of " + total_z.get_str() +
                           " curves exceeds budget " + std::to_string(spec.budget));
    const std::uint64_t total = mpz_get_ui(total_z.get_mpz_t());

    const int lambda = d % 2 == 0 ? 1 : 0;
    const int g = (d - 1 - lambda) / 2;
    const int s_exp = g + lambda;

    // int64 headroom for the scaled central values
    {
        mpz_class bound = 8 * (g + 2) * q_pow(F.q(), (3 * g) / 2 + 2);
        mpz_class lim;
        mpz_ui_pow_ui(lim.get_mpz_t(), 2, 62);
        if (bound > lim)
            throw budget_error("moments: central-value scaling exceeds 64-bit headroom");
    }

    std::vector<std::uint64_t> qpow(static_cast<size_t>(g) + 2, 1);
    for (size_t i = 1; i < qpow.size(); ++i) qpow[i] = qpow[i - 1] * F.order();

    const std::vector<IrreduciblePoly> irr = irreducible_list(field, g);
    const bool sign_active = detail::reciprocity_sign_active(F);

    unsigned hw = std::thread::hardware_concurrency();
    std::uint64_t T =
        spec.threads > 0 ? static_cast<std::uint64_t>(spec.threads) : std::max(1u, hw);
    T = std::min<std::uint64_t>(T, total / 64 + 1);

    std::vector<MomentAccum> acc(T);
    for (auto& a : acc) {
        a.sx.assign(static_cast<size_t>(k_max) + 1, mpz_class(0));
        a.sy.assign(static_cast<size_t>(k_max) + 1, mpz_class(0));
    }

    auto worker = [&](unsigned t) {
        MomentAccum& A = acc[t];
        std::uint64_t lo = total / T * t + std::min<std::uint64_t>(t, total % T);
        std::uint64_t hi = lo + total / T + (t < total % T ? 1 : 0);
        mpz_class px, py, t1, t2;
        const unsigned long qul = F.order();
        scan_range(F, d, reduced, g, irr, sign_active, lo, hi,
                   [&](const std::vector<idx_t>&, const std::vector<long>& ser) {
                       A.count += 1;
                       if (k_max == 0) return;
                       long X, Y;
                       central_ints(ser.data(), g, lambda, qpow.data(), X, Y);
                       mpz_set_si(px.get_mpz_t(), X);
                       mpz_set_si(py.get_mpz_t(), Y);
                       A.sx[1] += px;
                       A.sy[1] += py;
                       for (int k = 2; k <= k_max; ++k) {
                           mpz_mul_si(t1.get_mpz_t(), px.get_mpz_t(), X);
                           mpz_mul_si(t2.get_mpz_t(), py.get_mpz_t(), Y);
                           mpz_mul_ui(t2.get_mpz_t(), t2.get_mpz_t(), qul);
                           mpz_add(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                           mpz_mul_si(t2.get_mpz_t(), px.get_mpz_t(), Y);
                           mpz_mul_si(py.get_mpz_t(), py.get_mpz_t(), X);
                           mpz_add(py.get_mpz_t(), py.get_mpz_t(), t2.get_mpz_t());
                           mpz_swap(px.get_mpz_t(), t1.get_mpz_t());
                           A.sx[static_cast<size_t>(k)] += px;
                           A.sy[static_cast<size_t>(k)] += py;
                       }
                   });
    };

    if (T == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(T);
        for (unsigned t = 0; t < T; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    MomentAccum sum;
    sum.sx.assign(static_cast<size_t>(k_max) + 1, mpz_class(0));
    sum.sy.assign(static_cast<size_t>(k_max) + 1, mpz_class(0));
    for (const auto& a : acc) {
        sum.count += a.count;
        for (int k = 0; k <= k_max; ++k) {
            sum.sx[static_cast<size_t>(k)] += a.sx[static_cast<size_t>(k)];
            sum.sy[static_cast<size_t>(k)] += a.sy[static_cast<size_t>(k)];
        }
    }

    MomentTable table;
    table.q = F.q();
    table.d = d;
    table.k_max = k_max;
    table.count = hyperelliptic_count(F.q(), d);

    mpz_class scale = reduced ? F.q() : mpz_class(1);
    if (sum.count * scale != table.count)
        throw verification_error("moments: squarefree count disagrees with q^d - q^(d-1)");

    table.sums.reserve(static_cast<size_t>(k_max) + 1);
    table.sums.push_back(AlgebraicValue::rational(mpq_class(table.count)));
    for (int k = 1; k <= k_max; ++k) {
        mpz_class den = q_pow(F.q(), k * s_exp);
        mpq_class x(sum.sx[static_cast<size_t>(k)] * scale, den);
        mpq_class y(sum.sy[static_cast<size_t>(k)] * scale, den);
        table.sums.emplace_back(x, y, F.q());
    }
    return table;
}

MomentTable moments_from_lpolys(const mpz_class& q, int d, bool reduced, int k_max,
                                const std::vector<LPolynomial>& lpolys) {
    MomentTable table;
    table.q = q;
    table.d = d;
    table.k_max = k_max;
    table.count = hyperelliptic_count(q, d);
    mpq_class scale(reduced ? q : mpz_class(1));
    std::vector<AlgebraicValue> sums(static_cast<size_t>(k_max) + 1, AlgebraicValue::rational(0));
    for (const LPolynomial& L : lpolys) {
        AlgebraicValue v = central_value(L);
        AlgebraicValue p = AlgebraicValue::rational(1);
        sums[0] = sums[0] + AlgebraicValue::rational(1);
        for (int k = 1; k <= k_max; ++k) {
            p = p * v;
            sums[static_cast<size_t>(k)] = sums[static_cast<size_t>(k)] + p;
        }
    }
    mpz_class expected = reduced ? mpz_class(table.count / q) : table.count;
    if (sums[0].x() != expected)
        throw verification_error("moments_from_lpolys: record count disagrees with ensemble size");
    for (int k = 0; k <= k_max; ++k) table.sums.push_back(sums[static_cast<size_t>(k)] * scale);
    return table;
}

void scan_lpolys(const EnsembleSpec& spec,
                 const std::function<void(const std::vector<idx_t>&, const LPolynomial&)>& fn) {
    const FqContext& F = *spec.field;
    const int d = spec.d;
    if (d < 1) throw domain_error("scan_lpolys: d must be >= 1");
    const bool reduced = spec.effective_reduced();
    mpz_class total_z = spec.enumeration_size();
    if (total_z > mpz_class(spec.budget))
        throw budget_error("scan_lpolys: enumeration exceeds budget");
    const std::uint64_t total = mpz_get_ui(total_z.get_mpz_t());
    const int lambda = d % 2 == 0 ? 1 : 0;
    const int g = (d - 1 - lambda) / 2;
    const std::vector<IrreduciblePoly> irr = irreducible_list(spec.field, g);
    const bool sign_active = detail::reciprocity_sign_active(F);

    scan_range(F, d, reduced, g, irr, sign_active, 0, total,
               [&](const std::vector<idx_t>& coeffs, const std::vector<long>& ser) {
                   std::vector<mpz_class> a_head(ser.begin(), ser.end());
                   fn(coeffs, lpoly_from_truncated_a(F.q(), d, a_head));
               });
}

namespace {

// sum over squarefree monic members of H_{q,deg} of (base + sign*a_q)^j,
// j = 0..j_max, a_q by direct point counting over F_q.
std::vector<mpz_class> aq_power_moments(const FqContextPtr& field, int deg, long base, int sign,
                                        int j_max) {
    const FqContext& F = *field;
    const std::uint64_t q = F.order();
    std::uint64_t total = 1;
    for (int i = 0; i < deg; ++i) {
        if (total > kDefaultEnumBudget / q) throw budget_error("aq moments: q^d exceeds budget");
        total *= q;
    }
    std::vector<idx_t> coeffs(static_cast<size_t>(deg) + 1, 0);
    coeffs[static_cast<size_t>(deg)] = 1;
    std::vector<idx_t> int_consts(static_cast<size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) int_consts[static_cast<size_t>(i)] = F.from_int(i);
    std::vector<idx_t> fbuf(static_cast<size_t>(deg) + 1), gbuf(static_cast<size_t>(deg) + 1);

    std::vector<mpz_class> acc(static_cast<size_t>(j_max) + 1, mpz_class(0));
    mpz_class pw;
    for (std::uint64_t m = 0; m < total; ++m) {
        std::copy(coeffs.begin(), coeffs.end(), fbuf.begin());
        if (squarefree_kernel(F, fbuf.data(), deg, gbuf.data(), int_consts.data())) {
            long aq = 0;
            for (idx_t x = 0; x < q; ++x) {
                idx_t v = 0;
                for (int i = deg; i >= 0; --i)
                    v = F.add(F.mul(v, x), coeffs[static_cast<size_t>(i)]);
                aq -= F.legendre(v);
            }
            long t = base + sign * aq;
            pw = 1;
            for (int j = 0; j <= j_max; ++j) {
                acc[static_cast<size_t>(j)] += pw;
                if (j < j_max) pw *= t;
            }
        }
        for (int i = 0; i < deg; ++i) {
            if (++coeffs[static_cast<size_t>(i)] < q) break;
            coeffs[static_cast<size_t>(i)] = 0;
        }
    }
    return acc;
}

}  // namespace

std::vector<mpz_class> aq_moments_m3(const FqContextPtr& field, int j_max) {
    return aq_power_moments(field, 3, 0, -1, j_max);  // (-a_q)^j
}

std::vector<mpz_class> aq_moments_m4(const FqContextPtr& field, int j_max) {
    return aq_power_moments(field, 4, 1, -1, j_max);  // (1-a_q)^j
}

mpz_class aq_moment_m3(const FqContextPtr& field, int j) {
    if (j < 0) throw domain_error("aq_moment_m3: j must be >= 0");
    return aq_moments_m3(field, j).back();
}

mpz_class aq_moment_m4(const FqContextPtr& field, int j) {
    if (j < 0) throw domain_error("aq_moment_m4: j must be >= 0");
    return aq_moments_m4(field, j).back();
}

mpz_class birch_sum(long p, int halfj) {
    if (p <= 3) throw domain_error("birch_sum: requires prime p > 3");
    if (halfj < 0) throw domain_error("birch_sum: halfj must be >= 0");
    FqContextPtr field = FqContext::make(p, 1);
    const FqContext& F = *field;
    const std::uint64_t q = F.order();
    std::vector<idx_t> cube(q);
    for (idx_t x = 0; x < q; ++x) cube[x] = F.mul(F.mul(x, x), x);
    mpz_class total = 0;
    mpz_class pw;
    std::vector<idx_t> ax(q);
    for (idx_t A = 0; A < q; ++A) {
        for (idx_t x = 0; x < q; ++x) ax[x] = F.add(cube[x], F.mul(A, x));
        for (idx_t B = 0; B < q; ++B) {
            long t = 0;
            for (idx_t x = 0; x < q; ++x) t += F.legendre(F.add(ax[x], B));
            pw = 1;
            for (int i = 0; i < 2 * halfj; ++i) pw *= t;
            total += pw;
        }
    }
    return total;
}

std::pair<FqElement, FqElement> quartic_to_cubic(const FqElement& A, const FqElement& B,
                                                 const FqElement& C) {
    const FqContextPtr& ctx = A.context();
    if (ctx.get() != B.context().get() || ctx.get() != C.context().get())
        throw context_mismatch_error("quartic_to_cubic: mixed contexts");
    if (ctx->p() <= 3)
        throw characteristic_too_small_error("quartic_to_cubic: requires characteristic > 3");
    auto k = [&](long v) { return FqElement::from_int(ctx, v); };
    FqElement alpha = -(C * k(4).inverse()) - A * A * k(48).inverse();
    FqElement beta =
        A * A * A * k(864).inverse() + B * B * k(64).inverse() - A * C * k(24).inverse();
    return {alpha, beta};
}

}  // namespace hyperzeta
