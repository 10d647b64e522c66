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

#include "hyperzeta/lpoly.hpp"

#include <string>

#include "hyperzeta/errors.hpp"

namespace hyperzeta {

namespace {

void check_curve(const FqPoly& D) {
    if (D.is_zero() || D.degree() < 1 || !D.is_monic())
        throw domain_error("expected a monic polynomial of positive degree");
    if (!squarefree(D)) throw not_squarefree_error("D is not squarefree");
}

mpz_class q_pow(const mpz_class& q, int e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

}  // namespace

PointCounts point_counts(const FqPoly& D, int R, std::uint64_t budget) {
    check_curve(D);
    if (R < 1) throw domain_error("point_counts: R must be >= 1");
    const FqContextPtr& base = D.context();
    PointCounts pc;
    pc.a_qr.reserve(static_cast<size_t>(R));
    for (int r = 1; r <= R; ++r) {
        // q^r elements to enumerate
        mpz_class qr = q_pow(base->q(), r);
        if (qr > mpz_class(budget))
            throw extension_too_large_error("point_counts: q^" + std::to_string(r) +
                                            " exceeds enumeration budget");
        FqExtension ext = extension_context(base, r, budget);
        const FqContext& E = *ext.field;
        std::vector<FqContext::idx_t> c(static_cast<size_t>(D.degree()) + 1);
        for (int i = 0; i <= D.degree(); ++i)
            c[static_cast<size_t>(i)] = ext.embed_idx(D.coeff(i));
        long acc = 0;
        const std::uint64_t order = E.order();
        for (FqContext::idx_t x = 0; x < order; ++x) {
            FqContext::idx_t v = 0;
            for (int i = D.degree(); i >= 0; --i)
                v = E.add(E.mul(v, x), c[static_cast<size_t>(i)]);
            acc += E.legendre(v);
        }
        pc.a_qr.emplace_back(-acc);
    }
    return pc;
}

LPolynomial lpoly_from_truncated_b(const mpz_class& q, int d, const std::vector<mpz_class>& b_head) {
    LPolynomial L;
    L.q = q;
    L.d = d;
    L.lambda = d % 2 == 0 ? 1 : 0;
    L.g = (d - 1 - L.lambda) / 2;
    const int g = L.g;
    if (static_cast<int>(b_head.size()) != g + 1)
        throw domain_error("lpoly_from_truncated_b: expected g+1 coefficients");
    if (b_head[0] != 1) throw verification_error("lpoly: b(0) != 1");

    L.b = b_head;
    L.b.resize(static_cast<size_t>(2 * g) + 1);
    for (int r = g + 1; r <= 2 * g; ++r)
        L.b[static_cast<size_t>(r)] = L.b[static_cast<size_t>(2 * g - r)] * q_pow(q, r - g);

    if (L.lambda == 0) {
        L.a = L.b;
    } else {
        L.a.resize(static_cast<size_t>(2 * g) + 2);
        L.a[0] = L.b[0];
        for (int j = 1; j <= 2 * g; ++j)
            L.a[static_cast<size_t>(j)] = L.b[static_cast<size_t>(j)] - L.b[static_cast<size_t>(j) - 1];
        L.a[static_cast<size_t>(2 * g) + 1] = -L.b[static_cast<size_t>(2 * g)];
    }
    return L;
}

LPolynomial lpoly_from_truncated_a(const mpz_class& q, int d, const std::vector<mpz_class>& a_head) {
    int lambda = d % 2 == 0 ? 1 : 0;
    int g = (d - 1 - lambda) / 2;
    if (static_cast<int>(a_head.size()) != g + 1)
        throw domain_error("lpoly_from_truncated_a: expected g+1 coefficients");
    std::vector<mpz_class> b_head(a_head.size());
    if (lambda == 0) {
        b_head = a_head;
    } else {
        mpz_class run = 0;
        for (int j = 0; j <= g; ++j) {
            run += a_head[static_cast<size_t>(j)];
            b_head[static_cast<size_t>(j)] = run;
        }
    }
    return lpoly_from_truncated_b(q, d, b_head);
}

LPolynomial lpoly_from_b(const mpz_class& q, int d, std::vector<mpz_class> b) {
    int lambda = d % 2 == 0 ? 1 : 0;
    int g = (d - 1 - lambda) / 2;
    if (static_cast<int>(b.size()) != 2 * g + 1)
        throw domain_error("lpoly_from_b: expected 2g+1 coefficients");
    std::vector<mpz_class> head(b.begin(), b.begin() + g + 1);
    LPolynomial L = lpoly_from_truncated_b(q, d, head);
    for (int r = 0; r <= 2 * g; ++r)
        if (L.b[static_cast<size_t>(r)] != b[static_cast<size_t>(r)])
            throw verification_error("lpoly_from_b: coefficient symmetry violated at r=" +
                                     std::to_string(r));
    return L;
}

LPolynomial lpoly_from_pointcounts(const FqPoly& D, std::uint64_t budget) {
    check_curve(D);
    const mpz_class& q = D.context()->q();
    const int d = D.degree();
    const int lambda = d % 2 == 0 ? 1 : 0;
    const int g = (d - 1 - lambda) / 2;

    std::vector<mpq_class> e(static_cast<size_t>(g) + 1);
    e[0] = 1;
    if (g > 0) {
        PointCounts pc = point_counts(D, g, budget);
        // exp of S(u) = -sum a_{q^r} u^r / r via E' = S' E
        std::vector<mpq_class> s(static_cast<size_t>(g) + 1);
        for (int r = 1; r <= g; ++r) {
            mpz_class num = -pc.at(r);
            s[static_cast<size_t>(r)] = mpq_class(num) / r;
        }
        for (int m = 1; m <= g; ++m) {
            mpq_class acc = 0;
            for (int j = 1; j <= m; ++j)
                acc += j * s[static_cast<size_t>(j)] * e[static_cast<size_t>(m - j)];
            e[static_cast<size_t>(m)] = acc / m;
        }
    }
    std::vector<mpz_class> b_head(static_cast<size_t>(g) + 1);
    mpq_class run = 0;
    for (int m = 0; m <= g; ++m) {
        mpq_class c = lambda == 0 ? e[static_cast<size_t>(m)] : (run += e[static_cast<size_t>(m)]);
        c.canonicalize();
        if (c.get_den() != 1)
            throw verification_error("lpoly_from_pointcounts: non-integral series coefficient");
        b_head[static_cast<size_t>(m)] = c.get_num();
    }
    return lpoly_from_truncated_b(q, d, b_head);
}

LPolynomial lpoly_from_charsums(const FqPoly& D, std::uint64_t budget) {
    check_curve(D);
    const mpz_class& q = D.context()->q();
    const int d = D.degree();
    const int lambda = d % 2 == 0 ? 1 : 0;
    const int g = (d - 1 - lambda) / 2;
    std::vector<mpz_class> a_head(static_cast<size_t>(g) + 1);
    for (int j = 0; j <= g; ++j) a_head[static_cast<size_t>(j)] = charsum(D, j, budget);
    return lpoly_from_truncated_a(q, d, a_head);
}

AlgebraicValue central_value(const LPolynomial& L) {
    const int s = L.g + L.lambda;
    mpz_class x = 0, y = 0;
    for (int r = 0; r < static_cast<int>(L.a.size()); ++r) {
        if (r % 2 == 0)
            x += L.a[static_cast<size_t>(r)] * q_pow(L.q, s - r / 2);
        else
            y += L.a[static_cast<size_t>(r)] * q_pow(L.q, s - (r + 1) / 2);
    }
    mpz_class den = q_pow(L.q, s);
    return AlgebraicValue(mpq_class(x, den), mpq_class(y, den), L.q);
}

std::vector<mpz_class> newton_power_sums(const LPolynomial& L, int R) {
    const int n = 2 * L.g;
    std::vector<mpz_class> p(static_cast<size_t>(R) + 1);
    for (int r = 1; r <= R; ++r) {
        mpz_class acc = 0;
        for (int i = 1; i < r && i <= n; ++i) acc += L.b[static_cast<size_t>(i)] * p[static_cast<size_t>(r - i)];
        if (r <= n) acc += r * L.b[static_cast<size_t>(r)];
        p[static_cast<size_t>(r)] = -acc;
    }
    return std::vector<mpz_class>(p.begin() + 1, p.end());
}

void verify_lpoly(const LPolynomial& L, const FqPoly& D, const VerifyOptions& options) {
    const int g = L.g;
    // (i) functional-equation symmetry
    for (int r = 0; r <= 2 * g; ++r) {
        if (2 * g - r < r) break;
        if (L.b[static_cast<size_t>(2 * g - r)] != L.b[static_cast<size_t>(r)] * q_pow(L.q, g - r))
            throw verification_error("verify_lpoly: b(2g-r) = b(r) q^(g-r) fails at r=" +
                                     std::to_string(r));
    }
    // (ii) power sums vs brute-force point counts
    int rmax = options.max_power_sum_r >= 0 ? options.max_power_sum_r : 2 * g;
    {
        mpz_class qr = 1;
        int feasible = 0;
        for (int r = 1; r <= rmax; ++r) {
            qr *= L.q;
            if (qr > mpz_class(options.budget)) break;
            feasible = r;
        }
        rmax = feasible;
    }
    if (rmax >= 1) {
        PointCounts pc = point_counts(D, rmax, options.budget);
        std::vector<mpz_class> p = newton_power_sums(L, rmax);
        for (int r = 1; r <= rmax; ++r) {
            if (pc.at(r) != L.lambda + p[static_cast<size_t>(r - 1)])
                throw verification_error("verify_lpoly: power sum disagrees with point count at r=" +
                                         std::to_string(r));
        }
    }
    // (iii) Weil bound |p_r| <= 2g q^(r/2)
    std::vector<mpz_class> p = newton_power_sums(L, 2 * g);
    for (int r = 1; r <= 2 * g; ++r) {
        mpz_class lhs = p[static_cast<size_t>(r - 1)] * p[static_cast<size_t>(r - 1)];
        mpz_class rhs = 4 * g * g * q_pow(L.q, r);
        if (lhs > rhs)
            throw verification_error("verify_lpoly: Weil power-sum bound fails at r=" +
                                     std::to_string(r));
    }
}

}  // namespace hyperzeta
