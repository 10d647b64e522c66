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

#include "hyperzeta/charsym.hpp"

#include <algorithm>
#include <vector>

#include "hyperzeta/errors.hpp"

namespace hyperzeta {

namespace detail {

bool reciprocity_sign_active(const FqContext& F) {
    mpz_class h = (F.q() - 1) / 2;
    return mpz_odd_p(h.get_mpz_t()) != 0;
}

int symbol_kernel(const FqContext& F, FqContext::idx_t* a, int da, FqContext::idx_t* b, int db,
                  bool sign_active) {
    int s = 1;
    for (;;) {
        if (db == 0) return s;  // modulus is 1: empty product
        // a mod b, in place (b monic)
        for (int i = da; i >= db; --i) {
            FqContext::idx_t c = a[i];
            if (c == 0) continue;
            a[i] = 0;
            for (int j = 0; j < db; ++j) a[i - db + j] = F.sub(a[i - db + j], F.mul(c, b[j]));
        }
        int dr = -1;
        for (int i = std::min(da, db - 1); i >= 0; --i)
            if (a[i] != 0) {
                dr = i;
                break;
            }
        if (dr < 0) return 0;  // nontrivial gcd
        FqContext::idx_t lead = a[dr];
        if (lead != 1) {
            // (c|b) for constant c is is_square(c)^(deg b)
            if ((db & 1) && F.legendre(lead) == -1) s = -s;
            FqContext::idx_t linv = F.inv(lead);
            a[dr] = 1;
            for (int i = 0; i < dr; ++i) a[i] = F.mul(a[i], linv);
        }
        if (dr == 0) return s;  // (1|b) = 1
        if (sign_active && (dr & 1) && (db & 1)) s = -s;
        std::swap(a, b);
        da = db;
        db = dr;
    }
}

}  // namespace detail

int residue_symbol(const FqPoly& a, const FqPoly& b) {
    if (b.is_zero()) throw zero_modulus_error("residue_symbol: zero modulus");
    if (!b.is_monic()) throw non_monic_modulus_error("residue_symbol: modulus must be monic");
    if (a.context().get() != b.context().get())
        throw context_mismatch_error("residue_symbol: operands from different contexts");
    const FqContext& F = *a.context();
    int da = std::max(a.degree(), 0);
    int db = b.degree();
    int cap = std::max(da, db) + 1;
    std::vector<FqContext::idx_t> abuf(static_cast<size_t>(cap), 0);
    std::vector<FqContext::idx_t> bbuf(static_cast<size_t>(cap), 0);
    for (int i = 0; i <= a.degree(); ++i) abuf[static_cast<size_t>(i)] = a.coeff(i);
    for (int i = 0; i <= db; ++i) bbuf[static_cast<size_t>(i)] = b.coeff(i);
    return detail::symbol_kernel(F, abuf.data(), da, bbuf.data(), db,
                                 detail::reciprocity_sign_active(F));
}

int chi_D(const FqPoly& D, const FqPoly& n) {
    if (n.is_zero()) return 0;
    return residue_symbol(D, n);
}

mpz_class charsum(const FqPoly& D, int r, std::uint64_t budget) {
    if (r < 0) throw domain_error("charsum: negative degree");
    if (D.is_zero() || D.degree() < 1 || !D.is_monic())
        throw domain_error("charsum: D must be monic of positive degree");
    if (!squarefree(D)) throw not_squarefree_error("charsum: D is not squarefree");
    if (r == 0) return 1;

    const FqContextPtr& ctx = D.context();
    const FqContext& F = *ctx;
    const std::uint64_t q = F.order();
    std::uint64_t total = 1;
    for (int i = 0; i < r; ++i) {
        if (total > budget / q) throw budget_error("charsum: q^r exceeds enumeration budget");
        total *= q;
    }

    const bool sign_active = detail::reciprocity_sign_active(F);
    const int d = D.degree();
    const int cap = std::max(d, r) + 1;
    std::vector<FqContext::idx_t> n_coeffs(static_cast<size_t>(r) + 1, 0);
    n_coeffs[static_cast<size_t>(r)] = 1;
    std::vector<FqContext::idx_t> abuf(static_cast<size_t>(cap), 0);
    std::vector<FqContext::idx_t> bbuf(static_cast<size_t>(cap), 0);

    long acc = 0;
    for (std::uint64_t m = 0;; ++m) {
        for (int i = 0; i <= d; ++i) abuf[static_cast<size_t>(i)] = D.coeff(i);
        for (int i = d + 1; i < cap; ++i) abuf[static_cast<size_t>(i)] = 0;
        for (int i = 0; i <= r; ++i) bbuf[static_cast<size_t>(i)] = n_coeffs[static_cast<size_t>(i)];
        for (int i = r + 1; i < cap; ++i) bbuf[static_cast<size_t>(i)] = 0;
        acc += detail::symbol_kernel(F, abuf.data(), d, bbuf.data(), r, sign_active);
        if (m + 1 == total) break;
        // odometer over the r lower coefficients of n
        for (int i = 0; i < r; ++i) {
            if (++n_coeffs[static_cast<size_t>(i)] < q) break;
            n_coeffs[static_cast<size_t>(i)] = 0;
        }
    }
    return mpz_class(acc);
}

}  // namespace hyperzeta
