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

#ifndef HYPERZETA_LPOLY_HPP
#define HYPERZETA_LPOLY_HPP

#include <vector>

#include "hyperzeta/algebraic.hpp"
#include "hyperzeta/charsym.hpp"
#include "hyperzeta/fq_poly.hpp"

namespace hyperzeta {

/// Numerator data of the zeta function of y^2 = D(x), deg D = d:
/// a(r) are the coefficients of the full L-polynomial (degree 2g + lambda),
/// b(r) those of the completed one with the trivial (1 - u) factor removed
/// (degree 2g). lambda = 1 iff d is even; 2g = d - 1 - lambda.
struct LPolynomial {
    mpz_class q;
    int d = 0;
    int lambda = 0;
    int g = 0;
    std::vector<mpz_class> a;  // a(0) .. a(2g + lambda)
    std::vector<mpz_class> b;  // b(0) .. b(2g)
};

/// a_{q^r} = -sum_x legendre(D(x)) over F_{q^r}, r = 1..R.
struct PointCounts {
    std::vector<mpz_class> a_qr;
    const mpz_class& at(int r) const { return a_qr.at(static_cast<size_t>(r) - 1); }
};

PointCounts point_counts(const FqPoly& D, int R, std::uint64_t budget = kDefaultEnumBudget);

/// Builds the L-polynomial from a_{q^r}, r <= g, through the exact power
/// series (1-u)^(-lambda) exp(-sum a_{q^r} u^r / r). Series arithmetic is
/// exact rational; integrality of every coefficient is asserted.
LPolynomial lpoly_from_pointcounts(const FqPoly& D, std::uint64_t budget = kDefaultEnumBudget);

/// Builds the L-polynomial from the character sums a(j), j <= g, using the
/// approximate functional equation (exact here) to complete the upper half.
LPolynomial lpoly_from_charsums(const FqPoly& D, std::uint64_t budget = kDefaultEnumBudget);

/// Completion from the first g+1 coefficients of L (a-convention) or of L*
/// (b-convention) via b(2g-r) = b(r) q^(g-r).
LPolynomial lpoly_from_truncated_a(const mpz_class& q, int d, const std::vector<mpz_class>& a_head);
LPolynomial lpoly_from_truncated_b(const mpz_class& q, int d, const std::vector<mpz_class>& b_head);
/// Reconstruction from a full b-vector (cache loads); checks the symmetry.
LPolynomial lpoly_from_b(const mpz_class& q, int d, std::vector<mpz_class> b);

/// Exact L(1/2, chi_D) = sum a(r) q^(-r/2) as an element of Q(sqrt q).
AlgebraicValue central_value(const LPolynomial& L);

/// Power sums p_r of the inverse roots, recovered from b by Newton's
/// identities; a_{q^r} = lambda + p_r.
std::vector<mpz_class> newton_power_sums(const LPolynomial& L, int R);

struct VerifyOptions {
    /// Largest r for brute-force point-count comparison (-1: up to 2g,
    /// subject to budget).
    int max_power_sum_r = -1;
    std::uint64_t budget = kDefaultEnumBudget;
};

/// Checks (i) the coefficient symmetry b(2g-r) = b(r) q^(g-r), (ii) Newton
/// power sums against brute-force point counts beyond the coefficients used
/// in construction, (iii) the Weil bound |p_r| <= 2g q^(r/2).
/// Throws verification_error naming the first violated identity.
void verify_lpoly(const LPolynomial& L, const FqPoly& D, const VerifyOptions& options = {});

}  // namespace hyperzeta

#endif
