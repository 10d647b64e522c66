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

#ifndef HYPERZETA_EXACT_MOMENTS_HPP
#define HYPERZETA_EXACT_MOMENTS_HPP

#include <utility>
#include <vector>

#include "hyperzeta/algebraic.hpp"

namespace hyperzeta {

/// Exact k-th central-value moment of the d = 3 ensemble, normalized by
/// #H = q^3 - q^2:
///   (2/(k+2)) C(2k+1,k)
///   - 2 sum_{l=1}^{floor(k/2)} C(2k+1,k-2l) (2l+1)(tr_{2l+2}(T_q)+1)
///                               / ((k+2l+2) q^(l+1)).
/// Proven for prime q > 3 (any k up to the weight cap 14, i.e. k <= 13);
/// for non-prime odd prime powers the Hecke-free range k <= 9 is accepted,
/// matching the observed extension of the formula.
mpq_class theorem_d3(const mpz_class& q, int k);

/// Exact k-th moment of the d = 4 ensemble, normalized by q^4 - q^3, as an
/// element of Q(sqrt q). Prime q > 3 up to k = 12; non-prime odd prime
/// powers up to the Hecke-free range k <= 8.
AlgebraicValue theorem_d4(const mpz_class& q, int k);

/// A stored moment formula sum c * (tau(q)+1)? * q^(-half_exp/2).
struct MomentPolynomial {
    struct Term {
        int half_exp;  // exponent of q^(-1/2)
        long coeff;
        bool tau_factor = false;  // multiply by tau(q) + 1 (q must be prime)
    };
    int d = 0;
    int k = 0;
    std::vector<Term> terms;

    AlgebraicValue evaluate(const mpz_class& q) const;
};

/// Stored interpolated moment formulas: d=5 k<=5, d=6 k<=2, d=7 k<=3,
/// d=8 k=1, d=9 k=1. Throws not_tabulated_error otherwise.
const MomentPolynomial& table_polynomial(int d, int k);
AlgebraicValue evaluate_table(int d, int k, const mpz_class& q);

/// The printed expansions for every tabulated d (3..9); the d=3 and d=4
/// rows restate the closed-form theorems and serve as cross-checks.
const MomentPolynomial& printed_moment_formula(int d, int k);

/// Moments of det(I-A) over USp(2g):
/// prod_{j<=k} j!/(2j)! * prod_{1<=i<=j<=k} (2g+i+j).
mpq_class keating_snaith(int k, long g);

/// Both sides of sum_{j even} C(k,j) j! 2^(k-j) / ((j/2)!(j/2+1)!)
/// = (2/(k+2)) C(2k+1,k).
std::pair<mpq_class, mpq_class> binomial_identity_1(int k);

/// Both sides of the shifted variant
/// sum_{v even, v>=max(2l,2)}^{k+1} C(k,v-1) v! 2^(k-v+1)
///     / ((v/2-l)!(v/2+l+1)!)
/// = 4 (k^2+k+4l^2+4l) (2k+1)! / ((k+2l+3)!(k-2l+1)!).
std::pair<mpq_class, mpq_class> binomial_identity_2(int k, int l);

/// Odd prime-power check used by the theorem entry points; exposed for the
/// CLI and tests. Returns the characteristic, or 0 when q is not an odd
/// prime power.
long odd_prime_power_char(const mpz_class& q);

}  // namespace hyperzeta

#endif
