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

#ifndef HYPERZETA_ENSEMBLE_HPP
#define HYPERZETA_ENSEMBLE_HPP

#include <functional>
#include <utility>
#include <vector>

#include "hyperzeta/lpoly.hpp"

namespace hyperzeta {

/// The hyperelliptic ensemble H_{q,d} (squarefree monic of degree d), or the
/// reduced set with c_{d-1} = 0 when the characteristic does not divide d.
struct EnsembleSpec {
    FqContextPtr field;
    int d = 3;
    /// -1: reduce automatically when p does not divide d; 0: full ensemble;
    /// 1: force reduced (requires p not dividing d).
    int reduced = -1;
    std::uint64_t budget = kDefaultEnumBudget;
    int threads = 0;  // 0: hardware concurrency

    bool effective_reduced() const;
    /// Number of coefficient vectors to enumerate.
    mpz_class enumeration_size() const;
};

/// #H_{q,d}: q^d - q^(d-1) for d >= 2, q for d = 1.
mpz_class hyperelliptic_count(const mpz_class& q, int d);

/// Exact central-value moment sums over the full ensemble. sums[k] is
/// sum_D L(1/2, chi_D)^k (so sums[0] = #H); values from a reduced
/// enumeration are scaled back by q.
struct MomentTable {
    mpz_class q;
    int d = 0;
    int k_max = 0;
    mpz_class count;
    std::vector<AlgebraicValue> sums;
    AlgebraicValue moment(int k) const;
};

MomentTable moments(const EnsembleSpec& spec, int k_max);

/// Moment accumulation from precomputed L-polynomials (cache replay).
MomentTable moments_from_lpolys(const mpz_class& q, int d, bool reduced, int k_max,
                                const std::vector<LPolynomial>& lpolys);

/// Enumerates the ensemble in lexicographic coefficient order and calls
/// fn(coefficients c_0..c_{d-1}, L) for every squarefree member.
/// Single-threaded; used by the cache writer.
void scan_lpolys(const EnsembleSpec& spec,
                 const std::function<void(const std::vector<FqContext::idx_t>&, const LPolynomial&)>& fn);

/// m_3(q;j) = sum over H_{q,3} of (-a_q)^j, m_4(q;j) = sum over H_{q,4} of
/// (1-a_q)^j. Exact, by enumeration.
mpz_class aq_moment_m3(const FqContextPtr& field, int j);
mpz_class aq_moment_m4(const FqContextPtr& field, int j);
std::vector<mpz_class> aq_moments_m3(const FqContextPtr& field, int j_max);
std::vector<mpz_class> aq_moments_m4(const FqContextPtr& field, int j_max);

/// Birch's moment sum over all p^2 pairs (A,B), no squarefree restriction:
/// S_{j/2}(p) = sum_{A,B} (sum_x legendre(x^3+Ax+B))^(2 halfj).
mpz_class birch_sum(long p, int halfj);

/// Depressed-quartic to cubic reduction (characteristic > 3):
/// alpha = -C/4 - A^2/48, beta = A^3/864 + B^2/64 - AC/24.
std::pair<FqElement, FqElement> quartic_to_cubic(const FqElement& A, const FqElement& B,
                                                 const FqElement& C);

}  // namespace hyperzeta

#endif
