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

#ifndef HYPERZETA_AK_PREDICTION_HPP
#define HYPERZETA_AK_PREDICTION_HPP

#include <utility>
#include <vector>

#include "hyperzeta/bigreal.hpp"

namespace hyperzeta {

enum class Parity { odd_degree, even_degree };

/// Precision plan for prediction evaluation. The k-fold residue is computed
/// as a sum of 2^k terms at shifts alpha_j = j 10^-E; the terms carry poles
/// of total order k(k+1)/2, so the working precision must absorb
/// E k(k+1)/2 digits of cancellation on top of the target accuracy.
struct PrecisionContext {
    long target_digits = 25;
    int shift_exponent = 65;  // E
    long working_digits = 0;
    long truncation = 0;  // degree cutoff N of the Euler product over n

    static PrecisionContext for_prediction(const mpz_class& q, int k, long target_digits = 25,
                                           int shift_exponent = 65);
    long bits() const { return Real::digits_to_bits(working_digits); }
    /// Enforces working_digits >= E k(k+1)/2 + target + 20 and
    /// N >= ceil((target+5) ln 10 / ln q); throws precision_error.
    void validate(const mpz_class& q, int k) const;
};

struct AKPrediction {
    mpz_class q;
    int d = 0;
    int k = 0;
    Real value;
    long certified_digits = 0;
};

/// P(1) = prod_P (1 - 1/((|P|+1)|P|)), grouped by degree, truncated at N.
Real euler_P1(const mpz_class& q, const PrecisionContext& prec);
/// sum_P deg(P) / (|P|(|P|+1) - 1), same grouping.
Real prime_deg_sum(const mpz_class& q, const PrecisionContext& prec);

/// Closed-form first-moment prediction:
/// odd d:  P(1)/2 (d + 1 + 4 sum_P ...)
/// even d: P(1)/2 (d - 2/(sqrt q - 1) + 4 sum_P ...).
AKPrediction q1_closed(const mpz_class& q, int d, const PrecisionContext& prec);

/// The integrand factor H(u): the symplectic zeta factor
/// prod_{i<=j} (1 - e^{-u_i-u_j})^{-1}, the arithmetic Euler product grouped
/// by degree n <= N, and for even parity the extra
/// prod_j ((1-q^{-1/2}e^{u_j})/(1-q^{-1/2}e^{-u_j}))^{1/2}.
/// Throws pole_error when some u_i + u_j = 0.
Real H_eval(const std::vector<Real>& u, const mpz_class& q, Parity parity,
            const PrecisionContext& prec);
/// H without the zeta factor (regular at u = 0; its value there is a_k).
Real H_regularized(const std::vector<Real>& u, const mpz_class& q, Parity parity,
                   const PrecisionContext& prec);

/// The prediction Q_k(q;d), evaluated as the sum over the 2^k sign vectors
/// eps of H(eps alpha) e^(g sum eps_j alpha_j); terms are summed in
/// lexicographic eps order for run-to-run reproducibility.
AKPrediction qk_direct(const mpz_class& q, int d, int k, const PrecisionContext& prec,
                       int threads = 1);
/// Same with an explicit assignment of shift multiples (default 1..k);
/// multiples must be nonzero with pairwise distinct magnitudes.
AKPrediction qk_direct_with_shifts(const mpz_class& q, int d, int k, const PrecisionContext& prec,
                                   const std::vector<int>& shift_multiples, int threads = 1);

/// Coefficients of Q_k as a polynomial in (2g), leading first, recovered by
/// evaluating at g = 1..k(k+1)/2+1 and Newton interpolation on the integer
/// nodes. The context's working precision is raised by 15 digits per node.
std::vector<Real> qk_coefficients(const mpz_class& q, int k, Parity parity,
                                  const PrecisionContext& prec, int threads = 1);

/// (a_k, c_0): the arithmetic constant a_k = A(0,...,0) by the degree-grouped
/// product, and the leading coefficient c_0 = a_k prod j!/(2j)!.
std::pair<Real, Real> leading_constants(const mpz_class& q, int k, const PrecisionContext& prec);

/// Stored large-q series of Q_k in powers of q^(-1/2) with polynomial-in-g
/// coefficients, k <= 3.
struct QkSeries {
    struct Term {
        int half_exp;
        std::vector<mpq_class> g_poly;  // ascending powers of g
    };
    int k = 0;
    Parity parity = Parity::odd_degree;
    std::vector<Term> terms;

    Real evaluate(const mpz_class& q, long g, long prec_bits, int max_half_exp = -1) const;
};
const QkSeries& qk_series_data(int k, Parity parity);

struct SeriesCheckReport {
    Real series_value;
    Real direct_value;
    Real abs_dev;
    Real rel_dev;
    /// Magnitude of the first omitted term (exact when the series was
    /// truncated below the stored data, extrapolated at the stored end).
    Real expected_tail;
    bool tail_estimate_extrapolated = false;
};

/// Compares the stored series against qk_direct at (q, g, parity).
/// max_half_exp truncates the series (-1: use all stored terms).
SeriesCheckReport series_check(const mpz_class& q, int k, Parity parity, long g,
                               const PrecisionContext& prec, int max_half_exp = -1);

}  // namespace hyperzeta

#endif
