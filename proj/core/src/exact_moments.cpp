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

#include "hyperzeta/exact_moments.hpp"

#include <algorithm>
#include <string>

#include "hyperzeta/errors.hpp"
#include "hyperzeta/modforms.hpp"

namespace hyperzeta {

namespace {

mpz_class binom(unsigned long n, long k) {
    if (k < 0) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

mpz_class factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class q_pow(const mpz_class& q, int e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// Hecke traces enter the d=3/d=4 formulas only at weight 12, i.e. tau;
// for non-prime q no replacement rule is implemented, so the entry points
// restrict k to the tau-free range there.
mpz_class trace_plus_one(int weight, long p) { return hecke_trace(weight, p) + 1; }

long validate_theorem_field(const mpz_class& q, int k, int k_prime_cap, int k_power_cap,
                            const char* name) {
    if (k < 1) throw domain_error(std::string(name) + ": k must be >= 1");
    long p = odd_prime_power_char(q);
    if (p == 0 || q <= 3) throw domain_error(std::string(name) + ": q must be an odd prime power > 3");
    bool prime = q == p;
    if (prime && p <= 3) throw domain_error(std::string(name) + ": requires p > 3");
    if (prime) {
        if (k > k_prime_cap)
            throw unsupported_weight_error(std::string(name) + ": k beyond the weight-14 cap");
    } else {
        if (k > k_power_cap)
            throw unsupported_weight_error(
                std::string(name) +
                ": Hecke terms for non-prime q are not implemented; k exceeds the tau-free range");
    }
    return p;
}

}  // namespace

long odd_prime_power_char(const mpz_class& q) {
    if (q < 3 || mpz_even_p(q.get_mpz_t())) return 0;
    if (!q.fits_slong_p()) return 0;
    long v = q.get_si();
    for (long p = 3; p * p <= v; p += 2) {
        if (v % p == 0) {
            long w = v;
            while (w % p == 0) w /= p;
            return w == 1 ? p : 0;
        }
    }
    return v;  // prime
}

mpq_class theorem_d3(const mpz_class& q, int k) {
    long p = validate_theorem_field(q, k, 13, 9, "theorem_d3");
    mpq_class r(2 * binom(static_cast<unsigned long>(2 * k + 1), k), mpz_class(k + 2));
    for (int l = 1; l <= k / 2; ++l) {
        mpz_class num = 2 * binom(static_cast<unsigned long>(2 * k + 1), k - 2 * l) * (2 * l + 1) *
                        trace_plus_one(2 * l + 2, p);
        mpz_class den = (k + 2 * l + 2) * q_pow(q, l + 1);
        r -= mpq_class(num, den);
    }
    r.canonicalize();
    return r;
}

AlgebraicValue theorem_d4(const mpz_class& q, int k) {
    long p = validate_theorem_field(q, k, 12, 8, "theorem_d4");
    // even-j block: identical to the d=3 closed form
    mpq_class even_part = theorem_d3(q, k);
    // odd-j block
    mpq_class odd_part(4 * binom(static_cast<unsigned long>(2 * k + 1), k - 1), mpz_class(k + 3));
    for (int l = 1; l <= (k + 1) / 2; ++l) {
        mpz_class num =
            4 * mpz_class(static_cast<long>(k) * k + k + 4 * static_cast<long>(l) * l + 4 * l) *
            factorial(2 * k + 1) * (2 * l + 1) * trace_plus_one(2 * l + 2, p);
        mpz_class den = factorial(k + 2 * l + 3) * factorial(k - 2 * l + 1) * q_pow(q, l + 1);
        odd_part -= mpq_class(num, den);
    }
    odd_part.canonicalize();

    // (1 - q^(-1/2))^k (even_part + q^(-1/2) odd_part), q^(-1/2) = sqrt(q)/q
    AlgebraicValue root_inv(mpq_class(0), mpq_class(1, q), q);
    AlgebraicValue factor = (AlgebraicValue::rational(1) - root_inv).pow(static_cast<unsigned>(k));
    AlgebraicValue inner = AlgebraicValue::rational(even_part) + root_inv * AlgebraicValue::rational(odd_part);
    return factor * inner;
}

AlgebraicValue MomentPolynomial::evaluate(const mpz_class& q) const {
    mpq_class x = 0, y = 0;
    for (const Term& t : terms) {
        mpq_class c(t.coeff);
        if (t.tau_factor) {
            long p = odd_prime_power_char(q);
            if (p == 0 || q != p)
                throw domain_error("MomentPolynomial: tau term requires prime q");
            c *= mpq_class(tau(p) + 1);
        }
        if (t.half_exp % 2 == 0)
            x += c / q_pow(q, t.half_exp / 2);
        else
            y += c / q_pow(q, (t.half_exp + 1) / 2);
    }
    return AlgebraicValue(x, y, q);
}

AlgebraicValue evaluate_table(int d, int k, const mpz_class& q) {
    return table_polynomial(d, k).evaluate(q);
}

mpq_class keating_snaith(int k, long g) {
    if (k < 1 || g < 0) throw domain_error("keating_snaith: need k >= 1, g >= 0");
    mpq_class r = 1;
    for (int j = 1; j <= k; ++j) r *= mpq_class(factorial(j), factorial(2 * j));
    for (int i = 1; i <= k; ++i)
        for (int j = i; j <= k; ++j) r *= 2 * g + i + j;
    r.canonicalize();
    return r;
}

std::pair<mpq_class, mpq_class> binomial_identity_1(int k) {
    if (k < 0) throw domain_error("binomial_identity_1: k must be >= 0");
    mpq_class lhs = 0;
    for (int j = 0; j <= k; j += 2) {
        mpz_class num = binom(static_cast<unsigned long>(k), j) * factorial(j) *
                        q_pow(mpz_class(2), k - j);
        mpz_class den = factorial(j / 2) * factorial(j / 2 + 1);
        lhs += mpq_class(num, den);
    }
    lhs.canonicalize();
    mpq_class rhs(2 * binom(static_cast<unsigned long>(2 * k + 1), k), mpz_class(k + 2));
    rhs.canonicalize();
    return {lhs, rhs};
}

std::pair<mpq_class, mpq_class> binomial_identity_2(int k, int l) {
    if (k < 0 || l < 0 || 2 * l > k + 1)
        throw domain_error("binomial_identity_2: need 0 <= l <= (k+1)/2");
    mpq_class lhs = 0;
    int v0 = std::max(2 * l, 2);
    for (int v = v0; v <= k + 1; v += 2) {
        mpz_class num = binom(static_cast<unsigned long>(k), v - 1) * factorial(v) *
                        q_pow(mpz_class(2), k - v + 1);
        mpz_class den = factorial(v / 2 - l) * factorial(v / 2 + l + 1);
        lhs += mpq_class(num, den);
    }
    lhs.canonicalize();
    mpz_class num = 4 * mpz_class(static_cast<long>(k) * k + k + 4 * static_cast<long>(l) * l + 4 * l) *
                    factorial(2 * k + 1);
    mpz_class den = factorial(k + 2 * l + 3) * factorial(k - 2 * l + 1);
    mpq_class rhs(num, den);
    rhs.canonicalize();
    return {lhs, rhs};
}

}  // namespace hyperzeta
