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

#ifndef HYPERZETA_FQ_POLY_HPP
#define HYPERZETA_FQ_POLY_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "hyperzeta/fq.hpp"

namespace hyperzeta {

/// Dense polynomial over a fixed F_q, coefficients lowest degree first.
/// The coefficient vector never has a trailing zero (the zero polynomial
/// is the empty vector, degree -1).
class FqPoly {
  public:
    FqPoly() = default;
    explicit FqPoly(FqContextPtr ctx) : ctx_(std::move(ctx)) {}
    FqPoly(FqContextPtr ctx, std::vector<FqContext::idx_t> coeffs)
        : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
        trim();
    }
    /// Convenience for integer coefficient lists (mapped through Z -> F_p).
    static FqPoly from_ints(const FqContextPtr& ctx, std::initializer_list<long> coeffs);
    static FqPoly from_ints(const FqContextPtr& ctx, const std::vector<long>& coeffs);
    static FqPoly x(const FqContextPtr& ctx) { return FqPoly(ctx, {0, 1}); }
    static FqPoly constant(const FqContextPtr& ctx, long v) {
        return FqPoly(ctx, {ctx->from_int(v)});
    }

    const FqContextPtr& context() const { return ctx_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    FqContext::idx_t leading() const { return c_.back(); }
    FqContext::idx_t coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(i)] : 0;
    }
    const std::vector<FqContext::idx_t>& coeffs() const { return c_; }

    FqPoly operator+(const FqPoly& o) const;
    FqPoly operator-(const FqPoly& o) const;
    FqPoly operator*(const FqPoly& o) const;
    bool operator==(const FqPoly& o) const { return ctx_.get() == o.ctx_.get() && c_ == o.c_; }
    bool operator!=(const FqPoly& o) const { return !(*this == o); }

    /// Quotient and remainder by a nonzero divisor.
    std::pair<FqPoly, FqPoly> divrem(const FqPoly& d) const;
    FqPoly operator%(const FqPoly& d) const { return divrem(d).second; }

    FqPoly derivative() const;
    FqPoly make_monic() const;
    FqPoly shift_arg(FqContext::idx_t u) const;  // f(x + u)
    FqContext::idx_t eval(FqContext::idx_t x) const;

    friend FqPoly gcd(FqPoly a, FqPoly b);

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check_same(const FqPoly& o) const;
    FqContextPtr ctx_;
    std::vector<FqContext::idx_t> c_;
};

FqPoly gcd(FqPoly a, FqPoly b);

/// True iff gcd(D, D') is constant. D' = 0 (possible in characteristic p)
/// gives gcd = D, correctly reported not squarefree.
bool squarefree(const FqPoly& D);

/// Trial division by all monic polynomials of degree <= deg/2.
bool is_irreducible(const FqPoly& f);

/// Number of monic irreducibles of degree n over F_q: (1/n) sum mu(m) q^{n/m}.
mpz_class count_irreducible(int n, const mpz_class& q);

/// Horner evaluation of D at a point of the extension field, after embedding
/// each coefficient of D through the extension's phi.
FqElement eval_in_extension(const FqPoly& D, const FqExtension& ext, const FqElement& x);

/// All monic irreducibles over D's field with degree in [1, max_degree],
/// in enumeration order.
std::vector<FqPoly> monic_irreducibles(const FqContextPtr& ctx, int max_degree);

}  // namespace hyperzeta

#endif
