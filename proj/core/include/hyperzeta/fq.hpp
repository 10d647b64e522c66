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

#ifndef HYPERZETA_FQ_HPP
#define HYPERZETA_FQ_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <vector>

namespace hyperzeta {

/// Default cap on exhaustive enumerations of field elements / polynomials.
inline constexpr std::uint64_t kDefaultEnumBudget = 100'000'000;

/// The field F_q = F_p[t]/(m(t)), q = p^n with p an odd prime. Immutable
/// after construction; contexts are created through the caching factory
/// `make` so pointer equality identifies the field.
///
/// Elements are addressed by their index in [0, q): the base-p digits of
/// the index are the coefficients of the residue polynomial, lowest degree
/// first (n = 1 collapses to the residue itself).
class FqContext : public std::enable_shared_from_this<FqContext> {
  public:
    using idx_t = std::uint64_t;

    /// Fields up to this order carry an is-square bitmap.
    static constexpr std::uint64_t kLegendreTableMax = 1ull << 22;
    /// Extension fields up to this order carry full add/mul tables.
    static constexpr std::uint64_t kMulTableMax = 1024;
    static constexpr std::uint64_t kInvTableMax = 1 << 16;

    /// Returns the context for F_{p^n}. The modulus is the lexicographically
    /// smallest monic irreducible of degree n over F_p (constant digit least
    /// significant), so repeated runs agree. Results are cached per (p, n).
    static std::shared_ptr<const FqContext> make(long p, int n);

    long p() const { return p_; }
    int n() const { return n_; }
    const mpz_class& q() const { return q_; }
    /// q as a machine word; all element-level work requires this to fit.
    std::uint64_t order() const { return qu_; }
    /// Modulus coefficients c_0..c_n (monic, c_n = 1); empty when n = 1.
    const std::vector<long>& modulus() const { return modulus_; }

    idx_t add(idx_t a, idx_t b) const {
        if (n_ == 1) {
            idx_t s = a + b;
            return s >= qu_ ? s - qu_ : s;
        }
        if (has_mul_table_) return add_table_[a * qu_ + b];
        return add_slow(a, b);
    }
    idx_t sub(idx_t a, idx_t b) const {
        if (n_ == 1) return a >= b ? a - b : a + qu_ - b;
        return add(a, neg(b));
    }
    idx_t neg(idx_t a) const {
        if (n_ == 1) return a == 0 ? 0 : qu_ - a;
        return neg_slow(a);
    }
    idx_t mul(idx_t a, idx_t b) const {
        if (n_ == 1) return a * b % qu_;
        if (has_mul_table_) return mul_table_[a * qu_ + b];
        return mul_slow(a, b);
    }
    idx_t inv(idx_t a) const;
    idx_t pow(idx_t a, const mpz_class& e) const;
    /// Euler-criterion quadratic character: 0 if a = 0, else +-1.
    int legendre(idx_t a) const {
        if (a == 0) return 0;
        if (has_legendre_table_) return (square_bits_[a >> 6] >> (a & 63)) & 1 ? 1 : -1;
        return legendre_slow(a);
    }

    /// Digit-level arithmetic on coefficient vectors of length n. Used by
    /// enumeration loops to avoid index encode/decode per operation.
    void to_digits(idx_t a, std::uint32_t* out) const;
    idx_t from_digits(const std::uint32_t* d) const;
    void add_digits(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
    /// out = a*b mod modulus; scratch must hold 2n-1 words, out may alias a.
    void mul_digits(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out,
                    std::uint64_t* scratch) const;

    idx_t from_int(long v) const;  // v mod p, as a constant

  private:
    FqContext(long p, int n);
    void build_tables();
    idx_t add_slow(idx_t a, idx_t b) const;
    idx_t neg_slow(idx_t a) const;
    idx_t mul_slow(idx_t a, idx_t b) const;
    int legendre_slow(idx_t a) const;

    long p_;
    int n_;
    mpz_class q_;
    std::uint64_t qu_ = 0;
    std::vector<long> modulus_;
    std::vector<std::uint32_t> modulus_digits_;

    bool has_mul_table_ = false;
    std::vector<std::uint16_t> add_table_, mul_table_;
    bool has_inv_table_ = false;
    std::vector<std::uint32_t> inv_table_;
    bool has_legendre_table_ = false;
    std::vector<std::uint64_t> square_bits_;
};

using FqContextPtr = std::shared_ptr<const FqContext>;

/// A field element as a value type: context pointer plus element index.
class FqElement {
  public:
    FqElement() = default;
    FqElement(FqContextPtr ctx, FqContext::idx_t v) : ctx_(std::move(ctx)), v_(v) {}
    static FqElement from_int(const FqContextPtr& ctx, long v) {
        return FqElement(ctx, ctx->from_int(v));
    }

    const FqContextPtr& context() const { return ctx_; }
    FqContext::idx_t index() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    /// Coefficient vector over Z/p, length n, all entries in [0, p).
    std::vector<long> coeffs() const;

    FqElement operator+(const FqElement& o) const;
    FqElement operator-(const FqElement& o) const;
    FqElement operator*(const FqElement& o) const;
    FqElement operator-() const { return FqElement(ctx_, ctx_->neg(v_)); }
    FqElement inverse() const { return FqElement(ctx_, ctx_->inv(v_)); }
    bool operator==(const FqElement& o) const;
    bool operator!=(const FqElement& o) const { return !(*this == o); }

  private:
    void check_same(const FqElement& o) const;
    FqContextPtr ctx_;
    FqContext::idx_t v_ = 0;
};

/// Euler-criterion trit: 0 for 0, +1 for nonzero squares, -1 otherwise.
int is_square(const FqElement& e);

/// F_q together with a chosen degree-r extension F_{q^r} and the embedding
/// phi : F_q -> F_{q^r} (image of the base generator found by root search).
struct FqExtension {
    FqContextPtr base;
    FqContextPtr field;
    int r = 1;
    /// phi(t_base)^i for i in [0, base->n()); empty when the embedding is
    /// the identity (r = 1) or the base is a prime field.
    std::vector<FqContext::idx_t> gen_powers;

    FqContext::idx_t embed_idx(FqContext::idx_t a) const;
    FqElement embed(const FqElement& a) const;
};

/// Builds F_{q^r} and the embedding of `base` into it. Cached per (base, r).
FqExtension extension_context(const FqContextPtr& base, int r,
                              std::uint64_t budget = kDefaultEnumBudget);

}  // namespace hyperzeta

#endif
