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

#ifndef HYPERZETA_BIGREAL_HPP
#define HYPERZETA_BIGREAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace hyperzeta {

/// Arbitrary-precision real backed by MPFR. Each value carries its own
/// precision in bits; binary operations compute at the larger of the two
/// operand precisions and round to nearest (even).
class Real {
  public:
    static long digits_to_bits(long decimal_digits);

    Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit Real(long prec_bits) { mpfr_init2(v_, prec_bits); mpfr_set_zero(v_, 1); }
    Real(long value, long prec_bits) { mpfr_init2(v_, prec_bits); mpfr_set_si(v_, value, MPFR_RNDN); }
    Real(int value, long prec_bits) : Real(static_cast<long>(value), prec_bits) {}
    Real(const mpz_class& value, long prec_bits) {
        mpfr_init2(v_, prec_bits);
        mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
    }
    Real(const mpq_class& value, long prec_bits) {
        mpfr_init2(v_, prec_bits);
        mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
    }
    Real(const char* decimal, long prec_bits) {
        mpfr_init2(v_, prec_bits);
        mpfr_set_str(v_, decimal, 10, MPFR_RNDN);
    }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    long precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    /// Decimal order of magnitude, i.e. floor(log10(|x|)). Requires x != 0.
    long exponent10() const;

    friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }
    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    Real operator-() const { Real r(precision()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    Real abs() const { Real r(precision()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
    Real exp() const { Real r(precision()); mpfr_exp(r.v_, v_, MPFR_RNDN); return r; }
    /// exp(x) - 1, accurate for tiny x.
    Real expm1() const { Real r(precision()); mpfr_expm1(r.v_, v_, MPFR_RNDN); return r; }
    Real log() const { Real r(precision()); mpfr_log(r.v_, v_, MPFR_RNDN); return r; }
    Real sqrt() const { Real r(precision()); mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
    Real inverse() const { Real r(precision()); mpfr_ui_div(r.v_, 1, v_, MPFR_RNDN); return r; }
    Real pow_ui(unsigned long e) const { Real r(precision()); mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN); return r; }
    Real pow_z(const mpz_class& e) const {
        Real r(precision());
        mpfr_pow_z(r.v_, v_, e.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(long sig_digits = 20) const;

  private:
    using mpfr_binop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static Real binop(const Real& a, const Real& b, mpfr_binop op) {
        Real r(std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
        op(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

}  // namespace hyperzeta

#endif
