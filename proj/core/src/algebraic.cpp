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

#include "hyperzeta/algebraic.hpp"

#include "hyperzeta/errors.hpp"
#include "hyperzeta/render.hpp"

namespace hyperzeta {

void AlgebraicValue::normalize() {
    x_.canonicalize();
    y_.canonicalize();
    if (y_ == 0) return;
    if (q_ < 0) throw domain_error("AlgebraicValue: negative radicand");
    if (mpz_perfect_square_p(q_.get_mpz_t())) {
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), q_.get_mpz_t());
        x_ += y_ * s;
        y_ = 0;
        x_.canonicalize();
    }
}

void AlgebraicValue::check_compatible(const AlgebraicValue& o) const {
    if (y_ != 0 && o.y_ != 0 && q_ != o.q_)
        throw domain_error("AlgebraicValue: mixing different radicands");
}

AlgebraicValue AlgebraicValue::operator+(const AlgebraicValue& o) const {
    check_compatible(o);
    return AlgebraicValue(x_ + o.x_, y_ + o.y_, y_ != 0 ? q_ : o.q_);
}

AlgebraicValue AlgebraicValue::operator-(const AlgebraicValue& o) const {
    check_compatible(o);
    return AlgebraicValue(x_ - o.x_, y_ - o.y_, y_ != 0 ? q_ : o.q_);
}

AlgebraicValue AlgebraicValue::operator*(const AlgebraicValue& o) const {
    check_compatible(o);
    const mpz_class& q = y_ != 0 ? q_ : o.q_;
    mpq_class x = x_ * o.x_ + y_ * o.y_ * q;
    mpq_class y = x_ * o.y_ + y_ * o.x_;
    return AlgebraicValue(std::move(x), std::move(y), q);
}

AlgebraicValue AlgebraicValue::pow(unsigned k) const {
    AlgebraicValue r = rational(1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool AlgebraicValue::operator==(const AlgebraicValue& o) const {
    if (x_ != o.x_ || y_ != o.y_) return false;
    if (y_ != 0 && q_ != o.q_) return false;
    return true;
}

Real AlgebraicValue::to_real(long prec_bits) const {
    Real r(x_, prec_bits);
    if (y_ != 0) {
        Real root(q_, prec_bits);
        r += Real(y_, prec_bits) * root.sqrt();
    }
    return r;
}

std::string AlgebraicValue::exact_string() const {
    if (y_ == 0) return x_.get_str();
    std::string s = x_.get_str();
    if (y_ > 0)
        s += " + " + y_.get_str();
    else
        s += " - " + mpq_class(-y_).get_str();
    s += "*sqrt(" + q_.get_str() + ")";
    return s;
}

std::string AlgebraicValue::decimal_string(long sig_digits) const {
    return hyperzeta::decimal_string(to_real(Real::digits_to_bits(sig_digits + 10)), sig_digits);
}

}  // namespace hyperzeta
