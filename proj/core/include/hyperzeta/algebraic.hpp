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

#ifndef HYPERZETA_ALGEBRAIC_HPP
#define HYPERZETA_ALGEBRAIC_HPP

#include <gmpxx.h>

#include <string>

#include "hyperzeta/bigreal.hpp"

namespace hyperzeta {

/// Exact element x + y*sqrt(q) of Q(sqrt(q)), q a positive integer.
/// When q is a perfect square the value is normalized to y = 0.
class AlgebraicValue {
  public:
    AlgebraicValue() : q_(0) {}
    explicit AlgebraicValue(const mpz_class& q) : q_(q) { normalize(); }
    AlgebraicValue(mpq_class x, mpq_class y, mpz_class q)
        : x_(std::move(x)), y_(std::move(y)), q_(std::move(q)) {
        normalize();
    }
    static AlgebraicValue rational(const mpq_class& x) { return AlgebraicValue(x, 0, 0); }

    const mpq_class& x() const { return x_; }
    const mpq_class& y() const { return y_; }
    const mpz_class& q() const { return q_; }
    bool is_rational() const { return y_ == 0; }

    AlgebraicValue operator+(const AlgebraicValue& o) const;
    AlgebraicValue operator-(const AlgebraicValue& o) const;
    AlgebraicValue operator*(const AlgebraicValue& o) const;
    AlgebraicValue operator*(const mpq_class& c) const { return AlgebraicValue(x_ * c, y_ * c, q_); }
    AlgebraicValue pow(unsigned k) const;
    bool operator==(const AlgebraicValue& o) const;
    bool operator!=(const AlgebraicValue& o) const { return !(*this == o); }

    Real to_real(long prec_bits) const;
    /// "x + y*sqrt(q)"; collapses to "x" when y = 0.
    std::string exact_string() const;
    std::string decimal_string(long sig_digits) const;

  private:
    void normalize();
    void check_compatible(const AlgebraicValue& o) const;
    mpq_class x_, y_;
    mpz_class q_;
};

}  // namespace hyperzeta

#endif
