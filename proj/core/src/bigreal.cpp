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

#include "hyperzeta/bigreal.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

#include "hyperzeta/render.hpp"

namespace hyperzeta {

long Real::digits_to_bits(long decimal_digits) {
    // ceil(d * log2(10)) plus a limb of headroom
    return static_cast<long>(decimal_digits * 3.3219280948873626 + 64);
}

long Real::exponent10() const {
    // mpfr_get_exp yields e with |x| in [2^(e-1), 2^e)
    long e2 = mpfr_get_exp(v_);
    double e10 = (e2 - 1) * 0.30102999566398119521;
    long guess = static_cast<long>(std::floor(e10));
    // adjust by comparing against 10^guess and 10^(guess+1)
    mpfr_t p;
    mpfr_init2(p, 64);
    for (;;) {
        mpfr_set_si(p, 10, MPFR_RNDN);
        mpfr_pow_si(p, p, guess, MPFR_RNDD);
        if (mpfr_cmpabs(v_, p) < 0) { --guess; continue; }
        mpfr_set_si(p, 10, MPFR_RNDN);
        mpfr_pow_si(p, p, guess + 1, MPFR_RNDU);
        if (mpfr_cmpabs(v_, p) >= 0) { ++guess; continue; }
        break;
    }
    mpfr_clear(p);
    return guess;
}

std::string Real::to_string(long sig_digits) const { return decimal_string(*this, sig_digits); }

}  // namespace hyperzeta
