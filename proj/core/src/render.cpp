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

#include "hyperzeta/render.hpp"

namespace hyperzeta {

std::string decimal_string(const Real& x, long sig_digits) {
    if (sig_digits < 1) sig_digits = 1;
    if (x.is_zero()) return "0";
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig_digits), x.raw(), MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);
    bool neg = false;
    if (!digits.empty() && digits[0] == '-') {
        neg = true;
        digits.erase(0, 1);
    }
    // value = 0.digits * 10^e
    std::string out;
    if (e > 0 && e <= sig_digits + 4) {
        if (static_cast<size_t>(e) >= digits.size()) {
            out = digits + std::string(static_cast<size_t>(e) - digits.size(), '0');
        } else {
            out = digits.substr(0, static_cast<size_t>(e)) + "." + digits.substr(static_cast<size_t>(e));
        }
    } else if (e <= 0 && e > -4) {
        out = "0." + std::string(static_cast<size_t>(-e), '0') + digits;
    } else {
        out = digits.substr(0, 1);
        if (digits.size() > 1) out += "." + digits.substr(1);
        long ee = e - 1;
        out += (ee >= 0 ? "e+" : "e-");
        long a = ee >= 0 ? ee : -ee;
        std::string es = std::to_string(a);
        if (es.size() < 2) es = "0" + es;
        out += es;
    }
    return neg ? "-" + out : out;
}

std::string compact_string(const Real& x) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.6Rg", x.raw());
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

}  // namespace hyperzeta
