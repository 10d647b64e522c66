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

#ifndef HYPERZETA_CHARSYM_HPP
#define HYPERZETA_CHARSYM_HPP

#include "hyperzeta/fq_poly.hpp"

namespace hyperzeta {

/// Jacobi-style quadratic residue symbol (a|b) over F_q[x], b monic nonzero.
/// Euclidean algorithm with Artin reciprocity: reduce a mod b, pull the
/// leading coefficient c out of the remainder as is_square(c)^(deg b), flip
/// the sign by (-1)^(((q-1)/2) deg(a) deg(b)) on each swap. Returns 0 when
/// gcd(a, b) is nonconstant.
int residue_symbol(const FqPoly& a, const FqPoly& b);

/// chi_D(n) = (D|n). n = 0 maps to 0, constant n to +1.
int chi_D(const FqPoly& D, const FqPoly& n);

/// Sum of chi_D(n) over all q^r monic n of degree r. Exact.
mpz_class charsum(const FqPoly& D, int r, std::uint64_t budget = kDefaultEnumBudget);

namespace detail {
/// In-place symbol kernel on index buffers; a and b are clobbered.
/// b must be monic of degree db >= 0, a of degree <= da (entries above the
/// true degree may be zero).
int symbol_kernel(const FqContext& F, FqContext::idx_t* a, int da, FqContext::idx_t* b, int db,
                  bool reciprocity_sign_active);
/// Whether (q-1)/2 is odd, i.e. the reciprocity sign can be -1.
bool reciprocity_sign_active(const FqContext& F);
}  // namespace detail

}  // namespace hyperzeta

#endif
