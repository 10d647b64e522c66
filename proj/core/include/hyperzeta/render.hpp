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

#ifndef HYPERZETA_RENDER_HPP
#define HYPERZETA_RENDER_HPP

#include <string>

#include "hyperzeta/bigreal.hpp"

namespace hyperzeta {

/// Renders x with `sig_digits` significant decimal digits, round half to
/// even. Fixed-point notation when the decimal exponent fits, scientific
/// otherwise (printf %g thresholds), but trailing zeros are kept so the
/// digit count is always exact.
std::string decimal_string(const Real& x, long sig_digits);

/// printf-%g style rendering with 6 significant digits ("-1.99401e-12",
/// "0.000791942"). Used for the difference column of comparison tables.
std::string compact_string(const Real& x);

}  // namespace hyperzeta

#endif
