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

#ifndef HYPERZETA_ERRORS_HPP
#define HYPERZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperzeta {

/// Base class of all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An enumeration or extension-field size exceeded the configured budget.
struct budget_error : error {
    using error::error;
};
struct extension_too_large_error : budget_error {
    using budget_error::budget_error;
};

/// Requested accuracy cannot be met with the given working precision.
struct precision_error : error {
    using error::error;
};
struct precision_exceeded_error : precision_error {
    using precision_error::precision_error;
};

/// A consistency check (functional equation, Weil bound, ...) failed.
struct verification_error : error {
    using error::error;
};

/// Invalid argument / out-of-contract input.
struct domain_error : error {
    using error::error;
};

struct not_prime_error : domain_error {
    using domain_error::domain_error;
};
struct even_characteristic_error : domain_error {
    using domain_error::domain_error;
};
struct context_mismatch_error : domain_error {
    using domain_error::domain_error;
};
struct zero_polynomial_error : domain_error {
    using domain_error::domain_error;
};
struct zero_modulus_error : domain_error {
    using domain_error::domain_error;
};
struct non_monic_modulus_error : domain_error {
    using domain_error::domain_error;
};
struct not_squarefree_error : domain_error {
    using domain_error::domain_error;
};
struct unsupported_weight_error : domain_error {
    using domain_error::domain_error;
};
struct not_tabulated_error : domain_error {
    using domain_error::domain_error;
};
struct pole_error : domain_error {
    using domain_error::domain_error;
};
struct characteristic_too_small_error : domain_error {
    using domain_error::domain_error;
};

}  // namespace hyperzeta

#endif
