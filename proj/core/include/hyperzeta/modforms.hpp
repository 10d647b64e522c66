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

#ifndef HYPERZETA_MODFORMS_HPP
#define HYPERZETA_MODFORMS_HPP

#include <gmpxx.h>

#include <vector>

namespace hyperzeta {

/// q-expansion of the discriminant cusp form Delta = q prod (1-q^n)^24,
/// i.e. the Ramanujan tau coefficients tau(1..N).
class DeltaExpansion {
  public:
    /// Default route: Delta/q = (prod (1-q^n)^3)^8 with the cube expanded by
    /// Jacobi's identity prod (1-q^n)^3 = sum (-1)^m (2m+1) q^(m(m+1)/2).
    explicit DeltaExpansion(long n_terms);
    /// Independent oracle: 24th power of Euler's pentagonal-number series.
    static DeltaExpansion via_pentagonal(long n_terms);

    long precision() const { return static_cast<long>(tau_.size()); }
    const mpz_class& tau(long m) const;

  private:
    DeltaExpansion() = default;
    std::vector<mpz_class> tau_;  // tau_[i] = tau(i+1)
};

/// Ramanujan tau via a process-wide expansion that grows on demand up to the
/// configured cap (default 10^5). Throws precision_exceeded_error beyond.
mpz_class tau(long m);
void set_tau_precision_limit(long n_terms);
long tau_precision_limit();

/// Trace of the Hecke operator T_p on level-one cusp forms of the given
/// weight: 0 for weights 2,4,6,8,10,14 (zero-dimensional spaces), tau(p) at
/// weight 12. Weights >= 16 are out of scope (unsupported_weight_error).
mpz_class hecke_trace(int weight, long p);

}  // namespace hyperzeta

#endif
