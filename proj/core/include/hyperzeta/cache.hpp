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

#ifndef HYPERZETA_CACHE_HPP
#define HYPERZETA_CACHE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hyperzeta/lpoly.hpp"

namespace hyperzeta {

/// Text cache of L-polynomials, one record per squarefree monic D:
///   #hyperzeta-cache v1 q=<q> d=<d> reduced=<0|1>
///   <digits of c_0..c_{d-1}>:<b(0)>,...,<b(2g)>
/// Extension-field coefficients are flattened as n base-p digits each,
/// lowest digit first. Digits use 0-9a-z; characteristics above 36 fall
/// back to '.'-separated decimal digits.
struct CacheHeader {
    mpz_class q;
    int d = 0;
    bool reduced = false;
};

std::string encode_curve_key(const FqContext& F, const std::vector<FqContext::idx_t>& coeffs,
                             int d);
std::vector<FqContext::idx_t> decode_curve_key(const FqContext& F, const std::string& key, int d);

/// D as a monic FqPoly from the d lower coefficients.
FqPoly curve_from_coeffs(const FqContextPtr& F, const std::vector<FqContext::idx_t>& coeffs,
                         int d);

void write_cache_header(std::ostream& os, const CacheHeader& header);
void write_cache_record(std::ostream& os, const FqContext& F, int d,
                        const std::vector<FqContext::idx_t>& coeffs, const LPolynomial& L);

struct CacheData {
    CacheHeader header;
    std::vector<std::vector<FqContext::idx_t>> coeffs;
    std::vector<LPolynomial> lpolys;
};

/// Parses and validates a cache stream: header shape, record count against
/// the ensemble size, and the b-coefficient symmetry of every record.
CacheData read_cache(std::istream& is);

}  // namespace hyperzeta

#endif
