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

#include "hyperzeta/modforms.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "hyperzeta/errors.hpp"

namespace hyperzeta {

namespace {

// series term: coefficient c at exponent e
struct SparseTerm {
    long e;
    long c;
};

// dense *= sparse, truncated to n terms; sparse[0] must be (e=0, c=1)
void mul_sparse(std::vector<mpz_class>& dense, const std::vector<SparseTerm>& sparse, long n) {
    for (long i = n - 1; i >= 0; --i) {
        mpz_class acc = dense[static_cast<size_t>(i)];
        for (size_t t = 1; t < sparse.size(); ++t) {
            if (sparse[t].e > i) break;
            const mpz_class& v = dense[static_cast<size_t>(i - sparse[t].e)];
            if (sparse[t].c >= 0)
                mpz_addmul_ui(acc.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(sparse[t].c));
            else
                mpz_submul_ui(acc.get_mpz_t(), v.get_mpz_t(),
                              static_cast<unsigned long>(-sparse[t].c));
        }
        dense[static_cast<size_t>(i)] = std::move(acc);
    }
}

std::vector<SparseTerm> jacobi_cube_terms(long n) {
    // prod (1-q^m)^3 = sum_{m>=0} (-1)^m (2m+1) q^(m(m+1)/2)
    std::vector<SparseTerm> t;
    for (long m = 0;; ++m) {
        long e = m * (m + 1) / 2;
        if (e >= n) break;
        t.push_back({e, (m % 2 == 0 ? 1 : -1) * (2 * m + 1)});
    }
    return t;
}

std::vector<SparseTerm> pentagonal_terms(long n) {
    // prod (1-q^m) = sum_{j in Z} (-1)^j q^(j(3j-1)/2)
    std::vector<SparseTerm> t;
    t.push_back({0, 1});
    for (long j = 1;; ++j) {
        long e1 = j * (3 * j - 1) / 2;
        long e2 = j * (3 * j + 1) / 2;
        if (e1 >= n && e2 >= n) break;
        long c = j % 2 == 0 ? 1 : -1;
        if (e1 < n) t.push_back({e1, c});
        if (e2 < n) t.push_back({e2, c});
    }
    std::sort(t.begin(), t.end(), [](const SparseTerm& a, const SparseTerm& b) { return a.e < b.e; });
    return t;
}

std::vector<mpz_class> power_of_sparse(const std::vector<SparseTerm>& f, int exponent, long n) {
    std::vector<mpz_class> dense(static_cast<size_t>(n));
    for (const SparseTerm& t : f) dense[static_cast<size_t>(t.e)] = t.c;
    for (int i = 1; i < exponent; ++i) mul_sparse(dense, f, n);
    return dense;
}

}  // namespace

DeltaExpansion::DeltaExpansion(long n_terms) {
    if (n_terms < 1) throw domain_error("DeltaExpansion: need at least one term");
    tau_ = power_of_sparse(jacobi_cube_terms(n_terms), 8, n_terms);
}

DeltaExpansion DeltaExpansion::via_pentagonal(long n_terms) {
    if (n_terms < 1) throw domain_error("DeltaExpansion: need at least one term");
    DeltaExpansion d;
    d.tau_ = power_of_sparse(pentagonal_terms(n_terms), 24, n_terms);
    return d;
}

const mpz_class& DeltaExpansion::tau(long m) const {
    if (m < 1 || m > precision())
        throw precision_exceeded_error("DeltaExpansion: tau(" + std::to_string(m) +
                                       ") beyond computed precision");
    return tau_[static_cast<size_t>(m - 1)];
}

namespace {
std::mutex g_tau_mutex;
long g_tau_limit = 100'000;
std::shared_ptr<const DeltaExpansion> g_delta;
}  // namespace

void set_tau_precision_limit(long n_terms) {
    std::lock_guard<std::mutex> lock(g_tau_mutex);
    g_tau_limit = n_terms;
}

long tau_precision_limit() {
    std::lock_guard<std::mutex> lock(g_tau_mutex);
    return g_tau_limit;
}

mpz_class tau(long m) {
    std::shared_ptr<const DeltaExpansion> d;
    {
        std::lock_guard<std::mutex> lock(g_tau_mutex);
        if (m < 1 || m > g_tau_limit)
            throw precision_exceeded_error("tau(" + std::to_string(m) +
                                           ") beyond configured precision limit");
        if (!g_delta || g_delta->precision() < m) {
            long want = std::max<long>(4096, 2 * m);
            want = std::min(want, g_tau_limit);
            want = std::max(want, m);
            g_delta = std::make_shared<DeltaExpansion>(want);
        }
        d = g_delta;
    }
    return d->tau(m);
}

mpz_class hecke_trace(int weight, long p) {
    if (weight < 2 || weight % 2 != 0) throw domain_error("hecke_trace: weight must be even >= 2");
    if (weight >= 16)
        throw unsupported_weight_error("hecke_trace: weight " + std::to_string(weight) +
                                       " needs cusp-form data beyond tau");
    if (weight == 12) return tau(p);
    return 0;  // dim S_k = 0 for k in {2,4,6,8,10,14}
}

}  // namespace hyperzeta
