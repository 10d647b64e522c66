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

#include "hyperzeta/fq.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>

#include "hyperzeta/errors.hpp"

namespace hyperzeta {

namespace {

bool is_prime_long(long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomials over F_p as coefficient vectors, lowest degree first,
// used only during context construction (modulus search).
using PolyP = std::vector<long>;

int deg(const PolyP& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

// f mod g, g monic of degree dg > 0
PolyP mod_p(PolyP f, const PolyP& g, long p) {
    int dg = deg(g);
    for (int i = deg(f); i >= dg; --i) {
        long c = f[i];
        if (c == 0) continue;
        f[i] = 0;
        for (int j = 0; j < dg; ++j) {
            f[i - dg + j] = (f[i - dg + j] + (p - g[j]) % p * c) % p;
        }
    }
    f.resize(dg);
    return f;
}

bool divides(const PolyP& g, const PolyP& f, long p) {
    PolyP r = mod_p(f, g, p);
    return deg(r) < 0;
}

// Trial division by every monic polynomial of degree 1..n/2.
bool irreducible_p(const PolyP& f, long p) {
    int n = deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    for (int e = 1; e <= n / 2; ++e) {
        PolyP g(e + 1, 0);
        g[e] = 1;
        // odometer over the e lower coefficients
        std::uint64_t total = 1;
        for (int i = 0; i < e; ++i) total *= static_cast<std::uint64_t>(p);
        for (std::uint64_t m = 0; m < total; ++m) {
            std::uint64_t t = m;
            for (int i = 0; i < e; ++i) {
                g[i] = static_cast<long>(t % p);
                t /= p;
            }
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

std::mutex g_cache_mutex;
std::map<std::pair<long, int>, FqContextPtr>& context_cache() {
    static std::map<std::pair<long, int>, FqContextPtr> cache;
    return cache;
}
std::map<std::pair<const FqContext*, int>, FqExtension>& extension_cache() {
    static std::map<std::pair<const FqContext*, int>, FqExtension> cache;
    return cache;
}

}  // namespace

FqContext::FqContext(long p, int n) : p_(p), n_(n) {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
    q_ = q;
    if (!q_.fits_ulong_p() && mpz_sizeinbase(q_.get_mpz_t(), 2) > 63)
        throw budget_error("FqContext: field order exceeds 2^63");
    qu_ = mpz_get_ui(q_.get_mpz_t());

    if (n_ > 1) {
        // smallest monic irreducible of degree n in lexicographic coefficient
        // order (constant digit least significant)
        PolyP f(n_ + 1, 0);
        f[n_] = 1;
        bool found = false;
        std::uint64_t total = 1;
        for (int i = 0; i < n_; ++i) total *= static_cast<std::uint64_t>(p_);
        for (std::uint64_t m = 0; m < total; ++m) {
            std::uint64_t t = m;
            for (int i = 0; i < n_; ++i) {
                f[i] = static_cast<long>(t % p_);
                t /= p_;
            }
            if (irreducible_p(f, p_)) {
                found = true;
                break;
            }
        }
        if (!found) throw error("FqContext: no irreducible modulus found");
        modulus_ = f;
        modulus_digits_.assign(modulus_.begin(), modulus_.end());
    }
    build_tables();
}

void FqContext::build_tables() {
    if (n_ > 1 && qu_ <= kMulTableMax) {
        has_mul_table_ = true;
        add_table_.resize(qu_ * qu_);
        mul_table_.resize(qu_ * qu_);
        std::vector<std::uint32_t> da(n_), db(n_), dr(n_);
        std::vector<std::uint64_t> scratch(2 * n_ - 1);
        for (idx_t a = 0; a < qu_; ++a) {
            to_digits(a, da.data());
            for (idx_t b = a; b < qu_; ++b) {
                to_digits(b, db.data());
                add_digits(da.data(), db.data(), dr.data());
                std::uint16_t s = static_cast<std::uint16_t>(from_digits(dr.data()));
                add_table_[a * qu_ + b] = s;
                add_table_[b * qu_ + a] = s;
                mul_digits(da.data(), db.data(), dr.data(), scratch.data());
                std::uint16_t m = static_cast<std::uint16_t>(from_digits(dr.data()));
                mul_table_[a * qu_ + b] = m;
                mul_table_[b * qu_ + a] = m;
            }
        }
    }
    if (qu_ <= kInvTableMax) {
        has_inv_table_ = true;
        inv_table_.assign(qu_, 0);
        mpz_class e = q_ - 2;
        for (idx_t a = 1; a < qu_; ++a) inv_table_[a] = static_cast<std::uint32_t>(pow(a, e));
    }
    if (qu_ <= kLegendreTableMax) {
        has_legendre_table_ = true;
        square_bits_.assign((qu_ + 63) / 64, 0);
        for (idx_t t = 1; t < qu_; ++t) {
            idx_t s = mul(t, t);
            square_bits_[s >> 6] |= 1ull << (s & 63);
        }
    }
}

std::shared_ptr<const FqContext> FqContext::make(long p, int n) {
    if (p == 2) throw even_characteristic_error("FqContext: characteristic 2 is not supported");
    if (!is_prime_long(p)) throw not_prime_error("FqContext: p must be an odd prime");
    if (n < 1) throw domain_error("FqContext: extension degree must be >= 1");
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto& cache = context_cache();
    auto it = cache.find({p, n});
    if (it != cache.end()) return it->second;
    FqContextPtr ctx(new FqContext(p, n));
    cache[{p, n}] = ctx;
    return ctx;
}

void FqContext::to_digits(idx_t a, std::uint32_t* out) const {
    const std::uint64_t p = static_cast<std::uint64_t>(p_);
    for (int i = 0; i < n_; ++i) {
        out[i] = static_cast<std::uint32_t>(a % p);
        a /= p;
    }
}

FqContext::idx_t FqContext::from_digits(const std::uint32_t* d) const {
    const std::uint64_t p = static_cast<std::uint64_t>(p_);
    idx_t a = 0;
    for (int i = n_ - 1; i >= 0; --i) a = a * p + d[i];
    return a;
}

void FqContext::add_digits(const std::uint32_t* a, const std::uint32_t* b,
                           std::uint32_t* out) const {
    const std::uint32_t p = static_cast<std::uint32_t>(p_);
    for (int i = 0; i < n_; ++i) {
        std::uint32_t s = a[i] + b[i];
        out[i] = s >= p ? s - p : s;
    }
}

void FqContext::mul_digits(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out,
                           std::uint64_t* scratch) const {
    const std::uint64_t p = static_cast<std::uint64_t>(p_);
    const int n = n_;
    const int m = 2 * n - 1;
    for (int i = 0; i < m; ++i) scratch[i] = 0;
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        const std::uint64_t ai = a[i];
        for (int j = 0; j < n; ++j) scratch[i + j] += ai * b[j];
    }
    // reduce by the monic modulus
    for (int i = m - 1; i >= n; --i) {
        std::uint64_t c = scratch[i] % p;
        if (c == 0) continue;
        const std::uint64_t cneg = p - c;
        for (int j = 0; j < n; ++j) scratch[i - n + j] += cneg * modulus_digits_[j];
    }
    for (int i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(scratch[i] % p);
}

FqContext::idx_t FqContext::add_slow(idx_t a, idx_t b) const {
    std::uint32_t da[64], db[64], dr[64];
    to_digits(a, da);
    to_digits(b, db);
    add_digits(da, db, dr);
    return from_digits(dr);
}

FqContext::idx_t FqContext::neg_slow(idx_t a) const {
    std::uint32_t d[64];
    to_digits(a, d);
    const std::uint32_t p = static_cast<std::uint32_t>(p_);
    for (int i = 0; i < n_; ++i) d[i] = d[i] == 0 ? 0 : p - d[i];
    return from_digits(d);
}

FqContext::idx_t FqContext::mul_slow(idx_t a, idx_t b) const {
    std::uint32_t da[64], db[64], dr[64];
    std::uint64_t scratch[127];
    to_digits(a, da);
    to_digits(b, db);
    mul_digits(da, db, dr, scratch);
    return from_digits(dr);
}

FqContext::idx_t FqContext::inv(idx_t a) const {
    if (a == 0) throw domain_error("FqContext::inv of zero");
    if (has_inv_table_) return inv_table_[a];
    return pow(a, q_ - 2);
}

FqContext::idx_t FqContext::pow(idx_t a, const mpz_class& e) const {
    if (e == 0) return from_int(1);
    idx_t r = from_int(1);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
    }
    return r;
}

int FqContext::legendre_slow(idx_t a) const {
    mpz_class e = (q_ - 1) / 2;
    return pow(a, e) == 1 ? 1 : -1;
}

FqContext::idx_t FqContext::from_int(long v) const {
    long r = v % p_;
    if (r < 0) r += p_;
    return static_cast<idx_t>(r);
}

std::vector<long> FqElement::coeffs() const {
    std::vector<std::uint32_t> d(ctx_->n());
    ctx_->to_digits(v_, d.data());
    return std::vector<long>(d.begin(), d.end());
}

void FqElement::check_same(const FqElement& o) const {
    if (ctx_.get() != o.ctx_.get())
        throw context_mismatch_error("FqElement: operands from different contexts");
}

FqElement FqElement::operator+(const FqElement& o) const {
    check_same(o);
    return FqElement(ctx_, ctx_->add(v_, o.v_));
}
FqElement FqElement::operator-(const FqElement& o) const {
    check_same(o);
    return FqElement(ctx_, ctx_->sub(v_, o.v_));
}
FqElement FqElement::operator*(const FqElement& o) const {
    check_same(o);
    return FqElement(ctx_, ctx_->mul(v_, o.v_));
}
bool FqElement::operator==(const FqElement& o) const {
    return ctx_.get() == o.ctx_.get() && v_ == o.v_;
}

int is_square(const FqElement& e) { return e.context()->legendre(e.index()); }

FqContext::idx_t FqExtension::embed_idx(FqContext::idx_t a) const {
    if (field.get() == base.get()) return a;
    if (base->n() == 1) return a;  // prime subfield embeds identically
    std::uint32_t d[64];
    base->to_digits(a, d);
    FqContext::idx_t acc = 0;
    for (int i = 0; i < base->n(); ++i) {
        if (d[i] == 0) continue;
        acc = field->add(acc, field->mul(gen_powers[static_cast<size_t>(i)],
                                         static_cast<FqContext::idx_t>(d[i])));
    }
    return acc;
}

FqElement FqExtension::embed(const FqElement& a) const {
    if (a.context().get() != base.get())
        throw context_mismatch_error("FqExtension::embed: element not from base field");
    return FqElement(field, embed_idx(a.index()));
}

FqExtension extension_context(const FqContextPtr& base, int r, std::uint64_t budget) {
    if (r < 1) throw domain_error("extension_context: r must be >= 1");
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto& cache = extension_cache();
        auto it = cache.find({base.get(), r});
        if (it != cache.end()) return it->second;
    }
    FqExtension ext;
    ext.base = base;
    ext.r = r;
    if (r == 1) {
        ext.field = base;
    } else {
        ext.field = FqContext::make(base->p(), base->n() * r);
    }
    if (base->n() > 1 && ext.field.get() != base.get()) {
        const FqContext& E = *ext.field;
        if (E.order() > budget)
            throw extension_too_large_error("extension_context: root search exceeds budget");
        // embed the base generator: exhaustive root search of the base modulus
        const std::vector<long>& m = base->modulus();
        FqContext::idx_t root = 0;
        bool found = false;
        for (FqContext::idx_t e = 0; e < E.order(); ++e) {
            FqContext::idx_t acc = 0;
            for (int i = base->n(); i >= 0; --i) {
                acc = E.mul(acc, e);
                acc = E.add(acc, E.from_int(m[static_cast<size_t>(i)]));
            }
            if (acc == 0) {
                root = e;
                found = true;
                break;
            }
        }
        if (!found) throw error("extension_context: base modulus has no root in extension");
        ext.gen_powers.resize(static_cast<size_t>(base->n()));
        FqContext::idx_t pw = E.from_int(1);
        for (int i = 0; i < base->n(); ++i) {
            ext.gen_powers[static_cast<size_t>(i)] = pw;
            pw = E.mul(pw, root);
        }
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    extension_cache()[{base.get(), r}] = ext;
    return ext;
}

}  // namespace hyperzeta
