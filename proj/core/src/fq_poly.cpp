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

#include "hyperzeta/fq_poly.hpp"

#include "hyperzeta/errors.hpp"

namespace hyperzeta {

FqPoly FqPoly::from_ints(const FqContextPtr& ctx, std::initializer_list<long> coeffs) {
    return from_ints(ctx, std::vector<long>(coeffs));
}

FqPoly FqPoly::from_ints(const FqContextPtr& ctx, const std::vector<long>& coeffs) {
    std::vector<FqContext::idx_t> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.push_back(ctx->from_int(v));
    return FqPoly(ctx, std::move(c));
}

void FqPoly::check_same(const FqPoly& o) const {
    if (ctx_.get() != o.ctx_.get())
        throw context_mismatch_error("FqPoly: operands from different contexts");
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
    check_same(o);
    std::vector<FqContext::idx_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        FqContext::idx_t a = i < c_.size() ? c_[i] : 0;
        FqContext::idx_t b = i < o.c_.size() ? o.c_[i] : 0;
        c[i] = ctx_->add(a, b);
    }
    return FqPoly(ctx_, std::move(c));
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
    check_same(o);
    std::vector<FqContext::idx_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        FqContext::idx_t a = i < c_.size() ? c_[i] : 0;
        FqContext::idx_t b = i < o.c_.size() ? o.c_[i] : 0;
        c[i] = ctx_->sub(a, b);
    }
    return FqPoly(ctx_, std::move(c));
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return FqPoly(ctx_);
    std::vector<FqContext::idx_t> c(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            c[i + j] = ctx_->add(c[i + j], ctx_->mul(c_[i], o.c_[j]));
        }
    }
    return FqPoly(ctx_, std::move(c));
}

std::pair<FqPoly, FqPoly> FqPoly::divrem(const FqPoly& d) const {
    check_same(d);
    if (d.is_zero()) throw zero_modulus_error("FqPoly::divrem by zero");
    int dd = d.degree();
    if (degree() < dd) return {FqPoly(ctx_), *this};
    FqContext::idx_t lead_inv = ctx_->inv(d.c_.back());
    std::vector<FqContext::idx_t> r = c_;
    std::vector<FqContext::idx_t> q(c_.size() - static_cast<size_t>(dd), 0);
    for (int i = degree(); i >= dd; --i) {
        FqContext::idx_t c = r[static_cast<size_t>(i)];
        if (c == 0) continue;
        FqContext::idx_t f = ctx_->mul(c, lead_inv);
        q[static_cast<size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j) {
            size_t k = static_cast<size_t>(i - dd + j);
            r[k] = ctx_->sub(r[k], ctx_->mul(f, d.c_[static_cast<size_t>(j)]));
        }
    }
    return {FqPoly(ctx_, std::move(q)), FqPoly(ctx_, std::move(r))};
}

FqPoly FqPoly::derivative() const {
    if (degree() < 1) return FqPoly(ctx_);
    std::vector<FqContext::idx_t> c(c_.size() - 1, 0);
    for (size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = ctx_->mul(c_[i], ctx_->from_int(static_cast<long>(i)));
    return FqPoly(ctx_, std::move(c));
}

FqPoly FqPoly::make_monic() const {
    if (is_zero() || is_monic()) return *this;
    FqContext::idx_t f = ctx_->inv(c_.back());
    std::vector<FqContext::idx_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = ctx_->mul(c_[i], f);
    return FqPoly(ctx_, std::move(c));
}

FqPoly FqPoly::shift_arg(FqContext::idx_t u) const {
    // Horner with respect to (x + u): f(x+u) built from the top coefficient
    FqPoly result(ctx_);
    FqPoly xu = FqPoly(ctx_, {u, 1});
    for (int i = degree(); i >= 0; --i) {
        result = result * xu + FqPoly(ctx_, {coeff(i)});
    }
    return result;
}

FqContext::idx_t FqPoly::eval(FqContext::idx_t x) const {
    FqContext::idx_t acc = 0;
    for (int i = degree(); i >= 0; --i) acc = ctx_->add(ctx_->mul(acc, x), c_[static_cast<size_t>(i)]);
    return acc;
}

FqPoly gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.make_monic();
}

bool squarefree(const FqPoly& D) {
    if (D.is_zero()) throw zero_polynomial_error("squarefree: zero polynomial");
    if (D.degree() == 0) return true;
    FqPoly d = D.derivative();
    if (d.is_zero()) return false;  // gcd(D, 0) = D, degree >= 1
    return gcd(D, d).degree() == 0;
}

bool is_irreducible(const FqPoly& f) {
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const FqContextPtr& ctx = f.context();
    const std::uint64_t q = ctx->order();
    for (int e = 1; e <= n / 2; ++e) {
        std::uint64_t total = 1;
        for (int i = 0; i < e; ++i) total *= q;
        std::vector<FqContext::idx_t> g(static_cast<size_t>(e) + 1, 0);
        g[static_cast<size_t>(e)] = 1;
        for (std::uint64_t m = 0; m < total; ++m) {
            std::uint64_t t = m;
            for (int i = 0; i < e; ++i) {
                g[static_cast<size_t>(i)] = t % q;
                t /= q;
            }
            if ((f % FqPoly(ctx, g)).is_zero()) return false;
        }
    }
    return true;
}

namespace {
// Moebius function by trial factorization.
int moebius(int n) {
    int mu = 1;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}
}  // namespace

mpz_class count_irreducible(int n, const mpz_class& q) {
    if (n < 1) throw domain_error("count_irreducible: n must be >= 1");
    mpz_class total = 0;
    for (int m = 1; m <= n; ++m) {
        if (n % m != 0) continue;
        int mu = moebius(m);
        if (mu == 0) continue;
        mpz_class t;
        mpz_pow_ui(t.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n / m));
        total += mu * t;
    }
    mpz_class r = total / n;
    return r;
}

FqElement eval_in_extension(const FqPoly& D, const FqExtension& ext, const FqElement& x) {
    if (D.context().get() != ext.base.get() || x.context().get() != ext.field.get())
        throw context_mismatch_error("eval_in_extension: contexts do not match the extension");
    const FqContext& E = *ext.field;
    FqContext::idx_t acc = 0;
    for (int i = D.degree(); i >= 0; --i) {
        acc = E.mul(acc, x.index());
        acc = E.add(acc, ext.embed_idx(D.coeff(i)));
    }
    return FqElement(ext.field, acc);
}

std::vector<FqPoly> monic_irreducibles(const FqContextPtr& ctx, int max_degree) {
    std::vector<FqPoly> out;
    const std::uint64_t q = ctx->order();
    for (int e = 1; e <= max_degree; ++e) {
        std::uint64_t total = 1;
        for (int i = 0; i < e; ++i) total *= q;
        std::vector<FqContext::idx_t> g(static_cast<size_t>(e) + 1, 0);
        g[static_cast<size_t>(e)] = 1;
        for (std::uint64_t m = 0; m < total; ++m) {
            std::uint64_t t = m;
            for (int i = 0; i < e; ++i) {
                g[static_cast<size_t>(i)] = t % q;
                t /= q;
            }
            FqPoly f(ctx, g);
            if (is_irreducible(f)) out.push_back(f);
        }
    }
    return out;
}

}  // namespace hyperzeta
