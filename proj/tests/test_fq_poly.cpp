#include <doctest.h>

#include <hyperzeta/errors.hpp>
#include <hyperzeta/fq_poly.hpp>
#include <random>

using namespace hyperzeta;

namespace {
FqPoly random_poly(const FqContextPtr& F, int deg, std::mt19937_64& rng, bool monic) {
    std::vector<FqContext::idx_t> c(static_cast<size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) c[static_cast<size_t>(i)] = rng() % F->order();
    if (monic) c[static_cast<size_t>(deg)] = 1;
    return FqPoly(F, c);
}
}  // namespace

TEST_CASE("squarefree") {
    auto F3 = FqContext::make(3, 1);
    CHECK_FALSE(squarefree(FqPoly::from_ints(F3, {0, 0, 1})));      // x^2
    CHECK(squarefree(FqPoly::from_ints(F3, {0, 1, 0, 1})));         // x^3 + x, D' = 1
    CHECK_FALSE(squarefree(FqPoly::from_ints(F3, {0, 0, 0, 1})));   // x^3, D' = 0 in char 3
    CHECK_THROWS_AS(squarefree(FqPoly(F3)), zero_polynomial_error);
}

TEST_CASE("divrem and gcd properties") {
    std::mt19937_64 rng(11);
    auto F9 = FqContext::make(3, 2);
    for (int i = 0; i < 300; ++i) {
        FqPoly a = random_poly(F9, 1 + static_cast<int>(rng() % 8), rng, false);
        FqPoly b = random_poly(F9, 1 + static_cast<int>(rng() % 5), rng, false);
        if (b.is_zero()) continue;
        auto [q, r] = a.divrem(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        FqPoly g = gcd(a, b);
        if (!g.is_zero()) {
            CHECK((a % g).is_zero());
            CHECK((b % g).is_zero());
        }
    }
}

TEST_CASE("count_irreducible closed form") {
    CHECK(count_irreducible(1, 7) == 7);
    CHECK(count_irreducible(2, 3) == 3);   // (9-3)/2
    CHECK(count_irreducible(4, 3) == 18);  // (81-9)/4
    // sum_{m|n} m i_m(q) = q^n
    for (long q : {3L, 5L, 7L, 9L}) {
        for (int n = 1; n <= 12; ++n) {
            mpz_class total = 0;
            for (int m = 1; m <= n; ++m)
                if (n % m == 0) total += m * count_irreducible(m, q);
            mpz_class qn;
            mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n));
            CHECK(total == qn);
        }
    }
}

TEST_CASE("count_irreducible matches exhaustive enumeration") {
    auto check_pair = [](long p, int n, int deg) {
        auto F = FqContext::make(p, n);
        mpz_class found = 0;
        for (const FqPoly& f : monic_irreducibles(F, deg))
            if (f.degree() == deg) found += 1;
        CHECK(found == count_irreducible(deg, F->q()));
    };
    for (int deg = 1; deg <= 8; ++deg) check_pair(3, 1, deg);
    for (int deg = 1; deg <= 5; ++deg) check_pair(5, 1, deg);
    for (int deg = 1; deg <= 4; ++deg) check_pair(7, 1, deg);
    for (int deg = 1; deg <= 4; ++deg) check_pair(3, 2, deg);
    for (int deg = 1; deg <= 2; ++deg) check_pair(5, 2, deg);
    check_pair(11, 2, 2);
}

TEST_CASE("squarefree counts match q^d - q^(d-1)") {
    auto run = [](long p, int n, int d) {
        auto F = FqContext::make(p, n);
        const std::uint64_t q = F->order();
        std::uint64_t total = 1;
        for (int i = 0; i < d; ++i) total *= q;
        std::vector<FqContext::idx_t> c(static_cast<size_t>(d) + 1, 0);
        c[static_cast<size_t>(d)] = 1;
        std::uint64_t count = 0;
        for (std::uint64_t m = 0; m < total; ++m) {
            std::uint64_t t = m;
            for (int i = 0; i < d; ++i) {
                c[static_cast<size_t>(i)] = t % q;
                t /= q;
            }
            if (squarefree(FqPoly(F, c))) ++count;
        }
        mpz_class expected = d == 1 ? mpz_class(static_cast<long>(q))
                                    : mpz_class(static_cast<long>(q - 1)) *
                                          mpz_class(static_cast<unsigned long>(total / q));
        CHECK(mpz_class(static_cast<unsigned long>(count)) == expected);
    };
    run(3, 1, 1);
    for (int d = 2; d <= 8; ++d) run(3, 1, d);
    for (int d = 2; d <= 5; ++d) run(5, 1, d);
    run(7, 1, 4);
    run(3, 2, 4);
    run(5, 2, 3);
    run(11, 2, 2);
}

TEST_CASE("argument shift") {
    std::mt19937_64 rng(5);
    auto F7 = FqContext::make(7, 1);
    for (int i = 0; i < 100; ++i) {
        FqPoly f = random_poly(F7, 1 + static_cast<int>(rng() % 6), rng, true);
        FqContext::idx_t u = rng() % 7;
        FqPoly shifted = f.shift_arg(u);
        CHECK(shifted.degree() == f.degree());
        CHECK(shifted.is_monic());
        for (FqContext::idx_t x = 0; x < 7; ++x) CHECK(shifted.eval(x) == f.eval(F7->add(x, u)));
    }
}

TEST_CASE("eval_in_extension") {
    auto F3 = FqContext::make(3, 1);
    auto ext = extension_context(F3, 2);
    FqPoly id = FqPoly::x(F3);
    for (FqContext::idx_t e = 0; e < 9; ++e)
        CHECK(eval_in_extension(id, ext, FqElement(ext.field, e)).index() == e);
    FqPoly D = FqPoly::from_ints(F3, {0, 1, 0, 1});  // x^3 + x
    CHECK(eval_in_extension(D, ext, FqElement(ext.field, ext.embed_idx(1))).index() ==
          ext.embed_idx(2));
    FqPoly c = FqPoly::constant(F3, 2);
    for (FqContext::idx_t e = 0; e < 9; ++e)
        CHECK(eval_in_extension(c, ext, FqElement(ext.field, e)).index() == ext.embed_idx(2));
    CHECK_THROWS_AS(eval_in_extension(D, ext, FqElement(F3, 1)), context_mismatch_error);
}
