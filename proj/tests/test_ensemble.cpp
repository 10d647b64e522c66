#include <doctest.h>

#include <hyperzeta/ensemble.hpp>
#include <hyperzeta/errors.hpp>

using namespace hyperzeta;

TEST_CASE("ensemble sizes") {
    CHECK(hyperelliptic_count(3, 3) == 18);
    CHECK(hyperelliptic_count(3, 1) == 3);
    CHECK(hyperelliptic_count(10009, 3) == mpz_class("1002602250648"));
    EnsembleSpec spec{FqContext::make(3, 1), 3, -1, kDefaultEnumBudget, 1};
    CHECK(moments(spec, 0).count == 18);
    // p | d disables the automatic reduction
    CHECK_FALSE(spec.effective_reduced());
    EnsembleSpec forced{FqContext::make(3, 1), 3, 1, kDefaultEnumBudget, 1};
    CHECK_THROWS_AS(forced.effective_reduced(), domain_error);
}

TEST_CASE("moment table worked examples") {
    EnsembleSpec spec{FqContext::make(5, 1), 3, -1, kDefaultEnumBudget, 2};
    MomentTable t = moments(spec, 2);
    CHECK(t.moment(1) == AlgebraicValue::rational(2));
    CHECK(t.moment(2) == AlgebraicValue::rational(mpq_class(124, 25)));  // 5 - 5^-2
    CHECK(t.sums[0].x() == t.count);
}

TEST_CASE("reduced enumeration equals the full one") {
    for (auto [q, d] : std::vector<std::pair<long, int>>{{3, 4}, {3, 5}, {5, 3}, {5, 4}}) {
        EnsembleSpec full{FqContext::make(q, 1), d, 0, kDefaultEnumBudget, 2};
        EnsembleSpec red{FqContext::make(q, 1), d, 1, kDefaultEnumBudget, 2};
        MomentTable a = moments(full, 4);
        MomentTable b = moments(red, 4);
        for (int k = 0; k <= 4; ++k) REQUIRE(a.sums[static_cast<size_t>(k)] == b.sums[static_cast<size_t>(k)]);
    }
}

TEST_CASE("chunking determinism") {
    for (int threads : {1, 4, 16}) {
        EnsembleSpec spec{FqContext::make(3, 1), 5, -1, kDefaultEnumBudget, threads};
        MomentTable t = moments(spec, 3);
        EnsembleSpec base{FqContext::make(3, 1), 5, -1, kDefaultEnumBudget, 1};
        MomentTable t1 = moments(base, 3);
        for (int k = 0; k <= 3; ++k)
            REQUIRE(t.sums[static_cast<size_t>(k)] == t1.sums[static_cast<size_t>(k)]);
    }
}

TEST_CASE("budget") {
    EnsembleSpec spec{FqContext::make(3, 1), 25, -1, 100000, 1};
    CHECK_THROWS_AS(moments(spec, 1), budget_error);
}

TEST_CASE("a_q moment sums") {
    for (long q : {5L, 7L}) CHECK(aq_moment_m3(FqContext::make(q, 1), 0) == q * q * (q - 1));
    for (long q : {5L, 7L, 11L}) {
        auto m3 = aq_moments_m3(FqContext::make(q, 1), 7);
        for (int j = 1; j <= 7; j += 2) CHECK(m3[static_cast<size_t>(j)] == 0);
    }
    auto F5 = FqContext::make(5, 1);
    CHECK(aq_moment_m4(F5, 2) == 5 * aq_moment_m3(F5, 2));
}

TEST_CASE("Birch sums") {
    for (long p : {5L, 7L, 11L, 13L}) CHECK(birch_sum(p, 1) == (p - 1) * p * p);
    for (long p : {5L, 7L, 11L}) {
        mpz_class P(p);
        CHECK(birch_sum(p, 2) == (P - 1) * (2 * P * P * P - 3 * P));
    }
    // the reduced-cubic moments relate to Birch's unrestricted sums by
    // subtracting the p-1 non-squarefree pairs: m3(p;j) = p (S_{j/2} - (p-1))
    for (long p : {5L, 7L, 11L}) {
        auto m3 = aq_moments_m3(FqContext::make(p, 1), 10);
        for (int j = 2; j <= 10; j += 2)
            REQUIRE(m3[static_cast<size_t>(j)] == p * (birch_sum(p, j / 2) - (p - 1)));
    }
    CHECK_THROWS_AS(birch_sum(3, 1), domain_error);
}

TEST_CASE("quartic to cubic reduction") {
    auto F5 = FqContext::make(5, 1);
    auto k = [&](long v) { return FqElement::from_int(F5, v); };
    for (long c = 0; c < 5; ++c) {
        auto [alpha, beta] = quartic_to_cubic(k(0), k(0), k(c));
        CHECK(alpha == -(k(c) * k(4).inverse()));
        CHECK(beta == k(0));
    }
    CHECK_THROWS_AS(quartic_to_cubic(FqElement::from_int(FqContext::make(3, 1), 1),
                                     FqElement::from_int(FqContext::make(3, 1), 1),
                                     FqElement::from_int(FqContext::make(3, 1), 1)),
                    characteristic_too_small_error);
}

TEST_CASE("point-count identity under the quartic-cubic map, exhaustive over F_5") {
    auto F5 = FqContext::make(5, 1);
    const FqContext& F = *F5;
    auto aq_of = [&](const FqPoly& D) {
        long acc = 0;
        for (FqContext::idx_t x = 0; x < F.order(); ++x) acc -= F.legendre(D.eval(x));
        return acc;
    };
    for (FqContext::idx_t A = 0; A < 5; ++A)
        for (FqContext::idx_t B = 0; B < 5; ++B)
            for (FqContext::idx_t C = 0; C < 5; ++C) {
                FqPoly quartic(F5, {C, B, A, 0, 1});
                if (!squarefree(quartic)) continue;
                auto [alpha, beta] =
                    quartic_to_cubic(FqElement(F5, A), FqElement(F5, B), FqElement(F5, C));
                FqPoly cubic(F5, {beta.index(), alpha.index(), 0, 1});
                REQUIRE(1 - aq_of(quartic) == -aq_of(cubic));
            }
}

TEST_CASE("preimage counts over cubic-twist pairs total 2q") {
    for (long q : {5L, 7L}) {
        auto F = FqContext::make(q, 1);
        FqContext::idx_t a = 0;
        for (FqContext::idx_t t = 1; t < F->order(); ++t)
            if (F->legendre(t) == -1) {
                a = t;
                break;
            }
        FqContext::idx_t a2 = F->mul(a, a), a3 = F->mul(a2, a);
        std::map<std::pair<FqContext::idx_t, FqContext::idx_t>, long> buckets;
        for (FqContext::idx_t A = 0; A < F->order(); ++A)
            for (FqContext::idx_t B = 0; B < F->order(); ++B)
                for (FqContext::idx_t C = 0; C < F->order(); ++C) {
                    auto [alpha, beta] =
                        quartic_to_cubic(FqElement(F, A), FqElement(F, B), FqElement(F, C));
                    ++buckets[{alpha.index(), beta.index()}];
                }
        for (FqContext::idx_t alpha = 0; alpha < F->order(); ++alpha)
            for (FqContext::idx_t beta = 0; beta < F->order(); ++beta) {
                long self = buckets[{alpha, beta}];
                long twist = buckets[{F->mul(a2, alpha), F->mul(a3, beta)}];
                REQUIRE(self + twist == 2 * q);
            }
    }
}

TEST_CASE("scan matches one-at-a-time construction") {
    auto F3 = FqContext::make(3, 1);
    EnsembleSpec spec{F3, 5, 0, kDefaultEnumBudget, 1};
    int count = 0;
    scan_lpolys(spec, [&](const std::vector<FqContext::idx_t>& coeffs, const LPolynomial& L) {
        std::vector<FqContext::idx_t> c(coeffs.begin(), coeffs.begin() + 5);
        c.push_back(1);
        FqPoly D(F3, c);
        LPolynomial direct = lpoly_from_charsums(D);
        REQUIRE(L.a == direct.a);
        REQUIRE(L.b == direct.b);
        ++count;
    });
    CHECK(count == 162);
}

TEST_CASE("cache replay reproduces the scan") {
    auto F5 = FqContext::make(5, 1);
    EnsembleSpec spec{F5, 4, -1, kDefaultEnumBudget, 1};
    std::vector<LPolynomial> ls;
    scan_lpolys(spec, [&](const std::vector<FqContext::idx_t>&, const LPolynomial& L) {
        ls.push_back(L);
    });
    MomentTable direct = moments(spec, 3);
    MomentTable replay = moments_from_lpolys(5, 4, spec.effective_reduced(), 3, ls);
    for (int k = 0; k <= 3; ++k)
        CHECK(direct.sums[static_cast<size_t>(k)] == replay.sums[static_cast<size_t>(k)]);
}
