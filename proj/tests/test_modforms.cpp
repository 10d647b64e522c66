#include <doctest.h>

#include <hyperzeta/errors.hpp>
#include <hyperzeta/modforms.hpp>

using namespace hyperzeta;

TEST_CASE("tau values") {
    CHECK(tau(1) == 1);
    CHECK(tau(2) == -24);
    CHECK(tau(3) == 252);
    CHECK(tau(5) == 4830);
    CHECK(tau(7) == -16744);
    CHECK(tau(6) == tau(2) * tau(3));
    CHECK(tau(10) == tau(2) * tau(5));
    CHECK(tau(15) == tau(3) * tau(5));
}

TEST_CASE("the two expansion routes agree") {
    DeltaExpansion pent = DeltaExpansion::via_pentagonal(4096);
    DeltaExpansion jac(4096);
    for (long m = 1; m <= 4096; ++m) REQUIRE(jac.tau(m) == pent.tau(m));
}

TEST_CASE("Ramanujan bound for primes up to 2000") {
    for (long p = 2; p <= 2000; ++p) {
        bool prime = true;
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        mpz_class t = tau(p);
        mpz_class p11;
        mpz_ui_pow_ui(p11.get_mpz_t(), static_cast<unsigned long>(p), 11);
        REQUIRE(t * t < 4 * p11);
    }
}

TEST_CASE("precision limits") {
    DeltaExpansion d(100);
    CHECK(d.precision() == 100);
    CHECK_NOTHROW(d.tau(100));
    CHECK_THROWS_AS(d.tau(101), precision_exceeded_error);
    CHECK_THROWS_AS(tau(200000), precision_exceeded_error);  // default cap 10^5
    // tau(10009) is within the default cap (the largest prime the tables use)
    CHECK(tau(10009) != 0);
}

TEST_CASE("hecke traces") {
    for (int w : {2, 4, 6, 8, 10, 14}) CHECK(hecke_trace(w, 97) == 0);
    CHECK(hecke_trace(12, 5) == 4830);
    CHECK(hecke_trace(12, 7) == -16744);
    CHECK_THROWS_AS(hecke_trace(16, 5), unsupported_weight_error);
    CHECK_THROWS_AS(hecke_trace(7, 5), domain_error);
}
