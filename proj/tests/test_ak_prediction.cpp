#include <doctest.h>

#include <hyperzeta/ak_prediction.hpp>
#include <hyperzeta/errors.hpp>
#include <hyperzeta/exact_moments.hpp>

using namespace hyperzeta;

namespace {
Real tenpow(long e, long bits) {
    Real t(10, bits);
    return e >= 0 ? t.pow_ui(static_cast<unsigned long>(e))
                  : t.pow_ui(static_cast<unsigned long>(-e)).inverse();
}
}  // namespace

TEST_CASE("precision context invariants") {
    auto prec = PrecisionContext::for_prediction(3, 2, 25);
    CHECK(prec.working_digits >= 65 * 3 + 25 + 20);
    PrecisionContext bad = prec;
    bad.working_digits = 60;
    CHECK_THROWS_AS(bad.validate(3, 2), precision_error);
    bad = prec;
    bad.truncation = 2;
    CHECK_THROWS_AS(bad.validate(3, 2), precision_error);
}

TEST_CASE("Euler products for the first moment") {
    for (long q : {3L, 9L, 10009L}) {
        auto prec = PrecisionContext::for_prediction(q, 1, 25);
        Real p1 = euler_P1(q, prec);
        CHECK(p1 < Real(1, p1.precision()));
        CHECK(p1 > Real(0, p1.precision()));
        if (q == 10009) CHECK(Real(1, p1.precision()) - p1 < tenpow(-3, p1.precision()));
    }
}

TEST_CASE("closed-form first moment anchors") {
    auto prec3 = PrecisionContext::for_prediction(3, 1, 25);
    CHECK(q1_closed(3, 13, prec3).value.to_string(22) == "5.710336021545693923735");
    auto prec9 = PrecisionContext::for_prediction(9, 1, 25);
    CHECK(q1_closed(9, 10, prec9).value.to_string(22) == "4.249550011750719262062");
    // Q_1(q;3) = 2 + O(q^-3)
    Real v = q1_closed(3, 3, prec3).value;
    Real dev = (v - Real(2, v.precision())).abs();
    CHECK(dev < Real(mpq_class(2, 10), v.precision()));
    CHECK(dev > Real(mpq_class(2, 100), v.precision()));
}

TEST_CASE("direct evaluation reproduces printed anchors") {
    auto p1 = PrecisionContext::for_prediction(10009, 1, 25);
    CHECK(qk_direct(10009, 3, 1, p1, 2).value.to_string(21) == "2.00000000000199401202");
    auto p2 = PrecisionContext::for_prediction(10009, 2, 25);
    CHECK(qk_direct(10009, 3, 2, p2, 2).value.to_string(22) == "4.999999990017976230662");
    auto p3 = PrecisionContext::for_prediction(3, 1, 25);
    CHECK(qk_direct(3, 18, 1, p3, 2).value.to_string(22) == "6.175800595899974008692");
}

TEST_CASE("first-moment cross-oracle") {
    for (auto [q, d] : std::vector<std::pair<long, int>>{{3, 13}, {9, 10}, {17, 8}}) {
        auto prec = PrecisionContext::for_prediction(q, 1, 30);
        Real direct = qk_direct(q, d, 1, prec, 2).value;
        Real closed = q1_closed(q, d, prec).value;
        CHECK((direct - closed).abs() < tenpow(-25, direct.precision()));
    }
}

TEST_CASE("H refuses poles; regularized H gives a_k at 0") {
    auto prec = PrecisionContext::for_prediction(5, 2, 25);
    const long B = prec.bits();
    std::vector<Real> zero{Real(0, B), Real(0, B)};
    CHECK_THROWS_AS(H_eval(zero, 5, Parity::odd_degree, prec), pole_error);
    Real reg = H_regularized(zero, 5, Parity::odd_degree, prec);
    auto [ak, c0] = leading_constants(5, 2, prec);
    CHECK((reg - ak).abs() < tenpow(-20, B) * ak.abs());
    // the even-parity extra factor is 1 at u = 0
    Real reg_even = H_regularized(zero, 5, Parity::even_degree, prec);
    CHECK((reg_even - reg).abs() < tenpow(-20, B) * reg.abs());
    // c_0 = a_k prod j!/(2j)! with k = 2: factor 1/24
    CHECK((c0 * Real(24, B) - ak).abs() < tenpow(-20, B) * ak.abs());
    // a pole off the origin as well
    std::vector<Real> mixed{Real(1, B) * tenpow(-65, B), -Real(1, B) * tenpow(-65, B)};
    CHECK_THROWS_AS(H_eval(mixed, 5, Parity::odd_degree, prec), pole_error);
}

TEST_CASE("shift and truncation stability") {
    auto base = PrecisionContext::for_prediction(3, 2, 25);
    Real v1 = qk_direct(3, 7, 2, base, 2).value;
    auto shifted = PrecisionContext::for_prediction(3, 2, 25, 70);
    Real v2 = qk_direct(3, 7, 2, shifted, 2).value;
    CHECK((v1 - v2).abs() < tenpow(-25, v1.precision()));
    PrecisionContext more = base;
    more.truncation += 10;
    Real v3 = qk_direct(3, 7, 2, more, 2).value;
    CHECK((v1 - v3).abs() < tenpow(-25, v1.precision()));
    // large q as well (truncation is the delicate direction there)
    auto lb = PrecisionContext::for_prediction(10009, 2, 25);
    PrecisionContext lmore = lb;
    lmore.truncation += 10;
    Real w1 = qk_direct(10009, 4, 2, lb, 2).value;
    Real w2 = qk_direct(10009, 4, 2, lmore, 2).value;
    CHECK((w1 - w2).abs() < tenpow(-25, w1.precision()) * w1.abs());
}

TEST_CASE("symmetry under permuted shift assignment") {
    auto prec = PrecisionContext::for_prediction(5, 3, 25);
    Real a = qk_direct(5, 7, 3, prec, 2).value;
    Real b = qk_direct_with_shifts(5, 7, 3, prec, {2, 3, 1}, 2).value;
    Real c = qk_direct_with_shifts(5, 7, 3, prec, {-1, 2, -3}, 2).value;
    CHECK((a - b).abs() < tenpow(-30, a.precision()) * a.abs());
    CHECK((a - c).abs() < tenpow(-30, a.precision()) * a.abs());
    CHECK_THROWS_AS(qk_direct_with_shifts(5, 7, 3, prec, {1, 2, 2}, 1), domain_error);
    CHECK_THROWS_AS(qk_direct_with_shifts(5, 7, 3, prec, {0, 1, 2}, 1), domain_error);
}

TEST_CASE("polynomial coefficients in 2g") {
    // k = 1, odd parity: Q_1 is linear in d with leading coefficient P(1)/2
    auto prec = PrecisionContext::for_prediction(5, 1, 30);
    auto coeffs = qk_coefficients(5, 1, Parity::odd_degree, prec, 2);
    REQUIRE(coeffs.size() == 2);
    Real p1 = euler_P1(5, prec);
    Real half_p1 = p1 * Real(mpq_class(1, 2), p1.precision());
    CHECK((coeffs[0] - half_p1).abs() < tenpow(-25, p1.precision()));
    auto [ak, c0] = leading_constants(5, 1, prec);
    CHECK((coeffs[0] - c0).abs() < tenpow(-25, p1.precision()));

    // k = 2 at large q: the q-independent part of the polynomial in g is
    // g^3/3 + 3g^2/2 + 13g/6 + 1; rewrite in x = 2g and compare.
    auto prec2 = PrecisionContext::for_prediction(6561, 2, 25);
    auto c2 = qk_coefficients(6561, 2, Parity::odd_degree, prec2, 2);
    REQUIRE(c2.size() == 4);
    const long B = c2[0].precision();
    Real expect[] = {Real(mpq_class(1, 24), B), Real(mpq_class(3, 8), B),
                     Real(mpq_class(13, 12), B), Real(1, B)};
    for (int i = 0; i < 4; ++i)
        CHECK((c2[static_cast<size_t>(i)] - expect[i]).abs() < Real(mpq_class(1, 100), B));
    // leading coefficient of Q_2 matches the c_0 formula
    auto [ak2, c02] = leading_constants(6561, 2, prec2);
    CHECK((c2[0] - c02).abs() < tenpow(-15, B));
}

TEST_CASE("stored series match direct evaluation at large q") {
    // k = 1: stored through q^-20, so at q = 10009 the tail is far below
    // the evaluation accuracy; this pins the transcription exactly.
    for (Parity par : {Parity::odd_degree, Parity::even_degree}) {
        auto prec = PrecisionContext::for_prediction(10009, 1, 45);
        SeriesCheckReport rep = series_check(10009, 1, par, 1, prec);
        CHECK(rep.abs_dev < tenpow(-50, rep.series_value.precision()));
    }
    {
        auto prec = PrecisionContext::for_prediction(10009, 2, 30);
        SeriesCheckReport rep = series_check(10009, 2, Parity::odd_degree, 2, prec);
        CHECK(rep.abs_dev < tenpow(-20, rep.series_value.precision()));
        rep = series_check(10009, 2, Parity::even_degree, 1, prec);
        CHECK(rep.abs_dev < tenpow(-18, rep.series_value.precision()));
    }
    {
        auto prec = PrecisionContext::for_prediction(10009, 3, 30);
        SeriesCheckReport rep = series_check(10009, 3, Parity::odd_degree, 3, prec);
        CHECK(rep.abs_dev < tenpow(-15, rep.series_value.precision()));
        rep = series_check(10009, 3, Parity::even_degree, 2, prec);
        CHECK(rep.abs_dev < tenpow(-15, rep.series_value.precision()));
    }
    // the d = 3 row of the first-moment expansion: Q_1(q;3) = 2 + 2/q^3 - 6/q^4 + ...
    {
        auto prec = PrecisionContext::for_prediction(10009, 1, 30);
        const QkSeries& s = qk_series_data(1, Parity::odd_degree);
        const long B = prec.bits();
        Real v = s.evaluate(10009, 1, B);
        Real model = Real(2, B) + Real(2, B) * tenpow(0, B) / Real(10009, B).pow_ui(3) -
                     Real(6, B) / Real(10009, B).pow_ui(4);
        CHECK((v - model).abs() < tenpow(-17, B));
    }
    // spec anchor: k = 3 at q = 23, g = 3, within the next-order tail
    {
        auto prec = PrecisionContext::for_prediction(23, 3, 30);
        SeriesCheckReport rep = series_check(23, 3, Parity::odd_degree, 3, prec);
        CHECK(rep.tail_estimate_extrapolated);
        CHECK(rep.abs_dev < Real(100, rep.expected_tail.precision()) * rep.expected_tail);
    }
    CHECK_THROWS_AS(qk_series_data(4, Parity::odd_degree), not_tabulated_error);
}

TEST_CASE("Katz-Sarnak limit, small cases") {
    const long bits = Real::digits_to_bits(40);
    for (int k = 1; k <= 2; ++k) {
        Real kes(keating_snaith(k, 1), bits);
        Real prev(0, bits);
        bool first = true;
        for (long q : {3L, 9L, 81L}) {
            auto prec = PrecisionContext::for_prediction(q, k, 25);
            Real gap = (qk_direct(q, 3, k, prec, 2).value - kes).abs();
            if (!first) CHECK(gap < prev);
            prev = gap;
            first = false;
        }
    }
}
