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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>

#include <hyperzeta/ak_prediction.hpp>
#include <hyperzeta/cache.hpp>
#include <hyperzeta/ensemble.hpp>
#include <hyperzeta/errors.hpp>
#include <hyperzeta/exact_moments.hpp>
#include <hyperzeta/modforms.hpp>
#include <hyperzeta/render.hpp>

namespace hz = hyperzeta;

namespace {

// exit codes: 1 usage, 2 verification, 3 budget, 4 precision
constexpr int kUsage = 1;
constexpr int kVerification = 2;
constexpr int kBudget = 3;
constexpr int kPrecision = 4;

hz::FqContextPtr context_for_q(long q) {
    long p = hz::odd_prime_power_char(mpz_class(q));
    if (p == 0) throw hz::domain_error("q must be an odd prime power");
    int n = 0;
    for (long t = q; t > 1; t /= p) ++n;
    return hz::FqContext::make(p, n);
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw hz::domain_error("cannot open output file " + path);
    return file;
}

struct CompareRow {
    int k;
    std::string m_exact, m_decimal, q_decimal, diff, ratio;
};

void emit_rows(std::ostream& os, const std::vector<CompareRow>& rows, const std::string& format,
               long q, int d) {
    if (format == "csv") {
        os << "k,M_exact,M_decimal,Q_decimal,diff,ratio\n";
        for (const auto& r : rows)
            os << r.k << ',' << '"' << r.m_exact << '"' << ',' << r.m_decimal << ',' << r.q_decimal
               << ',' << r.diff << ',' << r.ratio << "\n";
    } else if (format == "json") {
        nlohmann::json j;
        j["q"] = q;
        j["d"] = d;
        j["rows"] = nlohmann::json::array();
        for (const auto& r : rows)
            j["rows"].push_back({{"k", r.k},
                                 {"M_exact", r.m_exact},
                                 {"M_decimal", r.m_decimal},
                                 {"Q_decimal", r.q_decimal},
                                 {"diff", r.diff},
                                 {"ratio", r.ratio}});
        os << j.dump(2) << "\n";
    } else if (format == "tex") {
        os << "\\begin{tabular}{c|c|c|c|c}\n"
           << "$k$ & $M_k(" << q << "," << d << ")$ & $Q_k(" << q << "," << d
           << ")$ & difference & ratio \\\\ \\hline\n";
        for (const auto& r : rows)
            os << r.k << " & $" << r.m_decimal << "$ & $" << r.q_decimal << "$ & $" << r.diff
               << "$ & $" << r.ratio << "$ \\\\\n";
        os << "\\end{tabular}\n";
    } else {
        throw hz::domain_error("unknown format " + format);
    }
}

// Exact moments for k = 1..k_max, from enumeration, the closed-form
// theorems (d = 3, 4 only), or a cache file.
std::vector<hz::AlgebraicValue> exact_moments_for(long q, int d, int k_max,
                                                  const std::string& source,
                                                  const std::string& cache_path,
                                                  std::uint64_t budget, int threads,
                                                  mpz_class* count_out) {
    mpz_class qz(q);
    *count_out = hz::hyperelliptic_count(qz, d);
    std::vector<hz::AlgebraicValue> out;
    auto from_theorem = [&]() {
        for (int k = 1; k <= k_max; ++k) {
            if (d == 3)
                out.push_back(hz::AlgebraicValue::rational(hz::theorem_d3(qz, k)));
            else
                out.push_back(hz::theorem_d4(qz, k));
        }
    };
    auto from_enum = [&]() {
        hz::EnsembleSpec spec{context_for_q(q), d, -1, budget, threads};
        hz::MomentTable table = hz::moments(spec, k_max);
        for (int k = 1; k <= k_max; ++k) out.push_back(table.moment(k));
    };
    if (source == "theorem") {
        if (d != 3 && d != 4) throw hz::domain_error("--m-from theorem requires d = 3 or 4");
        from_theorem();
    } else if (source == "cache") {
        std::ifstream in(cache_path);
        if (!in) throw hz::domain_error("cannot open cache " + cache_path);
        hz::CacheData data = hz::read_cache(in);
        if (data.header.q != qz || data.header.d != d)
            throw hz::domain_error("cache holds q=" + data.header.q.get_str() +
                                   " d=" + std::to_string(data.header.d));
        hz::MomentTable table =
            hz::moments_from_lpolys(qz, d, data.header.reduced, k_max, data.lpolys);
        for (int k = 1; k <= k_max; ++k) out.push_back(table.moment(k));
    } else if (source == "enum") {
        from_enum();
    } else {  // auto
        hz::EnsembleSpec spec{context_for_q(q), d, -1, budget, threads};
        bool enum_ok = spec.enumeration_size() <= mpz_class(budget);
        if (!enum_ok && (d == 3 || d == 4))
            from_theorem();
        else
            from_enum();
    }
    return out;
}

int run_identities(const std::string& suite, int threads);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zeta functions and central-value moments of hyperelliptic curves over F_q"};
    app.require_subcommand(1);

    // ---- zeta ----
    auto* zeta = app.add_subcommand("zeta", "compute L-polynomials and write the curve cache");
    long z_q = 3;
    int z_d = 3;
    std::string z_dspec, z_out;
    bool z_all = false, z_verify = false;
    int z_reduced = -1;
    std::uint64_t z_budget = hz::kDefaultEnumBudget;
    zeta->add_option("-q,--field", z_q, "field size (odd prime power)")->required();
    zeta->add_option("-d,--degree", z_d, "degree of D")->required();
    zeta->add_option("dspec", z_dspec, "digit string of (c_0..c_{d-1})");
    zeta->add_flag("--all", z_all, "enumerate the whole ensemble");
    zeta->add_option("--out", z_out, "output cache file (default stdout)");
    zeta->add_flag("--verify", z_verify, "run the functional-equation/point-count verifier");
    zeta->add_option("--reduced", z_reduced, "-1 auto, 0 full, 1 fix c_{d-1}=0");
    zeta->add_option("--budget", z_budget, "enumeration budget");
    zeta->callback([&] {
        hz::FqContextPtr F = context_for_q(z_q);
        std::ofstream file;
        std::ostream& os = open_output(file, z_out);
        if (z_all) {
            hz::EnsembleSpec spec{F, z_d, z_reduced, z_budget, 1};
            hz::write_cache_header(os, {F->q(), z_d, spec.effective_reduced()});
            hz::scan_lpolys(spec, [&](const std::vector<hz::FqContext::idx_t>& coeffs,
                                      const hz::LPolynomial& L) {
                if (z_verify)
                    hz::verify_lpoly(L, hz::curve_from_coeffs(F, coeffs, z_d), {-1, z_budget});
                hz::write_cache_record(os, *F, z_d, coeffs, L);
            });
        } else {
            if (z_dspec.empty())
                throw CLI::ValidationError("zeta", "either a D-spec or --all is required");
            auto coeffs = hz::decode_curve_key(*F, z_dspec, z_d);
            hz::FqPoly D = hz::curve_from_coeffs(F, coeffs, z_d);
            hz::LPolynomial L = hz::lpoly_from_charsums(D, z_budget);
            if (z_verify) hz::verify_lpoly(L, D, {-1, z_budget});
            hz::write_cache_record(os, *F, z_d, coeffs, L);
        }
    });

    // ---- moments ----
    auto* mom = app.add_subcommand("moments", "exact central-value moments over the ensemble");
    long m_q = 3;
    int m_d = 3, m_k = 1, m_threads = 0;
    long m_digits = 22;
    std::string m_cache, m_out;
    std::uint64_t m_budget = hz::kDefaultEnumBudget;
    mom->add_option("-q,--field", m_q)->required();
    mom->add_option("-d,--degree", m_d)->required();
    mom->add_option("-k,--kmax", m_k)->required();
    mom->add_option("--cache", m_cache, "replay L-polynomials from a cache file");
    mom->add_option("--threads,-t", m_threads, "worker threads (0 = auto)");
    mom->add_option("--digits", m_digits, "significant digits of the decimal column");
    mom->add_option("--budget", m_budget);
    mom->add_option("--out", m_out);
    mom->callback([&] {
        std::ofstream file;
        std::ostream& os = open_output(file, m_out);
        mpz_class count;
        std::vector<hz::AlgebraicValue> ms =
            exact_moments_for(m_q, m_d, m_k, m_cache.empty() ? "enum" : "cache", m_cache,
                              m_budget, m_threads, &count);
        os << "k,M_exact,M_decimal\n";
        os << "0,\"" << count.get_str() << "\","
           << hz::AlgebraicValue::rational(mpq_class(count)).decimal_string(m_digits) << "\n";
        for (int k = 1; k <= m_k; ++k)
            os << k << ",\"" << ms[static_cast<size_t>(k - 1)].exact_string() << "\","
               << ms[static_cast<size_t>(k - 1)].decimal_string(m_digits) << "\n";
    });

    // ---- predict ----
    auto* pred = app.add_subcommand("predict", "Andrade-Keating predictions Q_k(q;d)");
    long p_q = 3;
    int p_d = 3, p_k = 1, p_threads = 0, p_shift = 65;
    long p_digits = 25, p_working = 0, p_trunc = 0, p_render = 22;
    std::string p_out;
    pred->add_option("-q,--field", p_q)->required();
    pred->add_option("-d,--degree", p_d)->required();
    pred->add_option("-k,--kmax", p_k)->required();
    pred->add_option("--digits", p_digits, "target digits of accuracy");
    pred->add_option("--shift-exp", p_shift, "shifts are j*10^-E");
    pred->add_option("--working-digits", p_working, "override working precision");
    pred->add_option("--trunc", p_trunc, "override Euler-product truncation N");
    pred->add_option("--render-digits", p_render, "significant digits printed");
    pred->add_option("--threads,-t", p_threads);
    pred->add_option("--out", p_out);
    pred->callback([&] {
        std::ofstream file;
        std::ostream& os = open_output(file, p_out);
        os << "k,Q_decimal,certified_digits\n";
        for (int k = 1; k <= p_k; ++k) {
            hz::PrecisionContext prec =
                hz::PrecisionContext::for_prediction(p_q, k, p_digits, p_shift);
            if (p_working > 0) prec.working_digits = p_working;
            if (p_trunc > 0) prec.truncation = p_trunc;
            prec.validate(p_q, k);
            hz::AKPrediction r = hz::qk_direct(p_q, p_d, k, prec, p_threads);
            os << k << ',' << r.value.to_string(p_render) << ',' << r.certified_digits << "\n";
        }
    });

    // ---- compare ----
    auto* cmp = app.add_subcommand("compare", "moments vs predictions, difference and ratio");
    long c_q = 3;
    int c_d = 3, c_k = 1, c_threads = 0, c_shift = 65;
    long c_digits = 22, c_target = 25;
    std::string c_format = "csv", c_out, c_mfrom = "auto", c_cache;
    std::uint64_t c_budget = hz::kDefaultEnumBudget;
    cmp->add_option("-q,--field", c_q)->required();
    cmp->add_option("-d,--degree", c_d)->required();
    cmp->add_option("-k,--kmax", c_k)->required();
    cmp->add_option("--digits", c_digits, "significant digits of rendered columns");
    cmp->add_option("--target-digits", c_target, "prediction accuracy target");
    cmp->add_option("--shift-exp", c_shift);
    cmp->add_option("--format", c_format, "csv, json or tex");
    cmp->add_option("--m-from", c_mfrom, "auto, enum, theorem or cache");
    cmp->add_option("--cache", c_cache);
    cmp->add_option("--threads,-t", c_threads);
    cmp->add_option("--budget", c_budget);
    cmp->add_option("--out", c_out);
    cmp->callback([&] {
        std::ofstream file;
        std::ostream& os = open_output(file, c_out);
        mpz_class count;
        std::vector<hz::AlgebraicValue> ms =
            exact_moments_for(c_q, c_d, c_k, c_mfrom, c_cache, c_budget, c_threads, &count);
        long workbits = hz::Real::digits_to_bits(std::max<long>(c_digits + 18, 42));
        std::vector<CompareRow> rows;
        for (int k = 1; k <= c_k; ++k) {
            hz::PrecisionContext prec =
                hz::PrecisionContext::for_prediction(c_q, k, c_target, c_shift);
            hz::AKPrediction qk = hz::qk_direct(c_q, c_d, k, prec, c_threads);
            const hz::AlgebraicValue& mk = ms[static_cast<size_t>(k - 1)];
            hz::Real m_real = mk.to_real(workbits);
            hz::Real q_real = qk.value;
            CompareRow row;
            row.k = k;
            row.m_exact = mk.exact_string();
            row.m_decimal = hz::decimal_string(m_real, c_digits);
            row.q_decimal = hz::decimal_string(q_real, c_digits);
            row.diff = hz::compact_string(m_real - q_real);
            row.ratio = hz::decimal_string(m_real / q_real, c_digits);
            rows.push_back(std::move(row));
        }
        emit_rows(os, rows, c_format, c_q, c_d);
    });

    // ---- identities ----
    auto* ident = app.add_subcommand("identities", "run a named invariant suite");
    std::string i_suite;
    int i_threads = 0;
    ident
        ->add_option("--suite", i_suite,
                     "reciprocity, fe, m34, birch, binomial, tau or ks-limit")
        ->required();
    ident->add_option("--threads,-t", i_threads);
    int identities_rc = 0;
    ident->callback([&] { identities_rc = run_identities(i_suite, i_threads); });

    try {
        app.parse(argc, argv);
        return identities_rc;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    } catch (const hz::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const hz::precision_error& e) {
        std::cerr << "precision insufficient: " << e.what() << "\n";
        return kPrecision;
    } catch (const hz::verification_error& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kVerification;
    } catch (const hz::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}

namespace {

struct SuiteReporter {
    int checks = 0;
    void check(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        std::cout << "FAIL: " << what << "\n";
        throw hz::verification_error(what);
    }
    int finish(const std::string& suite) {
        std::cout << "suite " << suite << ": " << checks << " checks passed\n";
        return 0;
    }
};

void suite_reciprocity(SuiteReporter& rep) {
    std::mt19937_64 rng(20260810);
    for (long q : {3L, 5L, 7L, 9L, 25L}) {
        hz::FqContextPtr F = context_for_q(q);
        bool sign_active = (q - 1) / 2 % 2 == 1;
        int done = 0;
        while (done < 500) {
            int da = 1 + static_cast<int>(rng() % 6);
            int db = 1 + static_cast<int>(rng() % 6);
            std::vector<hz::FqContext::idx_t> ca(static_cast<size_t>(da) + 1),
                cb(static_cast<size_t>(db) + 1);
            for (int i = 0; i < da; ++i) ca[static_cast<size_t>(i)] = rng() % F->order();
            for (int i = 0; i < db; ++i) cb[static_cast<size_t>(i)] = rng() % F->order();
            ca[static_cast<size_t>(da)] = 1;
            cb[static_cast<size_t>(db)] = 1;
            hz::FqPoly a(F, ca), b(F, cb);
            if (gcd(a, b).degree() != 0) continue;
            ++done;
            int lhs = hz::residue_symbol(a, b) * hz::residue_symbol(b, a);
            int rhs = sign_active && (da % 2) && (db % 2) ? -1 : 1;
            rep.check(lhs == rhs, "reciprocity at q=" + std::to_string(q));
        }
    }
}

void suite_fe(SuiteReporter& rep) {
    hz::FqContextPtr F = context_for_q(3);
    hz::EnsembleSpec spec{F, 5, 0, hz::kDefaultEnumBudget, 1};
    int curves = 0;
    hz::scan_lpolys(spec, [&](const std::vector<hz::FqContext::idx_t>& coeffs,
                              const hz::LPolynomial& L) {
        hz::verify_lpoly(L, hz::curve_from_coeffs(F, coeffs, 5));
        ++curves;
    });
    rep.check(curves == 162, "expected 162 squarefree quintics over F_3");
    rep.checks += curves;
}

void suite_m34(SuiteReporter& rep) {
    for (long q : {5L, 7L, 11L, 13L, 25L}) {
        hz::FqContextPtr F = context_for_q(q);
        auto m3 = hz::aq_moments_m3(F, 9);
        auto m4 = hz::aq_moments_m4(F, 8);
        for (int j = 0; j <= 8; j += 2)
            rep.check(m4[static_cast<size_t>(j)] == q * m3[static_cast<size_t>(j)],
                      "m4 = q m3 at q=" + std::to_string(q) + ", j=" + std::to_string(j));
        for (int j = 1; j <= 7; j += 2)
            rep.check(m4[static_cast<size_t>(j)] == m3[static_cast<size_t>(j) + 1],
                      "m4(j) = m3(j+1) at q=" + std::to_string(q) + ", j=" + std::to_string(j));
    }
}

void suite_birch(SuiteReporter& rep) {
    for (long p : {5L, 7L, 11L}) {
        mpz_class P(p);
        std::vector<mpz_class> expected = {
            (P - 1) * (P * P),
            (P - 1) * (2 * P * P * P - 3 * P),
            (P - 1) * (5 * P * P * P * P - 9 * P * P - 5 * P),
            (P - 1) * (14 * P * P * P * P * P - 28 * P * P * P - 20 * P * P - 7 * P),
            (P - 1) * (42 * P * P * P * P * P * P - 90 * P * P * P * P - 75 * P * P * P -
                       35 * P * P - 9 * P - hz::tau(p)),
        };
        for (int half = 1; half <= 5; ++half)
            rep.check(hz::birch_sum(p, half) == expected[static_cast<size_t>(half - 1)],
                      "Birch S_" + std::to_string(half) + "(" + std::to_string(p) + ")");
    }
}

void suite_binomial(SuiteReporter& rep) {
    for (int k = 0; k <= 20; ++k) {
        auto [l1, r1] = hz::binomial_identity_1(k);
        rep.check(l1 == r1, "binomial identity 1 at k=" + std::to_string(k));
        for (int l = 0; 2 * l <= k + 1; ++l) {
            auto [l2, r2] = hz::binomial_identity_2(k, l);
            rep.check(l2 == r2,
                      "binomial identity 2 at k=" + std::to_string(k) + ", l=" + std::to_string(l));
        }
    }
}

void suite_tau(SuiteReporter& rep) {
    rep.check(hz::tau(6) == hz::tau(2) * hz::tau(3), "tau multiplicativity at 6");
    rep.check(hz::tau(10) == hz::tau(2) * hz::tau(5), "tau multiplicativity at 10");
    hz::DeltaExpansion pent = hz::DeltaExpansion::via_pentagonal(2000);
    for (long m = 1; m <= 2000; ++m)
        rep.check(hz::tau(m) == pent.tau(m), "expansion routes at m=" + std::to_string(m));
    // Ramanujan bound |tau(p)| < 2 p^(11/2), compared squared
    for (long p = 2; p <= 10000; ++p) {
        bool prime = true;
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        mpz_class t = hz::tau(p);
        mpz_class p11;
        mpz_ui_pow_ui(p11.get_mpz_t(), static_cast<unsigned long>(p), 11);
        rep.check(t * t < 4 * p11, "Ramanujan bound at p=" + std::to_string(p));
    }
}

void suite_ks_limit(SuiteReporter& rep, int threads) {
    const long bits = hz::Real::digits_to_bits(40);
    for (int k = 1; k <= 5; ++k) {
        for (long g = 1; g <= 3; ++g) {
            hz::Real kes(hz::keating_snaith(k, g), bits);
            hz::Real prev_gap(0, bits);
            bool first = true;
            for (long q : {3L, 9L, 81L, 6561L}) {
                hz::PrecisionContext prec = hz::PrecisionContext::for_prediction(q, k, 25);
                hz::AKPrediction r =
                    hz::qk_direct(q, static_cast<int>(2 * g + 1), k, prec, threads);
                hz::Real gap = (r.value - kes).abs();
                if (!first)
                    rep.check(gap < prev_gap, "|Q_k - KeS| not decreasing at k=" +
                                                  std::to_string(k) + ", g=" + std::to_string(g) +
                                                  ", q=" + std::to_string(q));
                prev_gap = gap;
                first = false;
                if (q == 6561)
                    rep.check(gap < hz::Real(10, bits) * kes / hz::Real(6561, bits),
                              "KS limit gap too large at q=6561");
            }
        }
    }
    long lead1[] = {2, 5, 14, 42, 132};
    long lead2[] = {3, 14, 84, 594, 4719};
    for (int k = 1; k <= 5; ++k) {
        rep.check(hz::keating_snaith(k, 1) == lead1[k - 1], "KeS leading coefficient, g=1");
        rep.check(hz::keating_snaith(k, 2) == lead2[k - 1], "KeS leading coefficient, g=2");
    }
}

int run_identities(const std::string& suite, int threads) {
    SuiteReporter rep;
    if (suite == "reciprocity")
        suite_reciprocity(rep);
    else if (suite == "fe")
        suite_fe(rep);
    else if (suite == "m34")
        suite_m34(rep);
    else if (suite == "birch")
        suite_birch(rep);
    else if (suite == "binomial")
        suite_binomial(rep);
    else if (suite == "tau")
        suite_tau(rep);
    else if (suite == "ks-limit")
        suite_ks_limit(rep, threads);
    else
        throw hz::domain_error("unknown suite " + suite);
    return rep.finish(suite);
}

}  // namespace
