// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Heavy sections use two worker threads.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include <hyperzeta/ak_prediction.hpp>
#include <hyperzeta/cache.hpp>
#include <hyperzeta/ensemble.hpp>
#include <hyperzeta/errors.hpp>
#include <hyperzeta/exact_moments.hpp>
#include <hyperzeta/modforms.hpp>
#include <hyperzeta/render.hpp>

using namespace hyperzeta;

namespace {

int g_threads = 2;
std::vector<std::string> g_failures;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) g_failures.push_back(name + (detail.empty() ? "" : " (" + detail + ")"));
}

// trailing-zero-insensitive comparison of printed decimals
std::string normalize_decimal(std::string s) {
    if (s.find('.') != std::string::npos) {
        while (!s.empty() && s.back() == '0') s.pop_back();
        if (!s.empty() && s.back() == '.') s.pop_back();
    }
    return s;
}

// leading significant digits (sign and point stripped)
std::string mantissa_digits(const std::string& s, size_t count) {
    std::string out;
    bool seen_nonzero = false;
    for (char c : s) {
        if (c == 'e' || c == 'E') break;
        if (c < '0' || c > '9') continue;
        if (!seen_nonzero && c == '0') continue;
        seen_nonzero = true;
        out += c;
        if (out.size() == count) break;
    }
    return out;
}

bool agrees_to_sig_figs(const Real& a, const Real& b, int figs) {
    if (a.is_zero() && b.is_zero()) return true;
    if (b.is_zero()) return false;
    Real tol(mpq_class(5, 10), a.precision());
    for (int i = 0; i < figs - 1; ++i) tol = tol * Real(mpq_class(1, 10), a.precision());
    return ((a - b) / b).abs() < tol;
}

MomentTable brute(long p, int n, int d, int k) {
    EnsembleSpec spec{FqContext::make(p, n), d, -1, kDefaultEnumBudget, g_threads};
    return moments(spec, k);
}

// ---- criterion 1: exact d=3 theorem --------------------------------------
void criterion1() {
    bool ok = true;
    std::string detail;
    for (long p : {5L, 7L, 11L, 13L}) {
        MomentTable t = brute(p, 1, 3, 10);
        mpz_class norm = t.count;
        for (int k = 1; k <= 10; ++k) {
            AlgebraicValue lhs = t.sums[static_cast<size_t>(k)];
            AlgebraicValue rhs = AlgebraicValue::rational(theorem_d3(p, k) * mpq_class(norm));
            if (!(lhs == rhs)) {
                ok = false;
                detail = "p=" + std::to_string(p) + ", k=" + std::to_string(k);
            }
        }
    }
    report(1, "exact d=3 moments, p in {5,7,11,13}, k <= 10", ok, detail);
}

// ---- criterion 2: exact d=4 theorem --------------------------------------
void criterion2() {
    bool ok = true;
    std::string detail;
    for (long p : {5L, 7L}) {
        MomentTable t = brute(p, 1, 4, 8);
        mpq_class norm(t.count);
        for (int k = 1; k <= 8; ++k) {
            AlgebraicValue lhs = t.sums[static_cast<size_t>(k)];
            AlgebraicValue rhs = theorem_d4(p, k) * norm;
            if (!(lhs == rhs)) {
                ok = false;
                detail = "p=" + std::to_string(p) + ", k=" + std::to_string(k);
            }
        }
    }
    report(2, "exact d=4 moments, p in {5,7}, k <= 8", ok, detail);
}

// ---- criterion 3: stored formula rows vs brute force ----------------------
void criterion3() {
    struct Case {
        long p;
        int n, d, kmax;
    };
    std::vector<Case> cases{{5, 1, 5, 5}, {7, 1, 5, 5}, {3, 2, 5, 5}, {3, 1, 7, 3},
                            {5, 1, 7, 3}, {3, 1, 8, 1}, {3, 1, 9, 1}};
    bool ok = true;
    std::string detail;
    for (const Case& c : cases) {
        MomentTable t = brute(c.p, c.n, c.d, c.kmax);
        for (int k = 1; k <= c.kmax; ++k) {
            if (!(t.moment(k) == evaluate_table(c.d, k, t.q))) {
                ok = false;
                detail = "q=" + t.q.get_str() + ", d=" + std::to_string(c.d) +
                         ", k=" + std::to_string(k);
            }
        }
    }
    report(3, "interpolated formula rows (d=5,7,8,9) vs brute force", ok, detail);
}

// ---- criterion 4: comparison-table reproduction at (3,13) -----------------
// printed rows for q=3, d=13
const char* kM313[10] = {
    "5.710384491306550387427", "79.01975914340451932061",  "1770.144898438187087668",
    "51913.19970116326269693", "1785178.554900046977396",  "67873237.3947317133838",
    "2760851654.820987619395", "117829045375.9911859183",  "5212177572584.563015279",
    "237048460599876.5060545"};
const char* kQ313[10] = {
    "5.710336021545693923735", "79.01896720095370412587",  "1770.108824445967349489",
    "51911.40410226095204163", "1785085.94328058320004",   "67870093.08716805240916",
    "2760898873.542778898848", "117848552675.9647081734",  "5214335433244.846855522",
    "237230552226057.5905753"};
const char* kDiff313[10] = {"4.84698e-05", "0.000791942", "0.036074",      "1.7956",
                            "92.6116",     "3144.31",     "-47218.7",      "-1.95073e+07",
                            "-2.15786e+09", "-1.82092e+11"};
const char* kRatio313[10] = {
    "1.000008488075075368984", "1.000010022181747847959", "1.000020379533575303827",
    "1.000034589680887334151", "1.000051880762274996239", "1.000046328322544402952",
    "0.9999828973374418859096", "0.9998344714505984698264", "0.9995861676549371857998",
    "0.999232427592178055752"};

void criterion4() {
    std::string out_path = "/tmp/hz_accept_compare.csv";
    std::string cmd = std::string(HZ_CLI_PATH) + " compare -q 3 -d 13 -k 10 -t " +
                      std::to_string(g_threads) + " --format csv --out " + out_path +
                      " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    if (WEXITSTATUS(rc) != 0) {
        report(4, "cmd_compare(3,13,10) reproduces the printed table", false,
               "CLI exited with " + std::to_string(WEXITSTATUS(rc)));
        return;
    }
    std::ifstream in(out_path);
    std::string line;
    std::getline(in, line);  // header
    bool ok = true;
    std::string detail;
    const long bits = Real::digits_to_bits(40);
    for (int k = 1; k <= 10; ++k) {
        if (!std::getline(in, line)) {
            ok = false;
            detail = "missing row k=" + std::to_string(k);
            break;
        }
        // k,"M_exact",M_decimal,Q_decimal,diff,ratio
        std::vector<std::string> cols;
        {
            std::string cur;
            bool quoted = false;
            for (char c : line) {
                if (c == '"') {
                    quoted = !quoted;
                } else if (c == ',' && !quoted) {
                    cols.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            cols.push_back(cur);
        }
        if (cols.size() != 6) {
            ok = false;
            detail = "bad row " + line;
            break;
        }
        const std::string& m = cols[2];
        const std::string& qv = cols[3];
        if (normalize_decimal(m) != normalize_decimal(kM313[k - 1])) {
            ok = false;
            detail = "M mismatch at k=" + std::to_string(k) + ": " + m;
        }
        bool q_prefix = mantissa_digits(qv, 18) == mantissa_digits(kQ313[k - 1], 18);
        Real mine(qv.c_str(), bits), printed(kQ313[k - 1], bits);
        bool q_close = ((mine - printed) / printed).abs() < Real("1e-17", bits);
        if (!q_prefix && !q_close) {
            ok = false;
            detail = "Q mismatch at k=" + std::to_string(k) + ": " + qv;
        }
        Real d_mine(cols[4].c_str(), bits), d_print(kDiff313[k - 1], bits);
        if (!agrees_to_sig_figs(d_mine, d_print, 5)) {
            ok = false;
            detail = "difference mismatch at k=" + std::to_string(k) + ": " + cols[4];
        }
        Real r_mine(cols[5].c_str(), bits), r_print(kRatio313[k - 1], bits);
        if (!agrees_to_sig_figs(r_mine, r_print, 5)) {
            ok = false;
            detail = "ratio mismatch at k=" + std::to_string(k) + ": " + cols[5];
        }
    }
    report(4, "cmd_compare(3,13,10) reproduces the printed table", ok, detail);
}

// ---- criterion 5: prediction anchors --------------------------------------
const char* kQ10009_3[10] = {
    "2.00000000000199401202",  "4.999999990017976230662", "13.9999999401078685067",
    "41.99999973048431072166", "131.9999989019673481792", "428.99999571764672006",
    "1429.999983649095000872", "4861.999938229537621148", "16795.99976785030932926",
    "58785.99912943382729291"};
const char* kQ3_18[10] = {
    "6.175800595899974008692", "98.41984756709154860716", "2648.548299692500437867",
    "95777.07102537293038863", "4129735.205366196747353", "199190826.0798038029441",
    "10369724943.99307832651", "570394265112.5694039534", "32708464677244.22990219",
    "1937933951306313.043464"};
const char* kQ81_5[10] = {
    "2.987806692825562058199", "13.86573073409551151745", "82.64368117790658728224",
    "580.1463667277005413773", "4573.826022502549800431", "39335.17940837786345422",
    "361980.2776302882857858", "3516935.189217477924701", "35726128.68407336596104",
    "376679451.0864266274913"};

void criterion5() {
    struct Anchor {
        long q;
        int d;
        const char** rows;
    };
    std::vector<Anchor> anchors{{10009, 3, kQ10009_3}, {3, 18, kQ3_18}, {81, 5, kQ81_5}};
    bool ok = true;
    std::string detail;
    for (const Anchor& a : anchors) {
        for (int k = 1; k <= 10; ++k) {
            PrecisionContext prec = PrecisionContext::for_prediction(a.q, k, 25);
            AKPrediction r = qk_direct(a.q, a.d, k, prec, g_threads);
            Real printed(a.rows[k - 1], r.value.precision());
            Real rel = ((r.value - printed) / printed).abs();
            if (!(rel < Real("1e-18", r.value.precision()))) {
                ok = false;
                detail = "q=" + std::to_string(a.q) + ", d=" + std::to_string(a.d) +
                         ", k=" + std::to_string(k) + ": " + r.value.to_string(22);
            }
        }
    }
    report(5, "Q_k anchors at (10009,3), (3,18), (81,5), k <= 10, rel err < 1e-18", ok, detail);
}

// ---- criterion 6: Q_1 cross-oracle ----------------------------------------
void criterion6() {
    bool ok = true;
    std::string detail;
    for (auto [q, d] : std::vector<std::pair<long, int>>{{3, 13}, {9, 10}, {17, 8}, {10009, 3}}) {
        PrecisionContext prec = PrecisionContext::for_prediction(q, 1, 30);
        Real direct = qk_direct(q, d, 1, prec, g_threads).value;
        Real closed = q1_closed(q, d, prec).value;
        if (!((direct - closed).abs() < Real("1e-25", direct.precision()))) {
            ok = false;
            detail = "q=" + std::to_string(q) + ", d=" + std::to_string(d);
        }
    }
    report(6, "|qk_direct(q,d,1) - q1_closed(q,d)| < 1e-25", ok, detail);
}

// ---- criterion 7: Katz-Sarnak limit ----------------------------------------
void criterion7() {
    bool ok = true;
    std::string detail;
    const long bits = Real::digits_to_bits(40);
    for (int k = 1; k <= 5 && ok; ++k) {
        for (long g = 1; g <= 3 && ok; ++g) {
            Real kes(keating_snaith(k, g), bits);
            Real prev(0, bits);
            bool first = true;
            for (long q : {3L, 9L, 81L, 6561L}) {
                PrecisionContext prec = PrecisionContext::for_prediction(q, k, 25);
                Real gap = (qk_direct(q, static_cast<int>(2 * g + 1), k, prec, g_threads).value -
                            kes).abs();
                if (!first && !(gap < prev)) {
                    ok = false;
                    detail = "not decreasing at k=" + std::to_string(k) +
                             ", g=" + std::to_string(g) + ", q=" + std::to_string(q);
                }
                if (q == 6561 && !(gap < Real(10, bits) * kes / Real(6561, bits))) {
                    ok = false;
                    detail = "final gap too large at k=" + std::to_string(k) +
                             ", g=" + std::to_string(g);
                }
                prev = gap;
                first = false;
            }
        }
    }
    const long lead1[] = {2, 5, 14, 42, 132};
    const long lead2[] = {3, 14, 84, 594, 4719};
    for (int k = 1; k <= 5; ++k) {
        if (keating_snaith(k, 1) != lead1[k - 1] || keating_snaith(k, 2) != lead2[k - 1]) {
            ok = false;
            detail = "KeS leading coefficient at k=" + std::to_string(k);
        }
    }
    report(7, "Katz-Sarnak limit over q in {3,9,81,6561}, k <= 5, g <= 3", ok, detail);
}

// ---- criterion 8: identity suites ------------------------------------------
bool chi_sum_vanishing() {
    // all odd prime powers with q^d <= 10^4; character sums of degree r in
    // [d, d+2] while q^r stays below 3*10^5 (the cost of one sum is q^r
    // symbol evaluations, so unbounded r would cost q^(d+2) q^d overall)
    struct Pair {
        long p;
        int n, d;
    };
    std::vector<Pair> pairs;
    for (auto [p, n] : std::vector<std::pair<long, int>>{{3, 1},
                                                         {5, 1},
                                                         {7, 1},
                                                         {11, 1},
                                                         {13, 1},
                                                         {17, 1},
                                                         {19, 1},
                                                         {23, 1},
                                                         {29, 1},
                                                         {31, 1},
                                                         {37, 1},
                                                         {41, 1},
                                                         {43, 1},
                                                         {47, 1},
                                                         {53, 1},
                                                         {59, 1},
                                                         {61, 1},
                                                         {67, 1},
                                                         {71, 1},
                                                         {73, 1},
                                                         {79, 1},
                                                         {83, 1},
                                                         {89, 1},
                                                         {97, 1},
                                                         {3, 2},
                                                         {3, 3},
                                                         {3, 4},
                                                         {3, 5},
                                                         {3, 6},
                                                         {3, 7},
                                                         {3, 8},
                                                         {5, 2},
                                                         {5, 3},
                                                         {5, 4},
                                                         {5, 5},
                                                         {7, 2},
                                                         {7, 3},
                                                         {7, 4},
                                                         {9, 2},  // F_81 as (3,4) handled above
                                                         {11, 2},
                                                         {13, 2}}) {
        if (p == 9) continue;
        mpz_class q;
        mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
        for (int d = 1;; ++d) {
            mpz_class qd;
            mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
            if (qd > 10000) break;
            pairs.push_back({p, n, d});
        }
    }
    std::atomic<bool> ok{true};
    auto run_pair = [&ok](long p, int n, int d) {
        auto F = FqContext::make(p, n);
        const std::uint64_t q = F->order();
        std::uint64_t total = 1;
        for (int i = 0; i < d; ++i) total *= q;
        std::vector<FqContext::idx_t> c(static_cast<size_t>(d) + 1, 0);
        c[static_cast<size_t>(d)] = 1;
        for (std::uint64_t m = 0; m < total && ok.load(); ++m) {
            std::uint64_t t = m;
            for (int i = 0; i < d; ++i) {
                c[static_cast<size_t>(i)] = t % q;
                t /= q;
            }
            FqPoly D(F, c);
            if (!squarefree(D)) continue;
            std::uint64_t qr = 1;
            for (int i = 0; i < d; ++i) qr *= q;
            for (int r = d; r <= d + 2; ++r, qr *= q) {
                if (qr > 300000) break;
                if (charsum(D, r) != 0) {
                    ok.store(false);
                    return;
                }
            }
        }
    };
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= pairs.size()) return;
            run_pair(pairs[i].p, pairs[i].n, pairs[i].d);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < g_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return ok.load();
}

bool dual_construction_exhaustive() {
    for (auto [p, n, d] : std::vector<std::tuple<long, int, int>>{
             {3, 1, 3}, {3, 1, 4}, {3, 1, 5}, {3, 1, 6}, {5, 1, 3}, {5, 1, 4}, {7, 1, 3}, {3, 2, 3}}) {
        auto F = FqContext::make(p, n);
        const std::uint64_t q = F->order();
        std::uint64_t total = 1;
        for (int i = 0; i < d; ++i) total *= q;
        std::vector<FqContext::idx_t> c(static_cast<size_t>(d) + 1, 0);
        c[static_cast<size_t>(d)] = 1;
        for (std::uint64_t m = 0; m < total; ++m) {
            std::uint64_t t = m;
            for (int i = 0; i < d; ++i) {
                c[static_cast<size_t>(i)] = t % q;
                t /= q;
            }
            FqPoly D(F, c);
            if (!squarefree(D)) continue;
            LPolynomial a = lpoly_from_pointcounts(D);
            LPolynomial b = lpoly_from_charsums(D);
            if (a.a != b.a || a.b != b.b) return false;
        }
    }
    return true;
}

void criterion8() {
    bool ok = true;
    std::string detail;
    auto sub = [&](bool pass, const char* what) {
        if (!pass) {
            ok = false;
            if (detail.empty()) detail = what;
        }
        std::printf("    - %s: %s\n", what, pass ? "ok" : "FAILED");
        std::fflush(stdout);
    };

    {  // reciprocity on 500 random coprime pairs per field
        std::mt19937_64 rng(424242);
        bool pass = true;
        for (long q : {3L, 5L, 7L, 9L, 25L}) {
            long p = q == 9 ? 3 : (q == 25 ? 5 : q);
            int n = q == 9 || q == 25 ? 2 : 1;
            auto F = FqContext::make(p, n);
            bool sign_active = (q - 1) / 2 % 2 == 1;
            int done = 0;
            while (done < 500) {
                int da = 1 + static_cast<int>(rng() % 6);
                int db = 1 + static_cast<int>(rng() % 6);
                std::vector<FqContext::idx_t> ca(static_cast<size_t>(da) + 1),
                    cb(static_cast<size_t>(db) + 1);
                for (int i = 0; i < da; ++i) ca[static_cast<size_t>(i)] = rng() % F->order();
                for (int i = 0; i < db; ++i) cb[static_cast<size_t>(i)] = rng() % F->order();
                ca[static_cast<size_t>(da)] = 1;
                cb[static_cast<size_t>(db)] = 1;
                FqPoly a(F, ca), b(F, cb);
                if (gcd(a, b).degree() != 0) continue;
                ++done;
                int expected = sign_active && da % 2 && db % 2 ? -1 : 1;
                if (residue_symbol(a, b) * residue_symbol(b, a) != expected) pass = false;
            }
        }
        sub(pass, "reciprocity law, 500 random pairs per q in {3,5,7,9,25}");
    }

    sub(chi_sum_vanishing(), "character-sum vanishing for r >= d, q^d <= 10^4");

    {  // functional equation + Weil bounds on every cached curve
        bool pass = true;
        auto F = FqContext::make(3, 1);
        EnsembleSpec spec{F, 5, 0, kDefaultEnumBudget, 1};
        int curves = 0;
        scan_lpolys(spec, [&](const std::vector<FqContext::idx_t>& coeffs, const LPolynomial& L) {
            try {
                verify_lpoly(L, curve_from_coeffs(F, coeffs, 5));
            } catch (const verification_error&) {
                pass = false;
            }
            ++curves;
        });
        pass = pass && curves == 162;
        sub(pass, "functional equation and Weil power sums on all 162 curves at (3,5)");
    }

    {  // m3/m4 relation
        bool pass = true;
        for (long q : {5L, 7L, 11L, 13L, 25L}) {
            long p = q == 25 ? 5 : q;
            int n = q == 25 ? 2 : 1;
            auto F = FqContext::make(p, n);
            auto m3 = aq_moments_m3(F, 9);
            auto m4 = aq_moments_m4(F, 8);
            for (int j = 0; j <= 8; j += 2)
                if (m4[static_cast<size_t>(j)] != q * m3[static_cast<size_t>(j)]) pass = false;
            for (int j = 1; j <= 7; j += 2)
                if (m4[static_cast<size_t>(j)] != m3[static_cast<size_t>(j) + 1]) pass = false;
        }
        sub(pass, "m4(q;j) = q m3(q;j) / m3(q;j+1), q in {5,7,11,13,25}, j <= 8");
    }

    {  // corrected Birch sums
        bool pass = true;
        for (long p : {5L, 7L, 11L}) {
            mpz_class P(p);
            mpz_class expected[] = {
                (P - 1) * (P * P), (P - 1) * (2 * P * P * P - 3 * P),
                (P - 1) * (5 * P * P * P * P - 9 * P * P - 5 * P),
                (P - 1) * (14 * P * P * P * P * P - 28 * P * P * P - 20 * P * P - 7 * P),
                (P - 1) * (42 * P * P * P * P * P * P - 90 * P * P * P * P - 75 * P * P * P -
                           35 * P * P - 9 * P - tau(p))};
            for (int half = 1; half <= 5; ++half)
                if (birch_sum(p, half) != expected[half - 1]) pass = false;
        }
        sub(pass, "corrected Birch S_1..S_5 for p in {5,7,11}");
    }

    {  // binomial identities
        bool pass = true;
        for (int k = 0; k <= 20; ++k) {
            auto [l1, r1] = binomial_identity_1(k);
            if (l1 != r1) pass = false;
            for (int l = 0; 2 * l <= k + 1; ++l) {
                auto [l2, r2] = binomial_identity_2(k, l);
                if (l2 != r2) pass = false;
            }
        }
        sub(pass, "binomial identities, k <= 20");
    }

    {  // Ramanujan bound
        bool pass = true;
        for (long p = 2; p <= 10000; ++p) {
            bool prime = true;
            for (long f = 2; f * f <= p; ++f)
                if (p % f == 0) {
                    prime = false;
                    break;
                }
            if (!prime) continue;
            mpz_class t = tau(p);
            mpz_class p11;
            mpz_ui_pow_ui(p11.get_mpz_t(), static_cast<unsigned long>(p), 11);
            if (!(t * t < 4 * p11)) pass = false;
        }
        sub(pass, "Ramanujan bound |tau(p)| < 2 p^(11/2) for p <= 10^4");
    }

    sub(dual_construction_exhaustive(), "dual zeta construction, exhaustive for q^d <= 3^6");

    report(8, "identity suites", ok, detail);
}

// ---- criterion 9: series spot check ----------------------------------------
void criterion9() {
    // Q_2 at q = 53, d = 5 (g = 2): the expansion truncated at q^-4 must
    // agree within the known q^-5 term, which evaluates to -50 at g = 2.
    PrecisionContext prec = PrecisionContext::for_prediction(53, 2, 30);
    SeriesCheckReport rep = series_check(53, 2, Parity::odd_degree, 2, prec, 8);
    bool ok = !rep.tail_estimate_extrapolated;
    const long B = rep.expected_tail.precision();
    // exact next-order magnitude: |(-554/3) 8 + 1376*4 - (9661/3) 2 + 2364| = 50
    Real fifty = Real(50, B) / Real(53, B).pow_ui(5);
    ok = ok && (rep.expected_tail - fifty).abs() < Real("1e-20", B);
    ok = ok && rep.abs_dev < Real(10, B) * rep.expected_tail;
    // with the full stored series the agreement sharpens by three orders
    SeriesCheckReport full = series_check(53, 2, Parity::odd_degree, 2, prec);
    ok = ok && full.abs_dev < Real("1e-9", B);
    report(9, "Q_2 series at q=53, d=5 within the O(q^-5) tail", ok,
           "dev=" + rep.abs_dev.to_string(3) + ", tail=" + rep.expected_tail.to_string(3));
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_threads = std::atoi(argv[1]);
    if (g_threads < 1) g_threads = static_cast<int>(std::thread::hardware_concurrency());
    std::printf("acceptance suite, %d worker threads\n", g_threads);
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures.empty()) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%zu criterion failure(s):\n", g_failures.size());
    for (const std::string& f : g_failures) std::printf("  - %s\n", f.c_str());
    return 1;
}
