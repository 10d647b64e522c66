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

#include "hyperzeta/cache.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "hyperzeta/ensemble.hpp"
#include "hyperzeta/errors.hpp"
#include "hyperzeta/exact_moments.hpp"

namespace hyperzeta {

namespace {

constexpr const char* kMagic = "#hyperzeta-cache v1";

char digit_char(long v) { return static_cast<char>(v < 10 ? '0' + v : 'a' + (v - 10)); }

long digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

}  // namespace

std::string encode_curve_key(const FqContext& F, const std::vector<FqContext::idx_t>& coeffs,
                             int d) {
    const long p = F.p();
    const int n = F.n();
    std::string out;
    std::vector<std::uint32_t> digits(static_cast<size_t>(n));
    for (int i = 0; i < d; ++i) {
        F.to_digits(coeffs[static_cast<size_t>(i)], digits.data());
        for (int j = 0; j < n; ++j) {
            if (p <= 36) {
                out += digit_char(static_cast<long>(digits[static_cast<size_t>(j)]));
            } else {
                if (!out.empty()) out += '.';
                out += std::to_string(digits[static_cast<size_t>(j)]);
            }
        }
    }
    return out;
}

std::vector<FqContext::idx_t> decode_curve_key(const FqContext& F, const std::string& key, int d) {
    const long p = F.p();
    const int n = F.n();
    std::vector<long> digits;
    if (p <= 36) {
        for (char c : key) {
            long v = digit_value(c);
            if (v < 0 || v >= p) throw domain_error("curve key: invalid digit '" + std::string(1, c) + "'");
            digits.push_back(v);
        }
    } else {
        std::stringstream ss(key);
        std::string tok;
        while (std::getline(ss, tok, '.')) {
            if (tok.empty()) throw domain_error("curve key: empty digit");
            long v = std::stol(tok);
            if (v < 0 || v >= p) throw domain_error("curve key: digit out of range");
            digits.push_back(v);
        }
    }
    if (static_cast<int>(digits.size()) != d * n)
        throw domain_error("curve key: expected " + std::to_string(d * n) + " digits, got " +
                           std::to_string(digits.size()));
    std::vector<FqContext::idx_t> coeffs(static_cast<size_t>(d));
    std::vector<std::uint32_t> buf(static_cast<size_t>(n));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < n; ++j)
            buf[static_cast<size_t>(j)] = static_cast<std::uint32_t>(digits[static_cast<size_t>(i * n + j)]);
        coeffs[static_cast<size_t>(i)] = F.from_digits(buf.data());
    }
    return coeffs;
}

FqPoly curve_from_coeffs(const FqContextPtr& F, const std::vector<FqContext::idx_t>& coeffs,
                         int d) {
    std::vector<FqContext::idx_t> c(coeffs.begin(), coeffs.begin() + d);
    c.push_back(1);
    return FqPoly(F, std::move(c));
}

void write_cache_header(std::ostream& os, const CacheHeader& header) {
    os << kMagic << " q=" << header.q.get_str() << " d=" << header.d
       << " reduced=" << (header.reduced ? 1 : 0) << "\n";
}

void write_cache_record(std::ostream& os, const FqContext& F, int d,
                        const std::vector<FqContext::idx_t>& coeffs, const LPolynomial& L) {
    os << encode_curve_key(F, coeffs, d) << ':';
    for (size_t i = 0; i < L.b.size(); ++i) {
        if (i) os << ',';
        os << L.b[i].get_str();
    }
    os << "\n";
}

CacheData read_cache(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw domain_error("cache: empty stream");
    CacheData data;
    {
        std::stringstream ss(line);
        std::string magic1, magic2, field;
        ss >> magic1 >> magic2;
        if (magic1 + " " + magic2 != kMagic)
            throw domain_error("cache: bad magic '" + line + "'");
        bool have_q = false, have_d = false, have_r = false;
        while (ss >> field) {
            auto eq = field.find('=');
            if (eq == std::string::npos) throw domain_error("cache: malformed header field");
            std::string key = field.substr(0, eq), val = field.substr(eq + 1);
            if (key == "q") {
                data.header.q = mpz_class(val);
                have_q = true;
            } else if (key == "d") {
                data.header.d = std::stoi(val);
                have_d = true;
            } else if (key == "reduced") {
                data.header.reduced = val == "1";
                have_r = true;
            }
        }
        if (!have_q || !have_d || !have_r) throw domain_error("cache: incomplete header");
    }
    long p = odd_prime_power_char(data.header.q);
    if (p == 0) throw domain_error("cache: q is not an odd prime power");
    int n = 0;
    {
        mpz_class t = data.header.q;
        while (t > 1) {
            t /= p;
            ++n;
        }
    }
    FqContextPtr F = FqContext::make(p, n);

    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw domain_error("cache: record missing ':'");
        std::vector<FqContext::idx_t> coeffs =
            decode_curve_key(*F, line.substr(0, colon), data.header.d);
        std::vector<mpz_class> b;
        std::stringstream ss(line.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) b.emplace_back(tok);
        // lpoly_from_b validates the functional-equation symmetry
        data.lpolys.push_back(lpoly_from_b(data.header.q, data.header.d, std::move(b)));
        data.coeffs.push_back(std::move(coeffs));
    }

    mpz_class expected = hyperelliptic_count(data.header.q, data.header.d);
    if (data.header.reduced) expected /= data.header.q;
    if (mpz_class(static_cast<unsigned long>(data.lpolys.size())) != expected)
        throw verification_error("cache: record count " + std::to_string(data.lpolys.size()) +
                                 " does not match ensemble size " + expected.get_str());
    return data;
}

}  // namespace hyperzeta
