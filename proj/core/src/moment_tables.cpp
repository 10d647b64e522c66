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

#include <map>
#include <string>

#include "hyperzeta/errors.hpp"
#include "hyperzeta/exact_moments.hpp"

// Normalized moment formulas (1/#H) sum_D L(1/2,chi_D)^k as signed integer
// combinations of q^(-1/2) powers; {half_exp, coeff} pairs, tau_factor
// marking the single (tau(q)+1) term. The d=3 and d=4 rows restate the
// closed-form theorems; d=5..9 are the interpolated formulas, valid for all
// odd prime powers within their stated k range.

namespace hyperzeta {

namespace {

using T = MomentPolynomial::Term;

const std::map<std::pair<int, int>, MomentPolynomial>& all_rows() {
    static const std::map<std::pair<int, int>, MomentPolynomial> rows = [] {
        std::map<std::pair<int, int>, MomentPolynomial> m;
        auto put = [&m](int d, int k, std::vector<T> terms) {
            m[{d, k}] = MomentPolynomial{d, k, std::move(terms)};
        };
        // d = 3
        put(3, 1, {{0, 2}});
        put(3, 2, {{0, 5}, {4, -1}});
        put(3, 3, {{0, 14}, {4, -6}});
        put(3, 4, {{0, 42}, {4, -27}, {6, -1}});
        put(3, 5, {{0, 132}, {4, -110}, {6, -10}});
        put(3, 6, {{0, 429}, {4, -429}, {6, -65}, {8, -1}});
        put(3, 7, {{0, 1430}, {4, -1638}, {6, -350}, {8, -7}});
        put(3, 8, {{0, 4862}, {4, -6188}, {6, -1700}, {8, -119}, {10, -1}});
        put(3, 9, {{0, 16796}, {4, -23256}, {6, -7752}, {8, -798}, {10, -18}});
        put(3, 10,
            {{0, 58786}, {4, -87210}, {6, -33915}, {8, -4655}, {10, -189}, {12, -1, true}});
        // d = 4
        put(4, 1, {{0, 2}, {1, -1}, {2, -1}, {5, -1}, {6, 1}});
        put(4, 2, {{0, 5}, {1, -6}, {2, -3}, {3, 4}, {4, -1}, {5, -2}, {6, 7}, {7, -4}});
        put(4, 3, {{0, 14},
                   {1, -28},
                   {3, 28},
                   {4, -20},
                   {5, 3},
                   {6, 27},
                   {7, -40},
                   {8, 18},
                   {9, -3},
                   {10, 1}});
        put(4, 4, {{0, 42},
                   {1, -120},
                   {2, 60},
                   {3, 120},
                   {4, -177},
                   {5, 100},
                   {6, 61},
                   {7, -232},
                   {8, 223},
                   {9, -100},
                   {10, 31},
                   {11, -8}});
        put(4, 5, {{0, 132},
                   {1, -495},
                   {2, 495},
                   {3, 330},
                   {4, -1100},
                   {5, 1034},
                   {6, -230},
                   {7, -985},
                   {8, 1665},
                   {9, -1286},
                   {10, 614},
                   {11, -225},
                   {12, 55},
                   {13, -5},
                   {14, 1}});
        // d = 5
        put(5, 1, {{0, 3}, {2, -1}, {4, 1}, {6, -1}});
        put(5, 2, {{0, 14}, {2, -11}, {4, 10}, {6, 5}, {8, -15}, {10, -1}});
        put(5, 3, {{0, 84}, {2, -111}, {4, 91}, {6, 98}, {8, -174}, {10, -51}, {12, -1}});
        put(5, 4, {{0, 594},
                   {2, -1133},
                   {4, 861},
                   {6, 1476},
                   {8, -1959},
                   {10, -1192},
                   {12, -90},
                   {14, -1}});
        put(5, 5, {{0, 4719},
                   {2, -11869},
                   {4, 8645},
                   {6, 20416},
                   {8, -22055},
                   {10, -21516},
                   {12, -3398},
                   {14, -145},
                   {16, -1}});
        // d = 6
        put(6, 1, {{0, 3},
                   {1, -1},
                   {2, -2},
                   {4, 1},
                   {5, -1},
                   {6, -1},
                   {7, 1},
                   {8, -1},
                   {9, -1},
                   {10, 2}});
        put(6, 2, {{0, 14},
                   {1, -12},
                   {2, -19},
                   {3, 14},
                   {4, 17},
                   {5, -24},
                   {7, 24},
                   {8, -33},
                   {9, 14},
                   {10, 30},
                   {11, -34},
                   {12, 14},
                   {13, -6},
                   {14, 1}});
        // d = 7
        put(7, 1, {{0, 4}, {2, -2}, {4, 2}, {6, -2}, {8, 2}, {10, 2}, {12, -2}});
        put(7, 2, {{0, 30},
                   {2, -40},
                   {4, 60},
                   {6, -66},
                   {8, 20},
                   {10, 101},
                   {12, -85},
                   {14, -36},
                   {16, -2}});
        put(7, 3, {{0, 330},
                   {2, -832},
                   {4, 1674},
                   {6, -1986},
                   {8, -240},
                   {10, 4348},
                   {12, -2330},
                   {14, -3222},
                   {16, -626},
                   {18, -12}});
        // d = 8
        put(8, 1, {{0, 4},
                   {1, -1},
                   {2, -3},
                   {4, 2},
                   {5, -1},
                   {6, -3},
                   {7, 1},
                   {8, 3},
                   {9, -3},
                   {10, -1},
                   {11, 3},
                   {12, -3},
                   {13, -1},
                   {14, 5},
                   {15, -2}});
        // d = 9
        put(9, 1,
            {{0, 5}, {2, -3}, {4, 3}, {6, -4}, {8, 6}, {10, -5}, {12, 1}, {14, 5}, {16, -7}, {18, -1}});
        return m;
    }();
    return rows;
}

}  // namespace

const MomentPolynomial& printed_moment_formula(int d, int k) {
    auto it = all_rows().find({d, k});
    if (it == all_rows().end())
        throw not_tabulated_error("no stored moment formula for d=" + std::to_string(d) +
                                  ", k=" + std::to_string(k));
    return it->second;
}

const MomentPolynomial& table_polynomial(int d, int k) {
    if (d < 5 || d > 9)
        throw not_tabulated_error("table_polynomial: stored interpolated formulas cover d=5..9");
    return printed_moment_formula(d, k);
}

}  // namespace hyperzeta
