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

#include <initializer_list>
#include <map>
#include <string>

#include "hyperzeta/ak_prediction.hpp"
#include "hyperzeta/errors.hpp"

// Large-q expansions of Q_k(q;d) as polynomials in g with exact rational
// coefficients, keyed by the power of q^(-1/2). Rows are stored verbatim;
// coefficient lists are ascending in g.

namespace hyperzeta {

namespace {

std::vector<mpq_class> gp(std::initializer_list<const char*> cs) {
    std::vector<mpq_class> v;
    v.reserve(cs.size());
    for (const char* c : cs) {
        mpq_class x(c);
        x.canonicalize();
        v.push_back(x);
    }
    return v;
}

QkSeries make_q1_odd() {
    QkSeries s;
    s.k = 1;
    s.parity = Parity::odd_degree;
    s.terms = {
        {0, gp({"1", "1"})},        {2, gp({"1", "-1"})},      {4, gp({"-1", "1"})},
        {6, gp({"4", "-2"})},       {8, gp({"-10", "4"})},     {10, gp({"23", "-7"})},
        {12, gp({"-43", "11"})},    {14, gp({"82", "-18"})},   {16, gp({"-164", "32"})},
        {18, gp({"317", "-55"})},   {20, gp({"-569", "89"})},  {22, gp({"1029", "-147"})},
        {24, gp({"-1905", "251"})}, {26, gp({"3451", "-421"})},
        {28, gp({"-6099", "693"})}, {30, gp({"10795", "-1149"})},
        {32, gp({"-19163", "1919"})}, {34, gp({"33748", "-3190"})},
        {36, gp({"-58885", "5271"})}, {38, gp({"102452", "-8712"})},
        {40, gp({"-178220", "14436"})},
    };
    return s;
}

QkSeries make_q1_even() {
    QkSeries s;
    s.k = 1;
    s.parity = Parity::even_degree;
    s.terms = {
        {0, gp({"1", "1"})},        {1, gp({"-1"})},          {2, gp({"0", "-1"})},
        {4, gp({"-1", "1"})},       {5, gp({"-1"})},          {6, gp({"3", "-2"})},
        {7, gp({"1"})},             {8, gp({"-9", "4"})},     {9, gp({"-3"})},
        {10, gp({"20", "-7"})},     {11, gp({"4"})},          {12, gp({"-39", "11"})},
        {13, gp({"-7"})},           {14, gp({"75", "-18"})},  {15, gp({"11"})},
        {16, gp({"-153", "32"})},   {17, gp({"-21"})},        {18, gp({"296", "-55"})},
        {19, gp({"34"})},           {20, gp({"-535", "89"})}, {21, gp({"-55"})},
        {22, gp({"974", "-147"})},  {23, gp({"92"})},         {24, gp({"-1813", "251"})},
        {25, gp({"-159"})},         {26, gp({"3292", "-421"})},
        {27, gp({"262"})},          {28, gp({"-5837", "693"})},
        {29, gp({"-431"})},         {30, gp({"10364", "-1149"})},
        {31, gp({"718"})},          {32, gp({"-18445", "1919"})},
        {33, gp({"-1201"})},        {34, gp({"32547", "-3190"})},
        {35, gp({"1989"})},         {36, gp({"-56896", "5271"})},
        {37, gp({"-3282"})},        {38, gp({"99170", "-8712"})},
        {39, gp({"5430"})},         {40, gp({"-172790", "14436"})},
    };
    return s;
}

QkSeries make_q2_odd() {
    QkSeries s;
    s.k = 2;
    s.parity = Parity::odd_degree;
    s.terms = {
        {0, gp({"1", "13/6", "3/2", "1/3"})},
        {2, gp({"1", "4/3", "-1", "-4/3"})},
        {4, gp({"1", "1/6", "-13/2", "13/3"})},
        {6, gp({"11", "-149/3", "54", "-46/3"})},
        {8, gp({"-246", "2971/6", "-597/2", "163/3"})},
        {10, gp({"2364", "-9661/3", "1376", "-554/3"})},
        {12, gp({"-16405", "51295/3", "-5701", "1826/3"})},
        {14, gp({"95135", "-80929", "22265", "-1982"})},
    };
    return s;
}

QkSeries make_q2_even() {
    QkSeries s;
    s.k = 2;
    s.parity = Parity::even_degree;
    s.terms = {
        {0, gp({"1", "13/6", "3/2", "1/3"})},
        {1, gp({"-2", "-3", "-1"})},
        {2, gp({"1", "-2/3", "-2", "-4/3"})},
        {3, gp({"0", "1", "3"})},
        {4, gp({"0", "-11/6", "-7/2", "13/3"})},
        {5, gp({"0", "8", "-10"})},
        {6, gp({"10", "-95/3", "44", "-46/3"})},
        {7, gp({"40", "-80", "36"})},
        {8, gp({"-176", "2275/6", "-525/2", "163/3"})},
        {9, gp({"-368", "445", "-127"})},
        {10, gp({"1809", "-7945/3", "1249", "-554/3"})},
        {11, gp({"2386", "-2053", "427"})},
        {12, gp({"-13107", "43855/3", "-5274", "1826/3"})},
        {13, gp({"-12584", "8495", "-1399"})},
        {14, gp({"78675", "-71035", "20866", "-1982"})},
    };
    return s;
}

QkSeries make_q3_odd() {
    QkSeries s;
    s.k = 3;
    s.parity = Parity::odd_degree;
    s.terms = {
        {0, gp({"1", "17/5", "841/180", "10/3", "47/36", "4/15", "1/45"})},
        {2, gp({"1", "44/15", "34/15", "-4/3", "-3", "-8/5", "-4/15"})},
        {4, gp({"2", "-8/5", "-79/180", "-13/3", "-245/36", "44/15", "101/45"})},
        {6, gp({"-20", "-93/10", "4309/45", "-655/6", "110/9", "712/15", "-764/45"})},
        {8, gp({"-244", "10303/6", "-69446/45", "-1615/2", "15317/9", "-2408/3", "5416/45"})},
        {10,
         gp({"11168", "-295321/30", "-6151429/180", "112353/2", "-1175831/36", "126548/15",
             "-36469/45"})},
        {12,
         gp({"19372", "-10542424/15", "62711692/45", "-1076052", "3631316/9", "-1105616/15",
             "236128/45"})},
        {14,
         gp({"-6415066", "678778057/30", "-1575047267/60", "28666535/2", "-48772345/12",
             "8705044/15", "-494627/15"})},
    };
    return s;
}

QkSeries make_q3_even() {
    QkSeries s;
    s.k = 3;
    s.parity = Parity::even_degree;
    s.terms = {
        {0, gp({"1", "17/5", "841/180", "10/3", "47/36", "4/15", "1/45"})},
        {1, gp({"-3", "-87/10", "-29/3", "-31/6", "-4/3", "-2/15"})},
        {2, gp({"3", "27/5", "19/15", "-11/3", "-4", "-26/15", "-4/15"})},
        {3, gp({"-1", "23/15", "43/6", "23/2", "22/3", "22/15"})},
        {4, gp({"1", "-127/30", "-2089/180", "-26/3", "-113/36", "22/5", "101/45"})},
        {5, gp({"3", "23/3", "8/3", "49/3", "-44/3", "-12"})},
        {6, gp({"-15", "-133/10", "2899/45", "-331/6", "248/9", "532/15", "-764/45"})},
        {7, gp({"17", "-2037/10", "529/2", "-89/3", "-192", "1348/15"})},
        {8, gp({"-160", "17272/15", "-94327/90", "-3073/6", "11567/9", "-3564/5", "5416/45"})},
        {9, gp({"-1694", "41309/15", "2114", "-16985/3", "3372", "-9484/15"})},
        {10,
         gp({"7225", "-192403/30", "-4606789/180", "264991/6", "-997535/36", "117064/15",
             "-36469/45"})},
        {11, gp({"10251", "836686/15", "-837925/6", "652081/6", "-106948/3", "63454/15"})},
        {12,
         gp({"24566", "-16340081/30", "99784049/90", "-2695787/3", "3215291/9", "-1042162/15",
             "236128/45"})},
        {13, gp({"559196", "-22836967/10", "2664154", "-8063951/6", "311738", "-408802/15"})},
        {14,
         gp({"-5043319", "180627927/10", "-434205189/20", "24762961/2", "-44213885/12",
             "2765414/5", "-494627/15"})},
    };
    return s;
}

}  // namespace

const QkSeries& qk_series_data(int k, Parity parity) {
    static const QkSeries q1o = make_q1_odd();
    static const QkSeries q1e = make_q1_even();
    static const QkSeries q2o = make_q2_odd();
    static const QkSeries q2e = make_q2_even();
    static const QkSeries q3o = make_q3_odd();
    static const QkSeries q3e = make_q3_even();
    if (k == 1) return parity == Parity::odd_degree ? q1o : q1e;
    if (k == 2) return parity == Parity::odd_degree ? q2o : q2e;
    if (k == 3) return parity == Parity::odd_degree ? q3o : q3e;
    throw not_tabulated_error("qk_series_data: stored expansions cover k = 1..3");
}

}  // namespace hyperzeta
