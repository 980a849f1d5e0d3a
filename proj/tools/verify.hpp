/*
   Copyright 2026 The zpair Authors

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

// Golden-file driver for `zpair verify-paper`.

#ifndef ZPAIR_TOOLS_VERIFY_HPP
#define ZPAIR_TOOLS_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <zpair/report.hpp>

namespace zpair::verify {

using Json = report::Json;

struct Outcome {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

class Runner {
   public:
    explicit Runner(std::string dir) : dir_(std::move(dir)) {}

    Arrangement load(const std::string& file) const { return read_arrangement(dir_ + "/" + file); }

    Json run(const Json& c) const {
        const std::string check = c.at("check");
        if (check == "resolution") return resolution_case(c);
        if (check == "iso") return Json{{"isomorphic", isomorphic(build_lattice(load(c.at("files")[0])),
                                                                  build_lattice(load(c.at("files")[1])))}};
        if (check == "generic") return generic_case(c);
        if (check == "tower") return tower_case(c);
        if (check == "criterion") return criterion_case(c);
        if (check == "basis_generic") return basis_case(c);
        if (check == "predict_add") {
            return Json{{"degrees", predict_add_generic(c.at("exp").get<std::vector<int>>(), c.at("size")).degrees}};
        }
        if (check == "predict_highdim") {
            auto e = c.at("exp0").get<std::vector<int>>();
            int ell = c.at("ell"), n = c.at("n");
            return Json{{"statement", predict_highdim(e, ell, n, HighdimVariant::Statement).degrees},
                        {"proof", predict_highdim(e, ell, n, HighdimVariant::Proof).degrees}};
        }
        if (check == "restrict_tower") {
            auto h = parse_form(c.at("hyperplane"), FieldContext{}, 0);
            return Json{{"hyperplane", restrict_tower(h, c.at("k")).to_string()}};
        }
        throw std::invalid_argument("unknown check '" + check + "'");
    }

   private:
    Arrangement with_hyperplane(const Json& c, const std::string& file) const {
        Arrangement a = load(file);
        if (c.contains("cone")) a = cone(a, c.at("cone").get<int>());
        if (c.contains("hyperplane")) a = add_hyperplane(a, parse_form(c.at("hyperplane"), a.ctx(), a.ell()));
        return a;
    }

    Json resolution_case(const Json& c) const {
        Arrangement a = with_hyperplane(c, c.at("file"));
        if (c.contains("restrict_to")) a = restrict_to(a, parse_form(c.at("restrict_to"), a.ctx(), a.ell()));
        auto r = zpair::resolution(a);
        return Json{{"exp", r.f0_degrees},
                    {"exp0", r.exp0},
                    {"f1", r.f1_degrees ? Json(*r.f1_degrees) : Json(nullptr)},
                    {"certified", r.certified}};
    }

    Json generic_case(const Json& c) const {
        Arrangement a = load(c.at("file"));
        LinearForm h = parse_form(c.at("hyperplane"), a.ctx(), a.ell());
        auto g = min_generators(a, Mode::D);
        return Json{{"comb_generic", comb_generic(a, h)}, {"alg_generic", alg_generic(a, g, h)}};
    }

    Json tower_case(const Json& c) const {
        Arrangement a1 = load(c.at("files")[0]), a2 = load(c.at("files")[1]);
        PairReport r = c.contains("hyperplane")
                           ? build_pair_tower(a1, a2, parse_form(c.at("hyperplane"), FieldContext{}, 0))
                           : build_pair_tower(a1, a2, c.at("ell").get<int>(), c.at("seed").get<std::uint64_t>());
        return Json{{"exp0", {r.resolutions[0].exp0, r.resolutions[1].exp0}},
                    {"comb_generic", {r.tower->comb_generic[0], r.tower->comb_generic[1]}},
                    {"verdict", to_string(r.verdict)}};
    }

    Json criterion_case(const Json& c) const {
        Arrangement a1 = load(c.at("files")[0]), a2 = load(c.at("files")[1]);
        LinearForm h = parse_form(c.at("hyperplane"), a1.ctx(), 3);
        auto r1 = zpair::resolution(a1), r2 = zpair::resolution(a2);
        int top = 0;
        for (const auto* r : {&r1, &r2}) {
            for (int d : r->exp0) top = std::max(top, d);
            for (int d : *r->f1_degrees) top = std::max(top, d);
        }
        std::size_t s1 = restrict_to(a1, h).size(), s2 = restrict_to(a2, h).size();
        return Json{{"max_degree", top},
                    {"restriction_sizes", {s1, s2}},
                    {"criterion", genzp_criterion(r1, r2, s1, s2)}};
    }

    static Derivation parse_derivation(const Json& comps, const FieldContext& ctx, int ell) {
        std::vector<HomogPoly> ps;
        int degree = -1;
        for (const auto& comp : comps) {
            for (const auto& term : comp) {
                degree = 0;
                for (const auto& e : term[1]) degree += e.get<int>();
            }
        }
        if (degree < 0) throw std::invalid_argument("zero derivation in basis");
        for (const auto& comp : comps) {
            HomogPoly p(ell, degree);
            for (const auto& term : comp) p.add_term(term[1].get<Monomial>(), parse_scalar(term[0].get<std::string>(), ctx));
            ps.push_back(std::move(p));
        }
        return Derivation(std::move(ps));
    }

    Json basis_case(const Json& c) const {
        Arrangement a = load(c.at("file"));
        LinearForm h = parse_form(c.at("hyperplane"), a.ctx(), a.ell());
        std::vector<Derivation> basis;
        for (const auto& d : c.at("basis")) basis.push_back(parse_derivation(d, a.ctx(), a.ell()));
        bool members = true;
        for (const auto& t : basis) members = members && in_module(a, t);
        return Json{{"in_module", members}, {"alg_generic", alg_generic(a, make_generator_set(basis), h)}};
    }

    std::string dir_;
};

/// Every key of `expect` must match the computed value.
inline bool matches(const Json& expect, const Json& got, std::string& detail) {
    bool ok = true;
    for (const auto& [k, v] : expect.items()) {
        if (!got.contains(k) || got.at(k) != v) {
            ok = false;
            detail += k + ": expected " + v.dump() + ", got " + (got.contains(k) ? got.at(k).dump() : "nothing") + "; ";
        }
    }
    return ok;
}

inline int run_all(const std::string& dir, bool timings, std::ostream& out) {
    std::ifstream f(dir + "/golden.json");
    if (!f) throw std::runtime_error("cannot open " + dir + "/golden.json");
    Json golden = Json::parse(f);
    Runner runner(dir);
    int failed = 0;
    std::size_t width = 0;
    for (const auto& c : golden.at("cases")) width = std::max(width, c.at("name").get<std::string>().size());
    for (const auto& c : golden.at("cases")) {
        Outcome o;
        o.name = c.at("name");
        auto t0 = std::chrono::steady_clock::now();
        try {
            Json got = runner.run(c);
            o.pass = matches(c.at("expect"), got, o.detail);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("error: ") + e.what();
        }
        o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) ++failed;
        out << (o.pass ? "PASS  " : "FAIL  ") << o.name << std::string(width - o.name.size() + 2, ' ');
        if (timings) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%8.2fs  ", o.seconds);
            out << buf;
        }
        if (c.contains("note")) out << c.at("note").get<std::string>();
        if (!o.detail.empty()) out << " " << o.detail;
        out << "\n";
    }
    out << (golden.at("cases").size() - failed) << "/" << golden.at("cases").size() << " passed\n";
    return failed == 0 ? 0 : 2;
}

}  // namespace zpair::verify

#endif  // ZPAIR_TOOLS_VERIFY_HPP
