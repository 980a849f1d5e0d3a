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

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <zpair/report.hpp>

#include "verify.hpp"

#ifndef ZPAIR_FIXTURE_DIR
#define ZPAIR_FIXTURE_DIR "fixtures"
#endif

namespace {

using zpair::report::Json;

struct Output {
    std::string path;

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot write " + path);
        f << text;
    }
    void write(const Json& j) const { write(j.dump(2) + "\n"); }
};

zpair::SearchOptions search_options(const std::string& path) {
    zpair::SearchOptions o;
    if (path == "auto") {
        o.path = zpair::SearchOptions::Path::Auto;
    } else if (path == "exact") {
        o.path = zpair::SearchOptions::Path::Exact;
    } else if (path == "modular") {
        o.path = zpair::SearchOptions::Path::Modular;
    } else {
        throw std::invalid_argument("unknown path '" + path + "'");
    }
    return o;
}

zpair::LinearForm hyperplane_for(const zpair::Arrangement& a, const std::string& text) {
    return zpair::parse_form(text, a.ctx(), a.ell());
}

zpair::Verdict parse_verdict(const std::string& s) {
    for (auto v : {zpair::Verdict::ZieglerPair, zpair::Verdict::SameResolution, zpair::Verdict::LatticesDiffer}) {
        if (s == zpair::to_string(v)) return v;
    }
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zpair: derivation modules, exponents and Ziegler pairs of hyperplane arrangements"};
    app.require_subcommand(1);
    Output out;
    zpair::report::Options ropt;
    std::string path = "auto";
    auto common = [&](CLI::App* sub, bool json) {
        sub->add_option("--out,-o", out.path, "write to a file instead of stdout");
        if (json) {
            sub->add_flag("--timings", ropt.timings, "include wall-clock timings");
            sub->add_option("--path", path, "linear algebra path: auto, exact or modular")
                ->check(CLI::IsMember({"auto", "exact", "modular"}));
        }
    };

    std::string file, file2, mode = "both", hyper, expect = "ziegler_pair", fixtures = ZPAIR_FIXTURE_DIR;
    bool full = false;
    int count = 1, index = 0, ell = 3;
    std::optional<int> n_opt, tower;
    std::uint64_t seed = 0;

    auto* exp = app.add_subcommand("exp", "minimal generator degrees of D(A) and D0(A)");
    exp->add_option("file", file, "arrangement file")->required();
    exp->add_option("--mode", mode, "D, D0 or both")->check(CLI::IsMember({"D", "D0", "both"}));
    exp->add_flag("--resolution", full, "full resolution summary including first syzygies");
    exp->add_flag("--generators", ropt.generators, "print the generators (exact path only)");
    common(exp, true);

    auto* lat = app.add_subcommand("lattice", "intersection lattice summary");
    lat->add_option("file", file, "arrangement file")->required();
    common(lat, false);

    auto* iso = app.add_subcommand("iso", "lattice isomorphism test");
    iso->add_option("file1", file, "first arrangement")->required();
    iso->add_option("file2", file2, "second arrangement")->required();
    common(iso, false);

    auto* gen = app.add_subcommand("generic-check", "combinatorial and algebraic genericity of a hyperplane");
    gen->add_option("file", file, "arrangement file")->required();
    gen->add_option("--hyperplane", hyper, "coefficients, space separated")->required();
    common(gen, true);

    auto* cone = app.add_subcommand("cone", "cone an arrangement");
    cone->add_option("file", file, "arrangement file")->required();
    cone->add_option("-n", count, "number of conings")->check(CLI::NonNegativeNumber);
    common(cone, false);

    auto* prod = app.add_subcommand("product", "product of two arrangements");
    prod->add_option("file1", file, "first arrangement")->required();
    prod->add_option("file2", file2, "second arrangement")->required();
    common(prod, false);

    auto* add = app.add_subcommand("add", "add a hyperplane");
    add->add_option("file", file, "arrangement file")->required();
    add->add_option("--hyperplane", hyper, "coefficients, space separated")->required();
    common(add, false);

    auto* res = app.add_subcommand("restrict", "restriction to one of the hyperplanes");
    res->add_option("file", file, "arrangement file")->required();
    res->add_option("--index", index, "0-based hyperplane index")->required();
    common(res, false);

    auto* pred = app.add_subcommand("predict", "exponent predictions for coning and generic addition");
    pred->add_option("file", file, "arrangement in dimension 3")->required();
    pred->add_option("--ell", ell, "target dimension")->check(CLI::Range(3, 64));
    pred->add_option("--n", n_opt, "top degree n (default |A| - 1)");
    common(pred, true);

    auto* pair = app.add_subcommand("pair", "Ziegler pair report");
    pair->add_option("file1", file, "first arrangement")->required();
    pair->add_option("file2", file2, "second arrangement")->required();
    auto* tower_opt = pair->add_option("--tower", tower, "cone to this dimension and add a sampled generic hyperplane");
    pair->add_option("--seed", seed, "sampling seed")->needs(tower_opt);
    pair->add_option("--hyperplane", hyper, "cone to the hyperplane's dimension and add it")->excludes(tower_opt);
    pair->add_option("--expect", expect, "expected verdict")
        ->check(CLI::IsMember({"ziegler_pair", "same_resolution", "lattices_differ"}));
    pair->add_flag("--generators", ropt.generators, "print the generators (exact path only)");
    common(pair, true);

    auto* ver = app.add_subcommand("verify-paper", "run the fixture corpus against its goldens");
    ver->add_option("--fixtures", fixtures, "fixture directory");
    bool ver_timings = false;
    ver->add_flag("--timings", ver_timings, "show per-case timings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        const auto sopt = search_options(path);
        if (*exp) {
            auto a = zpair::read_arrangement(file);
            Json j = zpair::report::envelope("exp");
            j["arrangement"] = zpair::report::arrangement(a);
            if (full) {
                j["resolution"] = zpair::report::resolution(zpair::resolution(a, sopt), ropt);
            } else {
                if (mode != "D0") j["D"] = zpair::report::generator_set(zpair::min_generators(a, zpair::Mode::D, sopt), ropt);
                if (mode != "D") j["D0"] = zpair::report::generator_set(zpair::min_generators(a, zpair::Mode::D0, sopt), ropt);
            }
            out.write(j);
        } else if (*lat) {
            auto a = zpair::read_arrangement(file);
            Json j = zpair::report::envelope("lattice");
            j["arrangement"] = zpair::report::arrangement(a);
            j["lattice"] = zpair::report::lattice(zpair::build_lattice(a));
            out.write(j);
        } else if (*iso) {
            auto a = zpair::read_arrangement(file), b = zpair::read_arrangement(file2);
            auto w = zpair::lattice_isomorphism(zpair::build_lattice(a), zpair::build_lattice(b));
            Json j = zpair::report::envelope("iso");
            j["isomorphic"] = w.has_value();
            j["witness"] = w ? Json(*w) : Json(nullptr);
            out.write(j);
        } else if (*gen) {
            auto a = zpair::read_arrangement(file);
            auto h = hyperplane_for(a, hyper);
            Json j = zpair::report::envelope("generic-check");
            j["arrangement"] = zpair::report::arrangement(a);
            j["hyperplane"] = h.normalized().to_string();
            j["comb_generic"] = zpair::comb_generic(a, h);
            auto g = zpair::min_generators(a, zpair::Mode::D, sopt);
            j["alg_generic"] = g.generators.empty() && !g.degrees.empty() ? Json(nullptr) : Json(zpair::alg_generic(a, g, h));
            j["restriction_size"] = zpair::restrict_to(a, h).size();
            out.write(j);
        } else if (*cone) {
            out.write(zpair::to_text(zpair::cone(zpair::read_arrangement(file), count)));
        } else if (*prod) {
            out.write(zpair::to_text(zpair::product(zpair::read_arrangement(file), zpair::read_arrangement(file2))));
        } else if (*add) {
            auto a = zpair::read_arrangement(file);
            out.write(zpair::to_text(zpair::add_hyperplane(a, hyperplane_for(a, hyper))));
        } else if (*res) {
            auto a = zpair::read_arrangement(file);
            if (index < 0 || static_cast<std::size_t>(index) >= a.size()) throw std::out_of_range("hyperplane index out of range");
            out.write(zpair::to_text(zpair::restrict_to(a, a[index])));
        } else if (*pred) {
            auto a = zpair::read_arrangement(file);
            if (a.ell() != 3) throw std::invalid_argument("predict needs an arrangement in dimension 3");
            auto r = zpair::resolution(a, sopt);
            const int n = n_opt.value_or(static_cast<int>(a.size()) - 1);
            Json j = zpair::report::envelope("predict");
            j["arrangement"] = zpair::report::arrangement(a);
            j["exp"] = r.f0_degrees;
            j["exp0"] = r.exp0;
            Json preds = Json::array();
            if (ell == 3) preds.push_back(zpair::report::prediction(zpair::predict_add_generic(r.f0_degrees, a.size())));
            preds.push_back(zpair::report::prediction(zpair::predict_highdim(r.exp0, ell, n, zpair::HighdimVariant::Statement)));
            preds.push_back(zpair::report::prediction(zpair::predict_highdim(r.exp0, ell, n, zpair::HighdimVariant::Proof)));
            j["predictions"] = preds;
            out.write(j);
        } else if (*pair) {
            auto a = zpair::read_arrangement(file), b = zpair::read_arrangement(file2);
            zpair::PairReport r;
            if (tower) {
                r = zpair::build_pair_tower(a, b, *tower, seed, sopt);
            } else if (!hyper.empty()) {
                r = zpair::build_pair_tower(a, b, zpair::parse_form(hyper, a.ctx(), 0), sopt);
            } else {
                r = zpair::check_pair(a, b, sopt);
            }
            Json j = zpair::report::envelope("pair");
            j.update(zpair::report::pair(r, ropt));
            j["expected_verdict"] = expect;
            out.write(j);
            return r.verdict == parse_verdict(expect) ? 0 : 2;
        } else if (*ver) {
            return zpair::verify::run_all(fixtures, ver_timings, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
