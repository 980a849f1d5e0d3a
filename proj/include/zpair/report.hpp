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

// JSON views of the library's results. Needs nlohmann/json on the include path.

#ifndef ZPAIR_REPORT_HPP
#define ZPAIR_REPORT_HPP

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "zpair.hpp"

namespace zpair::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

struct Options {
    bool timings = false;
    bool generators = false;
};

inline Json arrangement(const Arrangement& a) {
    Json hs = Json::array();
    for (const auto& f : a.forms()) hs.push_back(f.to_string());
    return Json{{"field", a.ctx().to_string()},
                {"dim", a.ell()},
                {"size", a.size()},
                {"rank", a.rank()},
                {"hyperplanes", hs}};
}

inline Json dims(const std::map<int, std::size_t>& d) {
    Json out = Json::object();
    for (const auto& [k, v] : d) out[std::to_string(k)] = v;
    return out;
}

inline Json generator_set(const GeneratorSet& g, const Options& opt) {
    Json out{{"mode", to_string(g.mode)},
             {"degrees", g.degrees},
             {"certified", to_string(g.certification)},
             {"certification_ok", g.certified},
             {"regularity_bound", g.regularity_bound},
             {"searched_to", g.searched_to},
             {"dims", dims(g.dims)}};
    if (!g.primes.empty()) out["primes"] = g.primes;
    if (g.spot_check) {
        out["spot_check"] = Json{{"degree", g.spot_check->degree},
                                 {"exact_dim", g.spot_check->exact_dim},
                                 {"modular_dim", g.spot_check->modular_dim}};
    }
    if (opt.generators && !g.generators.empty()) {
        Json gs = Json::array();
        for (std::size_t i = 0; i < g.generators.size(); ++i) {
            gs.push_back(Json{{"degree", g.degrees[i]},
                              {"euler", g.euler_index && *g.euler_index == i},
                              {"theta", g.generators[i].to_string()}});
        }
        out["generators"] = gs;
    }
    out["warnings"] = g.warnings;
    return out;
}

inline Json resolution(const ResolutionSummary& r, const Options& opt) {
    Json out{{"exp", r.f0_degrees},
             {"exp0", r.exp0},
             {"f1", r.f1_degrees ? Json(*r.f1_degrees) : Json(nullptr)},
             {"regularity_bound", r.regularity_bound},
             {"certified", to_string(r.certification)},
             {"certification_ok", r.certified},
             {"hilbert_identity", r.hilbert_identity ? Json(*r.hilbert_identity) : Json(nullptr)},
             {"direct_sum", r.direct_sum_holds}};
    if (r.certification == Certification::Modular) {
        out["primes"] = r.generators.primes;
        if (r.d0_generators.spot_check) {
            const auto& s = *r.d0_generators.spot_check;
            out["spot_check"] = Json{{"degree", s.degree}, {"exact_dim", s.exact_dim}, {"modular_dim", s.modular_dim}};
        }
    }
    if (opt.generators) {
        out["D"] = generator_set(r.generators, opt);
        out["D0"] = generator_set(r.d0_generators, opt);
    }
    out["warnings"] = r.warnings;
    if (opt.timings) out["timings_ms"] = r.timings_ms;
    return out;
}

inline Json prediction(const Prediction& p) {
    return Json{{"source", to_string(p.source)}, {"ell", p.ell}, {"n", p.n}, {"base", p.base}, {"degrees", p.degrees}};
}

inline Json lattice(const IntersectionLattice& l) {
    Json ranks = Json::array();
    const auto profile = l.multiplicity_profile();
    for (std::size_t r = 0; r < profile.size(); ++r) {
        Json mult = Json::object();
        for (const auto& [m, c] : profile[r]) mult[std::to_string(m)] = c;
        ranks.push_back(Json{{"rank", r}, {"flats", l.flats_of_rank(static_cast<int>(r)).size()}, {"multiplicities", mult}});
    }
    return Json{{"flat_count", l.flat_count()}, {"ranks", ranks}};
}

inline Json pair(const PairReport& r, const Options& opt) {
    Json sides = Json::array();
    for (int i = 0; i < 2; ++i) {
        sides.push_back(Json{{"arrangement", arrangement(r.arrangements[i])},
                             {"resolution", resolution(r.resolutions[i], opt)}});
    }
    Json out{{"ell", r.ell},
             {"lattice_isomorphic", r.lattice_isomorphic},
             {"witness", r.witness ? Json(*r.witness) : Json(nullptr)},
             {"verdict", to_string(r.verdict)},
             {"comparison", r.exp_level ? "exp-level" : "resolution"},
             {"certified", r.certified},
             {"sides", sides}};
    if (r.tower) {
        const auto& t = *r.tower;
        Json bases = Json::array();
        for (int i = 0; i < 2; ++i) {
            Json preds = Json::array();
            for (const auto& p : t.predictions[i]) preds.push_back(prediction(p));
            bases.push_back(Json{{"exp", t.base[i].f0_degrees},
                                 {"exp0", t.base[i].exp0},
                                 {"f1", t.base[i].f1_degrees ? Json(*t.base[i].f1_degrees) : Json(nullptr)},
                                 {"restriction_size", t.restriction_sizes[i]},
                                 {"comb_generic", t.comb_generic[i]},
                                 {"alg_generic", t.alg_generic[i] ? Json(*t.alg_generic[i]) : Json(nullptr)},
                                 {"predictions", preds}});
        }
        out["tower"] = Json{{"ell", t.ell},
                            {"hyperplane", t.hyperplane.to_string()},
                            {"seed", t.seed ? Json(*t.seed) : Json(nullptr)},
                            {"generic_means", "combinatorially generic (general position relative to the lattice)"},
                            {"criterion", t.criterion ? Json(*t.criterion) : Json(nullptr)},
                            {"bases", bases}};
    }
    return out;
}

inline Json envelope(const std::string& command) { return Json{{"schema", kSchema}, {"command", command}}; }

}  // namespace zpair::report

#endif  // ZPAIR_REPORT_HPP
