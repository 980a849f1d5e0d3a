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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero when a
// criterion fails outside kKnownUnattainable, or one listed there passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "support.hpp"

using namespace zpair;
using zpair::testing::fixture;
using zpair::testing::form;

namespace {

// Pinned limits (seconds of wall-clock time).
constexpr double kClassicSideLimit = 60.0;
constexpr double kTowerLimit = 30.0 * 60.0;

// A certified-generic replacement for the stated hyperplane in dimension four.
constexpr const char* kGenericH4 = "3 -7 11 19";
constexpr std::uint64_t kTowerSeed5 = 1;

using Degrees = std::vector<int>;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        pass = pass && ok;
        notes.push_back(std::string(ok ? "ok: " : "MISMATCH: ") + what);
    }
    void note(const std::string& what) { notes.push_back("info: " + what); }
};

std::string str(const Degrees& d) {
    std::map<int, int> count;
    for (int x : d) ++count[x];
    std::string out = "(";
    for (const auto& [x, c] : count) {
        if (out.size() > 1) out += ",";
        out += std::to_string(x);
        if (c > 1) out += "^" + std::to_string(c);
    }
    return out + ")";
}

std::string compare(const std::string& label, const Degrees& got, const Degrees& want) {
    return label + " = " + str(got) + (got == want ? "" : ", expected " + str(want));
}

Degrees repeat(Degrees base, int value, int times) {
    base.insert(base.end(), static_cast<std::size_t>(times), value);
    std::sort(base.begin(), base.end());
    return base;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome classic_exp0() {
    Outcome o;
    for (auto [name, want] : {std::pair<std::string, Degrees>{"ziegler_a1.arr", {5, 6, 6, 6}},
                              std::pair<std::string, Degrees>{"ziegler_a2.arr", {6, 6, 6, 6, 6, 6}}}) {
        auto t0 = std::chrono::steady_clock::now();
        auto g = min_generators(fixture(name), Mode::D0);
        double s = seconds_since(t0);
        o.expect(g.degrees == want, compare("exp0(" + name + ")", g.degrees, want));
        std::ostringstream t;
        t << name << " took " << s << " s (limit " << kClassicSideLimit << " s)";
        o.expect(s <= kClassicSideLimit, t.str());
    }
    return o;
}

Outcome classic_resolutions() {
    Outcome o;
    auto r1 = resolution(fixture("ziegler_a1.arr"));
    auto r2 = resolution(fixture("ziegler_a2.arr"));
    o.expect(r1.f0_degrees == Degrees{1, 5, 6, 6, 6}, compare("f0(A1)", r1.f0_degrees, {1, 5, 6, 6, 6}));
    o.expect(r1.f1_degrees == Degrees{7, 8}, compare("f1(A1)", r1.f1_degrees.value_or(Degrees{}), {7, 8}));
    o.expect(r2.f0_degrees == repeat({1}, 6, 6), compare("f0(A2)", r2.f0_degrees, repeat({1}, 6, 6)));
    o.expect(r2.f1_degrees == repeat({}, 7, 4), compare("f1(A2)", r2.f1_degrees.value_or(Degrees{}), repeat({}, 7, 4)));
    return o;
}

Outcome classic_with_line() {
    Outcome o;
    const LinearForm h = form("13 171 232");
    auto r = build_pair_tower(fixture("ziegler_a1.arr"), fixture("ziegler_a2.arr"), h);
    o.expect(r.resolutions[0].exp0 == Degrees{6, 7, 7, 7, 8}, compare("exp0(B1)", r.resolutions[0].exp0, {6, 7, 7, 7, 8}));
    o.expect(r.resolutions[1].exp0 == repeat({8}, 7, 6), compare("exp0(B2)", r.resolutions[1].exp0, repeat({8}, 7, 6)));
    for (int i = 0; i < 2; ++i) {
        const std::string side = "A" + std::to_string(i + 1);
        o.expect(r.tower->comb_generic[i], "combinatorially generic for " + side);
        o.expect(r.tower->alg_generic[i].value_or(false), "algebraically generic for " + side + " w.r.t. computed generators");
    }
    return o;
}

Outcome quadratic_pair() {
    Outcome o;
    Arrangement a1 = fixture("sqrt5_a1.arr"), a2 = fixture("sqrt5_a2.arr");
    o.expect(a2.ctx() == FieldContext::quadratic(5), "arrangement field is " + a2.ctx().to_string());
    auto r = build_pair_tower(a1, a2, form("1 17 131"));
    const auto& b1 = r.tower->base[0];
    const auto& b2 = r.tower->base[1];
    o.expect(b1.exp0 == Degrees{5, 6, 6}, compare("exp0(A1)", b1.exp0, {5, 6, 6}));
    o.expect(b2.exp0 == Degrees{5, 6, 6, 7}, compare("exp0(A2)", b2.exp0, {5, 6, 6, 7}));
    o.expect(r.resolutions[0].exp0 == Degrees{6, 7, 7, 9}, compare("exp0(B1)", r.resolutions[0].exp0, {6, 7, 7, 9}));
    o.expect(r.resolutions[1].exp0 == Degrees{6, 7, 7, 8, 9},
             compare("exp0(B2)", r.resolutions[1].exp0, {6, 7, 7, 8, 9}));
    const std::array<const ResolutionSummary*, 4> all{&b1, &b2, &r.resolutions[0], &r.resolutions[1]};
    bool exact = true;
    for (const auto* s : all) exact = exact && s->certification == Certification::Exact;
    o.expect(exact, "every resolution ran on the exact path");
    return o;
}

Outcome dimension_four_example() {
    Outcome o;
    Arrangement a1 = fixture("ziegler_a1.arr"), a2 = fixture("ziegler_a2.arr");
    const Degrees want1 = repeat(repeat({2, 8}, 6, 2), 7, 6);
    const Degrees want2 = repeat({2, 8}, 7, 12);
    auto t0 = std::chrono::steady_clock::now();
    auto r = build_pair_tower(a1, a2, form("1 13 27 42"));
    double s = seconds_since(t0);
    o.expect(r.resolutions[0].exp0 == want1, compare("exp0(B1)", r.resolutions[0].exp0, want1));
    o.expect(r.resolutions[1].exp0 == want2, compare("exp0(B2)", r.resolutions[1].exp0, want2));
    std::ostringstream t;
    t << "tower took " << s << " s (limit " << kTowerLimit << " s)";
    o.expect(s <= kTowerLimit, t.str());
    for (int i = 0; i < 2; ++i) {
        const auto& g = r.resolutions[i].d0_generators;
        std::string how = to_string(g.certification);
        if (g.spot_check) how += ", exact spot check at degree " + std::to_string(g.spot_check->degree);
        o.note("B" + std::to_string(i + 1) + " computed on the " + how + " path");
    }
    const auto& t4 = *r.tower;
    o.note("comb_generic(cone A1, H) = " + std::string(t4.comb_generic[0] ? "true" : "false") +
           ", comb_generic(cone A2, H) = " + (t4.comb_generic[1] ? "true" : "false"));
    o.note("|A1^{H_3}| = " + std::to_string(t4.restriction_sizes[0]) + ", |A2^{H_3}| = " +
           std::to_string(t4.restriction_sizes[1]));
    const LinearForm h3 = restrict_tower(t4.hyperplane, 3);
    for (const auto& f : build_lattice(a1).flats_of_rank(2)) {
        auto m = mask_members(f.members);
        const auto& p = a1[m[0]];
        const auto& q = a1[m[1]];
        // The point of intersection is the cross product of two of its lines.
        const Scalar pt[3] = {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
        if ((h3[0] * pt[0] + h3[1] * pt[1] + h3[2] * pt[2]).is_zero()) {
            o.note(h3.to_string() + " passes through the point (" + to_string(pt[0]) + ":" + to_string(pt[1]) + ":" +
                   to_string(pt[2]) + ") of A1 of multiplicity " + std::to_string(f.multiplicity()));
        }
    }
    o.note("verdict for the stated H: " + std::string(to_string(r.verdict)));
    auto generic = resolution(add_hyperplane(cone(a1), form(kGenericH4)));
    o.note(compare(std::string("with generic H ") + kGenericH4 + ": exp0(B1)", generic.exp0, want1));
    return o;
}

Outcome restriction_criterion() {
    Outcome o;
    Arrangement a1 = fixture("ziegler_a1.arr"), a2 = fixture("ziegler_a2.arr");
    const LinearForm h = form("13 171 232");
    auto r = build_pair_tower(a1, a2, h);
    const auto& t = *r.tower;
    int top = 0;
    for (const auto& b : t.base) {
        for (int d : b.f0_degrees) top = std::max(top, d);
        for (int d : *b.f1_degrees) top = std::max(top, d);
    }
    o.expect(top == 8, "max generator/syzygy degree = " + std::to_string(top));
    o.expect(t.restriction_sizes[0] == 9 && t.restriction_sizes[1] == 9,
             "|A_i^H| = " + std::to_string(t.restriction_sizes[0]) + ", " + std::to_string(t.restriction_sizes[1]));
    o.expect(t.criterion.value_or(false), "criterion holds");
    // Criterion-free recomputation: both extensions computed directly.
    bool shifted = true;
    for (int i = 0; i < 2; ++i) shifted = shifted && r.resolutions[i].f0_degrees == t.predictions[i][0].degrees;
    o.expect(shifted, "recomputed exp(B_i) equal the generic-addition shift");
    o.expect(r.verdict == Verdict::ZieglerPair, std::string("recomputed verdict ") + to_string(r.verdict));
    return o;
}

Outcome property_suite() {
    Outcome o;
    const std::vector<std::string> planar{"ziegler_a1.arr", "ziegler_a2.arr", "sqrt5_a1.arr", "sqrt5_a2.arr",
                                          "deleted_a3.arr", "braid_a3.arr",   "generic4.arr", "boolean3.arr"};
    bool hilbert = true, bound = true, coned = true, members = true;
    for (const auto& name : planar) {
        Arrangement a = fixture(name);
        auto r = resolution(a);
        hilbert = hilbert && r.hilbert_identity.value_or(false);
        for (int d : r.f0_degrees) bound = bound && d <= r.regularity_bound;
        for (const auto& t : r.generators.generators) members = members && in_module(a, t);
        for (const auto& t : r.d0_generators.generators) members = members && in_d0(a, t);
        coned = coned && min_generators(cone(a), Mode::D).degrees == repeat(r.f0_degrees, 1, 1);
    }
    o.expect(hilbert, "Hilbert-series identity on all dimension-3 fixtures");
    o.expect(coned, "exp(cone A) = {1} + exp(A) on all dimension-3 fixtures");

    std::mt19937_64 rng(2026);
    int products = 0;
    bool product_ok = true;
    for (int t = 0; t < 5; ++t, ++products) {
        Arrangement a = zpair::testing::random_lines(rng, 2 + t % 3, 2);
        Arrangement b = zpair::testing::random_lines(rng, 2 + (t + 1) % 3, 2);
        Degrees ea = min_generators(a, Mode::D).degrees, eb = min_generators(b, Mode::D).degrees;
        ea.insert(ea.end(), eb.begin(), eb.end());
        std::sort(ea.begin(), ea.end());
        product_ok = product_ok && min_generators(product(a, b), Mode::D).degrees == ea;
    }
    o.expect(product_ok, "exp(A1 x A2) = exp(A1) + exp(A2) on " + std::to_string(products) + " random products");

    int shifts = 0;
    bool shift_ok = true;
    while (shifts < 5) {
        Arrangement a = zpair::testing::random_lines(rng, 5 + shifts % 4);
        if (!a.is_essential()) continue;
        LinearForm h = generic_sample(a, static_cast<std::uint64_t>(shifts));
        auto base = resolution(a);
        auto ext = resolution(add_hyperplane(a, h));
        shift_ok = shift_ok && ext.f0_degrees == predict_add_generic(base.f0_degrees, a.size()).degrees;
        for (int d : base.f0_degrees) bound = bound && d <= base.regularity_bound;
        for (int d : ext.f0_degrees) bound = bound && d <= ext.regularity_bound;
        for (const auto& t : ext.generators.generators) members = members && in_module(add_hyperplane(a, h), t);
        ++shifts;
    }
    o.expect(shift_ok, "generic-addition shift law on " + std::to_string(shifts) + " random 5-8 line arrangements");
    o.expect(bound, "no generator above the regularity bound");
    o.expect(members, "every emitted generator is logarithmic (D0 generators kill Q)");
    return o;
}

Outcome structured_generators() {
    Outcome o;
    Arrangement a1 = fixture("ziegler_a1.arr");
    const LinearForm h = form(kGenericH4);
    auto s = build_structured_generators(a1, min_generators(a1, Mode::D), 4, h);
    bool inside = true;
    for (const auto& m : s.members) inside = inside && in_module(s.tower, m.theta);
    o.expect(inside, std::to_string(s.members.size()) + " generators of G_4 lie in D(B_4)");
    DerivationModule<ExactField> mod(s.tower, Mode::D);
    bool spans = true;
    std::string dims;
    for (int d = 0; d <= 8; ++d) {
        const std::size_t want = mod.dim(d);
        const std::size_t got = generated_dimension(s.tower, s.derivations(), d);
        spans = spans && got == want;
        dims += (d ? "," : "") + std::to_string(got) + "/" + std::to_string(want);
    }
    o.expect(spans, "span/dim D(B_4)_d for d = 0..8: " + dims);
    o.note(std::string("tower hyperplane ") + kGenericH4 + " (certified generic for cone A1)");
    return o;
}

Outcome basis_dependence() {
    Outcome o;
    Arrangement a = fixture("deleted_a3.arr");
    HomogPoly x = zpair::testing::var(0, 3), y = zpair::testing::var(1, 3), z = zpair::testing::var(2, 3);
    Derivation t2 = Derivation::coordinate(1, y * (x - y));
    Derivation t3 = Derivation::coordinate(2, z * (x - z));
    const LinearForm h = form("0 1 -1");
    o.expect(alg_generic(a, make_generator_set({Derivation::euler(3), t2, t3}), h), "basis {E, t2, t3}: generic");
    o.expect(!alg_generic(a, make_generator_set({Derivation::euler(3), t2, t2 + t3}), h), "basis {E, t2, t2+t3}: not generic");
    return o;
}

Outcome dimension_five_probe() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    auto r = build_pair_tower(fixture("ziegler_a1.arr"), fixture("ziegler_a2.arr"), 5, kTowerSeed5);
    const auto& t = *r.tower;
    o.note("seed " + std::to_string(kTowerSeed5) + ", H = " + t.hyperplane.to_string());
    for (int i = 0; i < 2; ++i) {
        const auto& got = r.resolutions[i].exp0;
        o.expect(!got.empty(), "exp0(B" + std::to_string(i + 1) + ") = " + str(got));
        for (const auto& p : t.predictions[i]) {
            o.note(std::string(to_string(p.source)) + " predicts " + str(p.degrees) + (p.degrees == got ? ": match" : ": no match"));
        }
    }
    o.expect(r.certified, std::string("certified (") + to_string(r.resolutions[0].certification) + " path)");
    std::ostringstream s;
    s << "run took " << seconds_since(t0) << " s";
    o.note(s.str());
    return o;
}

}  // namespace

// Criteria whose stated values are not reproducible as stated. They still run and print FAIL;
// they only stop the exit status from failing. Passing unexpectedly is reported as an error.
const std::set<std::string> kKnownUnattainable{"C5"};

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"C1 classic pair exp0", classic_exp0},
        {"C2 classic resolutions", classic_resolutions},
        {"C3 classic pair plus a generic line", classic_with_line},
        {"C4 sqrt5 pair and its extension", quadratic_pair},
        {"C5 dimension-four tower, stated hyperplane", dimension_four_example},
        {"C6 restriction-size criterion", restriction_criterion},
        {"C7 property suite", property_suite},
        {"C8 structured generators span D(B_4)", structured_generators},
        {"C9 basis dependence of algebraic genericity", basis_dependence},
        {"C10 dimension-five probe", dimension_five_probe},
    };
    int failed = 0, unexpected = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        std::ostringstream head;
        head.precision(1);
        const bool known = kKnownUnattainable.count(name.substr(0, name.find(' '))) > 0;
        head << std::fixed << (o.pass ? "PASS " : "FAIL ") << name << " [" << seconds_since(t0) << " s]";
        if (known) head << (o.pass ? " (listed as unattainable but passed)" : " (known, documented: stated value not reproducible)");
        std::cout << head.str() << "\n";
        for (const auto& n : o.notes) std::cout << "    " << n << "\n";
        std::cout.flush();
        if (!o.pass) ++failed;
        if (o.pass == known) ++unexpected;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed";
    std::cout << ", " << unexpected << " unexpected\n";
    return unexpected == 0 ? 0 : 1;
}
