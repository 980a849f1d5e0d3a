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

#ifndef ZPAIR_THEOREMS_HPP
#define ZPAIR_THEOREMS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arrangement.hpp"
#include "dermod.hpp"
#include "lattice.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace zpair {

enum class PredictionSource { AddGeneric, HighdimStatement, HighdimProof };

inline const char* to_string(PredictionSource s) {
    switch (s) {
        case PredictionSource::AddGeneric:
            return "add_generic";
        case PredictionSource::HighdimStatement:
            return "highdim_statement";
        case PredictionSource::HighdimProof:
            return "highdim_proof";
    }
    return "?";
}

struct Prediction {
    PredictionSource source = PredictionSource::AddGeneric;
    std::vector<int> degrees;  ///< sorted
    int ell = 3;
    int n = 0;
    std::vector<int> base;  ///< exp(A) or exp0(A) the prediction started from
};

/// exp(A + H) for a generic line H: (1, a_2 + 1, ..., a_n + 1, |A| - 1).
inline Prediction predict_add_generic(const std::vector<int>& exp, std::size_t size) {
    auto it = std::find(exp.begin(), exp.end(), 1);
    if (it == exp.end()) throw std::invalid_argument("exponents lack the Euler degree 1");
    Prediction p;
    p.source = PredictionSource::AddGeneric;
    p.base = exp;
    std::sort(p.base.begin(), p.base.end());
    p.n = static_cast<int>(size) - 1;
    p.degrees.push_back(1);
    bool skipped = false;
    for (int a : p.base) {
        if (a == 1 && !skipped) {
            skipped = true;
            continue;
        }
        p.degrees.push_back(a + 1);
    }
    p.degrees.push_back(static_cast<int>(size) - 1);
    std::sort(p.degrees.begin(), p.degrees.end());
    return p;
}

enum class HighdimVariant { Statement, Proof };

/// Degree-2 multiplicity of exp0(B_ell): (ell-3) + C(ell-4, 2) as stated, (ell-3) + C(ell-3, 2)
/// when counting the degree-2 generators built in the construction.
inline std::size_t highdim_degree_two_count(int ell, HighdimVariant v) {
    const long top = v == HighdimVariant::Statement ? ell - 4 : ell - 3;
    return static_cast<std::size_t>(ell - 3) + binomial(top, 2);
}

/// exp0 of the (ell-3)-fold cone of A plus a generic hyperplane, n + 1 = |A^{H_3}|.
inline Prediction predict_highdim(const std::vector<int>& exp0, int ell, int n, HighdimVariant v) {
    if (ell < 3) throw std::invalid_argument("predict_highdim needs ell >= 3");
    Prediction p;
    p.source = v == HighdimVariant::Statement ? PredictionSource::HighdimStatement : PredictionSource::HighdimProof;
    p.ell = ell;
    p.n = n;
    p.base = exp0;
    std::sort(p.base.begin(), p.base.end());
    p.degrees.assign(highdim_degree_two_count(ell, v), 2);
    for (int a : p.base) {
        for (int r = 0; r < ell - 2; ++r) p.degrees.push_back(a + 1);
    }
    p.degrees.push_back(n);
    std::sort(p.degrees.begin(), p.degrees.end());
    return p;
}

/// Both restriction sizes exceed every generator and first-syzygy degree of both deletions.
inline bool genzp_criterion(const ResolutionSummary& r1, const ResolutionSummary& r2, std::size_t restricted1,
                            std::size_t restricted2) {
    if (!r1.f1_degrees || !r2.f1_degrees) throw std::invalid_argument("criterion needs first syzygy degrees");
    int top = 0;
    for (const auto* r : {&r1, &r2}) {
        for (int d : r->f0_degrees) top = std::max(top, d);
        for (int d : *r->f1_degrees) top = std::max(top, d);
    }
    return static_cast<long>(restricted1) > top && static_cast<long>(restricted2) > top;
}

// ---------------------------------------------------------------------------
// Structured generators of D(B_ell), B_ell = (ell-3)-fold cone of A plus H.
// ---------------------------------------------------------------------------

struct StructuredGenerator {
    std::string label;
    Derivation theta;
};

struct StructuredGenerators {
    Arrangement tower;  ///< B_ell
    int n = 0;          ///< degree of the top generator, |A^{H_3}| - 1
    std::vector<StructuredGenerator> members;

    std::vector<Derivation> derivations() const {
        std::vector<Derivation> out;
        for (const auto& m : members) out.push_back(m.theta);
        return out;
    }
    std::vector<int> degrees(bool skip_euler = true) const {
        std::vector<int> out;
        for (const auto& m : members) {
            if (skip_euler && m.label == "theta_E") continue;
            out.push_back(m.theta.degree());
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

inline Derivation embed_derivation(const Derivation& t, int ell) {
    std::vector<HomogPoly> comps;
    for (int i = 0; i < ell; ++i) {
        if (i < t.nvars()) {
            HomogPoly p(ell, t.degree());
            for (const auto& [m, c] : t[i].terms()) {
                Monomial mm(m);
                mm.resize(ell, 0);
                p.add_term(mm, c);
            }
            comps.push_back(std::move(p));
        } else {
            comps.emplace_back(ell, t.degree());
        }
    }
    return Derivation(std::move(comps));
}

namespace detail {

inline HomogPoly variable_poly(int i, int ell) {
    Monomial m(ell, 0);
    m[i] = 1;
    return HomogPoly::monomial(m);
}

}  // namespace detail

/// G_ell: theta_E, alpha_H x_j d_j, alpha_H theta_i, phi_i^j, eta_i^j and a top-degree
/// complement phi_ell in degree n. `gens` is a minimal generating set of D(A), A in dimension 3.
inline StructuredGenerators build_structured_generators(const Arrangement& a, const GeneratorSet& gens, int ell,
                                                        const LinearForm& h) {
    if (a.ell() != 3) throw std::invalid_argument("structured generators start from an arrangement in dimension 3");
    if (ell < 3 || h.nvars() != ell) throw std::invalid_argument("hyperplane does not live in the tower dimension");
    if (gens.generators.size() != gens.degrees.size()) throw std::invalid_argument("generator set without derivations");
    for (int j = 3; j < ell; ++j) {
        if (h[j].is_zero()) throw std::invalid_argument("hyperplane misses a coned coordinate; not generic");
    }
    StructuredGenerators out;
    const Arrangement tower = cone(a, ell - 3);
    if (tower.contains(h)) throw std::invalid_argument("hyperplane already belongs to the tower");
    out.tower = add_hyperplane(tower, h);
    out.n = static_cast<int>(restrict_to(a, restrict_tower(h, 3)).size()) - 1;
    const HomogPoly alpha = h.to_poly();
    auto add = [&](std::string label, Derivation t) { out.members.push_back({std::move(label), std::move(t)}); };

    add("theta_E", Derivation::euler(ell));
    std::vector<std::pair<std::size_t, Derivation>> thetas;
    for (std::size_t i = 0; i < gens.generators.size(); ++i) {
        if (gens.euler_index && *gens.euler_index == i) continue;
        thetas.emplace_back(i, embed_derivation(gens.generators[i], ell));
    }
    for (int j = 3; j < ell; ++j) {
        add("alpha_H*x" + std::to_string(j + 1) + "*d" + std::to_string(j + 1),
            Derivation::coordinate(j, alpha * detail::variable_poly(j, ell)));
    }
    for (const auto& [i, t] : thetas) add("alpha_H*theta_" + std::to_string(i + 1), alpha * t);
    for (const auto& [i, t] : thetas) {
        const HomogPoly image = apply(t, h);
        for (int j = 3; j < ell; ++j) {
            const HomogPoly xj = detail::variable_poly(j, ell);
            Derivation phi = (h[j] * xj) * t - Derivation::coordinate(j, image * xj);
            add("phi_" + std::to_string(i + 1) + "^" + std::to_string(j + 1), std::move(phi));
        }
    }
    for (int i = 3; i < ell; ++i) {
        for (int j = i + 1; j < ell; ++j) {
            const HomogPoly xij = detail::variable_poly(i, ell) * detail::variable_poly(j, ell);
            Derivation eta = Derivation::coordinate(i, h[j] * xij) - Derivation::coordinate(j, h[i] * xij);
            add("eta_" + std::to_string(i + 1) + "^" + std::to_string(j + 1), std::move(eta));
        }
    }
    for (const auto& m : out.members) {
        if (!in_module(out.tower, m.theta)) throw std::logic_error("structured generator " + m.label + " left D(B)");
    }

    // phi_ell: complement of the S-span of the others inside D(B)_n.
    DerivationModule<ExactField> mod(out.tower, Mode::D);
    std::vector<GradedVector<Scalar>> known;
    for (const auto& m : out.members) {
        if (m.theta.degree() <= out.n) {
            known.push_back({m.theta.degree(), to_layout_vector(ExactField{}, m.theta, mod.layout(m.theta.degree()))});
        }
    }
    std::function<const GradedLayout&(int)> layout_of = [&](int d) -> const GradedLayout& { return mod.layout(d); };
    const std::size_t before = known.size();
    extend_generators(ExactField{}, out.n, layout_of, mod.piece(out.n), {}, known);
    for (std::size_t k = before; k < known.size(); ++k) {
        std::string label = "phi_top";
        if (known.size() - before > 1) label += "_" + std::to_string(k - before + 1);
        add(label, to_derivation(known[k].coords, mod.layout(out.n)));
    }
    return out;
}

/// Dimension of the degree-d part of the submodule generated by `gens`, computed modulo a
/// large prime (a lower bound for the exact dimension).
inline std::size_t generated_dimension(const Arrangement& a, const std::vector<Derivation>& gens, int d,
                                       std::size_t stop_at = static_cast<std::size_t>(-1)) {
    const int ell = a.ell();
    const auto primes = modular::draw_primes(1, a.ctx().d());
    const PrimeField f = PrimeField::make(primes.front(), a.ctx());
    const std::size_t cols = static_cast<std::size_t>(ell) * poly_space_dim(ell, d);
    const auto basis = shared_monomial_basis(ell, d);
    EchelonBasis<PrimeField> span(f, cols);
    for (const auto& g : gens) {
        if (g.degree() > d) continue;
        for (const auto& mu : monomials_of_degree(ell, d - g.degree())) {
            std::vector<std::uint64_t> v(cols, 0);
            for (int i = 0; i < ell; ++i) {
                for (const auto& [m, c] : g[i].terms()) {
                    Monomial mm(m);
                    for (int k = 0; k < ell; ++k) mm[k] += mu[k];
                    v[static_cast<std::size_t>(i) * basis->size() + basis->find(mm)] = f.from(c);
                }
            }
            span.insert(v);
            if (span.rank() >= stop_at) return span.rank();
        }
    }
    return span.rank();
}

}  // namespace zpair

#endif  // ZPAIR_THEOREMS_HPP
