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

#ifndef ZPAIR_ZIEGLER_HPP
#define ZPAIR_ZIEGLER_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arrangement.hpp"
#include "dermod.hpp"
#include "lattice.hpp"
#include "theorems.hpp"

namespace zpair {

enum class Verdict { ZieglerPair, SameResolution, LatticesDiffer };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::ZieglerPair:
            return "ziegler_pair";
        case Verdict::SameResolution:
            return "same_resolution";
        case Verdict::LatticesDiffer:
            return "lattices_differ";
    }
    return "?";
}

/// Data of the extension A_i -> B_i = cone^(ell-3)(A_i) + H.
struct TowerInfo {
    int ell = 3;
    LinearForm hyperplane;
    std::optional<std::uint64_t> seed;  ///< set when H was sampled
    std::array<bool, 2> comb_generic{};
    std::array<std::optional<bool>, 2> alg_generic;  ///< H_3 against minimal generators of A_i
    std::array<std::size_t, 2> restriction_sizes{};  ///< |A_i^{H_3}|
    std::array<ResolutionSummary, 2> base;           ///< resolutions of A_i
    std::array<std::vector<Prediction>, 2> predictions;
    std::optional<bool> criterion;  ///< restriction-size criterion, ell = 3 only
};

struct PairReport {
    int ell = 3;
    bool lattice_isomorphic = false;
    std::optional<std::vector<std::size_t>> witness;
    std::array<Arrangement, 2> arrangements;
    std::array<ResolutionSummary, 2> resolutions;
    Verdict verdict = Verdict::LatticesDiffer;
    bool exp_level = false;  ///< ell >= 4: compared on exp and exp0 only
    bool certified = true;
    std::optional<TowerInfo> tower;
};

/// Lattice isomorphism plus comparison of resolution data.
inline PairReport check_pair(const Arrangement& a1, const Arrangement& a2, const SearchOptions& opt = {}) {
    if (a1.ell() != a2.ell()) throw std::invalid_argument("pair sides live in different dimensions");
    if (!a1.ctx().is_rational() && !a2.ctx().is_rational() && !(a1.ctx() == a2.ctx())) {
        throw std::invalid_argument("pair sides use different quadratic fields");
    }
    PairReport r;
    r.ell = a1.ell();
    r.arrangements = {a1, a2};
    r.witness = lattice_isomorphism(build_lattice(a1), build_lattice(a2));
    r.lattice_isomorphic = r.witness.has_value();
    r.resolutions[0] = resolution(a1, opt);
    r.resolutions[1] = resolution(a2, opt);
    r.certified = r.resolutions[0].certified && r.resolutions[1].certified;
    r.exp_level = r.ell >= 4;
    const auto& x = r.resolutions[0];
    const auto& y = r.resolutions[1];
    bool differ = x.f0_degrees != y.f0_degrees || x.exp0 != y.exp0;
    if (!r.exp_level && x.f1_degrees && y.f1_degrees) differ = differ || *x.f1_degrees != *y.f1_degrees;
    if (!r.lattice_isomorphic) {
        r.verdict = Verdict::LatticesDiffer;
    } else {
        r.verdict = differ ? Verdict::ZieglerPair : Verdict::SameResolution;
    }
    return r;
}

namespace detail {

inline PairReport extend_pair(const Arrangement& a1, const Arrangement& a2, int ell, const LinearForm& h,
                              std::optional<std::uint64_t> seed, const SearchOptions& opt) {
    if (a1.ell() != 3 || a2.ell() != 3) throw std::invalid_argument("pair towers start in dimension 3");
    if (ell < 3) throw std::invalid_argument("tower dimension must be at least 3");
    if (h.nvars() != ell) throw std::invalid_argument("hyperplane has the wrong number of coefficients");
    TowerInfo info;
    info.ell = ell;
    info.hyperplane = h.normalized();
    info.seed = seed;
    const std::array<const Arrangement*, 2> base{&a1, &a2};
    std::array<Arrangement, 2> ext;
    const LinearForm h3 = restrict_tower(h, 3);
    for (int i = 0; i < 2; ++i) {
        const Arrangement tower = cone(*base[i], ell - 3);
        if (tower.contains(h)) throw std::invalid_argument("hyperplane already belongs to the arrangement");
        info.comb_generic[i] = comb_generic(tower, h);
        ext[i] = add_hyperplane(tower, h);
        info.base[i] = resolution(*base[i], opt);
        info.restriction_sizes[i] = h3.is_zero() ? 0 : restrict_to(*base[i], h3).size();
        if (!h3.is_zero() && !base[i]->contains(h3) && !info.base[i].generators.generators.empty()) {
            info.alg_generic[i] = alg_generic(*base[i], info.base[i].generators, h3);
        }
        const int n = static_cast<int>(info.restriction_sizes[i]) - 1;
        if (ell == 3) info.predictions[i].push_back(predict_add_generic(info.base[i].f0_degrees, base[i]->size()));
        info.predictions[i].push_back(predict_highdim(info.base[i].exp0, ell, n, HighdimVariant::Statement));
        info.predictions[i].push_back(predict_highdim(info.base[i].exp0, ell, n, HighdimVariant::Proof));
    }
    if (ell == 3 && info.base[0].f1_degrees && info.base[1].f1_degrees) {
        info.criterion = genzp_criterion(info.base[0], info.base[1], info.restriction_sizes[0], info.restriction_sizes[1]);
    }
    PairReport r = check_pair(ext[0], ext[1], opt);
    if (seed && !r.lattice_isomorphic && isomorphic(build_lattice(a1), build_lattice(a2))) {
        throw std::logic_error("generic extension changed the combinatorics of the pair");
    }
    r.tower = std::move(info);
    return r;
}

}  // namespace detail

/// Cones both sides ell-3 times and adds one shared hyperplane, certified generic against both.
inline PairReport build_pair_tower(const Arrangement& a1, const Arrangement& a2, int ell, std::uint64_t seed,
                                   const SearchOptions& opt = {}) {
    if (a1.ell() != 3 || a2.ell() != 3) throw std::invalid_argument("pair towers start in dimension 3");
    if (ell < 3) throw std::invalid_argument("tower dimension must be at least 3");
    const LinearForm h = generic_sample({cone(a1, ell - 3), cone(a2, ell - 3)}, seed);
    return detail::extend_pair(a1, a2, ell, h, seed, opt);
}

/// Same construction with a caller-supplied hyperplane; genericity is reported, not enforced.
inline PairReport build_pair_tower(const Arrangement& a1, const Arrangement& a2, const LinearForm& h,
                                   const SearchOptions& opt = {}) {
    return detail::extend_pair(a1, a2, h.nvars(), h, std::nullopt, opt);
}

}  // namespace zpair

#endif  // ZPAIR_ZIEGLER_HPP
