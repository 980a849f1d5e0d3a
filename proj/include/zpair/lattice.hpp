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

#ifndef ZPAIR_LATTICE_HPP
#define ZPAIR_LATTICE_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "arrangement.hpp"
#include "linalg.hpp"

namespace zpair {

/// Hyperplane index set; bit i stands for hyperplane i.
using MemberMask = std::uint32_t;

inline std::vector<std::size_t> mask_members(MemberMask m) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; m; ++i, m >>= 1) {
        if (m & 1U) out.push_back(i);
    }
    return out;
}

/// A flat, identified by the closed set of hyperplanes containing it.
struct Flat {
    MemberMask members = 0;
    int rank = 0;  ///< codimension of the intersection
    std::size_t multiplicity() const { return static_cast<std::size_t>(std::popcount(members)); }
    friend bool operator==(const Flat&, const Flat&) = default;
};

class IntersectionLattice {
   public:
    static constexpr std::size_t kMaxHyperplanes = 20;

    IntersectionLattice() = default;
    IntersectionLattice(std::size_t n, int ell, std::vector<std::vector<Flat>> by_rank)
        : n_(n), ell_(ell), by_rank_(std::move(by_rank)) {
        for (const auto& level : by_rank_) {
            for (const auto& f : level) rank_of_.emplace(f.members, f.rank);
        }
    }

    std::size_t hyperplanes() const { return n_; }
    int ell() const { return ell_; }
    int rank() const { return static_cast<int>(by_rank_.size()) - 1; }
    const std::vector<std::vector<Flat>>& by_rank() const { return by_rank_; }
    const std::vector<Flat>& flats_of_rank(int r) const { return by_rank_.at(r); }
    std::size_t flat_count() const { return rank_of_.size(); }

    std::optional<int> rank_of(MemberMask m) const {
        auto it = rank_of_.find(m);
        if (it == rank_of_.end()) return std::nullopt;
        return it->second;
    }
    bool is_flat(MemberMask m) const { return rank_of_.count(m) > 0; }

    /// Per rank: multiplicity -> number of flats.
    std::vector<std::map<std::size_t, std::size_t>> multiplicity_profile() const {
        std::vector<std::map<std::size_t, std::size_t>> out(by_rank_.size());
        for (std::size_t r = 0; r < by_rank_.size(); ++r) {
            for (const auto& f : by_rank_[r]) ++out[r][f.multiplicity()];
        }
        return out;
    }

   private:
    std::size_t n_ = 0;
    int ell_ = 0;
    std::vector<std::vector<Flat>> by_rank_;
    std::unordered_map<MemberMask, int> rank_of_;
};

namespace detail {

inline std::vector<Scalar> coefficient_row(const LinearForm& f) { return f.coeffs(); }

/// Closure of the span of the given hyperplanes: all forms lying in that span.
inline std::pair<MemberMask, int> closure(const std::vector<LinearForm>& forms, MemberMask seed, int ell) {
    EchelonBasis<ExactField> span(ExactField{}, static_cast<std::size_t>(ell));
    for (auto i : mask_members(seed)) span.insert(coefficient_row(forms[i]));
    MemberMask closed = 0;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (span.contains(coefficient_row(forms[i]))) closed |= MemberMask{1} << i;
    }
    return {closed, static_cast<int>(span.rank())};
}

/// Flats reachable upward from `seed` (a closed set) up to rank max_rank, grouped by rank.
/// The visitor may return false to stop early.
template <class Visit>
std::vector<std::vector<Flat>> explore_flats(const std::vector<LinearForm>& forms, int ell, MemberMask seed,
                                             int max_rank, Visit&& visit) {
    auto [start, start_rank] = closure(forms, seed, ell);
    std::vector<std::vector<Flat>> levels(static_cast<std::size_t>(std::max(max_rank, start_rank)) + 1);
    levels[start_rank].push_back({start, start_rank});
    if (!visit(levels[start_rank].back())) return levels;
    for (int r = start_rank; r < max_rank; ++r) {
        std::set<MemberMask> seen;
        for (const auto& x : levels[r]) {
            for (std::size_t h = 0; h < forms.size(); ++h) {
                if (x.members & (MemberMask{1} << h)) continue;
                auto [m, rk] = closure(forms, x.members | (MemberMask{1} << h), ell);
                if (!seen.insert(m).second) continue;
                levels[rk].push_back({m, rk});
                if (!visit(levels[rk].back())) return levels;
            }
        }
        std::sort(levels[r + 1].begin(), levels[r + 1].end(),
                  [](const Flat& a, const Flat& b) { return a.members < b.members; });
    }
    while (levels.size() > 1 && levels.back().empty()) levels.pop_back();
    return levels;
}

}  // namespace detail

/// All flats of every rank.
inline IntersectionLattice build_lattice(const Arrangement& a) {
    if (a.size() > IntersectionLattice::kMaxHyperplanes) {
        throw std::length_error("lattice construction is limited to 20 hyperplanes");
    }
    auto levels = detail::explore_flats(a.forms(), a.ell(), 0, a.ell(), [](const Flat&) { return true; });
    return IntersectionLattice(a.size(), a.ell(), std::move(levels));
}

/// Hyperplane relabeling that maps flats onto flats, if one exists.
inline std::optional<std::vector<std::size_t>> lattice_isomorphism(const IntersectionLattice& l1,
                                                                   const IntersectionLattice& l2) {
    const std::size_t n = l1.hyperplanes();
    if (n != l2.hyperplanes() || l1.by_rank().size() != l2.by_rank().size()) return std::nullopt;
    for (std::size_t r = 0; r < l1.by_rank().size(); ++r) {
        if (l1.multiplicity_profile()[r] != l2.multiplicity_profile()[r]) return std::nullopt;
    }
    // Invariant of a hyperplane: counts of flats containing it, keyed by (rank, multiplicity).
    auto signature = [](const IntersectionLattice& l, std::size_t h) {
        std::map<std::pair<int, std::size_t>, std::size_t> sig;
        for (const auto& level : l.by_rank()) {
            for (const auto& f : level) {
                if (f.members & (MemberMask{1} << h)) ++sig[{f.rank, f.multiplicity()}];
            }
        }
        return sig;
    };
    std::vector<std::map<std::pair<int, std::size_t>, std::size_t>> s1(n), s2(n);
    for (std::size_t h = 0; h < n; ++h) {
        s1[h] = signature(l1, h);
        s2[h] = signature(l2, h);
    }
    // Flats of l1 whose largest member is i become checkable once i is assigned.
    std::vector<std::vector<Flat>> closing(n);
    for (const auto& level : l1.by_rank()) {
        for (const auto& f : level) {
            if (f.members == 0) continue;
            closing[static_cast<std::size_t>(31 - std::countl_zero(f.members))].push_back(f);
        }
    }
    std::vector<std::size_t> perm(n, n);
    std::vector<char> used(n, 0);
    auto image = [&](MemberMask m) {
        MemberMask out = 0;
        for (auto i : mask_members(m)) out |= MemberMask{1} << perm[i];
        return out;
    };
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t t = 0; t < n; ++t) {
            if (used[t] || s1[i] != s2[t]) continue;
            perm[i] = t;
            bool ok = true;
            for (const auto& f : closing[i]) {
                auto r = l2.rank_of(image(f.members));
                if (!r || *r != f.rank) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[t] = 1;
            if (self(self, i + 1)) return true;
            used[t] = 0;
        }
        perm[i] = n;
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return perm;
}

inline bool isomorphic(const IntersectionLattice& l1, const IntersectionLattice& l2) {
    return lattice_isomorphism(l1, l2).has_value();
}

/// H is in general position relative to L(A): every flat Y != 0 of A + H through H with
/// rank(Y) < ell is X & H for the flat X of A cut out by the other members of Y, with
/// rank(X) = rank(Y) - 1. In rank 3 this says every localization at a flat through H is
/// Boolean, i.e. H misses all multiple points.
inline bool comb_generic(const Arrangement& a, const LinearForm& h) {
    if (a.contains(h)) throw std::invalid_argument("hyperplane already belongs to the arrangement");
    if (a.size() + 1 > 32) throw std::length_error("too many hyperplanes for genericity check");
    std::vector<LinearForm> forms = a.forms();
    forms.push_back(h.normalized());
    MemberMask seed = MemberMask{1} << a.size();
    bool generic = true;
    detail::explore_flats(forms, a.ell(), seed, a.ell() - 1, [&](const Flat& y) {
        if (y.rank >= a.ell()) return true;
        EchelonBasis<ExactField> span(ExactField{}, static_cast<std::size_t>(a.ell()));
        for (auto i : mask_members(y.members & ~seed)) span.insert(a[i].coeffs());
        if (static_cast<int>(span.rank()) != y.rank - 1) generic = false;
        return generic;
    });
    return generic;
}

/// H_k: the first k coefficients of H, i.e. H intersected with x_{k+1} = ... = x_ell = 0.
inline LinearForm restrict_tower(const LinearForm& h, int k) {
    if (k < 1 || k > h.nvars()) throw std::invalid_argument("tower index out of range");
    std::vector<Scalar> c(h.coeffs().begin(), h.coeffs().begin() + k);
    return LinearForm(std::move(c));
}

/// Small-integer hyperplane certified combinatorially generic against every arrangement given.
/// All coefficients are nonzero. Throws after `budget` rejected draws.
inline LinearForm generic_sample(const std::vector<Arrangement>& arrangements, std::uint64_t seed,
                                 int budget = 2000) {
    if (arrangements.empty()) throw std::invalid_argument("generic_sample needs an arrangement");
    const int ell = arrangements.front().ell();
    for (const auto& a : arrangements) {
        if (a.ell() != ell) throw std::invalid_argument("arrangements of different dimensions");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(1, 60);
    std::bernoulli_distribution negative(0.5);
    for (int trial = 0; trial < budget; ++trial) {
        std::vector<Scalar> c(ell);
        for (auto& x : c) x = Scalar(negative(rng) ? -coef(rng) : coef(rng));
        LinearForm h(std::move(c));
        bool ok = true;
        for (const auto& a : arrangements) {
            if (a.contains(h) || !comb_generic(a, h)) {
                ok = false;
                break;
            }
        }
        if (ok) return h;
    }
    throw std::runtime_error("no generic hyperplane found within the trial budget");
}

inline LinearForm generic_sample(const Arrangement& a, std::uint64_t seed, int budget = 2000) {
    return generic_sample(std::vector<Arrangement>{a}, seed, budget);
}

}  // namespace zpair

#endif  // ZPAIR_LATTICE_HPP
