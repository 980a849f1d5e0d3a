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

#ifndef ZPAIR_DERMOD_HPP
#define ZPAIR_DERMOD_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arrangement.hpp"
#include "linalg.hpp"
#include "modular.hpp"
#include "poly.hpp"

namespace zpair {

/// D: theta(alpha_H) in alpha_H S for all H.  D0: additionally theta(Q) = 0.
enum class Mode { D, D0 };

inline const char* to_string(Mode m) { return m == Mode::D ? "D" : "D0"; }

inline std::size_t binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::size_t r = 1;
    for (long i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

/// dim S_d for S = k[x_1..x_n].
inline std::size_t poly_space_dim(int n, int d) {
    if (d < 0) return 0;
    return binomial(d + n - 1, n - 1);
}

inline std::shared_ptr<const MonomialBasis> shared_monomial_basis(int nvars, int degree) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const MonomialBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{nvars, degree}];
    if (!slot) slot = std::make_shared<const MonomialBasis>(nvars, std::max(degree, -1));
    return slot;
}

/// Coordinates of the degree-d part of a graded free module sum_c S[-shift_c]:
/// one column per (component c, monomial of degree d - shift_c). A component may be
/// restricted to monomials divisible by a fixed variable.
class GradedLayout {
   public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    GradedLayout() = default;
    GradedLayout(int nvars, int degree, const std::vector<int>& shifts, const std::vector<int>& divisor_var)
        : nvars_(nvars), degree_(degree) {
        const std::size_t comps = shifts.size();
        bases_.reserve(comps);
        col_of_.resize(comps);
        for (std::size_t c = 0; c < comps; ++c) {
            bases_.push_back(shared_monomial_basis(nvars, degree - shifts[c]));
            const auto& b = *bases_.back();
            col_of_[c].assign(b.size(), npos);
            const int var = divisor_var.empty() ? -1 : divisor_var[c];
            for (std::size_t k = 0; k < b.size(); ++k) {
                if (var >= 0 && b[k][var] == 0) continue;
                col_of_[c][k] = cols_.size();
                cols_.emplace_back(static_cast<int>(c), k);
            }
        }
    }

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    std::size_t size() const { return cols_.size(); }
    std::size_t components() const { return bases_.size(); }
    int component(std::size_t col) const { return cols_[col].first; }
    const Monomial& monomial(std::size_t col) const { return (*bases_[cols_[col].first])[cols_[col].second]; }

    std::size_t find(int comp, const Monomial& m) const {
        const auto& b = *bases_[comp];
        std::size_t k = b.find(m);
        return k == b.size() ? npos : col_of_[comp][k];
    }

   private:
    int nvars_ = 0;
    int degree_ = 0;
    std::vector<std::shared_ptr<const MonomialBasis>> bases_;
    std::vector<std::vector<std::size_t>> col_of_;
    std::vector<std::pair<int, std::size_t>> cols_;
};

/// mu * v, moving v from layout `from` into layout `to`.
template <class F>
std::vector<typename F::value_type> shift_vector(const F& field, const std::vector<typename F::value_type>& v,
                                                 const GradedLayout& from, const Monomial& mu,
                                                 const GradedLayout& to) {
    std::vector<typename F::value_type> out(to.size(), field.zero());
    Monomial m;
    for (std::size_t col = 0; col < v.size(); ++col) {
        if (field.is_zero(v[col])) continue;
        m = from.monomial(col);
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += mu[i];
        std::size_t target = to.find(from.component(col), m);
        if (target == GradedLayout::npos) throw std::logic_error("product left the graded layout");
        out[target] = v[col];
    }
    return out;
}

template <class T>
struct GradedVector {
    int degree = 0;
    std::vector<T> coords;  ///< in the layout of its degree
};

/// Appends the minimal generators of degree d of a graded submodule M of a free module.
/// `kernel` is a basis of M_d (identity on its free columns); products of the earlier
/// generators span (m M)_d, and the complement is taken greedily from `preferred` and then
/// from the basis vectors. Returns the number of new generators.
template <class F>
std::size_t extend_generators(const F& field, int d, const std::function<const GradedLayout&(int)>& layout_of,
                              const KernelBasis<typename F::value_type>& kernel,
                              const std::vector<std::vector<typename F::value_type>>& preferred,
                              std::vector<GradedVector<typename F::value_type>>& gens) {
    using T = typename F::value_type;
    const std::size_t r = kernel.dim();
    if (r == 0) return 0;
    const GradedLayout& target = layout_of(d);
    std::vector<std::size_t> pos(target.size(), GradedLayout::npos);
    for (std::size_t k = 0; k < r; ++k) pos[kernel.free_cols[k]] = k;
    auto coords = [&](const std::vector<T>& full) {
        std::vector<T> c(r, field.zero());
        for (std::size_t col = 0; col < full.size(); ++col) {
            if (pos[col] != GradedLayout::npos) c[pos[col]] = full[col];
        }
        return c;
    };

    EchelonBasis<F> span(field, r);
    const std::size_t before = gens.size();
    for (std::size_t g = 0; g < before && span.rank() < r; ++g) {
        const int e = gens[g].degree;
        if (e > d) continue;
        const GradedLayout& from = layout_of(e);
        for (const auto& mu : monomials_of_degree(target.nvars(), d - e)) {
            span.insert(coords(shift_vector(field, gens[g].coords, from, mu, target)));
            if (span.rank() == r) break;
        }
    }
    if (span.rank() == r) return 0;
    for (const auto& p : preferred) {
        if (span.insert(coords(p))) gens.push_back({d, p});
    }
    for (std::size_t k = 0; k < r && span.rank() < r; ++k) {
        std::vector<T> unit(r, field.zero());
        unit[k] = field.one();
        if (span.insert(unit)) gens.push_back({d, kernel.vectors[k]});
    }
    return gens.size() - before;
}

/// Graded pieces of D(A) or D0(A) over a field policy, cached by degree.
template <class F>
class DerivationModule {
   public:
    using T = typename F::value_type;

    DerivationModule(Arrangement a, Mode mode, F field = F{}) : a_(std::move(a)), mode_(mode), field_(std::move(field)) {
        const int ell = a_.ell();
        divisor_var_.assign(ell, -1);
        for (std::size_t h = 0; h < a_.size(); ++h) {
            const auto& f = a_[h];
            int nonzero = 0, last = -1;
            for (int i = 0; i < ell; ++i) {
                if (!f[i].is_zero()) {
                    ++nonzero;
                    last = i;
                }
            }
            if (nonzero == 1) {
                divisor_var_[last] = last;
            } else {
                general_.push_back(h);
            }
        }
    }

    const Arrangement& arrangement() const { return a_; }
    Mode mode() const { return mode_; }
    const F& field() const { return field_; }

    const GradedLayout& layout(int d) {
        auto it = layouts_.find(d);
        if (it != layouts_.end()) return it->second;
        return layouts_.emplace(d, GradedLayout(a_.ell(), d, std::vector<int>(a_.ell(), 0), divisor_var_))
            .first->second;
    }

    std::size_t unknowns(int d) { return layout(d).size(); }

    const KernelBasis<T>& piece(int d) {
        auto it = pieces_.find(d);
        if (it != pieces_.end()) return it->second;
        KernelBasis<T> k;
        if (d >= 0 && layout(d).size() > 0) k = kernel_basis(field_, constraints(d));
        return pieces_.emplace(d, std::move(k)).first->second;
    }

    std::size_t dim(int d) { return piece(d).dim(); }

    /// Euler derivation in the layout of degree 1.
    std::vector<T> euler_vector() {
        const GradedLayout& l = layout(1);
        std::vector<T> v(l.size(), field_.zero());
        for (int i = 0; i < a_.ell(); ++i) {
            Monomial m(a_.ell(), 0);
            m[i] = 1;
            v[l.find(i, m)] = field_.one();
        }
        return v;
    }

    /// Linear conditions on the coefficients of a degree-d derivation.
    Matrix<T> constraints(int d) {
        const GradedLayout& l = layout(d);
        const int ell = a_.ell();
        const std::size_t rows_per_h = poly_space_dim(ell - 1, d);
        const std::size_t quotient_rows = (mode_ == Mode::D0 && d >= 1) ? poly_space_dim(ell, d - 1) : 0;
        const std::size_t rows = general_.size() * rows_per_h + quotient_rows;
        Matrix<T> m(rows, l.size(), field_.zero());
        if (l.size() == 0) return m;
        auto reduced_basis = shared_monomial_basis(ell - 1, d);
        auto quotient_basis = shared_monomial_basis(ell, d - 1);
        const std::size_t quotient_offset = general_.size() * rows_per_h;

        std::vector<char> is_general(a_.size(), 0);
        for (auto h : general_) is_general[h] = 1;
        std::size_t block = 0;
        for (std::size_t h = 0; h < a_.size(); ++h) {
            const bool want_remainder = is_general[h];
            if (!want_remainder && quotient_rows == 0) continue;
            ReductionTable table(a_[h]);
            const int k = table.pivot();
            std::vector<T> c(ell);
            for (int i = 0; i < ell; ++i) c[i] = field_.from(a_[h][i]);
            Monomial dropped(ell - 1);
            for (std::size_t col = 0; col < l.size(); ++col) {
                const int i = l.component(col);
                if (field_.is_zero(c[i])) continue;
                const LinearDivision& div = table.divide(l.monomial(col));
                if (want_remainder) {
                    for (const auto& [mono, coef] : div.remainder.terms()) {
                        for (int v = 0, w = 0; v < ell; ++v) {
                            if (v != k) dropped[w++] = mono[v];
                        }
                        std::size_t row = block * rows_per_h + reduced_basis->find(dropped);
                        m(row, col) = field_.add(m(row, col), field_.mul(c[i], field_.from(coef)));
                    }
                }
                if (quotient_rows > 0) {
                    for (const auto& [mono, coef] : div.quotient.terms()) {
                        std::size_t row = quotient_offset + quotient_basis->find(mono);
                        m(row, col) = field_.add(m(row, col), field_.mul(c[i], field_.from(coef)));
                    }
                }
            }
            if (want_remainder) ++block;
        }
        return m;
    }

   private:
    Arrangement a_;
    Mode mode_;
    F field_;
    std::vector<int> divisor_var_;
    std::vector<std::size_t> general_;
    std::map<int, GradedLayout> layouts_;
    std::map<int, KernelBasis<T>> pieces_;
};

// ---------------------------------------------------------------------------
// Conversions between layout vectors and derivations.
// ---------------------------------------------------------------------------

inline Derivation to_derivation(const std::vector<Scalar>& v, const GradedLayout& l) {
    Derivation t(l.nvars(), l.degree());
    std::vector<HomogPoly> comps(l.nvars(), HomogPoly(l.nvars(), l.degree()));
    for (std::size_t col = 0; col < v.size(); ++col) {
        if (!v[col].is_zero()) comps[l.component(col)].add_term(l.monomial(col), v[col]);
    }
    return Derivation(std::move(comps));
}

template <class F>
std::vector<typename F::value_type> to_layout_vector(const F& field, const Derivation& t, const GradedLayout& l) {
    std::vector<typename F::value_type> v(l.size(), field.zero());
    for (int i = 0; i < t.nvars(); ++i) {
        for (const auto& [m, c] : t[i].terms()) {
            std::size_t col = l.find(i, m);
            if (col == GradedLayout::npos) throw std::invalid_argument("derivation outside the module layout");
            v[col] = field.from(c);
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Membership tests.
// ---------------------------------------------------------------------------

inline bool in_module(const Arrangement& a, const Derivation& t) {
    for (const auto& f : a.forms()) {
        if (!divides(f, apply(t, f))) return false;
    }
    return true;
}

/// theta in D0(A): logarithmic and sum_H theta(alpha_H)/alpha_H = 0, i.e. theta(Q) = 0.
inline bool in_d0(const Arrangement& a, const Derivation& t) {
    HomogPoly sum(a.ell(), t.degree() > 0 ? t.degree() - 1 : 0);
    for (const auto& f : a.forms()) {
        auto div = divide_by_linear(apply(t, f), f);
        if (!div.remainder.is_zero()) return false;
        sum += div.quotient;
    }
    return sum.is_zero();
}

// ---------------------------------------------------------------------------
// Results.
// ---------------------------------------------------------------------------

struct GradedPiece {
    int degree = 0;
    std::vector<Derivation> basis;
    std::size_t dim() const { return basis.size(); }
};

inline GradedPiece graded_piece(const Arrangement& a, int d, Mode mode) {
    DerivationModule<ExactField> mod(a, mode);
    GradedPiece out;
    out.degree = d;
    for (const auto& v : mod.piece(d).vectors) out.basis.push_back(to_derivation(v, mod.layout(d)));
    return out;
}

enum class Certification { Exact, Modular };

inline const char* to_string(Certification c) { return c == Certification::Exact ? "exact" : "modular"; }

struct SearchOptions {
    enum class Path { Auto, Exact, Modular };
    Path path = Path::Auto;
    std::size_t exact_column_limit = 1500;
    bool extend_at_boundary = true;
};

struct SpotCheck {
    int degree = 0;
    std::size_t exact_dim = 0;
    std::size_t modular_dim = 0;
    bool agrees() const { return exact_dim == modular_dim; }
};

struct GeneratorSet {
    Mode mode = Mode::D;
    std::vector<int> degrees;            ///< sorted ascending
    std::vector<Derivation> generators;  ///< exact path only, aligned with `degrees`
    std::optional<std::size_t> euler_index;
    Certification certification = Certification::Exact;
    bool certified = true;
    std::vector<std::uint64_t> primes;
    std::optional<SpotCheck> spot_check;
    int regularity_bound = 0;
    int searched_to = 0;
    std::map<int, std::size_t> dims;  ///< graded dimensions that were computed
    std::vector<std::string> warnings;
};

/// |A| - rank(A) + 1, never below 0; rank(A) = ell for essential arrangements.
inline int regularity_bound(const Arrangement& a) {
    return std::max(0, static_cast<int>(a.size()) - static_cast<int>(a.rank()) + 1);
}

namespace detail {

template <class F>
struct RawGenerators {
    std::vector<GradedVector<typename F::value_type>> gens;
    std::optional<std::size_t> euler_index;
    std::map<int, std::size_t> dims;
    int searched_to = 0;
    std::vector<std::string> warnings;
};

template <class F>
RawGenerators<F> search(DerivationModule<F>& mod, int bound, bool extend) {
    using T = typename F::value_type;
    RawGenerators<F> out;
    std::function<const GradedLayout&(int)> layout_of = [&](int d) -> const GradedLayout& { return mod.layout(d); };
    const bool want_euler = mod.mode() == Mode::D && !mod.arrangement().empty();
    auto run = [&](int d) {
        std::vector<std::vector<T>> preferred;
        if (want_euler && d == 1) preferred.push_back(mod.euler_vector());
        const std::size_t before = out.gens.size();
        extend_generators(mod.field(), d, layout_of, mod.piece(d), preferred, out.gens);
        out.dims[d] = mod.dim(d);
        if (want_euler && d == 1 && out.gens.size() > before && !out.euler_index) {
            const auto& e = preferred.front();
            for (std::size_t g = before; g < out.gens.size(); ++g) {
                if (out.gens[g].coords == e) out.euler_index = g;
            }
        }
        return out.gens.size() - before;
    };
    for (int d = 0; d <= bound; ++d) run(d);
    out.searched_to = bound;
    if (extend && !out.gens.empty() && out.gens.back().degree == bound) {
        out.searched_to = bound + 1;
        if (run(bound + 1) > 0) {
            out.warnings.push_back("generators found beyond the regularity bound " + std::to_string(bound));
        }
    }
    return out;
}

template <class F>
std::vector<int> degrees_of(const RawGenerators<F>& raw) {
    std::vector<int> d;
    for (const auto& g : raw.gens) d.push_back(g.degree);
    std::sort(d.begin(), d.end());
    return d;
}

template <class M>
GeneratorSet exact_generator_set(const RawGenerators<ExactField>& raw, M& mod, int bound) {
    GeneratorSet out;
    out.mode = mod.mode();
    out.regularity_bound = bound;
    std::vector<std::size_t> order(raw.gens.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return raw.gens[x].degree < raw.gens[y].degree; });
    for (auto i : order) {
        out.degrees.push_back(raw.gens[i].degree);
        out.generators.push_back(to_derivation(raw.gens[i].coords, mod.layout(raw.gens[i].degree)));
        if (raw.euler_index && *raw.euler_index == i) out.euler_index = out.generators.size() - 1;
    }
    out.dims = raw.dims;
    out.searched_to = raw.searched_to;
    out.warnings = raw.warnings;
    out.certification = Certification::Exact;
    out.certified = true;
    return out;
}

inline std::vector<std::uint64_t> primes_for(FieldContext ctx, std::size_t count, std::uint64_t below = 1ULL << 32) {
    auto p = modular::draw_primes(count, ctx.d(), below);
    if (p.size() < count) throw std::runtime_error("not enough primes available");
    return p;
}

}  // namespace detail

inline bool use_exact_path(const Arrangement& a, int bound, const SearchOptions& opt) {
    if (opt.path != SearchOptions::Path::Auto) return opt.path == SearchOptions::Path::Exact;
    DerivationModule<ExactField> probe(a, Mode::D);
    return probe.unknowns(bound) <= opt.exact_column_limit;
}

/// Runs `body(field, prime)` for two primes, redrawing on unlucky primes.
template <class Body>
void for_two_primes(FieldContext ctx, Body&& body) {
    std::uint64_t below = 1ULL << 32;
    std::size_t done = 0;
    while (done < 2) {
        auto p = detail::primes_for(ctx, 1, below).front();
        below = p;
        try {
            body(PrimeField::make(p, ctx), p);
            ++done;
        } catch (const UnluckyPrime&) {
        }
    }
}

/// Minimal generator degrees of D(A) or D0(A) up to the regularity bound |A| - rank + 1.
inline GeneratorSet min_generators(const Arrangement& a, Mode mode, const SearchOptions& opt = {}) {
    GeneratorSet out;
    out.mode = mode;
    const int bound = regularity_bound(a);
    out.regularity_bound = bound;
    if (use_exact_path(a, bound, opt)) {
        DerivationModule<ExactField> mod(a, mode);
        auto raw = detail::search(mod, bound, opt.extend_at_boundary);
        return detail::exact_generator_set(raw, mod, bound);
    }
    std::vector<std::vector<int>> runs;
    std::map<int, std::size_t> dims;
    for_two_primes(a.ctx(), [&](const PrimeField& f, std::uint64_t p) {
        DerivationModule<PrimeField> mod(a, mode, f);
        auto raw = detail::search(mod, bound, opt.extend_at_boundary);
        runs.push_back(detail::degrees_of(raw));
        out.primes.push_back(p);
        if (runs.size() == 1) {
            dims = raw.dims;
            out.searched_to = raw.searched_to;
            out.warnings = raw.warnings;
        } else if (raw.dims != dims) {
            out.warnings.push_back("graded dimensions differ between primes");
        }
    });
    out.degrees = runs.front();
    out.dims = dims;
    out.certification = Certification::Modular;
    out.certified = runs[0] == runs[1];
    if (!out.certified) out.warnings.push_back("generator degrees differ between primes");
    // Exact spot check on the largest degree whose system is small enough.
    DerivationModule<ExactField> exact(a, mode);
    int spot = 1;
    for (int d = bound; d >= 1; --d) {
        if (exact.unknowns(d) <= opt.exact_column_limit) {
            spot = d;
            break;
        }
    }
    SpotCheck sc;
    sc.degree = spot;
    sc.exact_dim = exact.dim(spot);
    auto it = dims.find(spot);
    sc.modular_dim = it != dims.end() ? it->second : 0;
    out.spot_check = sc;
    if (!sc.agrees()) {
        out.certified = false;
        out.warnings.push_back("exact spot check disagrees at degree " + std::to_string(spot));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Resolutions.
// ---------------------------------------------------------------------------

struct ResolutionSummary {
    std::vector<int> f0_degrees;                 ///< exp(A)
    std::optional<std::vector<int>> f1_degrees;  ///< first syzygies; only for ell = 3
    std::vector<int> exp0;                       ///< generator degrees of D0(A)
    int regularity_bound = 0;
    Certification certification = Certification::Exact;
    bool certified = true;
    std::optional<bool> hilbert_identity;  ///< checked when f1 is available
    bool direct_sum_holds = true;          ///< dim D_d = dim S_{d-1} + dim D0_d on every computed d
    std::vector<std::string> warnings;
    std::map<std::string, double> timings_ms;
    GeneratorSet generators;     ///< D(A)
    GeneratorSet d0_generators;  ///< D0(A)
};

namespace detail {

/// Minimal syzygy degrees of the generators of M in D(A), for degrees up to `top`.
template <class F>
std::vector<int> syzygy_degrees(DerivationModule<F>& mod, const std::vector<GradedVector<typename F::value_type>>& gens,
                                int top) {
    using T = typename F::value_type;
    const F& field = mod.field();
    const int ell = mod.arrangement().ell();
    std::vector<int> shifts;
    for (const auto& g : gens) shifts.push_back(g.degree);
    std::map<int, GradedLayout> layouts;
    std::function<const GradedLayout&(int)> layout_of = [&](int d) -> const GradedLayout& {
        auto it = layouts.find(d);
        if (it != layouts.end()) return it->second;
        return layouts.emplace(d, GradedLayout(ell, d, shifts, {})).first->second;
    };
    std::vector<GradedVector<T>> syz;
    for (int d = 0; d <= top; ++d) {
        const GradedLayout& sl = layout_of(d);
        const auto& piece = mod.piece(d);
        const GradedLayout& dl = mod.layout(d);
        std::vector<std::size_t> pos(dl.size(), GradedLayout::npos);
        for (std::size_t k = 0; k < piece.dim(); ++k) pos[piece.free_cols[k]] = k;
        Matrix<T> m(piece.dim(), sl.size(), field.zero());
        for (std::size_t col = 0; col < sl.size(); ++col) {
            const auto& g = gens[sl.component(col)];
            auto full = shift_vector(field, g.coords, mod.layout(g.degree), sl.monomial(col), dl);
            for (std::size_t c = 0; c < full.size(); ++c) {
                if (pos[c] != GradedLayout::npos) m(pos[c], col) = full[c];
            }
        }
        KernelBasis<T> k = sl.size() ? kernel_basis(field, std::move(m)) : KernelBasis<T>{};
        extend_generators(field, d, layout_of, k, {}, syz);
    }
    std::vector<int> out;
    for (const auto& s : syz) out.push_back(s.degree);
    std::sort(out.begin(), out.end());
    return out;
}

template <class F>
struct ResolutionRun {
    RawGenerators<F> d_gens, d0_gens;
    std::optional<std::vector<int>> f1;
    std::map<int, std::size_t> d_dims, d0_dims;
};

template <class F>
ResolutionRun<F> run_resolution(const Arrangement& a, const F& field, bool extend) {
    ResolutionRun<F> out;
    const int bound = regularity_bound(a);
    DerivationModule<F> dmod(a, Mode::D, field);
    DerivationModule<F> d0mod(a, Mode::D0, field);
    out.d_gens = search(dmod, bound, extend);
    out.d0_gens = search(d0mod, bound, extend);
    int top = std::max(out.d_gens.searched_to, out.d0_gens.searched_to);
    if (a.ell() == 3) {
        top = bound + 1;
        out.f1 = syzygy_degrees(dmod, out.d_gens.gens, top);
    }
    for (int d = 0; d <= top; ++d) {
        out.d_dims[d] = dmod.dim(d);
        out.d0_dims[d] = d0mod.dim(d);
    }
    return out;
}

}  // namespace detail

/// Coefficients of sum_d dim D_d t^d * (1 - t)^ell up to degree `top`.
inline std::vector<long> hilbert_numerator(const std::map<int, std::size_t>& dims, int ell, int top) {
    std::vector<long> out(static_cast<std::size_t>(top) + 1, 0);
    for (int k = 0; k <= top; ++k) {
        long s = 0;
        for (int j = 0; j <= ell && j <= k; ++j) {
            auto it = dims.find(k - j);
            long dk = it == dims.end() ? 0 : static_cast<long>(it->second);
            long c = static_cast<long>(binomial(ell, j));
            s += (j % 2 ? -c : c) * dk;
        }
        out[k] = s;
    }
    return out;
}

/// exp, exp0 and (for ell = 3) the first syzygy degrees of D(A).
inline ResolutionSummary resolution(const Arrangement& a, const SearchOptions& opt = {}) {
    using clock = std::chrono::steady_clock;
    ResolutionSummary out;
    const int bound = regularity_bound(a);
    out.regularity_bound = bound;
    auto t0 = clock::now();
    std::map<int, std::size_t> d_dims, d0_dims;
    if (use_exact_path(a, bound, opt)) {
        auto run = detail::run_resolution(a, ExactField{}, opt.extend_at_boundary);
        DerivationModule<ExactField> dl(a, Mode::D), d0l(a, Mode::D0);
        out.generators = detail::exact_generator_set(run.d_gens, dl, bound);
        out.d0_generators = detail::exact_generator_set(run.d0_gens, d0l, bound);
        out.f0_degrees = detail::degrees_of(run.d_gens);
        out.exp0 = detail::degrees_of(run.d0_gens);
        out.f1_degrees = run.f1;
        d_dims = run.d_dims;
        d0_dims = run.d0_dims;
        out.certification = Certification::Exact;
        for (const auto& w : run.d_gens.warnings) out.warnings.push_back("D: " + w);
        for (const auto& w : run.d0_gens.warnings) out.warnings.push_back("D0: " + w);
    } else {
        std::vector<detail::ResolutionRun<PrimeField>> runs;
        std::vector<std::uint64_t> primes;
        for_two_primes(a.ctx(), [&](const PrimeField& f, std::uint64_t p) {
            runs.push_back(detail::run_resolution(a, f, opt.extend_at_boundary));
            primes.push_back(p);
        });
        const auto& r0 = runs[0];
        const auto& r1 = runs[1];
        out.f0_degrees = detail::degrees_of(r0.d_gens);
        out.exp0 = detail::degrees_of(r0.d0_gens);
        out.f1_degrees = r0.f1;
        d_dims = r0.d_dims;
        d0_dims = r0.d0_dims;
        out.certification = Certification::Modular;
        out.certified = out.f0_degrees == detail::degrees_of(r1.d_gens) && out.exp0 == detail::degrees_of(r1.d0_gens) &&
                        r0.f1 == r1.f1 && r0.d_dims == r1.d_dims;
        if (!out.certified) out.warnings.push_back("modular runs disagree between primes");
        for (const auto& w : r0.d_gens.warnings) out.warnings.push_back("D: " + w);
        for (const auto& w : r0.d0_gens.warnings) out.warnings.push_back("D0: " + w);
        // Exact spot check of one graded dimension.
        DerivationModule<ExactField> exact(a, Mode::D0);
        int spot = 1;
        for (int d = bound; d >= 1; --d) {
            if (exact.unknowns(d) <= opt.exact_column_limit) {
                spot = d;
                break;
            }
        }
        SpotCheck sc{spot, exact.dim(spot), d0_dims.count(spot) ? d0_dims.at(spot) : 0};
        if (!sc.agrees()) {
            out.certified = false;
            out.warnings.push_back("exact spot check disagrees at degree " + std::to_string(spot));
        }
        GeneratorSet d, d0;
        d.mode = Mode::D;
        d0.mode = Mode::D0;
        d.degrees = out.f0_degrees;
        d0.degrees = out.exp0;
        for (auto* g : {&d, &d0}) {
            g->certification = Certification::Modular;
            g->certified = out.certified;
            g->primes = primes;
            g->regularity_bound = bound;
        }
        d.dims = d_dims;
        d0.dims = d0_dims;
        d.searched_to = r0.d_gens.searched_to;
        d0.searched_to = r0.d0_gens.searched_to;
        d0.spot_check = sc;
        out.generators = std::move(d);
        out.d0_generators = std::move(d0);
    }
    out.timings_ms["total"] = std::chrono::duration<double, std::milli>(clock::now() - t0).count();

    if (!a.empty()) {
        for (const auto& [d, dim] : d_dims) {
            if (!d0_dims.count(d)) continue;
            if (dim != poly_space_dim(a.ell(), d - 1) + d0_dims.at(d)) out.direct_sum_holds = false;
        }
        if (!out.direct_sum_holds) out.warnings.push_back("D(A) = S*theta_E + D0(A) fails on this arrangement");
    }
    if (a.is_essential()) {
        for (int d : out.f0_degrees) {
            if (d > bound) out.warnings.push_back("generator degree " + std::to_string(d) + " exceeds the regularity bound");
        }
    }
    if (out.f1_degrees) {
        const int top = bound + 1;
        auto num = hilbert_numerator(d_dims, a.ell(), top);
        std::vector<long> expect(num.size(), 0);
        for (int x : out.f0_degrees) {
            if (x <= top) ++expect[x];
        }
        for (int x : *out.f1_degrees) {
            if (x <= top) --expect[x];
        }
        out.hilbert_identity = num == expect;
        if (!*out.hilbert_identity) {
            throw std::logic_error("Hilbert series cross-check failed: resolution data is inconsistent");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Euler restriction and genericity.
// ---------------------------------------------------------------------------

/// rho(theta): reduce theta modulo alpha_H; a derivation of the restriction's coordinate ring.
inline Derivation euler_restrict(const Derivation& t, const LinearForm& h) {
    if (h.is_zero()) throw std::invalid_argument("restriction to the zero form");
    if (!divides(h, apply(t, h))) throw std::invalid_argument("derivation is not tangent to H");
    const int k = h.pivot();
    std::vector<HomogPoly> comps;
    for (int i = 0; i < t.nvars(); ++i) {
        if (i != k) comps.push_back(reduce_mod(t[i], h));
    }
    return Derivation(std::move(comps));
}

/// Sufficient condition for the Euler sequence 0 -> D(A') -> D(A) -> D(A^H) to be right exact:
/// |A^H| > c - 1 for every first syzygy degree c of the deletion A' = A - H. Only for ell = 3.
inline bool surjectivity_check(const Arrangement& a, const LinearForm& h, const SearchOptions& opt = {}) {
    auto idx = a.index_of(h);
    if (!idx) throw std::invalid_argument("hyperplane is not in the arrangement");
    if (a.ell() != 3) throw std::invalid_argument("surjectivity check needs ell = 3");
    Arrangement deletion = delete_hyperplane(a, *idx);
    auto res = resolution(deletion, opt);
    const long restricted = static_cast<long>(restrict_to(a, h).size());
    for (int c : *res.f1_degrees) {
        if (!(restricted > c - 1)) return false;
    }
    return true;
}

/// theta_i(alpha_H) not in alpha_H S for every non-Euler generator.
inline bool alg_generic(const Arrangement& a, const GeneratorSet& gens, const LinearForm& h) {
    if (a.contains(h)) throw std::invalid_argument("hyperplane already belongs to the arrangement");
    if (gens.generators.empty() && !gens.degrees.empty()) {
        throw std::invalid_argument("generator set carries degrees only (modular run)");
    }
    for (std::size_t i = 0; i < gens.generators.size(); ++i) {
        if (gens.euler_index && *gens.euler_index == i) continue;
        if (divides(h, apply(gens.generators[i], h))) return false;
    }
    return true;
}

/// A generating set given explicitly; entries equal to the Euler derivation are flagged.
inline GeneratorSet make_generator_set(const std::vector<Derivation>& gens) {
    GeneratorSet g;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        g.generators.push_back(gens[i]);
        g.degrees.push_back(gens[i].degree());
        if (!g.euler_index && gens[i] == Derivation::euler(gens[i].nvars())) g.euler_index = i;
    }
    return g;
}

}  // namespace zpair

#endif  // ZPAIR_DERMOD_HPP
