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

#ifndef ZPAIR_LINALG_HPP
#define ZPAIR_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "modular.hpp"
#include "scalar.hpp"

namespace zpair {

// ---------------------------------------------------------------------------
// Coefficient field policies. Both expose value_type, zero/one, is_zero,
// add/sub/mul/inv, the fused a - f*b used by elimination, and from(Scalar).
// ---------------------------------------------------------------------------

struct ExactField {
    using value_type = Scalar;

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static bool is_zero(const Scalar& x) { return x.is_zero(); }
    static Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
    static Scalar sub(const Scalar& a, const Scalar& b) { return a - b; }
    static Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
    static Scalar neg(const Scalar& a) { return -a; }
    static Scalar inv(const Scalar& a) { return a.inverse(); }
    static void sub_mul(Scalar& a, const Scalar& f, const Scalar& b) { a -= f * b; }
    static Scalar from(const Scalar& s) { return s; }
};

/// F_p for a prime p < 2^32, with sqrt(d) sent to a fixed square root of d.
struct PrimeField {
    using value_type = std::uint64_t;

    std::uint64_t p = 0;
    std::uint64_t root = 0;

    /// Throws UnluckyPrime when d is not a square modulo p.
    static PrimeField make(std::uint64_t p, FieldContext ctx) {
        if (p >= (1ULL << 32) || !modular::is_prime(p)) throw std::invalid_argument("modulus must be a prime below 2^32");
        PrimeField f{p, 0};
        if (!ctx.is_rational()) {
            auto r = modular::sqrt_mod(static_cast<std::uint64_t>(ctx.d()), p);
            if (!r) throw UnluckyPrime("d is not a square modulo p");
            f.root = *r;
        }
        return f;
    }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(value_type x) const { return x == 0; }
    value_type add(value_type a, value_type b) const { return (a + b) % p; }
    value_type sub(value_type a, value_type b) const { return (a + p - b) % p; }
    value_type mul(value_type a, value_type b) const { return (a * b) % p; }
    value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
    value_type inv(value_type a) const { return modular::inv_mod(a, p); }
    void sub_mul(value_type& a, value_type f, value_type b) const { a = (a + (p - f) * b) % p; }
    value_type from(const Scalar& s) const { return s.residue(p, root); }
};

template <class T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
            std::copy(rows[i].begin(), rows[i].end(), m.row(i));
        }
        return m;
    }

    static Matrix identity(std::size_t n, const T& one, const T& zero) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    T* row(std::size_t i) { return data_.data() + i * cols_; }
    const T* row(std::size_t i) const { return data_.data() + i * cols_; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap_ranges(row(a), row(a) + cols_, row(b));
    }

    void truncate_rows(std::size_t n) {
        rows_ = std::min(rows_, n);
        data_.resize(rows_ * cols_);
    }

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ExactMatrix = Matrix<Scalar>;

/// Sparse entry list, converted into a dense matrix over any field policy.
struct SparseEntries {
    std::size_t rows = 0;
    std::size_t cols = 0;
    struct Entry {
        std::size_t row, col;
        Scalar value;
    };
    std::vector<Entry> entries;

    void add(std::size_t r, std::size_t c, const Scalar& v) {
        if (!v.is_zero()) entries.push_back({r, c, v});
    }

    template <class F>
    Matrix<typename F::value_type> to_dense(const F& field) const {
        Matrix<typename F::value_type> m(rows, cols, field.zero());
        for (const auto& e : entries) m(e.row, e.col) = field.add(m(e.row, e.col), field.from(e.value));
        return m;
    }
};

template <class T>
struct Rref {
    Matrix<T> reduced;                ///< first rank() rows, pivots equal to one
    std::vector<std::size_t> pivots;  ///< pivot column of each row
    std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination over a field. Among candidate pivots the sparsest row is chosen.
template <class F>
Rref<typename F::value_type> rref(const F& field, Matrix<typename F::value_type> m) {
    using T = typename F::value_type;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> nz;
    std::vector<std::size_t> row_weight(rows, 0);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_weight = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (field.is_zero(m(i, c))) continue;
            std::size_t w = 0;
            for (std::size_t j = c; j < cols; ++j) w += field.is_zero(m(i, j)) ? 0 : 1;
            if (best == rows || w < best_weight) {
                best = i;
                best_weight = w;
                if (w == 1) break;
            }
            if constexpr (!std::is_same_v<F, ExactField>) break;
        }
        if (best == rows) continue;
        m.swap_rows(r, best);
        T* pr = m.row(r);
        T inv = field.inv(pr[c]);
        nz.clear();
        for (std::size_t j = c; j < cols; ++j) {
            if (field.is_zero(pr[j])) continue;
            pr[j] = field.mul(pr[j], inv);
            nz.push_back(j);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            T* pi = m.row(i);
            if (field.is_zero(pi[c])) continue;
            T f = pi[c];
            for (std::size_t j : nz) field.sub_mul(pi[j], f, pr[j]);
        }
        pivots.push_back(c);
        ++r;
    }
    m.truncate_rows(r);
    return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const F& field, Matrix<typename F::value_type> m) {
    return rref(field, std::move(m)).rank();
}

/// Right-kernel basis. Vector k has a one in free column free_cols[k] and zeros in the
/// other free columns, so a kernel element is determined by its free coordinates.
template <class T>
struct KernelBasis {
    std::vector<std::vector<T>> vectors;
    std::vector<std::size_t> free_cols;
    std::size_t dim() const { return vectors.size(); }
};

template <class F>
KernelBasis<typename F::value_type> kernel_from_rref(const F& field, const Rref<typename F::value_type>& e,
                                                     std::size_t cols) {
    using T = typename F::value_type;
    KernelBasis<T> k;
    std::vector<char> is_pivot(cols, 0);
    for (auto c : e.pivots) is_pivot[c] = 1;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(cols, field.zero());
        v[f] = field.one();
        for (std::size_t i = 0; i < e.rank(); ++i) {
            const T& x = e.reduced(i, f);
            if (!field.is_zero(x)) v[e.pivots[i]] = field.neg(x);
        }
        k.vectors.push_back(std::move(v));
        k.free_cols.push_back(f);
    }
    return k;
}

template <class F>
KernelBasis<typename F::value_type> kernel_basis(const F& field, Matrix<typename F::value_type> m) {
    std::size_t cols = m.cols();
    return kernel_from_rref(field, rref(field, std::move(m)), cols);
}

inline std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m) {
    return kernel_basis(ExactField{}, m).vectors;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination (Bareiss). Rows are scaled to integral entries
// first; every intermediate entry is then a minor, so the divisions are exact.
// ---------------------------------------------------------------------------

namespace detail {

inline void make_row_integral(Scalar* row, std::size_t cols) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) {
        if (row[j].is_zero()) continue;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), row[j].rational_part().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), row[j].sqrt_part().get_den_mpz_t());
    }
    if (l == 1) return;
    Scalar s{mpq_class(l)};
    for (std::size_t j = 0; j < cols; ++j) {
        if (!row[j].is_zero()) row[j] *= s;
    }
}

}  // namespace detail

/// Fraction-free Gauss-Jordan. Returns the same pivots and reduced rows as rref().
inline Rref<Scalar> fraction_free_rref(ExactMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t i = 0; i < rows; ++i) detail::make_row_integral(m.row(i), cols);
    Scalar prev = 1;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!m(i, c).is_zero()) {
                best = i;
                break;
            }
        }
        if (best == rows) continue;
        m.swap_rows(r, best);
        const Scalar piv = m(r, c);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            Scalar* pi = m.row(i);
            const Scalar* pr = m.row(r);
            Scalar f = pi[c];
            // Rows above r hold the previous common pivot on their own pivot column,
            // so the update below keeps every pivot equal to the newest one.
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == c) continue;
                bool zi = pi[j].is_zero();
                bool zr = f.is_zero() || pr[j].is_zero();
                if (zi && zr) continue;
                Scalar v = zi ? Scalar() : piv * pi[j];
                if (!zr) v -= f * pr[j];
                if (!prev.is_one()) v /= prev;
                pi[j] = std::move(v);
            }
            pi[c] = Scalar();
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    m.truncate_rows(r);
    if (r > 0) {
        Scalar inv = prev.inverse();
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                if (!m(i, j).is_zero()) m(i, j) *= inv;
            }
        }
    }
    return {std::move(m), std::move(pivots)};
}

/// Rank over the exact field by fraction-free forward elimination.
inline std::size_t bareiss_rank(ExactMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t i = 0; i < rows; ++i) detail::make_row_integral(m.row(i), cols);
    Scalar prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!m(i, c).is_zero()) {
                best = i;
                break;
            }
        }
        if (best == rows) continue;
        m.swap_rows(r, best);
        const Scalar piv = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            Scalar* pi = m.row(i);
            const Scalar* pr = m.row(r);
            Scalar f = pi[c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                Scalar v = piv * pi[j];
                if (!f.is_zero() && !pr[j].is_zero()) v -= f * pr[j];
                if (!prev.is_one() && !v.is_zero()) v /= prev;
                pi[j] = std::move(v);
            }
            pi[c] = Scalar();
        }
        prev = piv;
        ++r;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Incremental echelon basis and complements.
// ---------------------------------------------------------------------------

/// Fully reduced row basis that grows one vector at a time.
template <class F>
class EchelonBasis {
   public:
    using T = typename F::value_type;

    EchelonBasis(F field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }

    /// Reduces v against the basis; returns the remainder.
    std::vector<T> reduce(std::vector<T> v) const {
        if (v.size() != dim_) throw std::invalid_argument("vector length mismatch");
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            T f = v[pivots_[i]];
            if (field_.is_zero(f)) continue;
            const auto& row = rows_[i];
            for (std::size_t j = 0; j < dim_; ++j) {
                if (!field_.is_zero(row[j])) field_.sub_mul(v[j], f, row[j]);
            }
        }
        return v;
    }

    bool contains(const std::vector<T>& v) const {
        auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [&](const T& x) { return field_.is_zero(x); });
    }

    /// Adds v when independent; returns whether it was.
    bool insert(const std::vector<T>& v) {
        auto r = reduce(v);
        std::size_t pc = dim_;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!field_.is_zero(r[j])) {
                pc = j;
                break;
            }
        }
        if (pc == dim_) return false;
        T inv = field_.inv(r[pc]);
        for (auto& x : r) {
            if (!field_.is_zero(x)) x = field_.mul(x, inv);
        }
        for (auto& row : rows_) {
            T f = row[pc];
            if (field_.is_zero(f)) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (!field_.is_zero(r[j])) field_.sub_mul(row[j], f, r[j]);
            }
        }
        rows_.push_back(std::move(r));
        pivots_.push_back(pc);
        return true;
    }

   private:
    F field_;
    std::size_t dim_;
    std::vector<std::vector<T>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Indices of the vectors of W that extend a basis of span(U) to span(W), chosen greedily
/// in the order of W. Requires span(U) inside span(W).
template <class F>
std::vector<std::size_t> complement_indices(const F& field, const std::vector<std::vector<typename F::value_type>>& U,
                                            const std::vector<std::vector<typename F::value_type>>& W,
                                            std::size_t dim) {
    EchelonBasis<F> wbasis(field, dim);
    for (const auto& w : W) wbasis.insert(w);
    EchelonBasis<F> basis(field, dim);
    for (const auto& u : U) {
        if (!wbasis.contains(u)) throw std::invalid_argument("complement_in: span(U) is not contained in span(W)");
        basis.insert(u);
    }
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < W.size(); ++k) {
        if (basis.insert(W[k])) out.push_back(k);
    }
    return out;
}

inline std::vector<std::vector<Scalar>> complement_in(const std::vector<std::vector<Scalar>>& U,
                                                      const std::vector<std::vector<Scalar>>& W) {
    std::size_t dim = !W.empty() ? W.front().size() : (!U.empty() ? U.front().size() : 0);
    std::vector<std::vector<Scalar>> out;
    for (auto k : complement_indices(ExactField{}, U, W, dim)) out.push_back(W[k]);
    return out;
}

// ---------------------------------------------------------------------------
// Multi-modular rank.
// ---------------------------------------------------------------------------

struct ModularRank {
    std::size_t rank = 0;
    bool certified = false;  ///< all primes agree
    std::vector<std::uint64_t> primes;
    std::vector<std::size_t> ranks;
};

/// Rank modulo each prime. A prime dividing a denominator, or one modulo which d is
/// not a square, raises UnluckyPrime so the caller can draw another.
inline ModularRank modular_rank(const ExactMatrix& m, FieldContext ctx, const std::vector<std::uint64_t>& primes) {
    if (primes.empty()) throw std::invalid_argument("modular_rank needs at least one prime");
    ModularRank out;
    for (auto p : primes) {
        if (p < (1ULL << 31)) throw std::invalid_argument("modular_rank expects primes >= 2^31");
        PrimeField f = PrimeField::make(p, ctx);
        Matrix<std::uint64_t> mm(m.rows(), m.cols(), 0);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) mm(i, j) = f.from(m(i, j));
        }
        out.primes.push_back(p);
        out.ranks.push_back(rank(f, std::move(mm)));
    }
    out.rank = *std::min_element(out.ranks.begin(), out.ranks.end());
    out.certified = std::all_of(out.ranks.begin(), out.ranks.end(), [&](std::size_t r) { return r == out.ranks[0]; });
    return out;
}

/// Matrix-vector product over a field policy.
template <class F>
std::vector<typename F::value_type> multiply(const F& field, const Matrix<typename F::value_type>& m,
                                             const std::vector<typename F::value_type>& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("dimension mismatch in multiply");
    std::vector<typename F::value_type> out(m.rows(), field.zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!field.is_zero(m(i, j)) && !field.is_zero(v[j])) out[i] = field.add(out[i], field.mul(m(i, j), v[j]));
        }
    }
    return out;
}

}  // namespace zpair

#endif  // ZPAIR_LINALG_HPP
