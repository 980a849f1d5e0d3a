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

#ifndef ZPAIR_POLY_HPP
#define ZPAIR_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace zpair {

/// Exponent vector of a monomial in S = k[x_1, ..., x_n].
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
    int s = 0;
    for (int e : m) s += e;
    return s;
}

/// Graded lex, larger first: higher degree, then larger exponent of x_1, x_2, ...
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

/// All monomials of degree d in n variables, in descending graded-lex order.
inline std::vector<Monomial> monomials_of_degree(int n, int d) {
    std::vector<Monomial> out;
    if (n <= 0 || d < 0) {
        if (n == 0 && d == 0) out.emplace_back();
        return out;
    }
    Monomial m(n, 0);
    // Recursive fill: exponent of x_i runs from the remaining budget down to 0.
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == n - 1) {
            m[i] = left;
            out.push_back(m);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m[i] = e;
            self(self, i + 1, left - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

/// Fixed-degree monomial basis with an index lookup.
class MonomialBasis {
   public:
    MonomialBasis() = default;
    MonomialBasis(int nvars, int degree) : nvars_(nvars), degree_(degree), list_(monomials_of_degree(nvars, degree)) {
        for (std::size_t i = 0; i < list_.size(); ++i) index_.emplace(list_[i], i);
    }
    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    std::size_t size() const { return list_.size(); }
    const Monomial& operator[](std::size_t i) const { return list_[i]; }
    const std::vector<Monomial>& list() const { return list_; }
    /// Index of m, or size() when m is not in the basis.
    std::size_t find(const Monomial& m) const {
        auto it = index_.find(m);
        return it == index_.end() ? list_.size() : it->second;
    }

   private:
    int nvars_ = 0;
    int degree_ = 0;
    std::vector<Monomial> list_;
    std::map<Monomial, std::size_t> index_;
};

inline std::string variable_name(int i, int nvars) {
    static const char* short_names[] = {"x", "y", "z", "w"};
    if (nvars <= 4) return short_names[i];
    return "x" + std::to_string(i + 1);
}

/// Homogeneous polynomial; only nonzero coefficients are stored.
class HomogPoly {
   public:
    using Terms = std::map<Monomial, Scalar, GrlexGreater>;

    HomogPoly() = default;
    HomogPoly(int nvars, int degree) : nvars_(nvars), degree_(degree) {
        if (degree < 0) throw std::invalid_argument("negative degree");
    }

    static HomogPoly monomial(const Monomial& m, const Scalar& c = 1) {
        HomogPoly p(static_cast<int>(m.size()), total_degree(m));
        p.add_term(m, c);
        return p;
    }

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(const Monomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        if (static_cast<int>(m.size()) != nvars_ || total_degree(m) != degree_) {
            throw std::invalid_argument("monomial does not match polynomial shape");
        }
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    HomogPoly& operator+=(const HomogPoly& o) {
        check_same_shape(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    HomogPoly& operator-=(const HomogPoly& o) {
        check_same_shape(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    HomogPoly& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
    friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
    friend HomogPoly operator*(HomogPoly a, const Scalar& s) { return a *= s; }
    friend HomogPoly operator*(const Scalar& s, HomogPoly a) { return a *= s; }
    HomogPoly operator-() const { return *this * Scalar(-1); }

    friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
        HomogPoly r(a.nvars_, a.degree_ + b.degree_);
        Monomial m(a.nvars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    /// Multiplication by the variable x_j (shifts every exponent vector).
    HomogPoly times_variable(int j) const {
        HomogPoly r(nvars_, degree_ + 1);
        for (const auto& [m, c] : terms_) {
            Monomial mm = m;
            ++mm[j];
            r.terms_.emplace(std::move(mm), c);
        }
        return r;
    }

    HomogPoly partial(int i) const {
        HomogPoly r(nvars_, degree_ > 0 ? degree_ - 1 : 0);
        if (degree_ == 0) return r;
        for (const auto& [m, c] : terms_) {
            if (m[i] == 0) continue;
            Monomial mm = m;
            --mm[i];
            r.add_term(mm, c * Scalar(m[i]));
        }
        return r;
    }

    friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
        if (a.is_zero() && b.is_zero()) return a.nvars_ == b.nvars_;
        return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = zpair::to_string(c);
            bool neg = c.is_rational() && sgn(c.rational_part()) < 0;
            if (neg) cs = zpair::to_string(-c);
            bool is_unit = cs == "1";
            if (!c.is_rational()) cs = "(" + cs + ")";
            if (first) {
                out += neg ? "-" : "";
            } else {
                out += neg ? " - " : " + ";
            }
            first = false;
            std::string mono;
            for (int i = 0; i < nvars_; ++i) {
                if (m[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += variable_name(i, nvars_);
                if (m[i] > 1) mono += "^" + std::to_string(m[i]);
            }
            if (mono.empty()) {
                out += cs;
            } else {
                out += is_unit ? mono : cs + "*" + mono;
            }
        }
        return out;
    }

   private:
    // A zero polynomial adopts the degree of the other operand.
    void check_same_shape(const HomogPoly& o) {
        if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
        if (o.degree_ == degree_ || o.is_zero()) return;
        if (!is_zero()) throw std::invalid_argument("degree mismatch");
        degree_ = o.degree_;
    }

    int nvars_ = 0;
    int degree_ = 0;
    Terms terms_;
};

/// Linear form sum c_i x_i; defines the hyperplane ker(alpha).
class LinearForm {
   public:
    LinearForm() = default;
    explicit LinearForm(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}

    static LinearForm variable(int i, int nvars) {
        std::vector<Scalar> c(nvars);
        c[i] = 1;
        return LinearForm(std::move(c));
    }

    int nvars() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const Scalar& operator[](int i) const { return coeffs_[i]; }
    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
    }

    /// Largest index with a nonzero coefficient; -1 for the zero form.
    int pivot() const {
        for (int i = nvars(); i-- > 0;) {
            if (!coeffs_[i].is_zero()) return i;
        }
        return -1;
    }

    /// Scaled so that the first nonzero coefficient is 1.
    LinearForm normalized() const {
        for (const auto& c : coeffs_) {
            if (!c.is_zero()) {
                Scalar inv = c.inverse();
                std::vector<Scalar> out;
                out.reserve(coeffs_.size());
                for (const auto& x : coeffs_) out.push_back(x * inv);
                return LinearForm(std::move(out));
            }
        }
        throw std::invalid_argument("zero linear form");
    }

    HomogPoly to_poly() const {
        HomogPoly p(nvars(), 1);
        for (int i = 0; i < nvars(); ++i) {
            Monomial m(nvars(), 0);
            m[i] = 1;
            p.add_term(m, coeffs_[i]);
        }
        return p;
    }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) out += " ";
            out += zpair::to_string(coeffs_[i]);
        }
        return out;
    }

   private:
    std::vector<Scalar> coeffs_;
};

/// True when a and b define the same hyperplane.
inline bool projectively_equal(const LinearForm& a, const LinearForm& b) {
    if (a.nvars() != b.nvars() || a.is_zero() || b.is_zero()) return false;
    return a.normalized() == b.normalized();
}

struct LinearDivision {
    HomogPoly quotient;
    HomogPoly remainder;  ///< free of the pivot variable, still written in all variables
};

/// f = q * alpha + r where r does not involve the pivot variable of alpha.
inline LinearDivision divide_by_linear(const HomogPoly& f, const LinearForm& alpha) {
    int k = alpha.pivot();
    if (k < 0) throw std::invalid_argument("division by the zero form");
    if (alpha.nvars() != f.nvars()) throw std::invalid_argument("dimension mismatch");
    int n = f.nvars();
    Scalar inv_ck = alpha[k].inverse();
    HomogPoly q(n, f.degree() > 0 ? f.degree() - 1 : 0);
    HomogPoly r(n, f.degree());
    // Pending terms are processed from the highest power of x_k downwards, using
    // x_k = (alpha - sum_{i != k} c_i x_i) / c_k.
    std::map<Monomial, Scalar, GrlexGreater> pending(f.terms().begin(), f.terms().end());
    while (!pending.empty()) {
        auto it = std::max_element(pending.begin(), pending.end(),
                                   [k](const auto& a, const auto& b) { return a.first[k] < b.first[k]; });
        if (it->first[k] == 0) {
            for (const auto& [m, c] : pending) r.add_term(m, c);
            break;
        }
        Monomial g = it->first;
        Scalar c = it->second;
        pending.erase(it);
        --g[k];
        Scalar qc = c * inv_ck;
        q.add_term(g, qc);
        for (int i = 0; i < n; ++i) {
            if (i == k || alpha[i].is_zero()) continue;
            Monomial m = g;
            ++m[i];
            Scalar delta = -(qc * alpha[i]);
            auto [pit, inserted] = pending.try_emplace(m, delta);
            if (!inserted) {
                pit->second += delta;
                if (pit->second.is_zero()) pending.erase(pit);
            }
        }
    }
    return {std::move(q), std::move(r)};
}

/// Memoized division of monomials by a fixed linear form alpha with pivot x_k:
/// m = quotient(m) * alpha + remainder(m), remainder free of x_k.
class ReductionTable {
   public:
    explicit ReductionTable(LinearForm alpha) : alpha_(std::move(alpha)), k_(alpha_.pivot()) {
        if (k_ < 0) throw std::invalid_argument("reduction by the zero form");
        inv_ck_ = alpha_[k_].inverse();
    }

    const LinearForm& form() const { return alpha_; }
    int pivot() const { return k_; }

    const LinearDivision& divide(const Monomial& m) {
        auto it = memo_.find(m);
        if (it != memo_.end()) return it->second;
        const int n = alpha_.nvars();
        const int d = total_degree(m);
        LinearDivision out{HomogPoly(n, d > 0 ? d - 1 : 0), HomogPoly(n, d)};
        if (m[k_] == 0) {
            out.remainder.add_term(m, 1);
        } else {
            // x_k g = (alpha g - sum_{i != k} c_i x_i g) / c_k
            Monomial g = m;
            --g[k_];
            out.quotient.add_term(g, inv_ck_);
            for (int i = 0; i < n; ++i) {
                if (i == k_ || alpha_[i].is_zero()) continue;
                Monomial gi = g;
                ++gi[i];
                Scalar f = -(alpha_[i] * inv_ck_);
                const LinearDivision& sub = divide(gi);
                out.quotient += sub.quotient * f;
                out.remainder += sub.remainder * f;
            }
        }
        return memo_.emplace(m, std::move(out)).first->second;
    }

   private:
    LinearForm alpha_;
    int k_;
    Scalar inv_ck_;
    std::map<Monomial, LinearDivision> memo_;
};

/// Drops variable k from a polynomial that does not involve it.
inline HomogPoly drop_variable(const HomogPoly& f, int k) {
    HomogPoly out(f.nvars() - 1, f.degree());
    for (const auto& [m, c] : f.terms()) {
        if (m[k] != 0) throw std::invalid_argument("polynomial involves the dropped variable");
        Monomial mm;
        mm.reserve(m.size() - 1);
        for (int i = 0; i < f.nvars(); ++i) {
            if (i != k) mm.push_back(m[i]);
        }
        out.add_term(mm, c);
    }
    return out;
}

/// Image of f in S/(alpha), written in the variables other than the pivot of alpha.
inline HomogPoly reduce_mod(const HomogPoly& f, const LinearForm& alpha) {
    return drop_variable(divide_by_linear(f, alpha).remainder, alpha.pivot());
}

/// Image of a linear form in S/(alpha); used for restriction.
inline LinearForm reduce_mod(const LinearForm& beta, const LinearForm& alpha) {
    HomogPoly r = reduce_mod(beta.to_poly(), alpha);
    int n = alpha.nvars() - 1;
    std::vector<Scalar> c(n);
    for (int i = 0; i < n; ++i) {
        Monomial m(n, 0);
        m[i] = 1;
        c[i] = r.coeff(m);
    }
    return LinearForm(std::move(c));
}

inline bool divides(const LinearForm& alpha, const HomogPoly& f) {
    if (f.is_zero()) return true;
    return divide_by_linear(f, alpha).remainder.is_zero();
}

/// theta = sum p_i d/dx_i with every p_i homogeneous of the same degree.
class Derivation {
   public:
    Derivation() = default;
    Derivation(int nvars, int degree) : degree_(degree) {
        comps_.reserve(nvars);
        for (int i = 0; i < nvars; ++i) comps_.emplace_back(nvars, degree);
    }
    explicit Derivation(std::vector<HomogPoly> comps) : comps_(std::move(comps)) {
        if (comps_.empty()) return;
        degree_ = comps_.front().degree();
        for (const auto& p : comps_) {
            if (p.nvars() != nvars()) throw std::invalid_argument("component variable count mismatch");
            if (!p.is_zero() && p.degree() != degree_) {
                if (comps_.front().is_zero()) {
                    degree_ = p.degree();
                } else {
                    throw std::invalid_argument("derivation is not homogeneous");
                }
            }
        }
        for (auto& p : comps_) {
            if (p.is_zero()) p = HomogPoly(nvars(), degree_);
        }
    }

    static Derivation euler(int nvars) {
        Derivation t(nvars, 1);
        for (int i = 0; i < nvars; ++i) {
            Monomial m(nvars, 0);
            m[i] = 1;
            t.comps_[i].add_term(m, 1);
        }
        return t;
    }

    /// p * d/dx_i.
    static Derivation coordinate(int i, const HomogPoly& p) {
        Derivation t(p.nvars(), p.degree());
        t.comps_[i] = p;
        return t;
    }

    int nvars() const { return static_cast<int>(comps_.size()); }
    int degree() const { return degree_; }
    const std::vector<HomogPoly>& comps() const { return comps_; }
    const HomogPoly& operator[](int i) const { return comps_[i]; }
    bool is_zero() const {
        return std::all_of(comps_.begin(), comps_.end(), [](const HomogPoly& p) { return p.is_zero(); });
    }

    Derivation& operator+=(const Derivation& o) {
        check(o);
        for (int i = 0; i < nvars(); ++i) comps_[i] += o.comps_[i];
        return *this;
    }
    Derivation& operator-=(const Derivation& o) {
        check(o);
        for (int i = 0; i < nvars(); ++i) comps_[i] -= o.comps_[i];
        return *this;
    }
    friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
    friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
    friend Derivation operator*(const Scalar& s, Derivation t) {
        for (auto& p : t.comps_) p *= s;
        return t;
    }
    friend Derivation operator*(const HomogPoly& f, const Derivation& t) {
        Derivation r(t.nvars(), t.degree() + f.degree());
        for (int i = 0; i < t.nvars(); ++i) r.comps_[i] = f * t.comps_[i];
        return r;
    }

    /// theta(f) = sum p_i * df/dx_i.
    HomogPoly operator()(const HomogPoly& f) const {
        int deg = f.degree() > 0 ? f.degree() - 1 + degree_ : degree_;
        HomogPoly out(nvars(), deg);
        if (f.degree() == 0) return out;
        for (int i = 0; i < nvars(); ++i) out += comps_[i] * f.partial(i);
        return out;
    }

    friend bool operator==(const Derivation& a, const Derivation& b) {
        if (a.nvars() != b.nvars()) return false;
        for (int i = 0; i < a.nvars(); ++i) {
            if (!(a.comps_[i] == b.comps_[i])) return false;
        }
        return true;
    }

    std::string to_string() const {
        std::string out;
        for (int i = 0; i < nvars(); ++i) {
            if (comps_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + comps_[i].to_string() + ")*d" + variable_name(i, nvars());
        }
        return out.empty() ? "0" : out;
    }

   private:
    void check(const Derivation& o) {
        if (o.nvars() != nvars()) throw std::invalid_argument("derivation dimension mismatch");
        if (o.degree_ != degree_) {
            if (is_zero()) {
                *this = Derivation(nvars(), o.degree_);
            } else if (!o.is_zero()) {
                throw std::invalid_argument("derivation degree mismatch");
            }
        }
    }

    int degree_ = 0;
    std::vector<HomogPoly> comps_;
};

/// theta(alpha) = sum c_i p_i.
inline HomogPoly apply(const Derivation& theta, const LinearForm& alpha) {
    if (theta.nvars() != alpha.nvars()) throw std::invalid_argument("dimension mismatch in apply");
    HomogPoly out(theta.nvars(), theta.degree());
    for (int i = 0; i < alpha.nvars(); ++i) {
        if (alpha[i].is_zero()) continue;
        out += theta[i] * alpha[i];
    }
    return out;
}

}  // namespace zpair

#endif  // ZPAIR_POLY_HPP
