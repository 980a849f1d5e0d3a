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

#ifndef ZPAIR_ARRANGEMENT_HPP
#define ZPAIR_ARRANGEMENT_HPP

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"
#include "scalar.hpp"

namespace zpair {

/// Central arrangement in k^ell: normalized, pairwise distinct linear forms, kept in input order.
class Arrangement {
   public:
    Arrangement() = default;
    Arrangement(int ell, FieldContext ctx, const std::vector<LinearForm>& forms = {}) : ell_(ell), ctx_(ctx) {
        if (ell < 1) throw std::invalid_argument("ambient dimension must be positive");
        for (const auto& f : forms) push(f);
    }

    int ell() const { return ell_; }
    FieldContext ctx() const { return ctx_; }
    std::size_t size() const { return forms_.size(); }
    bool empty() const { return forms_.empty(); }
    const std::vector<LinearForm>& forms() const { return forms_; }
    const LinearForm& operator[](std::size_t i) const { return forms_[i]; }

    std::optional<std::size_t> index_of(const LinearForm& h) const {
        if (h.nvars() != ell_ || h.is_zero()) return std::nullopt;
        LinearForm n = h.normalized();
        for (std::size_t i = 0; i < forms_.size(); ++i) {
            if (forms_[i] == n) return i;
        }
        return std::nullopt;
    }
    bool contains(const LinearForm& h) const { return index_of(h).has_value(); }

    /// Dimension of the span of the defining forms.
    std::size_t rank() const {
        if (forms_.empty()) return 0;
        ExactMatrix m(forms_.size(), ell_);
        for (std::size_t i = 0; i < forms_.size(); ++i) {
            for (int j = 0; j < ell_; ++j) m(i, j) = forms_[i][j];
        }
        return zpair::rank(ExactField{}, std::move(m));
    }
    bool is_essential() const { return rank() == static_cast<std::size_t>(ell_); }

    /// Appends a form; rejects zero forms, wrong dimension, foreign field and projective duplicates.
    void push(const LinearForm& f) {
        if (f.nvars() != ell_) throw std::invalid_argument("linear form has the wrong number of coefficients");
        if (f.is_zero()) throw std::invalid_argument("zero linear form");
        for (const auto& c : f.coeffs()) {
            if (!c.is_rational() && c.d() != ctx_.d()) throw std::invalid_argument("coefficient outside the field");
        }
        LinearForm n = f.normalized();
        for (const auto& g : forms_) {
            if (g == n) throw std::invalid_argument("duplicate hyperplane: " + n.to_string());
        }
        forms_.push_back(std::move(n));
    }

    friend bool operator==(const Arrangement& a, const Arrangement& b) {
        return a.ell_ == b.ell_ && a.ctx_ == b.ctx_ && a.forms_ == b.forms_;
    }

   private:
    int ell_ = 1;
    FieldContext ctx_;
    std::vector<LinearForm> forms_;
};

inline LinearForm pad_form(const LinearForm& f, int left, int right) {
    std::vector<Scalar> c(left);
    c.insert(c.end(), f.coeffs().begin(), f.coeffs().end());
    c.resize(c.size() + right);
    return LinearForm(std::move(c));
}

/// A_1 x A_2 in k^{ell_1 + ell_2}.
inline Arrangement product(const Arrangement& a, const Arrangement& b) {
    if (!(a.ctx() == b.ctx())) {
        if (!a.ctx().is_rational() && !b.ctx().is_rational()) throw std::invalid_argument("product of different fields");
    }
    FieldContext ctx = a.ctx().is_rational() ? b.ctx() : a.ctx();
    Arrangement out(a.ell() + b.ell(), ctx);
    for (const auto& f : a.forms()) out.push(pad_form(f, 0, b.ell()));
    for (const auto& f : b.forms()) out.push(pad_form(f, a.ell(), 0));
    return out;
}

/// Coning: forms padded with a zero coefficient plus the new coordinate hyperplane.
inline Arrangement cone(const Arrangement& a) {
    Arrangement out(a.ell() + 1, a.ctx());
    for (const auto& f : a.forms()) out.push(pad_form(f, 0, 1));
    out.push(LinearForm::variable(a.ell(), a.ell() + 1));
    return out;
}

inline Arrangement cone(const Arrangement& a, int times) {
    Arrangement out = a;
    for (int i = 0; i < times; ++i) out = cone(out);
    return out;
}

inline Arrangement add_hyperplane(const Arrangement& a, const LinearForm& h) {
    Arrangement out = a;
    out.push(h);
    return out;
}

inline Arrangement delete_hyperplane(const Arrangement& a, std::size_t i) {
    if (i >= a.size()) throw std::out_of_range("hyperplane index out of range");
    Arrangement out(a.ell(), a.ctx());
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (k != i) out.push(a[k]);
    }
    return out;
}

/// A^H in the coordinates left after eliminating the pivot variable of H.
inline Arrangement restrict_to(const Arrangement& a, const LinearForm& h) {
    if (h.is_zero()) throw std::invalid_argument("restriction to the zero form");
    if (h.nvars() != a.ell()) throw std::invalid_argument("hyperplane dimension mismatch");
    if (a.ell() < 2) throw std::invalid_argument("cannot restrict a one-dimensional arrangement");
    Arrangement out(a.ell() - 1, a.ctx());
    for (const auto& k : a.forms()) {
        if (projectively_equal(k, h)) continue;
        LinearForm r = reduce_mod(k, h);
        if (r.is_zero() || out.contains(r)) continue;
        out.push(r);
    }
    return out;
}

/// Forms composed with the coordinate change x = g y (coefficient row c becomes c g).
inline Arrangement transform(const Arrangement& a, const ExactMatrix& g) {
    const auto n = static_cast<std::size_t>(a.ell());
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("transform needs a square matrix");
    if (rank(ExactField{}, g) != n) throw std::invalid_argument("transform needs an invertible matrix");
    Arrangement out(a.ell(), a.ctx());
    for (const auto& f : a.forms()) {
        std::vector<Scalar> c(n);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) c[j] += f[static_cast<int>(i)] * g(i, j);
        }
        out.push(LinearForm(std::move(c)));
    }
    return out;
}

/// Defining polynomial Q(A).
inline HomogPoly defining_polynomial(const Arrangement& a) {
    HomogPoly q = HomogPoly::monomial(Monomial(a.ell(), 0));
    for (const auto& f : a.forms()) q = q * f.to_poly();
    return q;
}

// ---------------------------------------------------------------------------
// Text format:
//   field Q | field Q(sqrt d)
//   dim <ell>
//   one coefficient vector per line; '#' starts a comment.
// ---------------------------------------------------------------------------

inline FieldContext parse_field_spec(const std::string& spec) {
    if (spec == "Q") return FieldContext::rationals();
    const std::string head = "Q(sqrt ";
    if (spec.rfind(head, 0) == 0 && spec.back() == ')') {
        std::string num = spec.substr(head.size(), spec.size() - head.size() - 1);
        std::size_t used = 0;
        long d = 0;
        try {
            d = std::stol(num, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == num.size() && used > 0) return FieldContext::quadratic(d);
    }
    throw std::invalid_argument("unknown field '" + spec + "'");
}

inline LinearForm parse_form(const std::string& line, FieldContext ctx, int ell) {
    std::istringstream ss(line);
    std::vector<Scalar> c;
    std::string tok;
    while (ss >> tok) c.push_back(parse_scalar(tok, ctx));
    if (ell > 0 && static_cast<int>(c.size()) != ell) {
        throw std::invalid_argument("expected " + std::to_string(ell) + " coefficients in '" + line + "'");
    }
    return LinearForm(std::move(c));
}

inline Arrangement parse_arrangement(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::optional<FieldContext> ctx;
    std::optional<int> ell;
    std::vector<LinearForm> forms;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        try {
            if (line.rfind("field", 0) == 0) {
                if (ctx) throw std::invalid_argument("duplicate field line");
                auto rest = line.substr(5);
                rest.erase(0, rest.find_first_not_of(" \t"));
                ctx = parse_field_spec(rest);
            } else if (line.rfind("dim", 0) == 0) {
                if (ell) throw std::invalid_argument("duplicate dim line");
                std::size_t used = 0;
                std::string rest = line.substr(3);
                int v = std::stoi(rest, &used);
                if (rest.find_first_not_of(" \t", used) != std::string::npos || v < 1) {
                    throw std::invalid_argument("bad dimension");
                }
                ell = v;
            } else {
                if (!ctx || !ell) throw std::invalid_argument("coefficients before the field/dim header");
                forms.push_back(parse_form(line, *ctx, *ell));
            }
        } catch (const std::exception& ex) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + ex.what());
        }
    }
    if (!ctx || !ell) throw std::invalid_argument("missing field or dim header");
    return Arrangement(*ell, *ctx, forms);
}

inline Arrangement read_arrangement(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_arrangement(ss.str());
}

inline std::string to_text(const Arrangement& a) {
    std::string out = "field " + a.ctx().to_string() + "\ndim " + std::to_string(a.ell()) + "\n";
    for (const auto& f : a.forms()) out += f.to_string() + "\n";
    return out;
}

}  // namespace zpair

#endif  // ZPAIR_ARRANGEMENT_HPP
