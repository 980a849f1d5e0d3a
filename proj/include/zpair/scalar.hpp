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

#ifndef ZPAIR_SCALAR_HPP
#define ZPAIR_SCALAR_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "modular.hpp"

namespace zpair {

/// Coefficient field: Q, or a real quadratic extension Q(sqrt d) with d squarefree.
class FieldContext {
   public:
    constexpr FieldContext() = default;

    static constexpr FieldContext rationals() { return FieldContext(); }

    static FieldContext quadratic(long d) {
        if (d < 2) throw std::invalid_argument("quadratic field needs d >= 2");
        for (long q = 2; q * q <= d; ++q) {
            if (d % (q * q) == 0) throw std::invalid_argument("quadratic field needs squarefree d");
        }
        FieldContext ctx;
        ctx.d_ = d;
        return ctx;
    }

    constexpr bool is_rational() const { return d_ == 0; }
    constexpr long d() const { return d_; }

    std::string to_string() const { return d_ == 0 ? "Q" : "Q(sqrt " + std::to_string(d_) + ")"; }

    friend constexpr bool operator==(FieldContext, FieldContext) = default;

   private:
    long d_ = 0;
};

/// Exact element a + b*sqrt(d). Pure rationals (b = 0) embed into every context.
class Scalar {
   public:
    Scalar() = default;
    Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Scalar(mpq_class a) : a_(std::move(a)) { a_.canonicalize(); }
    Scalar(mpq_class a, mpq_class b, FieldContext ctx) : a_(std::move(a)), b_(std::move(b)), d_(ctx.d()) {
        a_.canonicalize();
        b_.canonicalize();
        if (d_ == 0 && b_ != 0) throw std::invalid_argument("irrational part in the rational field");
    }

    static Scalar sqrt_of(FieldContext ctx) { return Scalar(0, 1, ctx); }

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& sqrt_part() const { return b_; }
    FieldContext context() const { return d_ == 0 ? FieldContext() : FieldContext::quadratic(d_); }
    long d() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    Scalar operator-() const {
        Scalar r(*this);
        r.a_ = -r.a_;
        r.b_ = -r.b_;
        return r;
    }

    Scalar& operator+=(const Scalar& o) {
        d_ = joint_d(o);
        a_ += o.a_;
        if (sgn(o.b_) != 0) b_ += o.b_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        d_ = joint_d(o);
        a_ -= o.a_;
        if (sgn(o.b_) != 0) b_ -= o.b_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        long d = joint_d(o);
        if (sgn(b_) == 0 && sgn(o.b_) == 0) {
            a_ *= o.a_;
        } else {
            mpq_class na = a_ * o.a_ + b_ * o.b_ * d;
            mpq_class nb = a_ * o.b_ + b_ * o.a_;
            a_ = std::move(na);
            b_ = std::move(nb);
        }
        d_ = d;
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        if (sgn(b_) == 0) {
            Scalar r;
            r.a_ = 1 / a_;
            r.d_ = d_;
            return r;
        }
        // (a + b r)^-1 = (a - b r) / (a^2 - d b^2); the norm is nonzero as d is not a square.
        mpq_class norm = a_ * a_ - b_ * b_ * d_;
        Scalar r;
        r.a_ = a_ / norm;
        r.b_ = -b_ / norm;
        r.d_ = d_;
        return r;
    }

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        if (x.a_ != y.a_ || x.b_ != y.b_) return false;
        return sgn(x.b_) == 0 || x.d_ == y.d_;
    }

    /// Image under Q(sqrt d) -> F_p with sqrt d -> root. Throws UnluckyPrime
    /// when p divides a denominator.
    std::uint64_t residue(std::uint64_t p, std::uint64_t root = 0) const {
        std::uint64_t r = residue_of(a_, p);
        if (sgn(b_) != 0) r = (r + modular::mul_mod(residue_of(b_, p), root, p)) % p;
        return r;
    }

   private:
    long joint_d(const Scalar& o) const {
        if (d_ == o.d_ || o.d_ == 0) return d_;
        if (d_ == 0) return o.d_;
        if (sgn(b_) == 0 && sgn(o.b_) == 0) return d_;
        throw std::invalid_argument("mixed field contexts");
    }

    static std::uint64_t residue_of(const mpq_class& q, std::uint64_t p) {
        unsigned long pm = static_cast<unsigned long>(p);
        std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), pm);
        if (den == 0) throw UnluckyPrime("prime divides a denominator");
        std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), pm);
        if (den == 1) return num;
        return modular::mul_mod(num, modular::inv_mod(den, p), p);
    }

    mpq_class a_ = 0;
    mpq_class b_ = 0;
    long d_ = 0;
};

/// Canonical text: `p/q`, `p`, or `p/q+r/s*rt` / `p/q-r/s*rt`; the rational part is always
/// printed when an irrational part is present.
inline std::string to_string(const Scalar& x) {
    std::string out = x.rational_part().get_str();
    if (!x.is_rational()) {
        mpq_class b = x.sqrt_part();
        out += sgn(b) > 0 ? "+" : "-";
        out += mpq_class(abs(b)).get_str();
        out += "*rt";
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << to_string(x); }

namespace detail {

inline mpq_class parse_rational(std::string_view s, std::string_view whole) {
    auto bad = [&] { return std::invalid_argument("malformed scalar: '" + std::string(whole) + "'"); };
    if (s.empty()) throw bad();
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    bool seen_slash = false, digit_before = false, digit_after = false;
    for (std::size_t k = i; k < s.size(); ++k) {
        char c = s[k];
        if (c == '/') {
            if (seen_slash || !digit_before) throw bad();
            seen_slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            (seen_slash ? digit_after : digit_before) = true;
        } else {
            throw bad();
        }
    }
    if (!digit_before || (seen_slash && !digit_after)) throw bad();
    std::string text(s[0] == '+' ? s.substr(1) : s);
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw bad();
    if (q.get_den() == 0) throw std::domain_error("zero denominator in '" + std::string(whole) + "'");
    q.canonicalize();
    return q;
}

}  // namespace detail

/// Parses the scalar grammar. `rt` denotes sqrt(d) of `ctx`; a bare `r/s*rt`,
/// `rt` or `-rt` is also accepted.
inline Scalar parse_scalar(std::string_view text, FieldContext ctx = {}) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("empty scalar");
    auto ends_with_rt = s.size() >= 2 && s.substr(s.size() - 2) == "rt";
    if (!ends_with_rt) return Scalar(detail::parse_rational(s, text));
    if (ctx.is_rational()) throw std::invalid_argument("'rt' used in the rational field: '" + std::string(text) + "'");
    std::string_view head = s.substr(0, s.size() - 2);
    // Split at the sign that starts the irrational term (not a leading sign).
    std::size_t split = std::string_view::npos;
    for (std::size_t k = head.size(); k-- > 1;) {
        if (head[k] == '+' || head[k] == '-') {
            split = k;
            break;
        }
    }
    std::string_view rat_part = split == std::string_view::npos ? std::string_view() : head.substr(0, split);
    std::string_view irr = split == std::string_view::npos ? head : head.substr(split);
    mpq_class b;
    if (irr.empty() || irr == "+") {
        b = 1;
    } else if (irr == "-") {
        b = -1;
    } else {
        if (irr.back() != '*') throw std::invalid_argument("malformed scalar: '" + std::string(text) + "'");
        irr.remove_suffix(1);
        b = detail::parse_rational(irr, text);
    }
    mpq_class a = rat_part.empty() ? mpq_class(0) : detail::parse_rational(rat_part, text);
    return Scalar(a, b, ctx);
}

}  // namespace zpair

#endif  // ZPAIR_SCALAR_HPP
