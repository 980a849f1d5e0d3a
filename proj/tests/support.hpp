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

#ifndef ZPAIR_TESTS_SUPPORT_HPP
#define ZPAIR_TESTS_SUPPORT_HPP

#include <zpair/zpair.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#ifndef ZPAIR_FIXTURE_DIR
#define ZPAIR_FIXTURE_DIR "fixtures"
#endif

namespace zpair::testing {

inline Arrangement fixture(const std::string& name) {
    return read_arrangement(std::string(ZPAIR_FIXTURE_DIR) + "/" + name);
}

inline LinearForm form(const std::string& text, const Arrangement& a) { return parse_form(text, a.ctx(), a.ell()); }

inline LinearForm form(const std::string& text) { return parse_form(text, FieldContext{}, 0); }

inline HomogPoly var(int i, int nvars) { return LinearForm::variable(i, nvars).to_poly(); }

inline HomogPoly constant(int nvars, const Scalar& c = 1) { return HomogPoly::monomial(Monomial(nvars, 0), c); }

/// A random arrangement of `n` distinct lines with small integer coefficients.
inline Arrangement random_lines(std::mt19937_64& rng, int n, int ell = 3, int range = 4) {
    std::uniform_int_distribution<int> coef(-range, range);
    Arrangement a(ell, FieldContext{});
    std::vector<LinearForm> forms;
    while (static_cast<int>(forms.size()) < n) {
        std::vector<Scalar> c;
        for (int i = 0; i < ell; ++i) c.push_back(Scalar(coef(rng)));
        LinearForm f(c);
        if (f.is_zero()) continue;
        bool dup = false;
        for (const auto& g : forms) dup = dup || projectively_equal(f, g);
        if (dup) continue;
        forms.push_back(f);
    }
    return Arrangement(ell, FieldContext{}, forms);
}

/// A fixed invertible integer change of coordinates.
inline ExactMatrix shear(int ell) {
    ExactMatrix g = ExactMatrix::identity(static_cast<std::size_t>(ell), Scalar(1), Scalar(0));
    for (int i = 0; i + 1 < ell; ++i) g(i, i + 1) = Scalar(i + 2);
    if (ell > 2) g(ell - 1, 0) = Scalar(-1);
    return g;
}

}  // namespace zpair::testing

#endif  // ZPAIR_TESTS_SUPPORT_HPP
