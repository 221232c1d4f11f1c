/*
   Copyright 2026 The polyadic authors

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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "exact_arith.hpp"

namespace polyadic {

// Parity bookkeeping of a polynomial that acts bijectively on the binary
// tree: a_1 = 2k+1, a_2 + a_4 + ... = 2m, a_3 + a_5 + ... = 2n.
struct PermutationalProfile {
    Int k;
    Int m;
    Int n;

    friend bool operator==(const PermutationalProfile&,
                           const PermutationalProfile&) = default;
};

// Dense integer polynomial a_0 + a_1 x + ... + a_t x^t. Coefficients are
// stored ascending by power; trailing zeros are stripped on construction, and
// the zero polynomial is kept as the single coefficient [0] (degree 0).
class IntPolynomial {
public:
    IntPolynomial() : coeffs_{Int(0)} {}
    explicit IntPolynomial(std::vector<Int> coefficients);

    // Accepts either an expression ("2*x^2 + x", "-x^3+4", "2x^2") or an
    // explicit coefficient list ascending by power ("coeffs:1,3,2").
    // Whitespace is insignificant. Throws ParseError with a byte offset.
    static IntPolynomial parse(std::string_view text);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Int>& coefficients() const noexcept { return coeffs_; }
    // Coefficient of x^i; zero beyond the degree.
    const Int& coefficient(std::size_t i) const;
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
    bool is_constant() const { return coeffs_.size() == 1; }

    Int evaluate(const Int& x) const;

    // Coefficients c_0..c_t of f(x0 + y) as a polynomial in y, i.e. the
    // i-th divided derivative f^(i)(x0)/i!. Computed by repeated synthetic
    // division, so every entry is integral by construction -- no rational
    // arithmetic and no division anywhere.
    std::vector<Int> taylor_coefficients(const Int& x0) const;

    // k, m, n as above. Throws NotPermutationalError unless a_1 is odd and
    // both tail sums are even.
    PermutationalProfile profile() const;

    // Canonical text form: descending powers, " + "/" - " separators,
    // "*" between coefficient and x, "^" for powers >= 2, coefficient 1
    // suppressed, zero polynomial rendered "0". parse(render()) is identity.
    std::string render() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<Int> coeffs_;

    void normalize();
};

// second(first(x)) -- the composite that applies `first` first.
IntPolynomial compose(const IntPolynomial& first, const IntPolynomial& second);

} // namespace polyadic
