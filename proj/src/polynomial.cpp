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

#include "polynomial.hpp"

#include <cctype>
#include <utility>

#include "errors.hpp"

namespace polyadic {

namespace {

bool is_digit(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    IntPolynomial run() {
        skip_ws();
        IntPolynomial out =
            consume_keyword("coeffs:") ? coefficient_list() : expression();
        skip_ws();
        if (!eof())
            fail(std::string("unexpected character '") + peek() + "'");
        return out;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, pos_);
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    bool consume_keyword(std::string_view kw) {
        if (text_.substr(pos_, kw.size()) != kw)
            return false;
        pos_ += kw.size();
        return true;
    }

    // digits+
    Int parse_magnitude() {
        if (eof() || !is_digit(peek()))
            fail("expected digits");
        const std::size_t start = pos_;
        while (!eof() && is_digit(peek()))
            ++pos_;
        return Int(std::string(text_.substr(start, pos_ - start)), 10);
    }

    Int parse_signed_integer() {
        int sign = 1;
        if (!eof() && (peek() == '+' || peek() == '-')) {
            if (peek() == '-')
                sign = -1;
            ++pos_;
            skip_ws();
        }
        Int v = parse_magnitude();
        if (sign < 0)
            v = -v;
        return v;
    }

    std::size_t parse_exponent() {
        if (eof() || !is_digit(peek()))
            fail("expected an exponent");
        Int e = parse_magnitude();
        if (e > 100000)
            fail("exponent too large");
        return static_cast<std::size_t>(e.get_ui());
    }

    // coeffs: a_0, a_1, ..., a_t   (ascending by power)
    IntPolynomial coefficient_list() {
        std::vector<Int> acc;
        skip_ws();
        acc.push_back(parse_signed_integer());
        for (;;) {
            skip_ws();
            if (eof())
                break;
            if (peek() != ',')
                fail(std::string("expected ',' before '") + peek() + "'");
            ++pos_;
            skip_ws();
            acc.push_back(parse_signed_integer());
        }
        return IntPolynomial(std::move(acc));
    }

    // number ['*'] x ['^' exponent] | number | x ['^' exponent]
    void term(std::vector<Int>& acc, int sign) {
        if (eof())
            fail("expected a term");
        Int coeff(1);
        bool have_number = false;
        if (is_digit(peek())) {
            coeff = parse_magnitude();
            have_number = true;
        } else if (peek() != 'x') {
            fail(std::string("expected a number or 'x', got '") + peek() + "'");
        }
        skip_ws();
        if (have_number && !eof() && peek() == '*') {
            ++pos_;
            skip_ws();
            if (eof() || peek() != 'x')
                fail("expected 'x' after '*'");
        }
        std::size_t power = 0;
        if (!eof() && peek() == 'x') {
            ++pos_;
            power = 1;
            skip_ws();
            if (!eof() && peek() == '^') {
                ++pos_;
                skip_ws();
                power = parse_exponent();
            }
        }
        if (sign < 0)
            coeff = -coeff;
        if (acc.size() <= power)
            acc.resize(power + 1, Int(0));
        acc[power] += coeff;
    }

    IntPolynomial expression() {
        std::vector<Int> acc;
        skip_ws();
        if (eof())
            fail("empty polynomial");
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (peek() == '-')
                sign = -1;
            ++pos_;
        }
        skip_ws();
        term(acc, sign);
        for (;;) {
            skip_ws();
            if (eof())
                break;
            if (peek() != '+' && peek() != '-')
                break; // let run() report the stray character
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
            term(acc, sign);
        }
        return IntPolynomial(std::move(acc));
    }
};

std::vector<Int> multiply(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

} // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coefficients)
    : coeffs_(std::move(coefficients)) {
    normalize();
}

void IntPolynomial::normalize() {
    if (coeffs_.empty())
        coeffs_.push_back(Int(0));
    while (coeffs_.size() > 1 && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
    return Parser(text).run();
}

const Int& IntPolynomial::coefficient(std::size_t i) const {
    static const Int zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int acc = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

std::vector<Int> IntPolynomial::taylor_coefficients(const Int& x0) const {
    std::vector<Int> b = coeffs_;
    const std::ptrdiff_t t = static_cast<std::ptrdiff_t>(b.size()) - 1;
    for (std::ptrdiff_t i = 0; i < t; ++i)
        for (std::ptrdiff_t j = t - 1; j >= i; --j)
            b[j] += x0 * b[j + 1];
    return b;
}

PermutationalProfile IntPolynomial::profile() const {
    const Int& a1 = coefficient(1);
    Int even_sum(0), odd_sum(0);
    for (std::size_t i = 2; i < coeffs_.size(); ++i)
        (i % 2 == 0 ? even_sum : odd_sum) += coeffs_[i];
    if (mpz_even_p(a1.get_mpz_t()))
        throw NotPermutationalError("profile undefined: a_1 = " + a1.get_str() +
                                    " is even");
    if (mpz_odd_p(even_sum.get_mpz_t()))
        throw NotPermutationalError("profile undefined: a_2 + a_4 + ... = " +
                                    even_sum.get_str() + " is odd");
    if (mpz_odd_p(odd_sum.get_mpz_t()))
        throw NotPermutationalError("profile undefined: a_3 + a_5 + ... = " +
                                    odd_sum.get_str() + " is odd");
    const Int two(2);
    return {exact_div(a1 - 1, two), exact_div(even_sum, two),
            exact_div(odd_sum, two)};
}

std::string IntPolynomial::render() const {
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t p = coeffs_.size(); p-- > 0;) {
        const Int& c = coeffs_[p];
        if (c == 0)
            continue;
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative)
                out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const Int mag = abs(c);
        if (p == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) {
                out += mag.get_str();
                out += '*';
            }
            out += 'x';
            if (p >= 2) {
                out += '^';
                out += std::to_string(p);
            }
        }
    }
    return out;
}

IntPolynomial compose(const IntPolynomial& first, const IntPolynomial& second) {
    const std::vector<Int>& inner = first.coefficients();
    const std::vector<Int>& outer = second.coefficients();
    std::vector<Int> acc{outer.back()};
    for (std::size_t i = outer.size() - 1; i-- > 0;) {
        acc = multiply(acc, inner);
        acc[0] += outer[i];
    }
    return IntPolynomial(std::move(acc));
}

} // namespace polyadic
