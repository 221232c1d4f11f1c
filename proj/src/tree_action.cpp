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

#include "tree_action.hpp"

#include <cctype>
#include <cstddef>
#include <limits>
#include <map>
#include <utility>

#include "errors.hpp"

namespace polyadic {

namespace {

bool is_digit(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

} // namespace

std::uint64_t checked_pow(Base d, unsigned exponent, std::uint64_t max_cells) {
    const std::uint64_t dd = d.value();
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        if (max_cells == 0 || out > max_cells / dd)
            throw LimitError("table of " + std::to_string(dd) + "^" +
                             std::to_string(exponent) +
                             " cells exceeds the configured limit of " +
                             std::to_string(max_cells));
        out *= dd;
    }
    if (out > max_cells)
        throw LimitError("table of " + std::to_string(out) +
                         " cells exceeds the configured limit of " +
                         std::to_string(max_cells));
    return out;
}

Vertex::Vertex(Base base, std::vector<Digit> digits)
    : base_(base), digits_(std::move(digits)) {
    for (Digit x : digits_)
        if (x >= base_.value())
            throw DomainError("digit " + std::to_string(x) +
                              " out of range for base " +
                              std::to_string(base_.value()));
}

Vertex Vertex::parse(Base base, std::string_view word) {
    if (word.empty() || word == "eps")
        return Vertex(base);
    std::vector<Digit> out;
    const bool dotted =
        word.find('.') != std::string_view::npos || base.value() > 10;
    if (dotted) {
        std::size_t pos = 0;
        while (pos <= word.size()) {
            std::size_t end = word.find('.', pos);
            if (end == std::string_view::npos)
                end = word.size();
            if (end == pos)
                throw ParseError("empty digit in vertex word", pos);
            std::uint64_t v = 0;
            for (std::size_t i = pos; i < end; ++i) {
                const char c = word[i];
                if (!is_digit(c))
                    throw ParseError(std::string("invalid character '") + c +
                                         "' in vertex word",
                                     i);
                if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10)
                    throw ParseError("digit too large", pos);
                v = v * 10 + static_cast<std::uint64_t>(c - '0');
            }
            if (v >= base.value())
                throw ParseError("digit " + std::to_string(v) +
                                     " out of range for base " +
                                     std::to_string(base.value()),
                                 pos);
            out.push_back(v);
            pos = end + 1;
        }
    } else {
        for (std::size_t i = 0; i < word.size(); ++i) {
            const char c = word[i];
            if (!is_digit(c))
                throw ParseError(std::string("invalid character '") + c +
                                     "' in vertex word",
                                 i);
            const Digit v = static_cast<Digit>(c - '0');
            if (v >= base.value())
                throw ParseError("digit " + std::to_string(v) +
                                     " out of range for base " +
                                     std::to_string(base.value()),
                                 i);
            out.push_back(v);
        }
    }
    return Vertex(base, std::move(out));
}

Vertex Vertex::from_value(Base base, const Int& value, std::size_t length) {
    std::vector<Digit> digits(length);
    Int rest = value;
    for (std::size_t i = 0; i < length; ++i) {
        DivMod qr = euclid_divmod(rest, base);
        digits[i] = qr.remainder;
        rest = std::move(qr.quotient);
    }
    return Vertex(base, std::move(digits));
}

Int Vertex::value() const {
    Int acc(0);
    for (std::size_t i = digits_.size(); i-- > 0;) {
        acc *= base_.value();
        acc += digits_[i];
    }
    return acc;
}

std::string Vertex::word() const {
    std::string out;
    const bool dotted = base_.value() > 10;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (dotted && i > 0)
            out += '.';
        out += std::to_string(digits_[i]);
    }
    return out;
}

Vertex vertex_image(const IntPolynomial& f, const Vertex& v) {
    return Vertex::from_value(v.base(), f.evaluate(v.value()), v.length());
}

IntPolynomial section(const IntPolynomial& f, Base d, Digit x0) {
    if (x0 >= d.value())
        throw DomainError("digit " + std::to_string(x0) +
                          " out of range for base " +
                          std::to_string(d.value()));
    const std::vector<Int> c = f.taylor_coefficients(Int(x0));
    std::vector<Int> out(c.size());
    out[0] = floor_div(c[0], d);
    Int scale(1);
    for (std::size_t i = 1; i < c.size(); ++i) {
        out[i] = c[i] * scale;
        scale *= d.value();
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial section_at(const IntPolynomial& f, const Vertex& v) {
    IntPolynomial g = f;
    for (Digit x : v.digits())
        g = section(g, v.base(), x);
    return g;
}

LevelMap level_map(const IntPolynomial& f, Base d, unsigned level,
                   std::uint64_t max_cells) {
    if (level < 1)
        throw DomainError("level must be at least 1");
    const std::uint64_t size = checked_pow(d, level, max_cells);
    LevelMap out{d, level, {}};
    out.images.reserve(size);
    for (std::uint64_t v = 0; v < size; ++v) {
        const Int image = f.evaluate(Int(v));
        out.images.push_back(mpz_fdiv_ui(image.get_mpz_t(), size));
    }
    return out;
}

Int apply_mod(const IntPolynomial& f, Base d, const Int& value,
              unsigned level) {
    if (level < 1)
        throw DomainError("level must be at least 1");
    Int modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), d.value(), level);
    if (value < 0 || value >= modulus)
        throw DomainError("value " + value.get_str() +
                          " out of range for level " + std::to_string(level));
    const Int raw = f.evaluate(value);
    Int image;
    mpz_fdiv_r(image.get_mpz_t(), raw.get_mpz_t(), modulus.get_mpz_t());
    return image;
}

Portrait portrait(const IntPolynomial& f, Base d, unsigned depth,
                  std::uint64_t max_cells) {
    checked_pow(d, depth, max_cells); // widest layer
    const std::uint64_t dd = d.value();
    if (dd > max_cells)
        throw LimitError("per-node action table of " + std::to_string(dd) +
                         " cells exceeds the configured limit of " +
                         std::to_string(max_cells));

    auto action_of = [&](const IntPolynomial& g) {
        std::vector<Digit> act(dd);
        for (std::uint64_t x = 0; x < dd; ++x)
            act[x] = digit_mod(g.evaluate(Int(x)), d);
        return act;
    };

    Portrait out{d, depth, {}, {}};
    out.nodes.push_back({{}, f, action_of(f)});
    std::size_t level_begin = 0;
    for (unsigned lev = 1; lev <= depth; ++lev) {
        const std::size_t level_end = out.nodes.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (std::uint64_t x = 0; x < dd; ++x) {
                IntPolynomial g = section(out.nodes[i].section, d, x);
                std::vector<Digit> w = out.nodes[i].word;
                w.push_back(x);
                std::vector<Digit> act = action_of(g);
                out.nodes.push_back(
                    {std::move(w), std::move(g), std::move(act)});
            }
        }
        level_begin = level_end;
    }

    if (dd == 2) {
        out.switch_counts.assign(depth + 1, 0);
        for (const Portrait::Node& node : out.nodes)
            if (node.action[0] == 1 && node.action[1] == 0)
                ++out.switch_counts[node.word.size()];
    }
    return out;
}

Orbit orbit(const IntPolynomial& f, Base d, unsigned level, std::uint64_t start,
            std::uint64_t max_cells) {
    if (level < 1)
        throw DomainError("level must be at least 1");
    const std::uint64_t size = checked_pow(d, level, max_cells);
    if (size > std::numeric_limits<std::uint32_t>::max())
        throw LimitError("orbit index table of " + std::to_string(size) +
                         " cells is too large");
    if (start >= size)
        throw DomainError("start value " + std::to_string(start) +
                          " out of range for level " + std::to_string(level));

    constexpr std::uint32_t kUnvisited =
        std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> first_seen(size, kUnvisited);
    Orbit out{d, level, {}, 0};
    std::uint64_t x = start;
    while (first_seen[x] == kUnvisited) {
        first_seen[x] = static_cast<std::uint32_t>(out.points.size());
        out.points.push_back(x);
        const Int image = f.evaluate(Int(x));
        x = mpz_fdiv_ui(image.get_mpz_t(), size);
    }
    out.cycle_start = first_seen[x];
    return out;
}

SectionAutomaton linear_section_closure(const IntPolynomial& f, Base d) {
    if (f.degree() >= 2)
        throw NonLinearError(
            "sections of a degree-" + std::to_string(f.degree()) +
            " polynomial never close up into a finite automaton; degree <= 1 "
            "required");
    const std::uint64_t dd = d.value();
    SectionAutomaton out{d, {}, {}, {}};
    std::map<std::vector<Int>, std::size_t> index;
    auto intern = [&](const IntPolynomial& g) {
        auto [it, inserted] = index.try_emplace(g.coefficients(), out.states.size());
        if (inserted)
            out.states.push_back(g);
        return it->second;
    };
    intern(f);
    for (std::size_t s = 0; s < out.states.size(); ++s) {
        const IntPolynomial state = out.states[s];
        out.transitions.emplace_back(dd);
        out.outputs.emplace_back(dd);
        for (std::uint64_t x = 0; x < dd; ++x) {
            out.transitions[s][x] = intern(section(state, d, x));
            out.outputs[s][x] = digit_mod(state.evaluate(Int(x)), d);
        }
    }
    return out;
}

std::uint64_t automaton_apply(const SectionAutomaton& a, std::uint64_t value,
                              unsigned length) {
    const std::uint64_t dd = a.base.value();
    std::size_t state = 0;
    std::uint64_t out = 0;
    std::uint64_t place = 1;
    for (unsigned i = 0; i < length; ++i) {
        const std::uint64_t x = value % dd;
        value /= dd;
        out += a.outputs[state][x] * place;
        state = a.transitions[state][x];
        place *= dd;
    }
    return out;
}

} // namespace polyadic
