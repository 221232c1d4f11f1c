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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polynomial.hpp"

namespace polyadic {

using Digit = std::uint64_t;

// Dense tables (level maps, portrait layers, orbits) refuse to materialize
// more than this many cells unless the caller raises the limit.
inline constexpr std::uint64_t kDefaultCellLimit = std::uint64_t{1} << 24;

// d^exponent as a table size; throws LimitError if it exceeds max_cells.
std::uint64_t checked_pow(Base d, unsigned exponent, std::uint64_t max_cells);

// A vertex of the rooted d-ary tree: a finite word over {0, ..., d-1}, the
// empty word being the root. The first digit is the least significant one,
// so value() = x_0 + d*x_1 + ... + d^(n-1)*x_(n-1); a length-n word is the
// residue value() taken modulo d^n.
class Vertex {
public:
    explicit Vertex(Base base) : base_(base) {}
    Vertex(Base base, std::vector<Digit> digits);

    // "011" (one character per digit, bases up to 10), "4.11.0" (dot
    // separated, any base), "" or "eps" for the root.
    static Vertex parse(Base base, std::string_view word);
    // The length-`length` word whose value is `value` (mod d^length).
    static Vertex from_value(Base base, const Int& value, std::size_t length);

    Base base() const noexcept { return base_; }
    const std::vector<Digit>& digits() const noexcept { return digits_; }
    std::size_t length() const noexcept { return digits_.size(); }
    bool is_root() const noexcept { return digits_.empty(); }

    Int value() const;
    // Digit string (dot separated for bases over 10); empty for the root.
    std::string word() const;

    friend bool operator==(const Vertex&, const Vertex&) = default;

private:
    Base base_;
    std::vector<Digit> digits_;
};

// Action of f on the d^level vertices of one level: images[v] = f(v) mod
// d^level.
struct LevelMap {
    Base base;
    unsigned level;
    std::vector<std::uint64_t> images;
};

// The tree of sections of f down to a fixed depth, with the first-level
// action at every node. Nodes are stored level by level, root first,
// children in increasing digit order.
struct Portrait {
    struct Node {
        std::vector<Digit> word;
        IntPolynomial section;
        std::vector<Digit> action; // digit x -> low digit of section(x)
    };

    Base base;
    unsigned depth;
    std::vector<Node> nodes;
    // Base 2 only: number of vertices per level (0..depth) whose action
    // swaps the two subtrees. Empty for other bases.
    std::vector<std::uint64_t> switch_counts;
};

// Forward trajectory of one point under the level action, stopping at the
// first repeated value. points[cycle_start..] is the cycle; cycle_start == 0
// means the start point itself lies on its cycle.
struct Orbit {
    Base base;
    unsigned level;
    std::vector<std::uint64_t> points;
    std::size_t cycle_start;
};

// Letter-to-letter transducer whose states are the finitely many sections of
// a linear polynomial: reading digit x in state s outputs the low digit of
// s(x) and moves to the section of s at x. states[0] is the initial state
// (the polynomial itself).
struct SectionAutomaton {
    Base base;
    std::vector<IntPolynomial> states;
    std::vector<std::vector<std::size_t>> transitions; // [state][digit]
    std::vector<std::vector<Digit>> outputs;           // [state][digit]
};

// Image of a vertex under f: the length-n word of f(value(v)) mod d^n.
// Prefixes map to prefixes, so f is an endomorphism of the tree.
Vertex vertex_image(const IntPolynomial& f, const Vertex& v);

// The section (residual action) of f at the depth-1 vertex x0: the
// polynomial g with f(x0 + d*y) = f(x0) mod d + d*g(y). Every coefficient
// is integral by construction.
IntPolynomial section(const IntPolynomial& f, Base d, Digit x0);

// Section at an arbitrary vertex, iterating digit by digit. At the root
// this is f itself.
IntPolynomial section_at(const IntPolynomial& f, const Vertex& v);

LevelMap level_map(const IntPolynomial& f, Base d, unsigned level,
                   std::uint64_t max_cells = kDefaultCellLimit);

// f(value) mod d^level without materializing the level. value must lie in
// [0, d^level).
Int apply_mod(const IntPolynomial& f, Base d, const Int& value, unsigned level);

Portrait portrait(const IntPolynomial& f, Base d, unsigned depth,
                  std::uint64_t max_cells = kDefaultCellLimit);

Orbit orbit(const IntPolynomial& f, Base d, unsigned level, std::uint64_t start,
            std::uint64_t max_cells = kDefaultCellLimit);

// The full section automaton of a polynomial of degree <= 1 (for degree >= 2
// the set of sections is infinite; throws NonLinearError).
SectionAutomaton linear_section_closure(const IntPolynomial& f, Base d);

// Runs the transducer over the length-`length` base-d word of `value`
// (low digit first) and returns the value of the output word. Only the low
// `length` digits of `value` are read.
std::uint64_t automaton_apply(const SectionAutomaton& a, std::uint64_t value,
                              unsigned length);

} // namespace polyadic
