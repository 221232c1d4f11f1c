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

#include <optional>
#include <string>
#include <vector>

#include "tree_action.hpp"

namespace polyadic {

// One congruence of a closed-form criterion, with both sides reduced to
// [0, modulus).
struct Condition {
    std::string label;       // stable id, e.g. "rivest.i"
    std::string description; // the congruence in terms of the coefficients
    Int lhs;
    Int rhs;
    Int modulus;
    bool holds;
};

struct CriteriaReport {
    std::string kind; // "permutational-2adic" | "ergodic-2adic" | "linear-transitive"
    bool verdict;
    std::vector<Condition> conditions;
    // Present whenever the polynomial acts bijectively (even if the verdict
    // under test is false).
    std::optional<PermutationalProfile> profile;
};

// Side-by-side run of the closed-form criteria against the exhaustive
// finite-level oracles. bijective_up_to[n-1] etc. refer to level n.
struct ConsistencyReport {
    unsigned levels_checked;
    CriteriaReport permutational;
    CriteriaReport ergodic;
    std::vector<bool> bijective_up_to;
    std::vector<bool> single_cycle_up_to;
    // Only for bijective actions: entry n-1 is true when every level
    // 0..n-1 of the portrait has an odd number of subtree swaps (which is
    // equivalent to a single cycle on level n). Empty otherwise.
    std::vector<bool> switch_parity_up_to;
    bool agree;
};

// Rivest's congruences: f permutes every level of the binary tree iff
// a_1 is odd and both coefficient tail sums are even. The closed forms are
// specific to base 2; any other base is a domain error.
CriteriaReport is_permutational_2adic(const IntPolynomial& f, Base d = Base(2));

// Single-cycle action on every level of the binary tree: the three Rivest
// congruences plus a_0 odd and two mod-4 conditions.
CriteriaReport is_ergodic_2adic(const IntPolynomial& f, Base d = Base(2));

// Larin's four combined congruences; logically equivalent to
// is_ergodic_2adic and implemented independently of it.
CriteriaReport is_ergodic_larin(const IntPolynomial& f, Base d = Base(2));

// Degree <= 1 only: a*x + b acts with a single cycle on every level of the
// binary tree iff b is odd and a = 1 (mod 4).
CriteriaReport is_level_transitive_linear(const IntPolynomial& f,
                                          Base d = Base(2));

// Exhaustive finite-level oracles. Deliberately independent of the
// congruence criteria and of the section machinery: they reduce the
// coefficients mod d^level once and evaluate every residue by modular
// Horner. d^level must stay within max_cells (and within 2^32 so the
// products fit in 64 bits).
bool brute_force_permutation(const IntPolynomial& f, Base d, unsigned level,
                             std::uint64_t max_cells = kDefaultCellLimit);
bool brute_force_transitive(const IntPolynomial& f, Base d, unsigned level,
                            std::uint64_t max_cells = kDefaultCellLimit);

// Runs criteria and oracles side by side for levels 1..max_level and checks
// every advertised equivalence. agree == false means a bug.
ConsistencyReport verify_consistency(const IntPolynomial& f, unsigned max_level,
                                     std::uint64_t max_cells = kDefaultCellLimit);

} // namespace polyadic
