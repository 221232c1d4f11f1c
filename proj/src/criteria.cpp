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

#include "criteria.hpp"

#include <algorithm>

#include "errors.hpp"

namespace polyadic {

namespace {

Int reduce(const Int& a, unsigned long m) {
    return Int(mpz_fdiv_ui(a.get_mpz_t(), m));
}

Condition congruence(const char* label, const char* description, const Int& lhs,
                     const Int& rhs, unsigned long modulus) {
    Condition c{label, description, reduce(lhs, modulus), reduce(rhs, modulus),
                Int(modulus), false};
    c.holds = c.lhs == c.rhs;
    return c;
}

// a_from + a_(from+2) + a_(from+4) + ...
Int tail_sum(const IntPolynomial& f, std::size_t from) {
    Int s(0);
    for (std::size_t i = from; i <= f.degree(); i += 2)
        s += f.coefficient(i);
    return s;
}

void append_rivest(const IntPolynomial& f, std::vector<Condition>& out) {
    out.push_back(congruence("rivest.i", "a_1 = 1 (mod 2)", f.coefficient(1),
                             Int(1), 2));
    out.push_back(congruence("rivest.ii", "a_2 + a_4 + a_6 + ... = 0 (mod 2)",
                             tail_sum(f, 2), Int(0), 2));
    out.push_back(congruence("rivest.iii", "a_3 + a_5 + a_7 + ... = 0 (mod 2)",
                             tail_sum(f, 3), Int(0), 2));
}

bool all_hold(const std::vector<Condition>& cs) {
    return std::all_of(cs.begin(), cs.end(),
                       [](const Condition& c) { return c.holds; });
}

std::optional<PermutationalProfile> try_profile(const IntPolynomial& f) {
    try {
        return f.profile();
    } catch (const NotPermutationalError&) {
        return std::nullopt;
    }
}

void require_base2(Base d) {
    if (d.value() != 2)
        throw DomainError("this closed-form criterion is specific to base 2; "
                          "got base " +
                          std::to_string(d.value()));
}

std::uint64_t table_size(Base d, unsigned level, std::uint64_t max_cells) {
    if (level < 1)
        throw DomainError("level must be at least 1");
    const std::uint64_t size = checked_pow(d, level, max_cells);
    if (size > (std::uint64_t{1} << 32))
        throw LimitError("exhaustive check needs d^level <= 2^32, got " +
                         std::to_string(d.value()) + "^" +
                         std::to_string(level));
    return size;
}

std::vector<std::uint64_t> reduced_coefficients(const IntPolynomial& f,
                                                std::uint64_t m) {
    std::vector<std::uint64_t> out;
    out.reserve(f.coefficients().size());
    for (const Int& c : f.coefficients())
        out.push_back(mpz_fdiv_ui(c.get_mpz_t(), m));
    return out;
}

// All operands stay below 2^32, so acc*x + c never overflows 64 bits.
std::uint64_t horner_mod(const std::vector<std::uint64_t>& c, std::uint64_t x,
                         std::uint64_t m) {
    std::uint64_t acc = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        acc = (acc * x + c[i]) % m;
    return acc;
}

} // namespace

CriteriaReport is_permutational_2adic(const IntPolynomial& f, Base d) {
    require_base2(d);
    CriteriaReport r{"permutational-2adic", false, {}, {}};
    append_rivest(f, r.conditions);
    r.verdict = all_hold(r.conditions);
    r.profile = try_profile(f);
    return r;
}

CriteriaReport is_ergodic_2adic(const IntPolynomial& f, Base d) {
    require_base2(d);
    CriteriaReport r{"ergodic-2adic", false, {}, {}};
    append_rivest(f, r.conditions);
    r.conditions.push_back(
        congruence("main.i", "a_0 = 1 (mod 2)", f.coefficient(0), Int(1), 2));
    r.conditions.push_back(congruence(
        "main.ii", "2*a_2 = a_3 + a_5 + a_7 + ... (mod 4)",
        Int(2 * f.coefficient(2)), tail_sum(f, 3), 4));
    r.conditions.push_back(congruence(
        "main.iii", "a_2 + a_1 - 1 = a_4 + a_6 + a_8 + ... (mod 4)",
        Int(f.coefficient(2) + f.coefficient(1) - 1), tail_sum(f, 4), 4));
    r.verdict = all_hold(r.conditions);
    r.profile = try_profile(f);
    return r;
}

CriteriaReport is_ergodic_larin(const IntPolynomial& f, Base d) {
    require_base2(d);
    CriteriaReport r{"ergodic-2adic", false, {}, {}};
    r.conditions.push_back(
        congruence("larin.i", "a_0 = 1 (mod 2)", f.coefficient(0), Int(1), 2));
    r.conditions.push_back(
        congruence("larin.ii", "a_1 = 1 (mod 2)", f.coefficient(1), Int(1), 2));
    r.conditions.push_back(congruence(
        "larin.iii", "a_3 + a_5 + a_7 + ... = 2*a_2 (mod 4)", tail_sum(f, 3),
        Int(2 * f.coefficient(2)), 4));
    r.conditions.push_back(congruence(
        "larin.iv", "a_4 + a_6 + a_8 + ... = a_1 + a_2 - 1 (mod 4)",
        tail_sum(f, 4), Int(f.coefficient(1) + f.coefficient(2) - 1), 4));
    r.verdict = all_hold(r.conditions);
    r.profile = try_profile(f);
    return r;
}

CriteriaReport is_level_transitive_linear(const IntPolynomial& f, Base d) {
    require_base2(d);
    if (f.degree() >= 2)
        throw NonLinearError("the b odd / a = 1 (mod 4) form only covers "
                             "degree <= 1; got degree " +
                             std::to_string(f.degree()));
    CriteriaReport r{"linear-transitive", false, {}, {}};
    r.conditions.push_back(
        congruence("linear.i", "b = 1 (mod 2)", f.coefficient(0), Int(1), 2));
    r.conditions.push_back(
        congruence("linear.ii", "a = 1 (mod 4)", f.coefficient(1), Int(1), 4));
    r.verdict = all_hold(r.conditions);
    r.profile = try_profile(f);
    return r;
}

bool brute_force_permutation(const IntPolynomial& f, Base d, unsigned level,
                             std::uint64_t max_cells) {
    const std::uint64_t m = table_size(d, level, max_cells);
    const std::vector<std::uint64_t> c = reduced_coefficients(f, m);
    std::vector<bool> seen(m, false);
    for (std::uint64_t v = 0; v < m; ++v) {
        const std::uint64_t u = horner_mod(c, v, m);
        if (seen[u])
            return false;
        seen[u] = true;
    }
    return true;
}

bool brute_force_transitive(const IntPolynomial& f, Base d, unsigned level,
                            std::uint64_t max_cells) {
    const std::uint64_t m = table_size(d, level, max_cells);
    const std::vector<std::uint64_t> c = reduced_coefficients(f, m);
    // Transitive iff the forward orbit of 0 first returns to 0 after exactly
    // d^level steps (a single cycle through every residue).
    std::uint64_t x = 0;
    std::uint64_t steps = 0;
    do {
        x = horner_mod(c, x, m);
        ++steps;
    } while (x != 0 && steps < m);
    return x == 0 && steps == m;
}

ConsistencyReport verify_consistency(const IntPolynomial& f, unsigned max_level,
                                     std::uint64_t max_cells) {
    if (max_level < 1)
        throw DomainError("need at least one level to check");
    const Base two(2);
    ConsistencyReport r{max_level,
                        is_permutational_2adic(f),
                        is_ergodic_2adic(f),
                        {},
                        {},
                        {},
                        true};
    bool all_bijective = true;
    bool all_single_cycle = true;
    for (unsigned n = 1; n <= max_level; ++n) {
        r.bijective_up_to.push_back(
            brute_force_permutation(f, two, n, max_cells));
        r.single_cycle_up_to.push_back(
            brute_force_transitive(f, two, n, max_cells));
        all_bijective = all_bijective && r.bijective_up_to.back();
        all_single_cycle = all_single_cycle && r.single_cycle_up_to.back();
    }
    bool agree = r.permutational.verdict == all_bijective &&
                 r.ergodic.verdict == all_single_cycle;
    if (r.permutational.verdict) {
        const Portrait pt = portrait(f, two, max_level - 1, max_cells);
        bool prefix_odd = true;
        for (unsigned n = 1; n <= max_level; ++n) {
            prefix_odd = prefix_odd && pt.switch_counts[n - 1] % 2 == 1;
            r.switch_parity_up_to.push_back(prefix_odd);
            agree = agree && prefix_odd == r.single_cycle_up_to[n - 1];
        }
    }
    r.agree = agree;
    return r;
}

} // namespace polyadic
