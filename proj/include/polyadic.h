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

/* polyadic -- exact arithmetic of integer polynomials acting on the rooted
 * d-ary tree (equivalently, on the d-adic integers).
 *
 * Conventions used throughout:
 *   - Polynomials are written either as expressions ("2*x^2 + x", "-x^3+4",
 *     "2x^2") or as coefficient lists ascending by power ("coeffs:1,3,2").
 *   - A vertex of the tree is a digit word, first digit least significant:
 *     "011", dot separated for bases over 10 ("4.11.0"), "" or "eps" for the
 *     root.
 *   - Integers that may exceed 64 bits cross this API as decimal strings.
 *   - Every char** result is a NUL-terminated malloc'd string owned by the
 *     caller; release it with polyadic_string_free. Every uint64_t* array
 *     result is released with polyadic_array_free.
 *   - Functions returning polyadic_status store a message retrievable via
 *     polyadic_last_error (thread local) when they fail.
 *   - max_cells caps the size of any dense table an operation materializes;
 *     pass 0 for the default of 2^24 cells.
 *
 * All handles are immutable once created, so sharing them across threads is
 * safe; the library keeps no global mutable state.
 */

#ifndef POLYADIC_H
#define POLYADIC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum polyadic_status {
    POLYADIC_OK = 0,
    POLYADIC_ERR_PARSE = 1,            /* malformed polynomial or word */
    POLYADIC_ERR_DOMAIN = 2,           /* argument outside the operation's domain */
    POLYADIC_ERR_NONLINEAR = 3,        /* degree <= 1 required */
    POLYADIC_ERR_NOT_PERMUTATIONAL = 4,/* bijective action required */
    POLYADIC_ERR_LIMIT = 5,            /* table would exceed max_cells */
    POLYADIC_ERR_ARGUMENT = 6,         /* null pointer or bad enum value */
    POLYADIC_ERR_INTERNAL = 7
} polyadic_status;

typedef enum polyadic_format {
    POLYADIC_FORMAT_TEXT = 0,
    POLYADIC_FORMAT_JSON = 1,
    POLYADIC_FORMAT_DOT = 2 /* portraits and automata only */
} polyadic_format;

typedef struct polyadic_poly polyadic_poly;
typedef struct polyadic_report polyadic_report;
typedef struct polyadic_consistency polyadic_consistency;
typedef struct polyadic_portrait polyadic_portrait;
typedef struct polyadic_automaton polyadic_automaton;

/* Message for the most recent failing call on the calling thread. Static
 * storage; valid until the next failing call on the same thread. */
const char* polyadic_last_error(void);

void polyadic_string_free(char* s);
void polyadic_array_free(uint64_t* a);

const char* polyadic_version(void);

/* ---------- polynomials ---------- */

polyadic_status polyadic_poly_parse(const char* text, polyadic_poly** out);
polyadic_status polyadic_poly_from_coefficients(const int64_t* coefficients,
                                                size_t count,
                                                polyadic_poly** out);
/* Canonical form; parsing it back yields the same polynomial. */
polyadic_status polyadic_poly_render(const polyadic_poly* p, char** out);
size_t polyadic_poly_degree(const polyadic_poly* p);
/* Coefficient of x^i as a decimal string ("0" beyond the degree). */
polyadic_status polyadic_poly_coefficient(const polyadic_poly* p, size_t i,
                                          char** out_decimal);
polyadic_status polyadic_poly_evaluate(const polyadic_poly* p,
                                       const char* x_decimal,
                                       char** out_decimal);
/* x -> second(first(x)): `first` acts first. */
polyadic_status polyadic_poly_compose(const polyadic_poly* first,
                                      const polyadic_poly* second,
                                      polyadic_poly** out);
void polyadic_poly_free(polyadic_poly* p);

/* ---------- action on the tree ---------- */

/* Image of the vertex under p: a word of the same length. */
polyadic_status polyadic_vertex_image(const polyadic_poly* p, uint64_t base,
                                      const char* word, char** out_word);
/* Section (residual action on the subtree) at the given vertex. */
polyadic_status polyadic_section_at(const polyadic_poly* p, uint64_t base,
                                    const char* word, polyadic_poly** out);
/* p(value) mod base^level; value must lie in [0, base^level). */
polyadic_status polyadic_apply_mod(const polyadic_poly* p, uint64_t base,
                                   const char* value_decimal, uint32_t level,
                                   char** out_decimal);
/* Dense action on one level: out_images[v] = p(v) mod base^level for every
 * v < base^level. */
polyadic_status polyadic_level_map(const polyadic_poly* p, uint64_t base,
                                   uint32_t level, uint64_t max_cells,
                                   uint64_t** out_images, size_t* out_count);
/* Forward trajectory of `start` under the level action, stopping at the
 * first repeated value; points[*out_cycle_start..] is the cycle. */
polyadic_status polyadic_orbit(const polyadic_poly* p, uint64_t base,
                               uint32_t level, uint64_t start,
                               uint64_t max_cells, uint64_t** out_points,
                               size_t* out_count, size_t* out_cycle_start);

/* ---------- portraits ---------- */

/* All sections at vertices of length <= depth, with each one's action on
 * the first level below it. Nodes are stored level by level, root first,
 * children in increasing digit order. */
polyadic_status polyadic_portrait_build(const polyadic_poly* p, uint64_t base,
                                        uint32_t depth, uint64_t max_cells,
                                        polyadic_portrait** out);
size_t polyadic_portrait_node_count(const polyadic_portrait* pt);
/* Digit word of one node ("" for the root). */
polyadic_status polyadic_portrait_node_word(const polyadic_portrait* pt,
                                            size_t node, char** out);
polyadic_status polyadic_portrait_node_section(const polyadic_portrait* pt,
                                               size_t node,
                                               polyadic_poly** out);
/* Base 2 only: switch (subtree swap) counts per level 0..depth. */
polyadic_status polyadic_portrait_switch_counts(const polyadic_portrait* pt,
                                                uint64_t** out_counts,
                                                size_t* out_count);
polyadic_status polyadic_portrait_render(const polyadic_portrait* pt,
                                         polyadic_format format, char** out);
void polyadic_portrait_free(polyadic_portrait* pt);

/* ---------- closed-form criteria (base 2) and exhaustive oracles ---------- */

/* Bijective on every level of the binary tree (three parity congruences). */
polyadic_status polyadic_check_permutational(const polyadic_poly* p,
                                             polyadic_report** out);
/* Single cycle on every level of the binary tree (six congruences). */
polyadic_status polyadic_check_ergodic(const polyadic_poly* p,
                                       polyadic_report** out);
/* Same question, Larin's four combined congruences. */
polyadic_status polyadic_check_ergodic_larin(const polyadic_poly* p,
                                             polyadic_report** out);
/* Degree <= 1 only: b odd and a = 1 (mod 4). */
polyadic_status polyadic_check_linear_transitive(const polyadic_poly* p,
                                                 polyadic_report** out);

int polyadic_report_verdict(const polyadic_report* r);
size_t polyadic_report_condition_count(const polyadic_report* r);
polyadic_status polyadic_report_condition(const polyadic_report* r, size_t i,
                                          char** out_label, int* out_holds);
polyadic_status polyadic_report_render(const polyadic_report* r,
                                       polyadic_format format, char** out);
void polyadic_report_free(polyadic_report* r);

/* Exhaustive finite-level ground truth, independent of the congruences
 * above: reduces the coefficients mod base^level and checks every residue.
 * base^level must stay within max_cells and within 2^32. */
polyadic_status polyadic_brute_force_permutation(const polyadic_poly* p,
                                                 uint64_t base, uint32_t level,
                                                 uint64_t max_cells, int* out);
polyadic_status polyadic_brute_force_transitive(const polyadic_poly* p,
                                                uint64_t base, uint32_t level,
                                                uint64_t max_cells, int* out);

/* Runs the closed-form criteria against the exhaustive oracles for levels
 * 1..max_level and records whether every advertised equivalence holds. */
polyadic_status polyadic_verify(const polyadic_poly* p, uint32_t max_level,
                                uint64_t max_cells,
                                polyadic_consistency** out);
int polyadic_consistency_agree(const polyadic_consistency* c);
polyadic_status polyadic_consistency_render(const polyadic_consistency* c,
                                            polyadic_format format, char** out);
void polyadic_consistency_free(polyadic_consistency* c);

/* ---------- section automata (degree <= 1) ---------- */

/* The finitely many sections of a linear polynomial as a letter-to-letter
 * transducer; state 0 is the polynomial itself. Degree >= 2 yields
 * POLYADIC_ERR_NONLINEAR. */
polyadic_status polyadic_automaton_build(const polyadic_poly* p, uint64_t base,
                                         polyadic_automaton** out);
size_t polyadic_automaton_state_count(const polyadic_automaton* a);
polyadic_status polyadic_automaton_state(const polyadic_automaton* a, size_t i,
                                         polyadic_poly** out);
/* One transition: reading `digit` in `state` outputs *out_digit and moves
 * to *out_state. */
polyadic_status polyadic_automaton_step(const polyadic_automaton* a,
                                        size_t state, uint64_t digit,
                                        size_t* out_state, uint64_t* out_digit);
/* Feeds the low `length` base-d digits of `value` through the transducer
 * from state 0 and returns the value of the output word. Equals
 * p(value) mod base^length. */
polyadic_status polyadic_automaton_apply(const polyadic_automaton* a,
                                         uint64_t value, uint32_t length,
                                         uint64_t* out);
polyadic_status polyadic_automaton_render(const polyadic_automaton* a,
                                          polyadic_format format, char** out);
void polyadic_automaton_free(polyadic_automaton* a);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* POLYADIC_H */
