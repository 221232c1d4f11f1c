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

#include <polyadic.h>

#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>

#include "criteria.hpp"
#include "errors.hpp"
#include "render.hpp"

struct polyadic_poly {
    polyadic::IntPolynomial impl;
};
struct polyadic_report {
    polyadic::CriteriaReport impl;
};
struct polyadic_consistency {
    polyadic::ConsistencyReport impl;
};
struct polyadic_portrait {
    polyadic::Portrait impl;
};
struct polyadic_automaton {
    polyadic::SectionAutomaton impl;
};

namespace {

thread_local std::string t_last_error;

polyadic_status set_error(polyadic_status s, const char* what) {
    t_last_error = what;
    return s;
}

template <typename Fn>
polyadic_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const polyadic::ParseError& e) {
        return set_error(POLYADIC_ERR_PARSE, e.what());
    } catch (const polyadic::NonLinearError& e) {
        return set_error(POLYADIC_ERR_NONLINEAR, e.what());
    } catch (const polyadic::NotPermutationalError& e) {
        return set_error(POLYADIC_ERR_NOT_PERMUTATIONAL, e.what());
    } catch (const polyadic::LimitError& e) {
        return set_error(POLYADIC_ERR_LIMIT, e.what());
    } catch (const polyadic::DomainError& e) {
        return set_error(POLYADIC_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(POLYADIC_ERR_PARSE, e.what());
    } catch (const std::exception& e) {
        return set_error(POLYADIC_ERR_INTERNAL, e.what());
    }
}

polyadic_status null_argument() {
    return set_error(POLYADIC_ERR_ARGUMENT, "null argument");
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

polyadic_status emit_string(const std::string& s, char** out) {
    *out = dup_string(s);
    if (*out == nullptr)
        return set_error(POLYADIC_ERR_INTERNAL, "out of memory");
    return POLYADIC_OK;
}

polyadic_status emit_array(const std::vector<std::uint64_t>& values,
                           uint64_t** out, size_t* out_count) {
    uint64_t* arr = static_cast<uint64_t*>(
        std::malloc(values.empty() ? 1 : values.size() * sizeof(uint64_t)));
    if (arr == nullptr)
        return set_error(POLYADIC_ERR_INTERNAL, "out of memory");
    std::memcpy(arr, values.data(), values.size() * sizeof(uint64_t));
    *out = arr;
    *out_count = values.size();
    return POLYADIC_OK;
}

std::uint64_t cells_or_default(uint64_t max_cells) {
    return max_cells == 0 ? polyadic::kDefaultCellLimit : max_cells;
}

// Decimal string (optional leading '-') to an exact integer.
polyadic::Int parse_decimal(const char* text) {
    return polyadic::Int(text);
}

template <typename Fn>
polyadic_status make_report(const polyadic_poly* p, polyadic_report** out,
                            Fn&& fn) {
    if (p == nullptr || out == nullptr)
        return null_argument();
    return guarded([&] {
        *out = new polyadic_report{fn(p->impl)};
        return POLYADIC_OK;
    });
}

} // namespace

extern "C" {

const char* polyadic_last_error(void) { return t_last_error.c_str(); }

void polyadic_string_free(char* s) { std::free(s); }
void polyadic_array_free(uint64_t* a) { std::free(a); }

const char* polyadic_version(void) { return "0.1.0"; }

/* ---------- polynomials ---------- */

polyadic_status polyadic_poly_parse(const char* text, polyadic_poly** out) {
    if (text == nullptr || out == nullptr)
        return null_argument();
    return guarded([&] {
        *out = new polyadic_poly{polyadic::IntPolynomial::parse(text)};
        return POLYADIC_OK;
    });
}

polyadic_status polyadic_poly_from_coefficients(const int64_t* coefficients,
                                                size_t count,
                                                polyadic_poly** out) {
    if ((coefficients == nullptr && count > 0) || out == nullptr)
        return null_argument();
    return guarded([&] {
        std::vector<polyadic::Int> c;
        c.reserve(count);
        for (size_t i = 0; i < count; ++i)
            c.emplace_back(static_cast<long>(coefficients[i]));
        *out = new polyadic_poly{polyadic::IntPolynomial(std::move(c))};
        return POLYADIC_OK;
    });
}

polyadic_status polyadic_poly_render(const polyadic_poly* p, char** out) {
    if (p == nullptr || out == nullptr)
        return null_argument();
    return guarded([&] { return emit_string(p->impl.render(), out); });
}

size_t polyadic_poly_degree(const polyadic_poly* p) {
    return p == nullptr ? 0 : p->impl.degree();
}

polyadic_status polyadic_poly_coefficient(const polyadic_poly* p, size_t i,
                                          char** out_decimal) {
    if (p == nullptr || out_decimal == nullptr)
        return null_argument();
    return guarded(
        [&] { return emit_string(p->impl.coefficient(i).get_str(), out_decimal); });
}

polyadic_status polyadic_poly_evaluate(const polyadic_poly* p,
                                       const char* x_decimal,
                                       char** out_decimal) {
    if (p == nullptr || x_decimal == nullptr || out_decimal == nullptr)
        return null_argument();
    return guarded([&] {
        return emit_string(p->impl.evaluate(parse_decimal(x_decimal)).get_str(),
                           out_decimal);
    });
}

polyadic_status polyadic_poly_compose(const polyadic_poly* first,
                                      const polyadic_poly* second,
                                      polyadic_poly** out) {
    if (first == nullptr || second == nullptr || out == nullptr)
        return null_argument();
    return guarded([&] {
        *out = new polyadic_poly{polyadic::compose(first->impl, second->impl)};
        return POLYADIC_OK;
    });
}

void polyadic_poly_free(polyadic_poly* p) { delete p; }

/* ---------- action on the tree ---------- */

polyadic_status polyadic_vertex_image(const polyadic_poly* p, uint64_t base,
                                      const char* word, char** out_word) {
    if (p == nullptr || word == nullptr || out_word == nullptr)
        return null_argument();
    return guarded([&] {
        const polyadic::Vertex v =
            polyadic::Vertex::parse(polyadic::Base(base), word);
        return emit_string(polyadic::vertex_image(p->impl, v).word(), out_word);
    });
}

polyadic_status polyadic_section_at(const polyadic_poly* p, uint64_t base,
                                    const char* word, polyadic_poly** out) {
    if (p == nullptr || word == nullptr || out == nullptr)
        return null_argument();
    return guarded([&] {
        const polyadic::Vertex v =
            polyadic::Vertex::parse(polyadic::Base(base), word);
        *out = new polyadic_poly{polyadic::section_at(p->impl, v)};
        return POLYADIC_OK;
    });
}

polyadic_status polyadic_apply_mod(const polyadic_poly* p, uint64_t base,
                                   const char* value_decimal, uint32_t level,
                                   char** out_decimal) {
    if (p == nullptr || value_decimal == nullptr || out_decimal == nullptr)
        return null_argument();
    return guarded([&] {
        const polyadic::Int image = polyadic::apply_mod(
            p->impl, polyadic::Base(base), parse_decimal(value_decimal), level);
        return emit_string(image.get_str(), out_decimal);
    });
}

polyadic_status polyadic_level_map(const polyadic_poly* p, uint64_t base,
                                   uint32_t level, uint64_t max_cells,
                                   uint64_t** out_images, size_t* out_count) {
    if (p == nullptr || out_images == nullptr || out_count == nullptr)
        return null_argument();
    return guarded([&] {
        const polyadic::LevelMap map = polyadic::level_map(
            p->impl, polyadic::Base(base), level, cells_or_default(max_cells));
        return emit_array(map.images, out_images, out_count);
    });
}

polyadic_status polyadic_orbit(const polyadic_poly* p, uint64_t base,
                               uint32_t level, uint64_t start,
                               uint64_t max_cells, uint64_t** out_points,
                               size_t* out_count, size_t* out_cycle_start) {
    if (p == nullptr || out_points == nullptr || out_count == nullptr ||
        out_cycle_start == nullptr)
        return null_argument();
    return guarded([&] {
        const polyadic::Orbit o =
            polyadic::orbit(p->impl, polyadic::Base(base), level, start,
                            cells_or_default(max_cells));
        *out_cycle_start = o.cycle_start;
        return emit_array(o.points, out_points, out_count);
    });
}

/* ---------- portraits ---------- */

polyadic_status polyadic_portrait_build(const polyadic_poly* p, uint64_t base,
                                        uint32_t depth, uint64_t max_cells,
                                        polyadic_portrait** out) {
    if (p == nullptr || out == nullptr)
        return null_argument();
    return guarded([&] {
        *out = new polyadic_portrait{polyadic::portrait(
            p->impl, polyadic::Base(base), depth, cells_or_default(max_cells))};
        return POLYADIC_OK;
    });
}

size_t polyadic_portrait_node_count(const polyadic_portrait* pt) {
    return pt == nullptr ? 0 : pt->impl.nodes.size();
}

polyadic_status polyadic_portrait_node_word(const polyadic_portrait* pt,
                                            size_t node, char** out) {
    if (pt == nullptr || out == nullptr)
        return null_argument();
    if (node >= pt->impl.nodes.size())
        return set_error(POLYADIC_ERR_ARGUMENT, "node index out of range");
    return guarded([&] {
        const polyadic::Vertex v(pt->impl.base, pt->impl.nodes[node].word);
        return emit_string(v.word(), out);
    });
}

polyadic_status polyadic_portrait_node_section(const polyadic_portrait* pt,
                                               size_t node,
                                               polyadic_poly** out) {
    if (pt == nullptr || out == nullptr)
        return null_argument();
    if (node >= pt->impl.nodes.size())
        return set_error(POLYADIC_ERR_ARGUMENT, "node index out of range");
    return guarded([&] {
        *out = new polyadic_poly{pt->impl.nodes[node].section};
        return POLYADIC_OK;
    });
}

polyadic_status polyadic_portrait_switch_counts(const polyadic_portrait* pt,
                                                uint64_t** out_counts,
                                                size_t* out_count) {
    if (pt == nullptr || out_counts == nullptr || out_count == nullptr)
        return null_argument();
    if (pt->impl.switch_counts.empty())
        return set_error(POLYADIC_ERR_DOMAIN,
                         "switch counts exist only for base 2");
    return guarded(
        [&] { return emit_array(pt->impl.switch_counts, out_counts, out_count); });
}

polyadic_status polyadic_portrait_render(const polyadic_portrait* pt,
                                         polyadic_format format, char** out) {
    if (pt == nullptr || out == nullptr)
        return null_argument();
    return guarded([&] {
        switch (format) {
        case POLYADIC_FORMAT_TEXT:
            return emit_string(polyadic::render_text(pt->impl), out);
        case POLYADIC_FORMAT_JSON:
            return emit_string(polyadic::render_json(pt->impl), out);
        case POLYADIC_FORMAT_DOT:
            return emit_string(polyadic::render_dot(pt->impl), out);
        }
        return set_error(POLYADIC_ERR_ARGUMENT, "unknown format");
    });
}

void polyadic_portrait_free(polyadic_portrait* pt) { delete pt; }

/* ---------- criteria and oracles ---------- */

polyadic_status polyadic_check_permutational(const polyadic_poly* p,
                                             polyadic_report** out) {
    return make_report(p, out, [](const polyadic::IntPolynomial& f) {
        return polyadic::is_permutational_2adic(f);
    });
}

polyadic_status polyadic_check_ergodic(const polyadic_poly* p,
                                       polyadic_report** out) {
    return make_report(p, out, [](const polyadic::IntPolynomial& f) {
        return polyadic::is_ergodic_2adic(f);
    });
}

polyadic_status polyadic_check_ergodic_larin(const polyadic_poly* p,
                                             polyadic_report** out) {
    return make_report(p, out, [](const polyadic::IntPolynomial& f) {
        return polyadic::is_ergodic_larin(f);
    });
}

polyadic_status polyadic_check_linear_transitive(const polyadic_poly* p,
                                                 polyadic_report** out) {
    return make_report(p, out, [](const polyadic::IntPolynomial& f) {
        return polyadic::is_level_transitive_linear(f);
    });
}

int polyadic_report_verdict(const polyadic_report* r) {
    return r != nullptr && r->impl.verdict ? 1 : 0;
}

size_t polyadic_report_condition_count(const polyadic_report* r) {
    return r == nullptr ? 0 : r->impl.conditions.size();
}

polyadic_status polyadic_report_condition(const polyadic_report* r, size_t i,
                                          char** out_label, int* out_holds) {
    if (r == nullptr || out_label == nullptr || out_holds == nullptr)
        return null_argument();
    if (i >= r->impl.conditions.size())
        return set_error(POLYADIC_ERR_ARGUMENT, "condition index out of range");
    return guarded([&] {
        *out_holds = r->impl.conditions[i].holds ? 1 : 0;
        return emit_string(r->impl.conditions[i].label, out_label);
    });
}

polyadic_status polyadic_report_render(const polyadic_report* r,
                                       polyadic_format format, char** out) {
    if (r == nullptr || out == nullptr)
        return null_argument();
    return guarded([&] {
        switch (format) {
        case POLYADIC_FORMAT_TEXT:
            return emit_string(polyadic::render_text(r->impl), out);
        case POLYADIC_FORMAT_JSON:
            return emit_string(polyadic::render_json(r->impl), out);
        case POLYADIC_FORMAT_DOT:
            break;
        }
        return set_error(POLYADIC_ERR_ARGUMENT,
                         "reports render as text or json only");
    });
}

void polyadic_report_free(polyadic_report* r) { delete r; }

polyadic_status polyadic_brute_force_permutation(const polyadic_poly* p,
                                                 uint64_t base, uint32_t level,
                                                 uint64_t max_cells, int* out) {
    if (p == nullptr || out == nullptr)
        return null_argument();
    return guarded([&] {
        *out = polyadic::brute_force_permutation(p->impl, polyadic::Base(base),
                                                 level,
                                                 cells_or_default(max_cells))
                   ? 1
                   : 0;
        return POLYADIC_OK;
    });
}

polyadic_status polyadic_brute_force_transitive(const polyadic_poly* p,
                                                uint64_t base, uint32_t level,
                                                uint64_t max_cells, int* out) {
    if (p == nullptr || out == nullptr)
        return null_argument();
    return guarded([&] {
        *out = polyadic::brute_force_transitive(p->impl, polyadic::Base(base),
                                                level,
                                                cells_or_default(max_cells))
                   ? 1
                   : 0;
        return POLYADIC_OK;
    });
}

polyadic_status polyadic_verify(const polyadic_poly* p, uint32_t max_level,
                                uint64_t max_cells,
                                polyadic_consistency** out) {
    if (p == nullptr || out == nullptr)
        return null_argument();
    return guarded([&] {
        *out = new polyadic_consistency{polyadic::verify_consistency(
            p->impl, max_level, cells_or_default(max_cells))};
        return POLYADIC_OK;
    });
}

int polyadic_consistency_agree(const polyadic_consistency* c) {
    return c != nullptr && c->impl.agree ? 1 : 0;
}

polyadic_status polyadic_consistency_render(const polyadic_consistency* c,
                                            polyadic_format format,
                                            char** out) {
    if (c == nullptr || out == nullptr)
        return null_argument();
    return guarded([&] {
        switch (format) {
        case POLYADIC_FORMAT_TEXT:
            return emit_string(polyadic::render_text(c->impl), out);
        case POLYADIC_FORMAT_JSON:
            return emit_string(polyadic::render_json(c->impl), out);
        case POLYADIC_FORMAT_DOT:
            break;
        }
        return set_error(POLYADIC_ERR_ARGUMENT,
                         "consistency reports render as text or json only");
    });
}

void polyadic_consistency_free(polyadic_consistency* c) { delete c; }

/* ---------- section automata ---------- */

polyadic_status polyadic_automaton_build(const polyadic_poly* p, uint64_t base,
                                         polyadic_automaton** out) {
    if (p == nullptr || out == nullptr)
        return null_argument();
    return guarded([&] {
        *out = new polyadic_automaton{
            polyadic::linear_section_closure(p->impl, polyadic::Base(base))};
        return POLYADIC_OK;
    });
}

size_t polyadic_automaton_state_count(const polyadic_automaton* a) {
    return a == nullptr ? 0 : a->impl.states.size();
}

polyadic_status polyadic_automaton_state(const polyadic_automaton* a, size_t i,
                                         polyadic_poly** out) {
    if (a == nullptr || out == nullptr)
        return null_argument();
    if (i >= a->impl.states.size())
        return set_error(POLYADIC_ERR_ARGUMENT, "state index out of range");
    return guarded([&] {
        *out = new polyadic_poly{a->impl.states[i]};
        return POLYADIC_OK;
    });
}

polyadic_status polyadic_automaton_step(const polyadic_automaton* a,
                                        size_t state, uint64_t digit,
                                        size_t* out_state,
                                        uint64_t* out_digit) {
    if (a == nullptr || out_state == nullptr || out_digit == nullptr)
        return null_argument();
    if (state >= a->impl.states.size())
        return set_error(POLYADIC_ERR_ARGUMENT, "state index out of range");
    if (digit >= a->impl.base.value())
        return set_error(POLYADIC_ERR_DOMAIN, "digit out of range for base");
    *out_state = a->impl.transitions[state][digit];
    *out_digit = a->impl.outputs[state][digit];
    return POLYADIC_OK;
}

polyadic_status polyadic_automaton_apply(const polyadic_automaton* a,
                                         uint64_t value, uint32_t length,
                                         uint64_t* out) {
    if (a == nullptr || out == nullptr)
        return null_argument();
    return guarded([&] {
        // The output word's value must fit in 64 bits.
        polyadic::checked_pow(a->impl.base, length,
                              std::numeric_limits<std::uint64_t>::max());
        *out = polyadic::automaton_apply(a->impl, value, length);
        return POLYADIC_OK;
    });
}

polyadic_status polyadic_automaton_render(const polyadic_automaton* a,
                                          polyadic_format format, char** out) {
    if (a == nullptr || out == nullptr)
        return null_argument();
    return guarded([&] {
        switch (format) {
        case POLYADIC_FORMAT_TEXT:
            return emit_string(polyadic::render_text(a->impl), out);
        case POLYADIC_FORMAT_JSON:
            return emit_string(polyadic::render_json(a->impl), out);
        case POLYADIC_FORMAT_DOT:
            return emit_string(polyadic::render_dot(a->impl), out);
        }
        return set_error(POLYADIC_ERR_ARGUMENT, "unknown format");
    });
}

void polyadic_automaton_free(polyadic_automaton* a) { delete a; }

} // extern "C"
