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

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>
#include <polyadic.h>

namespace {

using nlohmann::json;

template <typename T, void (*FreeFn)(T*)>
class Handle {
public:
    Handle() = default;
    ~Handle() {
        if (ptr_ != nullptr)
            FreeFn(ptr_);
    }
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    T* get() const { return ptr_; }
    T** out() { return &ptr_; }

private:
    T* ptr_ = nullptr;
};

using Poly = Handle<polyadic_poly, polyadic_poly_free>;
using Report = Handle<polyadic_report, polyadic_report_free>;
using PortraitHandle = Handle<polyadic_portrait, polyadic_portrait_free>;
using Consistency = Handle<polyadic_consistency, polyadic_consistency_free>;
using Automaton = Handle<polyadic_automaton, polyadic_automaton_free>;

struct U64Array {
    std::uint64_t* data = nullptr;
    std::size_t count = 0;
    ~U64Array() { polyadic_array_free(data); }
};

int exit_code_for(polyadic_status s) {
    switch (s) {
    case POLYADIC_OK:
        return 0;
    case POLYADIC_ERR_PARSE:
    case POLYADIC_ERR_ARGUMENT:
        return 1;
    default:
        return 2;
    }
}

[[noreturn]] void fail(polyadic_status s) {
    std::cerr << "error: " << polyadic_last_error() << "\n";
    std::exit(exit_code_for(s));
}

void check_status(polyadic_status s) {
    if (s != POLYADIC_OK)
        fail(s);
}

std::string take_string(char* s) {
    std::string out = s == nullptr ? "" : s;
    polyadic_string_free(s);
    return out;
}

void parse_poly(const std::string& text, Poly& out) {
    check_status(polyadic_poly_parse(text.c_str(), out.out()));
}

std::string render_poly(const polyadic_poly* p) {
    char* s = nullptr;
    check_status(polyadic_poly_render(p, &s));
    return take_string(s);
}

polyadic_format to_format(const std::string& f) {
    if (f == "json")
        return POLYADIC_FORMAT_JSON;
    if (f == "dot")
        return POLYADIC_FORMAT_DOT;
    return POLYADIC_FORMAT_TEXT;
}

std::string report_string(const polyadic_report* r, const std::string& fmt) {
    char* s = nullptr;
    check_status(polyadic_report_render(r, to_format(fmt), &s));
    return take_string(s);
}

int run_check(const std::string& poly, const std::string& fmt) {
    Poly p;
    parse_poly(poly, p);
    Report permutational;
    Report ergodic;
    check_status(polyadic_check_permutational(p.get(), permutational.out()));
    check_status(polyadic_check_ergodic(p.get(), ergodic.out()));
    if (fmt == "json") {
        json j{{"polynomial", render_poly(p.get())},
               {"permutational",
                json::parse(report_string(permutational.get(), "json"))},
               {"ergodic", json::parse(report_string(ergodic.get(), "json"))}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "polynomial: " << render_poly(p.get()) << "\n\n"
                  << report_string(permutational.get(), "text") << "\n"
                  << report_string(ergodic.get(), "text");
    }
    return 0;
}

int run_sections(const std::string& poly, std::uint64_t base, unsigned depth,
                 const std::string& vertex, bool have_vertex,
                 const std::string& fmt, std::uint64_t max_cells) {
    Poly p;
    parse_poly(poly, p);
    if (have_vertex) {
        Poly s;
        check_status(
            polyadic_section_at(p.get(), base, vertex.c_str(), s.out()));
        const std::string rendered = render_poly(s.get());
        const std::string word =
            (vertex.empty() || vertex == "eps") ? "" : vertex;
        if (fmt == "json") {
            json j{{"base", base}, {"vertex", word}, {"section", rendered}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << (word.empty() ? "eps" : word) << ": " << rendered
                      << "\n";
        }
        return 0;
    }
    PortraitHandle pt;
    check_status(
        polyadic_portrait_build(p.get(), base, depth, max_cells, pt.out()));
    const std::size_t total = polyadic_portrait_node_count(pt.get());
    std::uint64_t level_count = 1;
    for (unsigned i = 0; i < depth; ++i)
        level_count *= base;
    const std::size_t first = total - static_cast<std::size_t>(level_count);
    json sections = json::array();
    for (std::size_t i = first; i < total; ++i) {
        char* w = nullptr;
        check_status(polyadic_portrait_node_word(pt.get(), i, &w));
        const std::string word = take_string(w);
        Poly s;
        check_status(polyadic_portrait_node_section(pt.get(), i, s.out()));
        const std::string rendered = render_poly(s.get());
        if (fmt == "json")
            sections.push_back({{"vertex", word}, {"section", rendered}});
        else
            std::cout << (word.empty() ? "eps" : word) << ": " << rendered
                      << "\n";
    }
    if (fmt == "json") {
        json j{{"base", base}, {"depth", depth}, {"sections", sections}};
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

int run_portrait(const std::string& poly, std::uint64_t base, unsigned depth,
                 const std::string& fmt, std::uint64_t max_cells) {
    Poly p;
    parse_poly(poly, p);
    PortraitHandle pt;
    check_status(
        polyadic_portrait_build(p.get(), base, depth, max_cells, pt.out()));
    char* s = nullptr;
    check_status(polyadic_portrait_render(pt.get(), to_format(fmt), &s));
    std::cout << take_string(s);
    return 0;
}

int run_act(const std::string& poly, std::uint64_t base, unsigned level,
            const std::string& value, bool have_value, const std::string& fmt,
            std::uint64_t max_cells) {
    Poly p;
    parse_poly(poly, p);
    if (have_value) {
        char* s = nullptr;
        check_status(
            polyadic_apply_mod(p.get(), base, value.c_str(), level, &s));
        const std::string image = take_string(s);
        if (fmt == "json") {
            json j{{"base", base},
                   {"level", level},
                   {"value", value},
                   {"image", image}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << image << "\n";
        }
        return 0;
    }
    U64Array images;
    check_status(polyadic_level_map(p.get(), base, level, max_cells,
                                    &images.data, &images.count));
    if (fmt == "json") {
        json arr = json::array();
        for (std::size_t i = 0; i < images.count; ++i)
            arr.push_back(images.data[i]);
        json j{{"base", base}, {"level", level}, {"images", arr}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < images.count; ++i)
            std::cout << i << " -> " << images.data[i] << "\n";
    }
    return 0;
}

int run_orbit(const std::string& poly, std::uint64_t base, unsigned level,
              std::uint64_t start, const std::string& fmt,
              std::uint64_t max_cells) {
    Poly p;
    parse_poly(poly, p);
    U64Array points;
    std::size_t cycle_start = 0;
    check_status(polyadic_orbit(p.get(), base, level, start, max_cells,
                                &points.data, &points.count, &cycle_start));
    if (fmt == "json") {
        json arr = json::array();
        for (std::size_t i = 0; i < points.count; ++i)
            arr.push_back(points.data[i]);
        json j{{"base", base},
               {"level", level},
               {"start", start},
               {"points", arr},
               {"cycle_start", cycle_start}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "points:";
        for (std::size_t i = 0; i < points.count; ++i)
            std::cout << " " << points.data[i];
        std::cout << "\n";
        std::cout << "cycle start index: " << cycle_start << "\n";
        std::cout << "cycle length: " << points.count - cycle_start << "\n";
    }
    return 0;
}

int run_compose(const std::string& first, const std::string& second,
                const std::string& fmt) {
    Poly a;
    Poly b;
    parse_poly(first, a);
    parse_poly(second, b);
    Poly c;
    check_status(polyadic_poly_compose(a.get(), b.get(), c.out()));
    if (fmt == "json") {
        json j{{"first", render_poly(a.get())},
               {"second", render_poly(b.get())},
               {"composition", render_poly(c.get())}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << render_poly(c.get()) << "\n";
    }
    return 0;
}

int run_verify(const std::string& poly, unsigned levels, const std::string& fmt,
               std::uint64_t max_cells) {
    Poly p;
    parse_poly(poly, p);
    Consistency c;
    check_status(polyadic_verify(p.get(), levels, max_cells, c.out()));
    char* s = nullptr;
    check_status(polyadic_consistency_render(c.get(), to_format(fmt), &s));
    std::cout << take_string(s);
    return polyadic_consistency_agree(c.get()) ? 0 : 3;
}

int run_automaton(const std::string& poly, const std::string& fmt) {
    Poly p;
    parse_poly(poly, p);
    Automaton a;
    check_status(polyadic_automaton_build(p.get(), 2, a.out()));
    char* s = nullptr;
    check_status(polyadic_automaton_render(a.get(), to_format(fmt), &s));
    std::cout << take_string(s);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"integer polynomials acting exactly on the rooted d-ary tree"};
    app.require_subcommand(1);
    app.set_version_flag("--version", polyadic_version());

    const std::string poly_help = "polynomial: \"2*x^2 + x\" or \"coeffs:0,1,2\"";

    std::string check_poly;
    std::string check_format = "text";
    CLI::App* check = app.add_subcommand(
        "check", "closed-form base-2 criteria: bijective and single-cycle "
                 "action on every level");
    check->add_option("poly", check_poly, poly_help)->required();
    check->add_option("--format", check_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string sections_poly;
    std::uint64_t sections_base = 2;
    unsigned sections_depth = 1;
    std::string sections_vertex;
    std::string sections_format = "text";
    std::uint64_t sections_cells = 0;
    CLI::App* sections = app.add_subcommand(
        "sections", "sections (residual actions) at tree vertices");
    sections->add_option("poly", sections_poly, poly_help)->required();
    sections->add_option("--base", sections_base, "tree arity (default 2)");
    CLI::Option* sections_depth_opt = sections->add_option(
        "--depth", sections_depth, "list every section at this depth");
    CLI::Option* sections_vertex_opt =
        sections->add_option("--vertex", sections_vertex,
                             "single vertex word (\"011\", \"eps\" for root)");
    sections_depth_opt->excludes(sections_vertex_opt);
    sections->add_option("--format", sections_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    sections->add_option("--max-cells", sections_cells,
                         "dense-table cell limit (0 = default 2^24)");

    std::string portrait_poly;
    std::uint64_t portrait_base = 2;
    unsigned portrait_depth = 3;
    std::string portrait_format = "text";
    std::uint64_t portrait_cells = 0;
    CLI::App* portrait = app.add_subcommand(
        "portrait", "tree of sections with per-vertex actions");
    portrait->add_option("poly", portrait_poly, poly_help)->required();
    portrait->add_option("--base", portrait_base, "tree arity (default 2)");
    portrait->add_option("--depth", portrait_depth, "tree depth (default 3)");
    portrait->add_option("--format", portrait_format, "text|json|dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    portrait->add_option("--max-cells", portrait_cells,
                         "dense-table cell limit (0 = default 2^24)");

    std::string act_poly;
    std::uint64_t act_base = 2;
    unsigned act_level = 1;
    std::string act_value;
    std::string act_format = "text";
    std::uint64_t act_cells = 0;
    CLI::App* act = app.add_subcommand(
        "act", "induced action on one level: full table or one value");
    act->add_option("poly", act_poly, poly_help)->required();
    act->add_option("--base", act_base, "tree arity (default 2)");
    act->add_option("--level", act_level, "level n (acts mod base^n)")
        ->required();
    CLI::Option* act_value_opt = act->add_option(
        "--value", act_value, "apply to this value only (decimal)");
    act->add_option("--format", act_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    act->add_option("--max-cells", act_cells,
                    "dense-table cell limit (0 = default 2^24)");

    std::string orbit_poly;
    std::uint64_t orbit_base = 2;
    unsigned orbit_level = 1;
    std::uint64_t orbit_start = 0;
    std::string orbit_format = "text";
    std::uint64_t orbit_cells = 0;
    CLI::App* orbit = app.add_subcommand(
        "orbit", "forward trajectory of a point under the level action");
    orbit->add_option("poly", orbit_poly, poly_help)->required();
    orbit->add_option("--base", orbit_base, "tree arity (default 2)");
    orbit->add_option("--level", orbit_level, "level n")->required();
    orbit->add_option("--start", orbit_start, "start point in [0, base^n)")
        ->required();
    orbit->add_option("--format", orbit_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    orbit->add_option("--max-cells", orbit_cells,
                      "dense-table cell limit (0 = default 2^24)");

    std::string compose_first;
    std::string compose_second;
    std::string compose_format = "text";
    CLI::App* compose = app.add_subcommand(
        "compose", "x -> B(A(x)): A acts first, then B");
    compose->add_option("polyA", compose_first, poly_help)->required();
    compose->add_option("polyB", compose_second, poly_help)->required();
    compose->add_option("--format", compose_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string verify_poly;
    unsigned verify_levels = 10;
    std::string verify_format = "text";
    std::uint64_t verify_cells = 0;
    CLI::App* verify = app.add_subcommand(
        "verify", "closed-form criteria vs exhaustive level-by-level oracles; "
                  "exit 3 on any mismatch");
    verify->add_option("poly", verify_poly, poly_help)->required();
    verify->add_option("--levels", verify_levels,
                       "check levels 1..N (default 10)");
    verify->add_option("--format", verify_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--max-cells", verify_cells,
                       "dense-table cell limit (0 = default 2^24)");

    std::string automaton_poly;
    std::string automaton_format = "text";
    CLI::App* automaton = app.add_subcommand(
        "automaton", "section automaton of a linear polynomial (base 2)");
    automaton->add_option("poly", automaton_poly, poly_help)->required();
    automaton->add_option("--format", automaton_format, "text|json|dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (*check)
        return run_check(check_poly, check_format);
    if (*sections)
        return run_sections(sections_poly, sections_base, sections_depth,
                            sections_vertex,
                            sections_vertex_opt->count() > 0, sections_format,
                            sections_cells);
    if (*portrait)
        return run_portrait(portrait_poly, portrait_base, portrait_depth,
                            portrait_format, portrait_cells);
    if (*act)
        return run_act(act_poly, act_base, act_level, act_value,
                       act_value_opt->count() > 0, act_format, act_cells);
    if (*orbit)
        return run_orbit(orbit_poly, orbit_base, orbit_level, orbit_start,
                         orbit_format, orbit_cells);
    if (*compose)
        return run_compose(compose_first, compose_second, compose_format);
    if (*verify)
        return run_verify(verify_poly, verify_levels, verify_format,
                          verify_cells);
    if (*automaton)
        return run_automaton(automaton_poly, automaton_format);
    return 1;
}
