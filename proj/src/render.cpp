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

#include "render.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace polyadic {

namespace {

using nlohmann::json;

json json_int(const Int& v) {
    if (v.fits_slong_p())
        return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

std::string word_of(Base base, const std::vector<Digit>& digits,
                    bool root_as_eps) {
    if (digits.empty())
        return root_as_eps ? "eps" : "";
    std::string out;
    const bool dotted = base.value() > 10;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (dotted && i > 0)
            out += '.';
        out += std::to_string(digits[i]);
    }
    return out;
}

bool is_swap(Base base, const std::vector<Digit>& action) {
    return base.value() == 2 && action[0] == 1 && action[1] == 0;
}

json to_json(const CriteriaReport& r) {
    json conditions = json::array();
    for (const Condition& c : r.conditions)
        conditions.push_back({{"label", c.label},
                              {"lhs", json_int(c.lhs)},
                              {"rhs", json_int(c.rhs)},
                              {"modulus", json_int(c.modulus)},
                              {"holds", c.holds}});
    json profile(nullptr);
    if (r.profile)
        profile = {{"k", json_int(r.profile->k)},
                   {"m", json_int(r.profile->m)},
                   {"n", json_int(r.profile->n)}};
    return {{"kind", r.kind},
            {"verdict", r.verdict},
            {"conditions", conditions},
            {"profile", profile}};
}

json to_json(const ConsistencyReport& r) {
    json j{{"levels_checked", r.levels_checked},
           {"permutational", to_json(r.permutational)},
           {"ergodic", to_json(r.ergodic)},
           {"bijective_up_to", r.bijective_up_to},
           {"single_cycle_up_to", r.single_cycle_up_to},
           {"agree", r.agree}};
    if (!r.switch_parity_up_to.empty())
        j["switch_parity_up_to"] = r.switch_parity_up_to;
    return j;
}

json to_json(const Portrait& p) {
    json nodes = json::array();
    for (const Portrait::Node& node : p.nodes) {
        json n{{"word", word_of(p.base, node.word, false)},
               {"level", node.word.size()},
               {"section", node.section.render()},
               {"action", node.action}};
        if (p.base.value() == 2)
            n["switch"] = is_swap(p.base, node.action);
        nodes.push_back(std::move(n));
    }
    json j{{"base", p.base.value()}, {"depth", p.depth}, {"nodes", nodes}};
    if (!p.switch_counts.empty())
        j["switch_counts"] = p.switch_counts;
    return j;
}

json to_json(const SectionAutomaton& a) {
    json states = json::array();
    for (const IntPolynomial& s : a.states)
        states.push_back(s.render());
    return {{"base", a.base.value()},
            {"initial", 0},
            {"states", states},
            {"transitions", a.transitions},
            {"outputs", a.outputs}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string display_word(const Vertex& v) {
    return word_of(v.base(), v.digits(), true);
}

std::string render_action(const std::vector<Digit>& action) {
    const std::size_t d = action.size();
    std::vector<bool> hit(d, false);
    bool bijective = true;
    for (Digit y : action) {
        if (y >= d || hit[y]) {
            bijective = false;
            break;
        }
        hit[y] = true;
    }
    if (!bijective) {
        std::string out = "[";
        for (std::size_t i = 0; i < d; ++i) {
            if (i > 0)
                out += ' ';
            out += std::to_string(action[i]);
        }
        return out + "]";
    }
    std::string out;
    std::vector<bool> used(d, false);
    for (std::size_t s = 0; s < d; ++s) {
        if (used[s])
            continue;
        used[s] = true;
        if (action[s] == s)
            continue;
        out += "(" + std::to_string(s);
        for (std::size_t t = action[s]; t != s; t = action[t]) {
            used[t] = true;
            out += " " + std::to_string(t);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

std::string render_text(const CriteriaReport& r) {
    std::ostringstream out;
    out << "kind: " << r.kind << "\n";
    out << "verdict: " << (r.verdict ? "true" : "false") << "\n";
    for (const Condition& c : r.conditions) {
        out << "  " << (c.holds ? "ok    " : "FAIL  ") << std::left
            << std::setw(12) << c.label << c.description << "  ["
            << c.lhs.get_str() << (c.holds ? " = " : " != ") << c.rhs.get_str()
            << "]\n";
    }
    if (r.profile)
        out << "profile: k=" << r.profile->k.get_str()
            << " m=" << r.profile->m.get_str()
            << " n=" << r.profile->n.get_str() << "\n";
    else
        out << "profile: none (not a bijective action)\n";
    return out.str();
}

std::string render_json(const CriteriaReport& r) { return dump(to_json(r)); }

std::string render_text(const ConsistencyReport& r) {
    std::ostringstream out;
    out << "levels checked: " << r.levels_checked << "\n";
    out << "closed-form permutational: "
        << (r.permutational.verdict ? "true" : "false") << "\n";
    out << "closed-form ergodic: " << (r.ergodic.verdict ? "true" : "false")
        << "\n";
    out << "level  bijective  single-cycle  switch-parity\n";
    for (unsigned n = 1; n <= r.levels_checked; ++n) {
        out << std::right << std::setw(5) << n << "  " << std::left
            << std::setw(9) << (r.bijective_up_to[n - 1] ? "yes" : "no") << "  "
            << std::setw(12) << (r.single_cycle_up_to[n - 1] ? "yes" : "no")
            << "  "
            << (r.switch_parity_up_to.empty()
                    ? "-"
                    : (r.switch_parity_up_to[n - 1] ? "yes" : "no"))
            << "\n";
    }
    out << "agree: " << (r.agree ? "true" : "false") << "\n";
    return out.str();
}

std::string render_json(const ConsistencyReport& r) { return dump(to_json(r)); }

std::string render_text(const Portrait& p) {
    std::ostringstream out;
    out << "base: " << p.base.value() << "\n";
    out << "depth: " << p.depth << "\n";
    std::vector<std::size_t> start(p.depth + 2, 0);
    std::uint64_t width = 1;
    for (unsigned lev = 0; lev <= p.depth; ++lev) {
        start[lev + 1] = start[lev] + width;
        width *= p.base.value();
    }
    auto print = [&](auto&& self, std::size_t idx, unsigned lev) -> void {
        const Portrait::Node& node = p.nodes[idx];
        out << std::string(2 * static_cast<std::size_t>(lev), ' ')
            << word_of(p.base, node.word, true) << ": "
            << node.section.render() << "  " << render_action(node.action)
            << "\n";
        if (lev < p.depth) {
            const std::size_t offset = idx - start[lev];
            for (std::uint64_t x = 0; x < p.base.value(); ++x)
                self(self, start[lev + 1] + offset * p.base.value() + x,
                     lev + 1);
        }
    };
    print(print, 0, 0);
    if (!p.switch_counts.empty()) {
        out << "switches per level:";
        for (std::uint64_t c : p.switch_counts)
            out << " " << c;
        out << "\n";
    }
    return out.str();
}

std::string render_json(const Portrait& p) { return dump(to_json(p)); }

std::string render_dot(const Portrait& p) {
    std::ostringstream out;
    out << "digraph portrait {\n";
    out << "  node [shape=box];\n";
    for (const Portrait::Node& node : p.nodes) {
        const std::string id = word_of(p.base, node.word, true);
        out << "  \"" << id << "\" [label=\"" << id << "\\n"
            << node.section.render() << "\\n" << render_action(node.action)
            << "\"";
        if (is_swap(p.base, node.action))
            out << ", peripheries=2";
        out << "];\n";
    }
    for (const Portrait::Node& node : p.nodes) {
        if (node.word.empty())
            continue;
        std::vector<Digit> parent(node.word.begin(), node.word.end() - 1);
        out << "  \"" << word_of(p.base, parent, true) << "\" -> \""
            << word_of(p.base, node.word, true) << "\" [label=\""
            << node.word.back() << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string render_text(const SectionAutomaton& a) {
    std::ostringstream out;
    out << "base: " << a.base.value() << "\n";
    out << "states: " << a.states.size() << "\n";
    out << "initial: s0\n";
    for (std::size_t s = 0; s < a.states.size(); ++s) {
        out << "s" << s << ": " << a.states[s].render() << "\n";
        for (std::uint64_t x = 0; x < a.base.value(); ++x)
            out << "  " << x << " / " << a.outputs[s][x] << " -> s"
                << a.transitions[s][x] << "\n";
    }
    return out.str();
}

std::string render_json(const SectionAutomaton& a) { return dump(to_json(a)); }

std::string render_dot(const SectionAutomaton& a) {
    std::ostringstream out;
    out << "digraph automaton {\n";
    out << "  rankdir=LR;\n";
    out << "  __start [shape=point];\n";
    out << "  __start -> \"s0\";\n";
    for (std::size_t s = 0; s < a.states.size(); ++s)
        out << "  \"s" << s << "\" [shape=circle, label=\"s" << s << ": "
            << a.states[s].render() << "\"];\n";
    for (std::size_t s = 0; s < a.states.size(); ++s)
        for (std::uint64_t x = 0; x < a.base.value(); ++x)
            out << "  \"s" << s << "\" -> \"s" << a.transitions[s][x]
                << "\" [label=\"" << x << " / " << a.outputs[s][x] << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace polyadic
