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

#include <string>

#include "criteria.hpp"

namespace polyadic {

// All renderings are deterministic: fixed ordering, no timestamps, identical
// bytes for identical inputs.

std::string render_text(const CriteriaReport& r);
std::string render_json(const CriteriaReport& r);

std::string render_text(const ConsistencyReport& r);
std::string render_json(const ConsistencyReport& r);

std::string render_text(const Portrait& p);
std::string render_json(const Portrait& p);
std::string render_dot(const Portrait& p);

std::string render_text(const SectionAutomaton& a);
std::string render_json(const SectionAutomaton& a);
std::string render_dot(const SectionAutomaton& a);

// "eps" for the root, the digit word otherwise.
std::string display_word(const Vertex& v);

// Cycle notation for bijective digit actions ("()", "(0 1)", "(0 2 1)"),
// bracketed image list ("[1 1]") otherwise.
std::string render_action(const std::vector<Digit>& action);

} // namespace polyadic
