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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyadic {

// Malformed polynomial or vertex-word text. `position` is the byte offset of
// the offending character in the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Argument outside an operation's domain (bad base, digit out of range,
// level/value bounds, base-2-only criteria asked for another base, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A linear polynomial was required (degree >= 2 breaks the finiteness of the
// section closure).
class NonLinearError : public DomainError {
public:
    using DomainError::DomainError;
};

// The polynomial does not act bijectively on the levels, so quantities that
// only exist for bijective actions (profile, switch parity) are undefined.
class NotPermutationalError : public DomainError {
public:
    using DomainError::DomainError;
};

// A dense table (level map, portrait layer, orbit) would exceed the
// configured cell limit.
class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace polyadic
