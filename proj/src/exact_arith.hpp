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

#include <gmpxx.h>

namespace polyadic {

// Exact signed integer of arbitrary size. All arithmetic in this library is
// exact; nothing is ever rounded.
using Int = mpz_class;

// Tree arity / digit base d >= 2.
class Base {
public:
    explicit Base(std::uint64_t d);

    std::uint64_t value() const noexcept { return d_; }

    friend bool operator==(Base, Base) = default;

private:
    std::uint64_t d_;
};

// a = d*quotient + remainder with 0 <= remainder < d (floor quotient, digit
// remainder) -- for every sign of a.
struct DivMod {
    Int quotient;
    std::uint64_t remainder;
};

DivMod euclid_divmod(const Int& a, Base d);

// Floor quotient of a by d (the integer dropped when the low digit of a is
// stripped).
Int floor_div(const Int& a, Base d);

// Low base-d digit of a, always in [0, d).
std::uint64_t digit_mod(const Int& a, Base d);

// a / b when b divides a exactly. Non-divisibility is a bug in the caller,
// never an input error, so it throws std::logic_error.
Int exact_div(const Int& a, const Int& b);

} // namespace polyadic
