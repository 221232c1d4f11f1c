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

#include "exact_arith.hpp"

#include "errors.hpp"

namespace polyadic {

Base::Base(std::uint64_t d) : d_(d) {
    if (d < 2)
        throw DomainError("base must be at least 2, got " + std::to_string(d));
}

DivMod euclid_divmod(const Int& a, Base d) {
    DivMod out;
    out.remainder =
        mpz_fdiv_q_ui(out.quotient.get_mpz_t(), a.get_mpz_t(), d.value());
    return out;
}

Int floor_div(const Int& a, Base d) {
    Int q;
    mpz_fdiv_q_ui(q.get_mpz_t(), a.get_mpz_t(), d.value());
    return q;
}

std::uint64_t digit_mod(const Int& a, Base d) {
    return mpz_fdiv_ui(a.get_mpz_t(), d.value());
}

Int exact_div(const Int& a, const Int& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::logic_error("exact_div: " + a.get_str() +
                               " is not divisible by " + b.get_str());
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace polyadic
