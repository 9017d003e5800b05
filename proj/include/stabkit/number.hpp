// Copyright 2026 The stabkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABKIT_NUMBER_HPP_
#define STABKIT_NUMBER_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace stabkit {

// Arbitrary precision integers and rationals. mpq_class keeps every value in
// lowest terms with a positive denominator.
using BigInt = mpz_class;
using Rational = mpq_class;

std::string to_string(const BigInt& value);

// Prints "p" for integral values and "p/q" otherwise.
std::string to_string(const Rational& value);

std::optional<BigInt> parse_bigint(std::string_view text);
std::optional<Rational> parse_rational(std::string_view text);

// ceil(a / b) for b > 0.
BigInt ceil_div(const BigInt& a, const BigInt& b);

// Number of bits in the binary encoding of |value| plus a sign bit.
std::size_t bit_length(const BigInt& value);
std::size_t bit_length(const Rational& value);

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

}  // namespace stabkit

#endif  // STABKIT_NUMBER_HPP_
