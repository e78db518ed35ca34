// Copyright 2026 The Authors.
//
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

#ifndef SUBMOD_RATIONAL_HPP
#define SUBMOD_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace submod {

// Exact arbitrary-precision rational, GMP-backed. All combinatorial values
// in the library are carried in this type; floating point appears only in
// the entropy/log-det generators, which convert their doubles losslessly.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Parses "p/q" or "p" (optional sign, arbitrary precision). Always
// canonicalizes; rejects q = 0 and malformed text with BadArgument.
Rational parse_rational(const std::string& text);

// Serializes as "p/q" with q >= 1 and gcd(p, q) = 1 ("p/1" for integers,
// so every value round-trips through the same grammar).
std::string format_rational(const Rational& value);

// Exact conversion; every finite IEEE double is a dyadic rational.
Rational rational_from_double(double value);

bool is_integer(const Rational& value);

Rational positive_part(const Rational& value);  // |x|_+ = max(x, 0)
Rational negative_part(const Rational& value);  // |x|_- = max(-x, 0)
Rational abs_value(const Rational& value);

}  // namespace submod

#endif  // SUBMOD_RATIONAL_HPP
