// Copyright 2026 The Cornerforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cornerforge {

/// Exact rational number. Always kept canonical: gcd(|num|, den) = 1, den > 0.
using Rat = mpq_class;
using BigInt = mpz_class;

/// num/den in canonical form. Prefer this to the two-argument mpq_class
/// constructor, which does not reduce.
Rat ratio(long num, long den);

/// Parses "p/q" or "p" with decimal integers. Throws Error on malformed input
/// or a zero denominator.
Rat parse_rat(std::string_view text);

/// Canonical "p/q" string; integers are written with denominator 1.
std::string format_rat(const Rat& value);

/// Exact conversion of a finite double (every double is a dyadic rational).
Rat rat_from_double(double value);

double to_double(const Rat& value);

/// Sign of a + b*sqrt(c) for rationals a, b and c >= 0, decided exactly.
int sign_with_sqrt(const Rat& a, const Rat& b, const Rat& c);

/// Sign of a + b*sqrt(u) + c*sqrt(v) for u, v >= 0, decided exactly.
int sign_with_two_sqrts(const Rat& a, const Rat& b, const Rat& u, const Rat& c,
                        const Rat& v);

}  // namespace cornerforge
