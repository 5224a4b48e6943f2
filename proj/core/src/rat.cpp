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

#include "cornerforge/rat.hpp"

#include <cmath>

#include "cornerforge/error.hpp"

namespace cornerforge {
namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

BigInt parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

int sgn(const Rat& r) {
  const int s = ::sgn(r);
  return (s > 0) - (s < 0);
}

}  // namespace

Rat ratio(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error("malformed rational '" + std::string(text) + "'");
  }
  const BigInt d = parse_int(den);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rat r(parse_int(num), d);
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rat rat_from_double(double value) {
  if (!std::isfinite(value)) throw Error("non-finite value has no rational form");
  Rat r(value);
  r.canonicalize();
  return r;
}

double to_double(const Rat& value) { return value.get_d(); }

int sign_with_sqrt(const Rat& a, const Rat& b, const Rat& c) {
  if (c < 0) throw Error("sign_with_sqrt: negative radicand");
  const int sa = sgn(a);
  const int sb = (c == 0) ? 0 : sgn(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  const Rat lhs = a * a;
  const Rat rhs = b * b * c;
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

int sign_with_two_sqrts(const Rat& a, const Rat& b, const Rat& u, const Rat& c,
                        const Rat& v) {
  if (v < 0) throw Error("sign_with_two_sqrts: negative radicand");
  // value = S - T with S = a + b*sqrt(u) and T = -c*sqrt(v).
  const int s_sign = sign_with_sqrt(a, b, u);
  const int t_sign = v == 0 ? 0 : -sgn(c);
  if (s_sign != t_sign) return s_sign > t_sign ? 1 : -1;
  if (s_sign == 0) return 0;
  const Rat rational_part = a * a + b * b * u - c * c * v;
  const Rat root_part = 2 * a * b;
  const int square_diff = sign_with_sqrt(rational_part, root_part, u);
  return s_sign > 0 ? square_diff : -square_diff;
}

}  // namespace cornerforge
