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

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cornerforge/rat.hpp"

namespace cornerforge::poly {

using Exponents = std::vector<unsigned>;
using VarList = std::vector<std::string>;
/// Values keyed by variable name.
using Assignment = std::map<std::string, Rat, std::less<>>;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Variables are positional: exponent vectors follow the order of `vars()`.
/// Zero coefficients are never stored, so two polynomials over the same
/// variable list are equal iff their term maps are equal. Binary arithmetic
/// between polynomials over different variable lists works over the union,
/// keeping the left operand's order and appending new names from the right.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(VarList vars);

  static MPoly constant(VarList vars, const Rat& value);
  static MPoly variable(VarList vars, std::string_view name);
  /// Sums duplicate exponent vectors and drops zero coefficients.
  static MPoly from_terms(VarList vars, const std::vector<std::pair<Exponents, Rat>>& terms);

  const VarList& vars() const { return vars_; }
  const std::map<Exponents, Rat>& terms() const { return terms_; }
  std::size_t var_count() const { return vars_.size(); }
  std::optional<std::size_t> var_index(std::string_view name) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  Rat coefficient(const Exponents& exps) const;

  /// Re-expresses the polynomial over `target`, which must contain every
  /// variable the polynomial actually uses.
  MPoly embed(const VarList& target) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);
  MPoly& operator*=(const Rat& scalar);
  MPoly pow(unsigned exponent) const;

  friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
  friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
  friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
  friend MPoly operator*(MPoly lhs, const Rat& s) { return lhs *= s; }
  friend MPoly operator*(const Rat& s, MPoly rhs) { return rhs *= s; }

  /// Structural equality after aligning both operands to a common variable list.
  friend bool operator==(const MPoly& lhs, const MPoly& rhs);

 private:
  void add_term(const Exponents& exps, const Rat& coeff);

  VarList vars_;
  std::map<Exponents, Rat> terms_;
};

/// Exact value at a named point. Throws Error naming the first unassigned variable.
Rat eval(const MPoly& p, const Assignment& point);
/// Exact value with values given positionally in `p.vars()` order.
Rat eval(const MPoly& p, std::span<const Rat> values);
/// Floating-point value with values given positionally in `p.vars()` order.
double eval(const MPoly& p, std::span<const double> values);

MPoly partial(const MPoly& p, std::string_view var);

/// Rank over Q of a rational matrix, by fraction-free (Bareiss) elimination.
std::size_t matrix_rank(const std::vector<std::vector<Rat>>& rows);

/// Rank of the Jacobian of `polys` at `point`. Columns range over the union of
/// the polynomials' variables in first-appearance order.
std::size_t jacobian_rank(std::span<const MPoly> polys, const Assignment& point);

/// Jacobian entries at `point`, one row per polynomial, columns over `columns`.
std::vector<std::vector<Rat>> jacobian_at(std::span<const MPoly> polys, const VarList& columns,
                                          const Assignment& point);

/// Dense coefficients a_0..a_deg of a polynomial in at most one variable.
std::vector<Rat> dense_coefficients(const MPoly& p);

/// Exact Taylor coefficients c_0..c_order of a univariate polynomial at `center`.
std::vector<Rat> univariate_taylor(const MPoly& p, const Rat& center, unsigned order);

/// Fast exact evaluation of a fixed univariate polynomial. Coefficient
/// denominators are cleared once, so each evaluation is integer Horner.
class UnivariateEvaluator {
 public:
  explicit UnivariateEvaluator(const MPoly& p);
  Rat operator()(const Rat& t) const;
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

 private:
  std::vector<BigInt> coeffs_;
  BigInt common_den_{1};
};

std::string to_string(const MPoly& p);

}  // namespace cornerforge::poly
