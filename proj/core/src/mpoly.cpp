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

#include "cornerforge/mpoly.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "cornerforge/error.hpp"

namespace cornerforge::poly {
namespace {

void check_unique(const VarList& vars) {
  std::set<std::string_view> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw Error("empty variable name");
    if (!seen.insert(v).second) throw Error("duplicate variable '" + v + "'");
  }
}

VarList union_vars(const VarList& a, const VarList& b) {
  VarList out = a;
  for (const auto& v : b) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

MPoly::MPoly(VarList vars) : vars_(std::move(vars)) { check_unique(vars_); }

MPoly MPoly::constant(VarList vars, const Rat& value) {
  MPoly p(std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0), value);
  return p;
}

MPoly MPoly::variable(VarList vars, std::string_view name) {
  MPoly p(std::move(vars));
  const auto idx = p.var_index(name);
  if (!idx) throw Error("unknown variable '" + std::string(name) + "'");
  Exponents e(p.vars_.size(), 0);
  e[*idx] = 1;
  p.add_term(e, Rat(1));
  return p;
}

MPoly MPoly::from_terms(VarList vars, const std::vector<std::pair<Exponents, Rat>>& terms) {
  MPoly p(std::move(vars));
  for (const auto& [exps, coeff] : terms) {
    if (exps.size() != p.vars_.size()) {
      throw Error("exponent vector length " + std::to_string(exps.size()) +
                  " does not match variable count " + std::to_string(p.vars_.size()));
    }
    p.add_term(exps, coeff);
  }
  return p;
}

std::optional<std::size_t> MPoly::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

bool MPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](unsigned e) { return e == 0; }));
}

unsigned MPoly::total_degree() const {
  unsigned best = 0;
  for (const auto& [exps, c] : terms_) {
    unsigned s = 0;
    for (unsigned e : exps) s += e;
    best = std::max(best, s);
  }
  return best;
}

unsigned MPoly::degree_in(std::size_t var) const {
  unsigned best = 0;
  for (const auto& [exps, c] : terms_) best = std::max(best, exps.at(var));
  return best;
}

Rat MPoly::coefficient(const Exponents& exps) const {
  const auto it = terms_.find(exps);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(const Exponents& exps, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::embed(const VarList& target) const {
  MPoly out(target);
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto idx = out.var_index(vars_[i]);
    if (!idx) {
      if (degree_in(i) > 0) throw Error("cannot embed: variable '" + vars_[i] + "' is missing");
      where[i] = target.size();  // unused variable, dropped
    } else {
      where[i] = *idx;
    }
  }
  for (const auto& [exps, c] : terms_) {
    Exponents e(target.size(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (where[i] < target.size()) e[where[i]] = exps[i];
    }
    out.add_term(e, c);
  }
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  if (vars_ != rhs.vars_) {
    const VarList u = union_vars(vars_, rhs.vars_);
    *this = embed(u);
    const MPoly r = rhs.embed(u);
    for (const auto& [e, c] : r.terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) { return *this += -rhs; }

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
  if (lhs.vars_ != rhs.vars_) {
    const VarList u = union_vars(lhs.vars_, rhs.vars_);
    return lhs.embed(u) * rhs.embed(u);
  }
  MPoly out(lhs.vars_);
  Exponents e(lhs.vars_.size());
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& rhs) { return *this = *this * rhs; }

MPoly& MPoly::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

MPoly MPoly::pow(unsigned exponent) const {
  MPoly result = constant(vars_, Rat(1));
  MPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool operator==(const MPoly& lhs, const MPoly& rhs) {
  if (lhs.vars_ == rhs.vars_) return lhs.terms_ == rhs.terms_;
  const VarList u = union_vars(lhs.vars_, rhs.vars_);
  return lhs.embed(u).terms_ == rhs.embed(u).terms_;
}

Rat eval(const MPoly& p, const Assignment& point) {
  std::vector<Rat> values;
  values.reserve(p.var_count());
  for (const auto& v : p.vars()) {
    const auto it = point.find(v);
    if (it == point.end()) throw Error("no value assigned to variable '" + v + "'");
    values.push_back(it->second);
  }
  return eval(p, values);
}

Rat eval(const MPoly& p, std::span<const Rat> values) {
  if (values.size() != p.var_count()) throw Error("eval: wrong number of values");
  Rat total = 0;
  Rat term;
  for (const auto& [exps, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      for (unsigned k = 0; k < exps[i]; ++k) term *= values[i];
    }
    total += term;
  }
  return total;
}

double eval(const MPoly& p, std::span<const double> values) {
  if (values.size() != p.var_count()) throw Error("eval: wrong number of values");
  double total = 0.0;
  for (const auto& [exps, c] : p.terms()) {
    double term = c.get_d();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > 0) term *= std::pow(values[i], static_cast<double>(exps[i]));
    }
    total += term;
  }
  return total;
}

MPoly partial(const MPoly& p, std::string_view var) {
  const auto idx = p.var_index(var);
  if (!idx) throw Error("partial: unknown variable '" + std::string(var) + "'");
  std::vector<std::pair<Exponents, Rat>> terms;
  for (const auto& [exps, c] : p.terms()) {
    if (exps[*idx] == 0) continue;
    Exponents e = exps;
    e[*idx] -= 1;
    terms.emplace_back(std::move(e), c * exps[*idx]);
  }
  return MPoly::from_terms(p.vars(), terms);
}

std::size_t matrix_rank(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  // Scale each row to integers, then run Bareiss elimination over Z.
  std::vector<std::vector<BigInt>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != cols) throw Error("matrix_rank: ragged matrix");
    BigInt l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<BigInt> r;
    r.reserve(cols);
    for (const auto& x : row) r.emplace_back(x.get_num() * (l / x.get_den()));
    m.push_back(std::move(r));
  }
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rat>> jacobian_at(std::span<const MPoly> polys, const VarList& columns,
                                          const Assignment& point) {
  std::vector<std::vector<Rat>> rows;
  rows.reserve(polys.size());
  for (const auto& p : polys) {
    const MPoly q = p.embed(columns);
    std::vector<Rat> row;
    row.reserve(columns.size());
    for (const auto& v : columns) row.push_back(eval(partial(q, v), point));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t jacobian_rank(std::span<const MPoly> polys, const Assignment& point) {
  VarList columns;
  for (const auto& p : polys) columns = union_vars(columns, p.vars());
  for (const auto& v : columns) {
    if (!point.contains(v)) throw Error("no value assigned to variable '" + v + "'");
  }
  return matrix_rank(jacobian_at(polys, columns, point));
}

std::vector<Rat> dense_coefficients(const MPoly& p) {
  if (p.var_count() > 1) throw Error("expected a univariate polynomial");
  if (p.is_zero()) return {Rat(0)};
  std::vector<Rat> out(p.total_degree() + 1, Rat(0));
  for (const auto& [exps, c] : p.terms()) out[exps.empty() ? 0 : exps[0]] = c;
  return out;
}

std::vector<Rat> univariate_taylor(const MPoly& p, const Rat& center, unsigned order) {
  const std::vector<Rat> a = dense_coefficients(p);
  std::vector<Rat> powers(a.size(), Rat(1));
  for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = powers[i - 1] * center;
  std::vector<Rat> out(order + 1, Rat(0));
  for (unsigned j = 0; j <= order && j < a.size(); ++j) {
    Rat c = 0;
    for (std::size_t i = j; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      c += a[i] * Rat(binomial(static_cast<unsigned>(i), j)) * powers[i - j];
    }
    out[j] = c;
  }
  return out;
}

UnivariateEvaluator::UnivariateEvaluator(const MPoly& p) {
  const std::vector<Rat> a = dense_coefficients(p);
  for (const auto& x : a) {
    mpz_lcm(common_den_.get_mpz_t(), common_den_.get_mpz_t(), x.get_den_mpz_t());
  }
  coeffs_.reserve(a.size());
  for (const auto& x : a) coeffs_.emplace_back(x.get_num() * (common_den_ / x.get_den()));
}

Rat UnivariateEvaluator::operator()(const Rat& t) const {
  // Homogeneous Horner: sum c_i num^i den^(n-i), divided by den^n once.
  const BigInt& num = t.get_num();
  const BigInt& den = t.get_den();
  BigInt acc = coeffs_.back();
  BigInt den_pow = 1;
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc = acc * num + coeffs_[i] * den_pow;
  }
  Rat out(acc, den_pow * common_den_);
  out.canonicalize();
  return out;
}

std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  std::vector<std::pair<Exponents, Rat>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    unsigned da = 0, db = 0;
    for (unsigned e : a.first) da += e;
    for (unsigned e : b.first) db += e;
    return da > db;
  });
  for (const auto& [exps, c] : terms) {
    Rat mag = abs(c);
    const bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit = std::all_of(exps.begin(), exps.end(), [](unsigned e) { return e == 0; });
    if (mag != 1 || unit) {
      os << mag.get_str();
      if (!unit) os << "*";
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << p.vars()[i];
      if (exps[i] > 1) os << "^" << exps[i];
    }
  }
  return os.str();
}

}  // namespace cornerforge::poly
