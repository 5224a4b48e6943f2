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

#include "cornerforge/germ.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cornerforge/error.hpp"

namespace cornerforge::germ {
namespace {

SignVector erase_slot(const SignVector& v, std::size_t slot) {
  SignVector out;
  out.reserve(v.size() - 1);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j != slot) out.push_back(v[j]);
  }
  return out;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

int sign_of(long v) { return (v > 0) - (v < 0); }

}  // namespace

std::optional<std::size_t> OrthantGerm::slot_of(int coord) const {
  const auto it = std::lower_bound(divisor.begin(), divisor.end(), coord);
  if (it == divisor.end() || *it != coord) return std::nullopt;
  return static_cast<std::size_t>(it - divisor.begin());
}

void validate(const OrthantGerm& g) {
  if (g.orthants.empty()) throw Error("empty germ");
  if (g.dim < 0) throw Error("negative ambient dimension");
  if (g.divisor.size() > static_cast<std::size_t>(g.dim)) {
    throw Error("more divisor coordinates than the ambient dimension");
  }
  for (std::size_t j = 0; j < g.divisor.size(); ++j) {
    if (g.divisor[j] < 1 || g.divisor[j] > g.dim) {
      throw Error("divisor coordinate " + std::to_string(g.divisor[j]) + " out of range");
    }
    if (j > 0 && g.divisor[j] <= g.divisor[j - 1]) {
      throw Error("divisor coordinates must be strictly increasing");
    }
  }
  for (const auto& eps : g.orthants) {
    if (eps.size() != g.divisor.size()) throw Error("sign vector length mismatch");
    for (int s : eps) {
      if (s != 1 && s != -1) throw Error("sign entries must be +1 or -1");
    }
  }
}

OrthantGerm make_germ(int dim, std::set<SignVector> orthants) {
  OrthantGerm g;
  g.dim = dim;
  g.divisor.resize(static_cast<std::size_t>(dim));
  std::iota(g.divisor.begin(), g.divisor.end(), 1);
  g.orthants = std::move(orthants);
  validate(g);
  return g;
}

bool is_active(const OrthantGerm& g, std::size_t slot) {
  for (const auto& eps : g.orthants) {
    SignVector flipped = eps;
    flipped[slot] = -flipped[slot];
    if (!g.orthants.contains(flipped)) return true;
  }
  return false;
}

OrthantGerm normalize(const OrthantGerm& g) {
  validate(g);
  OrthantGerm out = g;
  // Removing an inactive coordinate keeps the activity of the others, but a
  // fixed-point loop keeps this obviously correct.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t slot = 0; slot < out.divisor.size(); ++slot) {
      if (is_active(out, slot)) continue;
      std::set<SignVector> projected;
      for (const auto& eps : out.orthants) projected.insert(erase_slot(eps, slot));
      out.orthants = std::move(projected);
      out.divisor.erase(out.divisor.begin() + static_cast<std::ptrdiff_t>(slot));
      changed = true;
      break;
    }
  }
  return out;
}

bool disconnects(const OrthantGerm& g, int coord) {
  const auto slot = g.slot_of(coord);
  if (!slot) throw Error("coordinate " + std::to_string(coord) + " is not a divisor coordinate");
  bool plus = false;
  bool minus = false;
  for (const auto& eps : g.orthants) {
    (eps[*slot] > 0 ? plus : minus) = true;
  }
  return plus && minus;
}

std::vector<int> disconnecting_coords(const OrthantGerm& g) {
  const OrthantGerm n = normalize(g);
  std::vector<int> out;
  for (int coord : n.divisor) {
    if (disconnects(n, coord)) out.push_back(coord);
  }
  return out;
}

int e_value(const OrthantGerm& g) { return static_cast<int>(disconnecting_coords(g).size()); }

bool is_corner_germ(const OrthantGerm& g) {
  const OrthantGerm n = normalize(g);
  int e = 0;
  for (int coord : n.divisor) e += disconnects(n, coord) ? 1 : 0;
  if (e == 0 && n.orthants.size() != 1) {
    throw Error("germ with e = 0 has " + std::to_string(n.orthants.size()) + " orthants");
  }
  return e == 0;
}

OrthantGerm germ_at_face(const OrthantGerm& g, const StratumDescriptor& s) {
  validate(g);
  std::vector<int> zeros = s.zeros;
  std::sort(zeros.begin(), zeros.end());
  if (zeros.size() + s.signs.size() != g.divisor.size()) {
    throw Error("stratum does not partition the divisor coordinates");
  }
  std::vector<std::size_t> zero_slots;
  for (int c : zeros) {
    const auto slot = g.slot_of(c);
    if (!slot) throw Error("stratum zero coordinate " + std::to_string(c) + " is not a divisor coordinate");
    zero_slots.push_back(*slot);
  }
  std::vector<std::pair<std::size_t, int>> fixed;
  for (const auto& [c, sign] : s.signs) {
    const auto slot = g.slot_of(c);
    if (!slot) throw Error("stratum sign coordinate " + std::to_string(c) + " is not a divisor coordinate");
    if (sign != 1 && sign != -1) throw Error("stratum signs must be +1 or -1");
    fixed.emplace_back(*slot, sign);
  }
  OrthantGerm out;
  out.dim = g.dim;
  out.divisor = zeros;
  for (const auto& eps : g.orthants) {
    const bool agrees = std::all_of(fixed.begin(), fixed.end(),
                                    [&](const auto& f) { return eps[f.first] == f.second; });
    if (!agrees) continue;
    SignVector restricted;
    restricted.reserve(zero_slots.size());
    for (std::size_t slot : zero_slots) restricted.push_back(eps[slot]);
    out.orthants.insert(std::move(restricted));
  }
  if (out.orthants.empty()) throw Error("face disjoint from germ");
  return normalize(out);
}

std::vector<StratumDescriptor> enumerate_strata(const OrthantGerm& g) {
  validate(g);
  const std::size_t r = g.rank();
  std::vector<StratumDescriptor> out;
  // Each divisor coordinate is 0, -1 or +1 in the stratum label.
  std::vector<int> label(r, -1);
  while (true) {
    const bool meets = std::any_of(g.orthants.begin(), g.orthants.end(), [&](const SignVector& e) {
      for (std::size_t j = 0; j < r; ++j) {
        if (label[j] != 0 && label[j] != e[j]) return false;
      }
      return true;
    });
    if (meets) {
      StratumDescriptor s;
      for (std::size_t j = 0; j < r; ++j) {
        if (label[j] == 0) {
          s.zeros.push_back(g.divisor[j]);
        } else {
          s.signs[g.divisor[j]] = label[j];
        }
      }
      out.push_back(std::move(s));
    }
    std::size_t j = 0;
    while (j < r && label[j] == 1) label[j++] = -1;
    if (j == r) break;
    ++label[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool closure_contains(const StratumDescriptor& a, const StratumDescriptor& b) {
  for (int c : a.zeros) {
    if (std::find(b.zeros.begin(), b.zeros.end(), c) == b.zeros.end()) return false;
  }
  for (const auto& [c, sign] : a.signs) {
    const auto it = b.signs.find(c);
    if (it != b.signs.end() && it->second != sign) return false;
  }
  return true;
}

bool closure_meets(const StratumDescriptor& a, const StratumDescriptor& b) {
  // Representative of b: zeros on b.zeros, value sign on the rest.
  auto value = [&](int c) {
    const auto it = b.signs.find(c);
    return it == b.signs.end() ? 0 : it->second;
  };
  for (int c : a.zeros) {
    if (value(c) != 0) return false;
  }
  for (const auto& [c, sign] : a.signs) {
    if (value(c) * sign < 0) return false;
  }
  return true;
}

std::size_t grid_connectivity_oracle(const OrthantGerm& g, std::optional<int> removed,
                                     int n_per_axis) {
  validate(g);
  if (n_per_axis < 3) throw Error("grid oracle needs at least 3 points per axis");
  std::optional<std::size_t> removed_slot;
  if (removed) {
    removed_slot = g.slot_of(*removed);
    if (!removed_slot) throw Error("removed coordinate is not a divisor coordinate");
  }
  const std::size_t r = g.rank();
  const auto d = static_cast<std::size_t>(g.dim);
  // Membership depends only on the sign pattern over divisor coordinates,
  // encoded base 3 with digit sign + 1.
  std::size_t patterns = 1;
  for (std::size_t j = 0; j < r; ++j) patterns *= 3;
  std::vector<char> member(patterns, 0);
  for (std::size_t code = 0; code < patterns; ++code) {
    std::vector<int> sg(r);
    std::size_t rest = code;
    for (std::size_t j = 0; j < r; ++j) {
      sg[j] = static_cast<int>(rest % 3) - 1;
      rest /= 3;
    }
    if (removed_slot && sg[*removed_slot] == 0) continue;
    for (const auto& eps : g.orthants) {
      bool inside = true;
      for (std::size_t j = 0; j < r && inside; ++j) inside = sg[j] * eps[j] >= 0;
      if (inside) {
        member[code] = 1;
        break;
      }
    }
  }
  std::vector<std::size_t> divisor_axis(r);
  for (std::size_t j = 0; j < r; ++j) divisor_axis[j] = static_cast<std::size_t>(g.divisor[j] - 1);

  const auto n = static_cast<std::size_t>(n_per_axis);
  std::size_t total = 1;
  for (std::size_t a = 0; a < d; ++a) total *= n;
  // Doubled grid coordinates: index k maps to 2k - (n - 1), midpoints are sums.
  auto pattern_of = [&](const std::vector<long>& doubled) {
    std::size_t code = 0;
    for (std::size_t j = r; j-- > 0;) code = code * 3 + static_cast<std::size_t>(sign_of(doubled[divisor_axis[j]]) + 1);
    return code;
  };
  std::vector<long> coords(d);
  auto decode = [&](std::size_t index) {
    for (std::size_t a = 0; a < d; ++a) {
      coords[a] = 2 * static_cast<long>(index % n) - static_cast<long>(n - 1);
      index /= n;
    }
  };
  std::vector<char> in_set(total, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    decode(idx);
    in_set[idx] = member[pattern_of(coords)];
  }
  DisjointSets sets(total);
  std::size_t stride = 1;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t idx = 0; idx < total; ++idx) {
      if (!in_set[idx] || (idx / stride) % n == n - 1) continue;
      const std::size_t nb = idx + stride;
      if (!in_set[nb]) continue;
      decode(idx);
      coords[a] += 1;  // midpoint in doubled coordinates
      if (member[pattern_of(coords)]) sets.unite(idx, nb);
    }
    stride *= n;
  }
  std::size_t components = 0;
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (in_set[idx] && sets.find(idx) == idx) ++components;
  }
  return components;
}

std::vector<SignVector> all_sign_vectors(std::size_t r) {
  std::vector<SignVector> out;
  const std::size_t count = std::size_t{1} << r;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    SignVector v(r);
    for (std::size_t j = 0; j < r; ++j) v[j] = (mask >> (r - 1 - j)) & 1U ? 1 : -1;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<OrthantGerm> all_normalized_germs(int dim) {
  const auto vectors = all_sign_vectors(static_cast<std::size_t>(dim));
  std::set<std::pair<std::vector<int>, std::set<SignVector>>> seen;
  std::vector<OrthantGerm> out;
  const std::size_t subsets = std::size_t{1} << vectors.size();
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    std::set<SignVector> f;
    for (std::size_t k = 0; k < vectors.size(); ++k) {
      if ((mask >> k) & 1U) f.insert(vectors[k]);
    }
    OrthantGerm g = normalize(make_germ(dim, std::move(f)));
    if (seen.emplace(g.divisor, g.orthants).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace cornerforge::germ
