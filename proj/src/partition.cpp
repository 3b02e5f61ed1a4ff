/*
   Copyright 2026 The sspoly Authors

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

#include "sspoly/partition.hpp"

#include <algorithm>

#include "sspoly/error.hpp"

namespace sspoly {

namespace {

// Size-k subsets of {lo, ..., hi} with no two consecutive members, in
// lexicographic order.
void sparse_subsets(unsigned lo, int hi, unsigned k, IndexSet& current, std::vector<IndexSet>& out) {
  if (k == 0) {
    out.push_back(current);
    return;
  }
  for (int i = static_cast<int>(lo); i <= hi; ++i) {
    // Remaining k-1 picks need at least 2(k-1) more slots.
    if (i + 2 * static_cast<int>(k - 1) > hi) break;
    current.push_back(static_cast<unsigned>(i));
    sparse_subsets(static_cast<unsigned>(i) + 2, hi, k - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

IndexSet PartitionPair::support() const {
  IndexSet out;
  std::set_union(S1.begin(), S1.end(), S2.begin(), S2.end(), std::back_inserter(out));
  return out;
}

bool is_partition_pair(const PartitionPair& pair) {
  std::vector<int> hits(pair.d, 0);
  auto mark = [&](const IndexSet& s, unsigned offset) {
    if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    for (unsigned i : s) {
      if (i + offset >= pair.d) return false;
      ++hits[i + offset];
    }
    return true;
  };
  if (!mark(pair.S1, 0) || !mark(pair.S2, 0) || !mark(pair.S2, 1)) return false;
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

std::vector<PartitionPair> enumerate_P(int d) {
  std::vector<PartitionPair> out;
  if (d < 0) return out;
  if (d > kMaxEnumerateD) fail(ErrorCode::kCapExceeded, "P(d) enumeration is limited to d <= 40");
  const unsigned ud = static_cast<unsigned>(d);
  for (unsigned k = 0; 2 * k <= ud; ++k) {
    std::vector<IndexSet> s2s;
    IndexSet current;
    sparse_subsets(0, d - 2, k, current, s2s);
    for (auto& s2 : s2s) {
      PartitionPair pair;
      pair.d = ud;
      std::vector<bool> used(ud, false);
      for (unsigned i : s2) used[i] = used[i + 1] = true;
      for (unsigned i = 0; i < ud; ++i) {
        if (!used[i]) pair.S1.push_back(i);
      }
      pair.S2 = std::move(s2);
      out.push_back(std::move(pair));
    }
  }
  return out;
}

IndexSet shift(const IndexSet& s, unsigned j) {
  IndexSet out = s;
  for (auto& i : out) i += j;
  return out;
}

BigInt w_of(const IndexSet& s, std::uint64_t q) {
  BigInt total = 0;
  for (unsigned i : s) total += ipow(BigInt(q), i);
  return total;
}

Fe L_of(const IndexSet& s, const FieldTower& tower) {
  Fe out = tower.mid().one();
  for (unsigned i : s) out *= tower.bracket(i);
  return s.size() % 2 == 0 ? out : -out;
}

MPolyZ elem_sym(unsigned k, std::span<const unsigned> vars) {
  if (k > vars.size()) fail(ErrorCode::kKTooLarge, "elementary symmetric degree exceeds the number of variables");
  // e[j] after processing a prefix of the variables.
  std::vector<MPolyZ> e(k + 1);
  e[0] = MPolyZ::constant(1);
  for (unsigned v : vars) {
    const MPolyZ neg = -MPolyZ::variable(v);
    for (unsigned j = k; j >= 1; --j) e[j] += e[j - 1] * neg;
  }
  return e[k];
}

MPolyZ h_complete(int n, const IndexSet& sprime) {
  if (n < 0) return {};
  const auto un = static_cast<unsigned>(n);
  // h[j] = complete homogeneous of degree j in the variables seen so far.
  std::vector<MPolyZ> h(un + 1);
  h[0] = MPolyZ::constant(1);
  for (unsigned v : sprime) {
    const MPolyZ x = MPolyZ::variable(v);
    for (unsigned j = 1; j <= un; ++j) h[j] += x * h[j - 1];
  }
  return h[un];
}

KeylemmaSides keylemma_sides(const PartitionPair& pair) {
  if (!is_partition_pair(pair)) fail(ErrorCode::kInvalidArgument, "not a member of P(d)");
  const unsigned d = pair.d;
  IndexSet x;
  for (unsigned i = 0; i < d; ++i) x.push_back(i);
  const IndexSet s = pair.support();
  IndexSet sprime = s;
  sprime.push_back(d);
  const int size_s = static_cast<int>(s.size());

  KeylemmaSides out;
  for (unsigned i = (d + 1) / 2; i <= d; ++i) {
    out.lhs += elem_sym(d - i, x) * h_complete(static_cast<int>(i) - size_s, sprime);
  }
  out.rhs = MPolyZ::constant(1);
  for (unsigned i : pair.S2) out.rhs *= MPolyZ::variable(d) - MPolyZ::variable(i + 1);
  return out;
}

bool keylemma_check(const PartitionPair& pair) {
  const auto sides = keylemma_sides(pair);
  return sides.lhs == sides.rhs;
}

Fe bracket_identity_lhs(const PartitionPair& pair, const FieldTower& tower) {
  if (pair.d != tower.d() || !is_partition_pair(pair)) {
    fail(ErrorCode::kInvalidArgument, "pair is not in P(d) for this tower");
  }
  const unsigned d = pair.d;
  std::vector<Fe> values;
  for (unsigned i = 0; i <= d; ++i) values.push_back(tower.alpha().frob(i));
  const IndexSet s = pair.support();
  IndexSet sprime = s;
  sprime.push_back(d);
  Fe acc = tower.mid().zero();
  for (unsigned i = 0; i <= d; ++i) {
    const MPolyZ h = h_complete(static_cast<int>(i) - static_cast<int>(s.size()), sprime);
    if (h.is_zero()) continue;
    acc += tower.mid().embed(tower.ideal().mu[i]) * h.eval(values);
  }
  return acc;
}

bool bracket_identity_check(const PartitionPair& pair, const FieldTower& tower) {
  return bracket_identity_lhs(pair, tower) == L_of(shift(pair.S2, 1), tower);
}

}  // namespace sspoly
