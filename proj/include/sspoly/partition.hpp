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

#ifndef SSPOLY_PARTITION_HPP
#define SSPOLY_PARTITION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "sspoly/bigint.hpp"
#include "sspoly/field.hpp"
#include "sspoly/mpoly.hpp"
#include "sspoly/tower.hpp"

namespace sspoly {

/// Strictly ascending list of naturals.
using IndexSet = std::vector<unsigned>;

/// (S1, S2) with S1, S2, S2+1 partitioning {0, ..., d-1}.
struct PartitionPair {
  IndexSet S1;
  IndexSet S2;
  unsigned d = 0;

  /// S1 union S2.
  IndexSet support() const;
  friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
};

/// True when S1, S2, S2+1 are disjoint with union {0, ..., d-1}.
bool is_partition_pair(const PartitionPair& pair);

/// Largest d accepted by enumerate_P (|P(d)| grows like the Fibonacci numbers).
inline constexpr int kMaxEnumerateD = 40;

/// All of P(d). Empty for d < 0; the single pair (∅, ∅) for d = 0. Pairs come
/// ordered by |S2|, then by S2 lexicographically.
std::vector<PartitionPair> enumerate_P(int d);

/// {i + j : i in S}.
IndexSet shift(const IndexSet& s, unsigned j);

/// sum_{i in S} q^i.
BigInt w_of(const IndexSet& s, std::uint64_t q);

/// (-1)^{|S|} prod_{i in S} [i], in mid.
Fe L_of(const IndexSet& s, const FieldTower& tower);

/// Elementary symmetric polynomial of degree k in -X_v, v in vars.
MPolyZ elem_sym(unsigned k, std::span<const unsigned> vars);

/// Complete homogeneous polynomial of degree n in X_i, i in sprime. Zero for
/// n < 0, and for empty sprime unless n = 0.
MPolyZ h_complete(int n, const IndexSet& sprime);

struct KeylemmaSides {
  MPolyZ lhs;
  MPolyZ rhs;
};

/// lhs = sum_{i=ceil(d/2)}^{d} s_{d-i} h_{i-|S|}^{S'} with S = S1 ∪ S2 and
/// S' = S ∪ {d}; rhs = prod_{i in S2} (X_d - X_{i+1}).
KeylemmaSides keylemma_sides(const PartitionPair& pair);
bool keylemma_check(const PartitionPair& pair);

/// sum_i mu_i h_{i-|S|}^{S'}(X_j = alpha^{q^j}), in mid. X_d evaluates to alpha.
Fe bracket_identity_lhs(const PartitionPair& pair, const FieldTower& tower);
/// bracket_identity_lhs == L(S2 + 1).
bool bracket_identity_check(const PartitionPair& pair, const FieldTower& tower);

}  // namespace sspoly

#endif  // SSPOLY_PARTITION_HPP
