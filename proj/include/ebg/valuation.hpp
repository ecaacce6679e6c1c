/*
 * Copyright 2026 the ebgverify authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ebg {

// A total truth assignment over a fixed, sorted set of atoms.  Valuations are
// value types; comparison is lexicographic on (atom list, truth bits), which
// gives every container a stable deterministic order.
class Valuation {
 public:
  Valuation() = default;

  // All-false valuation over the given atoms.  Atoms are sorted; duplicates
  // are rejected.
  explicit Valuation(std::vector<std::string> atoms);

  // k-th valuation over sorted `atoms` in binary counting order: bit j of k
  // is the value of the j-th atom, so k=0 is all-false and k=1 flips the
  // first atom.
  static Valuation from_index(std::vector<std::string> atoms, std::uint64_t k);

  bool value(std::string_view atom) const;  // throws Error if absent
  bool has_atom(std::string_view atom) const;
  void set(std::string_view atom, bool v);  // atom must already be in the domain

  const std::vector<std::string>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  // Restriction to a subset of the domain; every requested atom must exist.
  Valuation restricted_to(std::span<const std::string> atoms) const;

  // Union of two valuations with disjoint domains.
  static Valuation merged(const Valuation& a, const Valuation& b);

  // "p=1,q=0" with atoms in sorted order; empty domain renders as "-".
  std::string to_string() const;

  friend auto operator<=>(const Valuation&, const Valuation&) = default;

 private:
  int index_of(std::string_view atom) const;  // -1 if absent

  std::vector<std::string> atoms_;        // sorted, unique
  std::vector<unsigned char> values_;     // parallel to atoms_
};

// All 2^|atoms| valuations over a sorted atom set, in binary counting order.
// Throws LimitError for more than 20 atoms (the enumeration would not fit any
// reasonable budget).
std::vector<Valuation> enumerate_valuations(std::vector<std::string> atoms);

}  // namespace ebg
