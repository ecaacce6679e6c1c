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

#ifndef EBG_REDISTRIBUTION_HPP_
#define EBG_REDISTRIBUTION_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ebg/equilibrium.hpp"
#include "ebg/game.hpp"
#include "ebg/strategy.hpp"

namespace ebg {

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

// Number of ways to split `total` into `parts` nonnegative integers,
// saturating at the maximum representable value (any saturated count
// exceeds every practical cap anyway).
std::uint64_t composition_count(std::int64_t total, std::size_t parts);

// Streams all splits of `total` into `parts` nonnegative integers in
// lexicographic order: (0,...,0,T), ..., (T,0,...,0).  Construction throws
// LimitError when the count exceeds `cap`, pointing at the elimination
// command's n-allocation shortcut as the scalable alternative.
class RedistributionEnumerator {
 public:
  RedistributionEnumerator(std::int64_t total, std::size_t parts,
                           std::size_t cap = kDefaultEnumerationCap);

  // Next split, or nullopt when exhausted.
  std::optional<std::vector<std::int64_t>> next();
  std::uint64_t count() const { return count_; }

 private:
  std::int64_t total_;
  std::size_t parts_;
  std::uint64_t count_;
  std::vector<std::int64_t> current_;
  bool started_ = false;
  bool done_ = false;
};

struct RedistributionResult {
  Verdict verdict = Verdict::Unknown;  // Yes: a qualifying redistribution exists
  std::optional<std::vector<std::int64_t>> endowments;  // the redistribution found
  std::optional<NemVerdict> certificate;  // equilibrium verdict under it
  std::size_t candidates_tried = 0;
};

// First redistribution (lexicographic order) under which the profile is a
// Nash equilibrium; No when every split fails, Unknown when some candidate's
// check was inconclusive and none succeeded.
RedistributionResult rational_construction(const EbgGame& g, const Profile& profile,
                                           std::size_t node_budget = kDefaultNodeBudget,
                                           std::size_t enumeration_cap = kDefaultEnumerationCap,
                                           std::size_t automaton_cap = kDefaultAutomatonStateCap);

// Whether handing the whole pot to a single player breaks the equilibrium:
// tests only the n one-player allocations (in player order) and returns the
// first under which the profile is not a Nash equilibrium.  Equivalent to
// the full enumeration for this question, at n checks instead of
// combinatorially many.
RedistributionResult rational_elimination(const EbgGame& g, const Profile& profile,
                                          std::size_t node_budget = kDefaultNodeBudget,
                                          std::size_t automaton_cap = kDefaultAutomatonStateCap);

}  // namespace ebg

#endif  // EBG_REDISTRIBUTION_HPP_
