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

#include "ebg/redistribution.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "ebg/checked.hpp"
#include "ebg/errors.hpp"

namespace ebg {

std::uint64_t composition_count(std::int64_t total, std::size_t parts) {
  if (total < 0) throw ValidationError("total resources must be nonnegative");
  if (parts == 0) return total == 0 ? 1 : 0;
  // C(total + parts - 1, parts - 1), computed incrementally; saturate on
  // overflow of the 128-bit intermediate.
  unsigned __int128 result = 1;
  const auto r = static_cast<std::uint64_t>(parts - 1);
  for (std::uint64_t k = 1; k <= r; ++k) {
    result = result * (static_cast<std::uint64_t>(total) + k) / k;
    if (result > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(result);
}

RedistributionEnumerator::RedistributionEnumerator(std::int64_t total, std::size_t parts,
                                                   std::size_t cap)
    : total_(total), parts_(parts), count_(composition_count(total, parts)) {
  if (parts == 0) throw ValidationError("cannot redistribute among zero players");
  if (count_ > cap)
    throw LimitError("the pot admits " + std::to_string(count_) +
                     " redistributions, above the enumeration cap of " + std::to_string(cap) +
                     "; for elimination questions use the n-allocation shortcut ('re' command)");
  current_.assign(parts_, 0);
  current_.back() = total_;
}

std::optional<std::vector<std::int64_t>> RedistributionEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return current_;
  }
  // Lexicographic successor: bump the entry left of the last nonzero
  // position and move the remainder of the tail to the end.
  std::size_t p = parts_;
  for (std::size_t k = parts_; k-- > 0;)
    if (current_[k] > 0) {
      p = k;
      break;
    }
  if (p == parts_ || p == 0) {  // all zero, or already (T,0,...,0)
    done_ = true;
    return std::nullopt;
  }
  const std::int64_t tail = current_[p] - 1;
  current_[p] = 0;
  current_[p - 1] += 1;
  current_.back() += tail;
  return current_;
}

RedistributionResult rational_construction(const EbgGame& g, const Profile& profile,
                                           std::size_t node_budget, std::size_t enumeration_cap,
                                           std::size_t automaton_cap) {
  check_profile(g, profile);
  std::int64_t total = 0;
  for (std::int64_t e : g.endowments()) total = checked_add(total, e);

  RedistributionResult result;
  bool inconclusive = false;
  RedistributionEnumerator candidates(total, g.player_count(), enumeration_cap);
  while (auto split = candidates.next()) {
    ++result.candidates_tried;
    NemVerdict verdict =
        is_nash_equilibrium(g.with_endowments(*split), profile, node_budget, automaton_cap);
    if (verdict.outcome == NemOutcome::Equilibrium) {
      result.verdict = Verdict::Yes;
      result.endowments = std::move(*split);
      result.certificate = std::move(verdict);
      return result;
    }
    if (verdict.outcome == NemOutcome::Unknown) inconclusive = true;
  }
  result.verdict = inconclusive ? Verdict::Unknown : Verdict::No;
  return result;
}

RedistributionResult rational_elimination(const EbgGame& g, const Profile& profile,
                                          std::size_t node_budget, std::size_t automaton_cap) {
  check_profile(g, profile);
  std::int64_t total = 0;
  for (std::int64_t e : g.endowments()) total = checked_add(total, e);

  RedistributionResult result;
  bool inconclusive = false;
  for (std::size_t i = 0; i < g.player_count(); ++i) {
    std::vector<std::int64_t> split(g.player_count(), 0);
    split[i] = total;
    ++result.candidates_tried;
    NemVerdict verdict =
        is_nash_equilibrium(g.with_endowments(split), profile, node_budget, automaton_cap);
    if (verdict.outcome == NemOutcome::NotEquilibrium) {
      result.verdict = Verdict::Yes;
      result.endowments = std::move(split);
      result.certificate = std::move(verdict);
      return result;
    }
    if (verdict.outcome == NemOutcome::Unknown) inconclusive = true;
  }
  result.verdict = inconclusive ? Verdict::Unknown : Verdict::No;
  return result;
}

}  // namespace ebg
