// Copyright 2026 The matchbij Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Nesting-similarity: M ~ N iff they share an LR-sequence and a nesting count.

#include <cstdint>
#include <future>
#include <map>
#include <set>
#include <thread>
#include <vector>

#include "matchbij/bijections.hpp"
#include "matchbij/enumerate.hpp"
#include "matchbij/matching.hpp"

namespace matchbij {

struct ClassKey {
  LRSequence lr;
  std::size_t ne = 0;

  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
  friend bool operator==(const ClassKey&, const ClassKey&) = default;
};

inline ClassKey class_key(const Matching& m) { return {lr_sequence(m), ne(m)}; }

struct Census {
  std::uint64_t matchings = 0;
  std::map<ClassKey, std::uint64_t> members;

  std::size_t class_count() const noexcept { return members.size(); }
};

/// Groups all of M(n) by class key. Top-level branches (the partner of
/// position 0) are counted independently and merged.
inline Census census(int n, const EnumerationCap& cap = EnumerationCap::from_env()) {
  detail::check_all_cap(n, cap);
  auto branch = [n, cap](Position first_partner) {
    Census part;
    matchings_with_first_partner(
        n, first_partner,
        [&](const Matching& m) {
          ++part.matchings;
          ++part.members[class_key(m)];
        },
        cap);
    return part;
  };

  Census total;
  auto merge = [&total](Census part) {
    total.matchings += part.matchings;
    for (auto& [key, count] : part.members) total.members[key] += count;
  };
  const unsigned workers = std::thread::hardware_concurrency();
  if (workers > 1 && n >= 6) {
    std::vector<std::future<Census>> parts;
    for (Position p = 1; p < 2 * n; ++p) parts.push_back(std::async(std::launch::async, branch, p));
    for (auto& f : parts) merge(f.get());
  } else {
    for (Position p = 1; p < 2 * n; ++p) merge(branch(p));
  }
  return total;
}

/// NS_n: every step M_i of the swap trace of every noncrossing M, in
/// generation order (noncrossing order, then i ascending).
template <typename F>
void ns_representatives(int n, F&& visit, const EnumerationCap& cap = EnumerationCap::from_env()) {
  noncrossing_matchings(
      n,
      [&](const Matching& m) {
        const SwapTrace trace = swap_sequence(m);
        for (std::size_t i = 0; i < trace.size(); ++i) {
          if (!detail::visit_continue(visit, trace.matching(i))) return false;
        }
        return true;
      },
      cap);
}

inline std::set<Matching> ns_representative_set(
    int n, const EnumerationCap& cap = EnumerationCap::from_env()) {
  std::set<Matching> out;
  ns_representatives(n, [&](const Matching& m) { out.insert(m); }, cap);
  return out;
}

inline bool is_representative(const Matching& m) {
  try {
    (void)tau_inv(m);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace matchbij
