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

// L & P matchings: recognition through the maximal inflated hairpin, and
// enumeration of LP_n by filtering M(n).
//
// A matching is L & P when its crossing edges split into two sets A and B
// (A holding the smaller labels) such that each set is pairwise nested, every
// A x B pair crosses, no other pair crosses, and every remaining edge lies
// strictly inside a single gap between consecutive hairpin vertices. The gap
// condition excludes e.g. an edge wrapping the whole hairpin, which the three
// crossing conditions alone would admit.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matchbij/enumerate.hpp"
#include "matchbij/error.hpp"
#include "matchbij/matching.hpp"

namespace matchbij {

struct HairpinDecomposition {
  std::vector<Label> a;  // a_1 < ... < a_k
  std::vector<Label> b;  // b_1 < ... < b_l
  /// Non-hairpin label -> index of the gap holding it. Gap g lies between the
  /// g-th and (g+1)-th hairpin vertex, so gap 0 precedes the hairpin.
  std::map<Label, int> gaps;

  bool empty() const noexcept { return a.empty() && b.empty(); }

  friend bool operator==(const HairpinDecomposition&, const HairpinDecomposition&) = default;
};

namespace detail {

/// Returns the decomposition, or nullopt with a reason in `why`.
inline std::optional<HairpinDecomposition> analyze_hairpin(const Matching& m, std::string* why) {
  auto reject = [&](std::string reason) -> std::optional<HairpinDecomposition> {
    if (why) *why = std::move(reason);
    return std::nullopt;
  };
  auto pair_text = [](Label x, Label y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  };

  const EdgeList list = EdgeList::of(m);
  const int n = list.n();
  std::vector<char> in_a(n + 1, 0), in_b(n + 1, 0);
  std::vector<LabelPair> crossing;
  for (Label x = 1; x <= n; ++x) {
    for (Label y = x + 1; y <= n; ++y) {
      if (classify_pair(list.edge(x), list.edge(y)) == PairKind::kCrossing) {
        in_a[x] = 1;
        in_b[y] = 1;
        crossing.push_back({x, y});
      }
    }
  }

  HairpinDecomposition out;
  for (Label x = 1; x <= n; ++x) {
    if (in_a[x] && in_b[x]) {
      for (const LabelPair& p : crossing) {
        if (p.b == x) {
          return reject("edge " + std::to_string(x) + " crosses both smaller and larger edges; " +
                        "crossing pair " + pair_text(p.a, p.b) + " cannot belong to one hairpin");
        }
      }
    }
    if (in_a[x]) out.a.push_back(x);
    if (in_b[x]) out.b.push_back(x);
  }
  auto crossing_with = [&](Label x) {
    for (const LabelPair& p : crossing) {
      if (p.a == x || p.b == x) return p;
    }
    return LabelPair{};
  };
  if (!out.a.empty() && out.a.back() > out.b.front()) {
    const LabelPair p = crossing_with(out.b.front());
    const LabelPair q = crossing_with(out.a.back());
    return reject("crossing pairs " + pair_text(p.a, p.b) + " and " + pair_text(q.a, q.b) +
                  " cannot form one inflated hairpin");
  }
  for (const auto* side : {&out.a, &out.b}) {
    for (std::size_t i = 0; i < side->size(); ++i) {
      for (std::size_t j = i + 1; j < side->size(); ++j) {
        const Label x = (*side)[i], y = (*side)[j];
        if (classify_pair(list.edge(x), list.edge(y)) != PairKind::kNested) {
          const LabelPair p = crossing_with(x);
          return reject("edges " + pair_text(x, y) + " on one hairpin side are not nested " +
                        "(crossing pair " + pair_text(p.a, p.b) + ")");
        }
      }
    }
  }
  for (Label x : out.a) {
    for (Label y : out.b) {
      if (classify_pair(list.edge(x), list.edge(y)) != PairKind::kCrossing) {
        const LabelPair p = crossing_with(x);
        return reject("hairpin edges " + pair_text(x, y) + " do not cross, though " +
                      pair_text(p.a, p.b) + " does");
      }
    }
  }
  // Crossing pairs outside A x B are impossible here: every crossing puts its
  // smaller label in A and larger in B, and both sides are pairwise nested.

  std::vector<char> in_hairpin(n + 1, 0);
  std::vector<Position> vertices;
  for (const auto* side : {&out.a, &out.b}) {
    for (Label x : *side) {
      in_hairpin[x] = 1;
      vertices.push_back(list.edge(x).left);
      vertices.push_back(list.edge(x).right);
    }
  }
  std::sort(vertices.begin(), vertices.end());
  auto gap_of = [&](Position v) {
    return static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), v) -
                            vertices.begin());
  };
  for (Label x = 1; x <= n; ++x) {
    if (in_hairpin[x]) continue;
    const Edge& e = list.edge(x);
    const int gap = gap_of(e.left);
    if (gap != gap_of(e.right)) {
      const LabelPair p = crossing.front();
      return reject("edge " + std::to_string(x) + " spans vertices of the hairpin holding " +
                    "crossing pair " + pair_text(p.a, p.b));
    }
    out.gaps.emplace(x, gap);
  }
  return out;
}

}  // namespace detail

/// The maximal inflated hairpin with gap assignments; empty when M is
/// noncrossing, nullopt when M is not L & P.
inline std::optional<HairpinDecomposition> find_inflated_hairpin(const Matching& m) {
  return detail::analyze_hairpin(m, nullptr);
}

/// Human-readable reason M is not L & P, or nullopt when it is.
inline std::optional<std::string> lp_violation(const Matching& m) {
  std::string why;
  if (detail::analyze_hairpin(m, &why)) return std::nullopt;
  return why;
}

inline bool is_lp(const Matching& m) { return find_inflated_hairpin(m).has_value(); }

/// LP_n in the canonical order of all_matchings.
template <typename F>
void enumerate_lp(int n, F&& visit, const EnumerationCap& cap = EnumerationCap::from_env()) {
  all_matchings(
      n,
      [&](const Matching& m) {
        if (!is_lp(m)) return true;
        return detail::visit_continue(visit, m);
      },
      cap);
}

inline std::vector<Matching> collect_lp(int n,
                                        const EnumerationCap& cap = EnumerationCap::from_env()) {
  std::vector<Matching> out;
  enumerate_lp(n, [&](const Matching& m) { out.push_back(m); }, cap);
  return out;
}

}  // namespace matchbij
