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

#include "matchbij/lp.hpp"

#include <gtest/gtest.h>

#include <set>

#include "figures.hpp"
#include "matchbij/count.hpp"
#include "matchbij/verify.hpp"

namespace matchbij {
namespace {

// Independent oracle: LP_n as the closure of {single edge, hairpin} under
// (a) inflating an edge into a two-edge ladder and (b) inserting an edge with
// adjacent endpoints anywhere. A matching is handled as its word of edge ids.
using Word = std::vector<int>;

Matching word_to_matching(const Word& w) {
  std::vector<Position> partner(w.size(), -1);
  std::map<int, Position> first;
  for (Position v = 0; v < static_cast<Position>(w.size()); ++v) {
    if (auto it = first.find(w[v]); it != first.end()) {
      partner[v] = it->second;
      partner[it->second] = v;
    } else {
      first.emplace(w[v], v);
    }
  }
  return Matching::from_partner(partner);
}

Word matching_to_word(const Matching& m) {
  Word w(m.size());
  int next = 0;
  for (Position v = 0; v < m.size(); ++v) {
    if (v < m.partner(v)) w[v] = w[m.partner(v)] = next++;
  }
  return w;
}

std::set<Matching> lp_by_construction(int n) {
  std::set<Matching> level = {from_pairs({{0, 1}})};
  for (int size = 2; size <= n; ++size) {
    std::set<Matching> next;
    if (size == 2) next.insert(from_pairs({{0, 2}, {1, 3}}));
    for (const Matching& m : level) {
      const Word w = matching_to_word(m);
      const int fresh = m.n();
      for (int e = 0; e < m.n(); ++e) {
        Word inflated;
        bool seen_left = false;
        for (int id : w) {
          if (id != e) {
            inflated.push_back(id);
          } else if (!seen_left) {
            inflated.insert(inflated.end(), {e, fresh});
            seen_left = true;
          } else {
            inflated.insert(inflated.end(), {fresh, e});
          }
        }
        next.insert(word_to_matching(inflated));
      }
      for (std::size_t at = 0; at <= w.size(); ++at) {
        Word inserted = w;
        inserted.insert(inserted.begin() + static_cast<std::ptrdiff_t>(at), {fresh, fresh});
        next.insert(word_to_matching(inserted));
      }
    }
    level = std::move(next);
  }
  return level;
}

TEST(FindInflatedHairpin, FigureExample) {
  const auto h = find_inflated_hairpin(figures::lp_example());
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->a, (std::vector<Label>{1, 2}));
  EXPECT_EQ(h->b, (std::vector<Label>{4, 5}));
  // Hairpin vertices 0 1 4 5 6 9 10 13; edge 3 = (2,3) sits in gap 2,
  // edge 6 = (7,8) in gap 5, edge 7 = (11,12) in gap 7.
  EXPECT_EQ(h->gaps, (std::map<Label, int>{{3, 2}, {6, 5}, {7, 7}}));
}

TEST(FindInflatedHairpin, RejectsNonLp) {
  EXPECT_FALSE(find_inflated_hairpin(figures::similar_not_lp()).has_value());
  EXPECT_FALSE(find_inflated_hairpin(from_pairs({{0, 2}, {1, 7}, {3, 5}, {4, 6}})).has_value());
  EXPECT_FALSE(find_inflated_hairpin(from_pairs({{0, 5}, {1, 3}, {2, 4}})).has_value());
  EXPECT_TRUE(lp_violation(from_pairs({{0, 5}, {1, 3}, {2, 4}})).has_value());
  EXPECT_FALSE(lp_violation(figures::lp_example()).has_value());
}

TEST(FindInflatedHairpin, NoncrossingGivesEmptyDecomposition) {
  const auto h = find_inflated_hairpin(figures::lp_example_nc());
  ASSERT_TRUE(h.has_value());
  EXPECT_TRUE(h->empty());
  EXPECT_EQ(h->gaps.size(), 7u);
}

TEST(IsLp, Examples) {
  EXPECT_TRUE(is_lp(figures::similar_lp()));
  const auto h = find_inflated_hairpin(figures::similar_lp());
  EXPECT_EQ(h->a, (std::vector<Label>{1, 3}));
  EXPECT_EQ(h->b, (std::vector<Label>{4}));
  EXPECT_TRUE(is_lp(figures::ladder4()));
  EXPECT_FALSE(is_lp(from_pairs({{0, 3}, {1, 4}, {2, 5}})));
  for (const Matching& m : collect_noncrossing_matchings(6)) EXPECT_TRUE(is_lp(m));
}

TEST(EnumerateLp, SmallCounts) {
  EXPECT_EQ(collect_lp(1).size(), 1u);
  EXPECT_EQ(collect_lp(2).size(), 3u);
  EXPECT_EQ(collect_lp(3).size(), 12u);
}

TEST(EnumerateLp, ThreeEdgeExclusions) {
  std::set<Matching> excluded;
  const auto lp = collect_lp(3);
  for (const Matching& m : collect_all_matchings(3)) {
    if (std::find(lp.begin(), lp.end(), m) == lp.end()) excluded.insert(m);
  }
  EXPECT_EQ(excluded, (std::set<Matching>{from_pairs({{0, 2}, {1, 4}, {3, 5}}),
                                          from_pairs({{0, 3}, {1, 4}, {2, 5}}),
                                          from_pairs({{0, 5}, {1, 3}, {2, 4}})}));
}

TEST(EnumerateLp, MatchesInductiveConstructionUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    const auto filtered = collect_lp(n);
    const std::set<Matching> as_set(filtered.begin(), filtered.end());
    ASSERT_EQ(as_set.size(), filtered.size());
    EXPECT_EQ(as_set, lp_by_construction(n)) << "n=" << n;
  }
}

TEST(EnumerateLp, CensusEqualsFormulaUpToSeven) {
  const EnumerationCap cap;
  for (int n = 1; n <= 7; ++n) {
    const SuiteResult r = detail::suite_lp_census(n, cap);
    EXPECT_TRUE(r.passed()) << r.failure;
  }
}

TEST(LpProperties, StructureUpToSeven) {
  // Right-endpoint order of the hairpin, cr = |A||B|, mirror closure.
  const EnumerationCap cap;
  for (int n = 1; n <= 7; ++n) {
    const SuiteResult r = detail::suite_lp_structure(n, cap);
    EXPECT_TRUE(r.passed()) << r.failure;
  }
}

TEST(LpProperties, MirrorPreservesLpOnAllMatchings) {
  for (int n = 1; n <= 6; ++n) {
    all_matchings(n, [](const Matching& m) { ASSERT_EQ(is_lp(m), is_lp(mirror(m))); });
  }
}

}  // namespace
}  // namespace matchbij
