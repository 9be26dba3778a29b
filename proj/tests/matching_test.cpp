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

#include "matchbij/matching.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "figures.hpp"
#include "matchbij/enumerate.hpp"
#include "matchbij/verify.hpp"

namespace matchbij {
namespace {

using Pairs = std::vector<std::pair<Position, Position>>;

// Definition-level oracle: label pairs by sorted left endpoint, then test the
// four-point inequalities directly.
std::vector<LabelPair> brute_pairs(Pairs pairs, bool want_nested) {
  for (auto& [l, r] : pairs) {
    if (l > r) std::swap(l, r);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<LabelPair> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      const auto [i1, i2] = pairs[i];
      const auto [j1, j2] = pairs[j];
      const bool nested = i1 < j1 && j1 < j2 && j2 < i2;
      const bool crossing = i1 < j1 && j1 < i2 && i2 < j2;
      if (want_nested ? nested : crossing) {
        out.push_back({static_cast<Label>(std::min(i, j)) + 1, static_cast<Label>(std::max(i, j)) + 1});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(FromPairs, BuildsHairpin) {
  const Matching m = from_pairs({{0, 2}, {1, 3}});
  EXPECT_EQ(m.n(), 2);
  EXPECT_EQ(m.partner(0), 2);
  EXPECT_EQ(m.partner(3), 1);
}

TEST(FromPairs, SingleEdge) {
  const Matching m = from_pairs({{0, 1}});
  EXPECT_EQ(m.n(), 1);
  EXPECT_EQ(m.partner(1), 0);
}

TEST(FromPairs, RejectsDuplicatePosition) {
  try {
    (void)from_pairs({{0, 2}, {1, 2}});
    FAIL() << "expected InvalidMatching";
  } catch (const InvalidMatching& e) {
    EXPECT_NE(std::string(e.what()).find("duplicate position 2"), std::string::npos) << e.what();
  }
}

TEST(FromPairs, RejectsOutOfRangeAndWrongCount) {
  EXPECT_THROW((void)from_pairs({{0, 4}, {1, 2}}), InvalidMatching);
  const Pairs one = {{0, 1}};
  EXPECT_THROW((void)from_pairs(one, 2), InvalidMatching);
  EXPECT_THROW((void)from_pairs({{-1, 0}}), InvalidMatching);
  EXPECT_THROW((void)Matching::from_partner({1, 0, 2}), InvalidMatching);
  EXPECT_THROW((void)Matching::from_partner({1, 2, 0, 3}), InvalidMatching);
}

TEST(Edges, LabelsFollowLeftEndpoints) {
  const auto es = edges(figures::lp_example());
  const Pairs expected = {{0, 9}, {1, 6}, {2, 3}, {4, 13}, {5, 10}, {7, 8}, {11, 12}};
  ASSERT_EQ(es.size(), expected.size());
  for (std::size_t k = 0; k < es.size(); ++k) {
    EXPECT_EQ(es[k].label, static_cast<Label>(k) + 1);
    EXPECT_EQ(es[k].left, expected[k].first);
    EXPECT_EQ(es[k].right, expected[k].second);
  }
  EXPECT_EQ(edges(from_pairs({{0, 1}})), (std::vector<Edge>{{1, 0, 1}}));
  EXPECT_EQ(edges(from_pairs({{2, 3}, {0, 5}, {1, 4}})),
            (std::vector<Edge>{{1, 0, 5}, {2, 1, 4}, {3, 2, 3}}));
}

TEST(LRSequence, FigureWords) {
  EXPECT_EQ(lr_sequence(figures::similar_lp()).str(), "LLRLLRRRLR");
  EXPECT_EQ(lr_sequence(figures::hairpin()).str(), "LLRR");
  EXPECT_EQ(lr_sequence(figures::tau_example()).str(), "LLLRLLRLRRRLRR");
}

TEST(LRSequence, RejectsNonDyckWords) {
  EXPECT_THROW((void)LRSequence::from_string("RL"), InvalidMatching);
  EXPECT_THROW((void)LRSequence::from_string("LLR"), InvalidMatching);
  EXPECT_THROW((void)LRSequence::from_string("LXR"), InvalidMatching);
  EXPECT_THROW((void)LRSequence::from_string(""), InvalidMatching);
}

TEST(Nestings, FigureCounts) {
  EXPECT_EQ(nestings(figures::similar_lp()).count, 2u);
  EXPECT_EQ(nestings(figures::similar_not_lp()).count, 2u);
  const PairSet ladder = nestings(figures::ladder4());
  EXPECT_EQ(ladder.count, 6u);
  EXPECT_EQ(ladder.pairs, (std::vector<LabelPair>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
  EXPECT_EQ(nestings(from_pairs({{0, 1}, {2, 3}})).count, 0u);
}

TEST(Crossings, FigureCrossings) {
  const PairSet hp = crossings(figures::hairpin());
  EXPECT_EQ(hp.count, 1u);
  EXPECT_EQ(hp.pairs, (std::vector<LabelPair>{{1, 2}}));
  EXPECT_EQ(crossings(figures::lp_example()).pairs,
            (std::vector<LabelPair>{{1, 4}, {1, 5}, {2, 4}, {2, 5}}));
  EXPECT_EQ(crossings(figures::lp_example_nc()).count, 0u);
}

TEST(Nestings, AgreeWithDefinitionOracle) {
  for (int n = 1; n <= 6; ++n) {
    all_matchings(n, [&](const Matching& m) {
      const Pairs pairs = to_pairs(m);
      ASSERT_EQ(nestings(m).pairs, brute_pairs(pairs, true));
      ASSERT_EQ(crossings(m).pairs, brute_pairs(pairs, false));
      ASSERT_EQ(stats(m), (MatchingStats{nestings(m).count, crossings(m).count}));
    });
  }
}

TEST(Nc, FigureProjection) {
  EXPECT_EQ(nc(figures::lp_example()), figures::lp_example_nc());
  EXPECT_EQ(nc(figures::lp_example_nc()), figures::lp_example_nc());
  EXPECT_EQ(nc(figures::hairpin()), from_pairs({{0, 3}, {1, 2}}));
}

TEST(Rperm, Examples) {
  EXPECT_EQ(rperm(figures::lp_example_nc()), (std::vector<Label>{3, 5, 6, 4, 2, 7, 1}));
  EXPECT_EQ(rperm(from_pairs({{0, 1}, {2, 3}})), (std::vector<Label>{1, 2}));
  EXPECT_EQ(rperm(figures::ladder4()), (std::vector<Label>{4, 3, 2, 1}));
}

TEST(Lperm, CarriedLabels) {
  const auto steps = figures::swap_example_steps();
  EXPECT_EQ(lperm(EdgeList::from_endpoints(steps[0])), (std::vector<Label>{1, 2, 3, 4}));
  EXPECT_EQ(lperm(EdgeList::from_endpoints(steps[4])), (std::vector<Label>{2, 4, 3, 1}));
  EXPECT_EQ(lperm(figures::lp_example()), (std::vector<Label>{1, 2, 3, 4, 5, 6, 7}));
}

TEST(Nep, OrderedBySecondLabel) {
  EXPECT_EQ(nep(figures::lp_example_nc()),
            (std::vector<LabelPair>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {1, 5}, {2, 5}, {4, 5},
                                    {1, 6}, {2, 6}, {4, 6}, {1, 7}}));
  EXPECT_EQ(nep(figures::swap_example(0)),
            (std::vector<LabelPair>{{1, 2}, {1, 3}, {1, 4}, {3, 4}}));
  EXPECT_TRUE(nep(from_pairs({{0, 1}, {2, 3}, {4, 5}})).empty());
}

TEST(IsNoncrossing, Examples) {
  EXPECT_TRUE(is_noncrossing(figures::lp_example_nc()));
  EXPECT_FALSE(is_noncrossing(figures::hairpin()));
  EXPECT_TRUE(is_noncrossing(from_pairs({{0, 1}})));
}

TEST(Mirror, IsInvolution) {
  all_matchings(5, [](const Matching& m) {
    ASSERT_EQ(mirror(mirror(m)), m);
    ASSERT_EQ(ne(mirror(m)), ne(m));
    ASSERT_EQ(cr(mirror(m)), cr(m));
  });
}

// Exhaustive invariants.

TEST(MatchingProperties, PairPartitionUpToEight) {
  const EnumerationCap cap;
  for (int n = 1; n <= 8; ++n) {
    const SuiteResult r = detail::suite_pair_partition(n, cap);
    EXPECT_TRUE(r.passed()) << r.failure;
  }
}

TEST(MatchingProperties, NcProjectionUpToEight) {
  const EnumerationCap cap;
  for (int n = 1; n <= 8; ++n) {
    const SuiteResult r = detail::suite_nc(n, cap);
    EXPECT_TRUE(r.passed()) << r.failure;
  }
}

TEST(MatchingProperties, RpermCharacterizesNestingsUpToEight) {
  const EnumerationCap cap;
  for (int n = 1; n <= 8; ++n) {
    const SuiteResult r = detail::suite_rperm(n, cap);
    EXPECT_TRUE(r.passed()) << r.failure;
  }
}

TEST(MatchingProperties, NcMaximizesNestingsUpToSix) {
  const EnumerationCap cap;
  for (int n = 1; n <= 6; ++n) {
    const SuiteResult r = detail::suite_nc_max(n, cap);
    EXPECT_TRUE(r.passed()) << r.failure;
  }
}

TEST(MatchingProperties, EdgesRoundTrip) {
  all_matchings(6, [](const Matching& m) {
    std::vector<std::pair<Position, Position>> pairs;
    for (const Edge& e : edges(m)) pairs.emplace_back(e.left, e.right);
    ASSERT_EQ(from_pairs(pairs, m.n()), m);
    ASSERT_EQ(EdgeList::of(m).to_matching(), m);
  });
}

}  // namespace
}  // namespace matchbij
