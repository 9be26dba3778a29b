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

#include "matchbij/enumerate.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "matchbij/count.hpp"
#include "matchbij/verify.hpp"

namespace matchbij {
namespace {

TEST(AllMatchings, SmallCounts) {
  EXPECT_EQ(collect_all_matchings(1).size(), 1u);
  EXPECT_EQ(collect_all_matchings(2).size(), 3u);
  EXPECT_EQ(collect_all_matchings(3).size(), 15u);
}

TEST(AllMatchings, CanonicalOrder) {
  const auto ms = collect_all_matchings(2);
  EXPECT_EQ(ms[0], from_pairs({{0, 1}, {2, 3}}));
  EXPECT_EQ(ms[1], from_pairs({{0, 2}, {1, 3}}));
  EXPECT_EQ(ms[2], from_pairs({{0, 3}, {1, 2}}));
  const auto three = collect_all_matchings(3);
  EXPECT_EQ(three.front(), from_pairs({{0, 1}, {2, 3}, {4, 5}}));
  EXPECT_EQ(three.back(), from_pairs({{0, 5}, {1, 4}, {2, 3}}));
}

TEST(AllMatchings, FirstPartnerStreamsPartition) {
  std::vector<Matching> joined;
  for (Position p = 1; p < 8; ++p) {
    matchings_with_first_partner(4, p, [&](const Matching& m) {
      EXPECT_EQ(m.partner(0), p);
      joined.push_back(m);
    });
  }
  EXPECT_EQ(joined, collect_all_matchings(4));
}

TEST(AllMatchings, EarlyStop) {
  int seen = 0;
  all_matchings(5, [&](const Matching&) { return ++seen < 4; });
  EXPECT_EQ(seen, 4);
}

TEST(NoncrossingMatchings, CatalanCounts) {
  EXPECT_EQ(collect_noncrossing_matchings(1).size(), 1u);
  EXPECT_EQ(collect_noncrossing_matchings(3).size(), 5u);
  EXPECT_EQ(collect_noncrossing_matchings(8).size(), 1430u);
  const auto two = collect_noncrossing_matchings(2);
  EXPECT_EQ(two[0], from_pairs({{0, 3}, {1, 2}}));  // LLRR before LRLR
  EXPECT_EQ(two[1], from_pairs({{0, 1}, {2, 3}}));
}

TEST(NcnElements, Counts) {
  EXPECT_EQ(collect_ncn_elements(1).size(), 1u);
  EXPECT_EQ(collect_ncn_elements(2).size(), 3u);
  EXPECT_EQ(collect_ncn_elements(3).size(), 12u);
  const auto two = collect_ncn_elements(2);
  EXPECT_FALSE(two[0].pair().has_value());
  EXPECT_EQ(two[1].pair(), (LabelPair{1, 2}));
}

TEST(Enumeration, StreamPropertiesUpToSeven) {
  const EnumerationCap cap;
  for (int n = 1; n <= 7; ++n) {
    const SuiteResult r = detail::suite_enumeration(n, cap);
    EXPECT_TRUE(r.passed()) << "n=" << n << ": " << r.failure;
  }
}

TEST(Enumeration, CapIsEnforced) {
  EnumerationCap cap;
  cap.all = 3;
  try {
    all_matchings(4, [](const Matching&) {}, cap);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("105"), std::string::npos) << e.what();
  }
  EXPECT_NO_THROW(noncrossing_matchings(7, [](const Matching&) {}, cap));
  EXPECT_THROW(noncrossing_matchings(8, [](const Matching&) {}, cap), CapExceeded);
  EXPECT_THROW(all_matchings(0, [](const Matching&) {}, cap), std::invalid_argument);
}

TEST(Enumeration, CapFromEnvironment) {
  ::setenv("MATCHBIJ_ENUM_CAP", "5", 1);
  EXPECT_EQ(EnumerationCap::from_env().all, 5);
  ::setenv("MATCHBIJ_ENUM_CAP", "junk", 1);
  EXPECT_EQ(EnumerationCap::from_env().all, EnumerationCap::kDefault);
  ::unsetenv("MATCHBIJ_ENUM_CAP");
  EXPECT_EQ(EnumerationCap::from_env().all, 8);
}

}  // namespace
}  // namespace matchbij
