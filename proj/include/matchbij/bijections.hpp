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

// The bijections between L & P matchings, noncrossing matchings with a chosen
// nested pair (NCN_n), and nesting-similarity class representatives (NS_n):
//
//   phi   : LP_n  -> NCN_n   collapse the inflated hairpin onto nc(M)
//   tau   : NCN_n -> NS_n    replay left-endpoint swaps along nep(M)
//   sigma = tau o phi
//
// Edge identities are carried through swaps (EdgeList keeps its labels), so
// lperm of a swapped matching lists the original labels.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "matchbij/error.hpp"
#include "matchbij/lp.hpp"
#include "matchbij/matching.hpp"
#include "matchbij/ncn.hpp"

namespace matchbij {

inline NCNTriple phi(const Matching& m) {
  std::string why;
  const auto hairpin = detail::analyze_hairpin(m, &why);
  if (!hairpin) throw DomainError("matching is not L & P: " + why);
  if (hairpin->empty()) return NCNTriple::make(m, std::nullopt);
  return NCNTriple::make(nc(m), LabelPair{hairpin->a.back(), hairpin->b.back()});
}

inline Matching phi_inv(const NCNTriple& t) {
  if (!t.pair()) return t.base();
  const auto [a, b] = *t.pair();
  const EdgeList list = EdgeList::of(t.base());

  // A: edges up to a that enclose a. B: edges in (a, b] that enclose b.
  std::vector<Label> side_a, side_b;
  for (Label x = 1; x <= a; ++x) {
    if (x == a || classify_pair(list.edge(x), list.edge(a)) == PairKind::kNested)
      side_a.push_back(x);
  }
  for (Label x = a + 1; x <= b; ++x) {
    if (x == b || classify_pair(list.edge(x), list.edge(b)) == PairKind::kNested)
      side_b.push_back(x);
  }

  std::vector<Position> rights;
  for (Label x : side_a) rights.push_back(list.edge(x).right);
  for (Label x : side_b) rights.push_back(list.edge(x).right);
  std::sort(rights.begin(), rights.end());

  // Right endpoints in the order a_k, ..., a_1, b_l, ..., b_1.
  std::vector<std::pair<Position, Position>> by_label;
  for (const Edge& e : list.edges()) by_label.emplace_back(e.left, e.right);
  std::size_t slot = 0;
  for (auto it = side_a.rbegin(); it != side_a.rend(); ++it) by_label[*it - 1].second = rights[slot++];
  for (auto it = side_b.rbegin(); it != side_b.rend(); ++it) by_label[*it - 1].second = rights[slot++];
  return from_pairs(by_label, t.base().n());
}

/// (a,b).M: exchange the left endpoints of edges a and b, labels carried.
inline EdgeList swap_left(const EdgeList& m, Label a, Label b) {
  return m.with_left_endpoints_swapped(a, b);
}

/// swap_left on a freshly labeled matching; the labels are dropped again.
inline Matching swap_left(const Matching& m, Label a, Label b) {
  return swap_left(EdgeList::of(m), a, b).to_matching();
}

/// M_0 = M, M_i = (a_i, b_i).M_{i-1} along nep(M).
struct SwapTrace {
  struct Step {
    std::optional<LabelPair> swapped;  // absent for M_0
    EdgeList edges;
    std::vector<Label> lperm;
    std::size_t ne = 0;
  };

  std::vector<Step> steps;

  std::size_t size() const noexcept { return steps.size(); }
  Matching matching(std::size_t i) const { return steps.at(i).edges.to_matching(); }
};

inline SwapTrace swap_sequence(const Matching& m) {
  if (!is_noncrossing(m)) throw DomainError("swap sequence needs a noncrossing matching");
  SwapTrace trace;
  EdgeList current = EdgeList::of(m);
  const std::vector<LabelPair> pairs = nep(current);
  trace.steps.push_back({std::nullopt, current, lperm(current), pairs.size()});
  for (const LabelPair& p : pairs) {
    current = swap_left(current, p.a, p.b);
    trace.steps.push_back({p, current, lperm(current), nestings(current).count});
  }
  return trace;
}

inline Matching tau(const NCNTriple& t) {
  if (!t.pair()) return t.base();
  const std::vector<LabelPair> pairs = nep(t.base());
  const auto it = std::find(pairs.begin(), pairs.end(), *t.pair());
  if (it == pairs.end()) {
    throw DomainError("pair (" + std::to_string(t.pair()->a) + "," +
                      std::to_string(t.pair()->b) + ") is not a nested pair of the base");
  }
  EdgeList current = EdgeList::of(t.base());
  for (auto p = pairs.begin(); p != std::next(it); ++p) current = swap_left(current, p->a, p->b);
  return current.to_matching();
}

inline NCNTriple tau_inv(const Matching& n_rep) {
  Matching base = nc(n_rep);
  if (base == n_rep) return NCNTriple::make(std::move(base), std::nullopt);
  const std::size_t k = ne(base);
  const std::size_t here = ne(n_rep);
  if (here >= k) {
    throw DomainError("matching has " + std::to_string(here) + " nestings but is not noncrossing; " +
                      "not a class representative");
  }
  const std::size_t i = k - here;
  const SwapTrace trace = swap_sequence(base);
  if (trace.matching(i) != n_rep) {
    throw DomainError("not a class representative: swap step " + std::to_string(i) +
                      " of nc(N) differs from N");
  }
  const LabelPair pair = *trace.steps[i].swapped;
  return NCNTriple::make(std::move(base), pair);
}

inline Matching sigma(const Matching& m) { return tau(phi(m)); }

inline Matching sigma_inv(const Matching& n_rep) { return phi_inv(tau_inv(n_rep)); }

}  // namespace matchbij
