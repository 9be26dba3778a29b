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

// Canonical-order generators for M(n), noncrossing matchings and NCN_n.
//
// Generators are visitor-driven streams: nothing is materialized unless the
// caller collects it. A visitor may return void, or bool where false stops the
// stream early.
//
// Order for M(n): the smallest unmatched position is paired with each larger
// free position in ascending order, recursively. Noncrossing matchings follow
// the lexicographic order of their Dyck words with L < R.

#include <cstdlib>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "matchbij/count.hpp"
#include "matchbij/error.hpp"
#include "matchbij/matching.hpp"
#include "matchbij/ncn.hpp"

namespace matchbij {

/// Largest n for which exhaustive enumeration is allowed.
struct EnumerationCap {
  static constexpr int kDefault = 8;

  int all = kDefault;

  /// Catalan-sized streams get more room than (2n-1)!! ones.
  int noncrossing() const noexcept { return all + 4; }

  /// Reads MATCHBIJ_ENUM_CAP, falling back to the default.
  static EnumerationCap from_env() {
    EnumerationCap cap;
    if (const char* text = std::getenv("MATCHBIJ_ENUM_CAP")) {
      try {
        std::size_t used = 0;
        const int value = std::stoi(text, &used);
        if (used == std::string(text).size() && value >= 1) cap.all = value;
      } catch (const std::exception&) {
      }
    }
    return cap;
  }
};

namespace detail {

template <typename F, typename... Args>
bool visit_continue(F& f, Args&&... args) {
  if constexpr (std::is_same_v<std::invoke_result_t<F&, Args...>, bool>) {
    return f(std::forward<Args>(args)...);
  } else {
    f(std::forward<Args>(args)...);
    return true;
  }
}

inline void check_n(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive, got " + std::to_string(n));
}

inline void check_all_cap(int n, const EnumerationCap& cap) {
  check_n(n);
  if (n > cap.all) {
    throw CapExceeded("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                      std::to_string(cap.all) + " ((2n-1)!! = " +
                      matching_count(n).str() +
                      " matchings); set MATCHBIJ_ENUM_CAP to raise it");
  }
}

inline void check_noncrossing_cap(int n, const EnumerationCap& cap) {
  check_n(n);
  if (n > cap.noncrossing()) {
    throw CapExceeded("n = " + std::to_string(n) + " exceeds the noncrossing enumeration cap " +
                      std::to_string(cap.noncrossing()) + " (C_n = " + catalan(n).str() +
                      " matchings); set MATCHBIJ_ENUM_CAP to raise it");
  }
}

template <typename F>
bool extend_matching(std::vector<Position>& partner, Position first_free, F& visit) {
  const auto size = static_cast<Position>(partner.size());
  while (first_free < size && partner[first_free] != -1) ++first_free;
  if (first_free == size) return visit_continue(visit, Matching::from_partner(partner));
  for (Position w = first_free + 1; w < size; ++w) {
    if (partner[w] != -1) continue;
    partner[first_free] = w;
    partner[w] = first_free;
    const bool go_on = extend_matching(partner, first_free + 1, visit);
    partner[first_free] = -1;
    partner[w] = -1;
    if (!go_on) return false;
  }
  return true;
}

template <typename F>
bool extend_dyck(std::string& word, int opened, int closed, int n, F& visit) {
  if (closed == n) return visit_continue(visit, LRSequence::from_string(word));
  if (opened < n) {
    word.push_back('L');
    const bool go_on = extend_dyck(word, opened + 1, closed, n, visit);
    word.pop_back();
    if (!go_on) return false;
  }
  if (closed < opened) {
    word.push_back('R');
    const bool go_on = extend_dyck(word, opened, closed + 1, n, visit);
    word.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace detail

/// Sub-stream of M(n) whose position 0 is matched to `first_partner`. The
/// streams for first_partner = 1, ..., 2n-1 partition M(n) and concatenate to
/// the full canonical order.
template <typename F>
void matchings_with_first_partner(int n, Position first_partner, F&& visit,
                                  const EnumerationCap& cap = EnumerationCap::from_env()) {
  detail::check_all_cap(n, cap);
  if (first_partner < 1 || first_partner >= 2 * n) return;
  std::vector<Position> partner(2 * static_cast<std::size_t>(n), -1);
  partner[0] = first_partner;
  partner[first_partner] = 0;
  detail::extend_matching(partner, 1, visit);
}

/// All (2n-1)!! complete matchings with n edges, in canonical order.
template <typename F>
void all_matchings(int n, F&& visit, const EnumerationCap& cap = EnumerationCap::from_env()) {
  detail::check_all_cap(n, cap);
  std::vector<Position> partner(2 * static_cast<std::size_t>(n), -1);
  detail::extend_matching(partner, 0, visit);
}

/// Dyck words of semilength n, lexicographic with L < R.
template <typename F>
void dyck_words(int n, F&& visit, const EnumerationCap& cap = EnumerationCap::from_env()) {
  detail::check_noncrossing_cap(n, cap);
  std::string word;
  word.reserve(2 * static_cast<std::size_t>(n));
  detail::extend_dyck(word, 0, 0, n, visit);
}

/// The C_n noncrossing matchings, one per Dyck word.
template <typename F>
void noncrossing_matchings(int n, F&& visit,
                           const EnumerationCap& cap = EnumerationCap::from_env()) {
  dyck_words(
      n,
      [&](const LRSequence& word) {
        return detail::visit_continue(visit, noncrossing_from_lr(word));
      },
      cap);
}

/// NCN_n: every noncrossing M as (M, no pair), then (M, p) for p in nep(M).
template <typename F>
void ncn_elements(int n, F&& visit, const EnumerationCap& cap = EnumerationCap::from_env()) {
  noncrossing_matchings(
      n,
      [&](const Matching& m) {
        if (!detail::visit_continue(visit, NCNTriple::make(m, std::nullopt))) return false;
        for (const LabelPair& p : nep(m)) {
          if (!detail::visit_continue(visit, NCNTriple::make(m, p))) return false;
        }
        return true;
      },
      cap);
}

/// Materializes a stream; meant for small n and tests.
inline std::vector<Matching> collect_all_matchings(
    int n, const EnumerationCap& cap = EnumerationCap::from_env()) {
  std::vector<Matching> out;
  all_matchings(n, [&](const Matching& m) { out.push_back(m); }, cap);
  return out;
}

inline std::vector<Matching> collect_noncrossing_matchings(
    int n, const EnumerationCap& cap = EnumerationCap::from_env()) {
  std::vector<Matching> out;
  noncrossing_matchings(n, [&](const Matching& m) { out.push_back(m); }, cap);
  return out;
}

inline std::vector<NCNTriple> collect_ncn_elements(
    int n, const EnumerationCap& cap = EnumerationCap::from_env()) {
  std::vector<NCNTriple> out;
  ncn_elements(n, [&](const NCNTriple& t) { out.push_back(t); }, cap);
  return out;
}

}  // namespace matchbij
