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

// Complete matchings on 2n points of a line.
//
// Positions are 0-based. Edge labels are 1-based and, for a freshly read
// matching, follow the order of left endpoints. An EdgeList can carry labels
// that no longer follow that order (see swap_left in bijections.hpp); every
// statistic below has an EdgeList overload that respects carried labels.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchbij/error.hpp"

namespace matchbij {

using Position = int;
using Label = int;

/// An ordered pair of edge labels, a < b for nestings and crossings.
struct LabelPair {
  Label a = 0;
  Label b = 0;

  friend auto operator<=>(const LabelPair&, const LabelPair&) = default;
};

/// A complete matching stored as its partner table.
class Matching {
 public:
  /// Validates that `partner` is a fixed-point-free involution on
  /// {0, ..., 2n-1} with n >= 1.
  static Matching from_partner(std::vector<Position> partner) {
    if (partner.empty()) throw InvalidMatching("matching must have at least one edge");
    if (partner.size() % 2 != 0)
      throw InvalidMatching("partner table has odd length " + std::to_string(partner.size()));
    const auto size = static_cast<Position>(partner.size());
    for (Position v = 0; v < size; ++v) {
      const Position w = partner[v];
      if (w < 0 || w >= size)
        throw InvalidMatching("position " + std::to_string(w) + " out of range [0, " +
                              std::to_string(size - 1) + "]");
      if (w == v) throw InvalidMatching("position " + std::to_string(v) + " is matched to itself");
      if (partner[w] != v)
        throw InvalidMatching("position " + std::to_string(w) + " is matched twice");
    }
    return Matching(std::move(partner));
  }

  int n() const noexcept { return static_cast<int>(partner_.size() / 2); }
  Position size() const noexcept { return static_cast<Position>(partner_.size()); }
  Position partner(Position v) const { return partner_.at(v); }
  std::span<const Position> partners() const noexcept { return partner_; }

  friend auto operator<=>(const Matching&, const Matching&) = default;
  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  explicit Matching(std::vector<Position> partner) : partner_(std::move(partner)) {}

  std::vector<Position> partner_;
};

/// Builds a matching from n position pairs covering {0, ..., 2n-1} exactly.
inline Matching from_pairs(std::span<const std::pair<Position, Position>> pairs, int n) {
  if (n < 1) throw InvalidMatching("edge count must be positive, got " + std::to_string(n));
  if (static_cast<int>(pairs.size()) != n)
    throw InvalidMatching("expected " + std::to_string(n) + " pairs, got " +
                          std::to_string(pairs.size()));
  std::vector<Position> partner(2 * static_cast<std::size_t>(n), -1);
  auto claim = [&](Position v, Position w) {
    if (v < 0 || v >= 2 * n)
      throw InvalidMatching("position " + std::to_string(v) + " out of range [0, " +
                            std::to_string(2 * n - 1) + "]");
    if (partner[v] != -1) throw InvalidMatching("duplicate position " + std::to_string(v));
    partner[v] = w;
  };
  for (const auto& [v, w] : pairs) {
    if (v == w) throw InvalidMatching("duplicate position " + std::to_string(v));
    claim(v, w);
    claim(w, v);
  }
  return Matching::from_partner(std::move(partner));
}

inline Matching from_pairs(std::initializer_list<std::pair<Position, Position>> pairs) {
  const std::vector<std::pair<Position, Position>> v(pairs);
  return from_pairs(v, static_cast<int>(v.size()));
}

/// One arc: `label` is the edge identity, left < right are positions.
struct Edge {
  Label label = 0;
  Position left = 0;
  Position right = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edges indexed by label, so edge(k) is the edge labeled k. Labels are carried
/// by value and may disagree with left-endpoint order.
class EdgeList {
 public:
  /// Labels 1..n assigned by increasing left endpoint.
  static EdgeList of(const Matching& m) {
    std::vector<Edge> edges;
    edges.reserve(m.n());
    for (Position v = 0; v < m.size(); ++v) {
      if (v < m.partner(v)) {
        edges.push_back({static_cast<Label>(edges.size()) + 1, v, m.partner(v)});
      }
    }
    return EdgeList(std::move(edges));
  }

  /// Edges given in label order 1..n; endpoints are normalized so left < right.
  static EdgeList from_endpoints(std::span<const std::pair<Position, Position>> by_label) {
    std::vector<std::pair<Position, Position>> pairs(by_label.begin(), by_label.end());
    (void)from_pairs(pairs, static_cast<int>(pairs.size()));
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [v, w] : pairs) {
      edges.push_back({static_cast<Label>(edges.size()) + 1, std::min(v, w), std::max(v, w)});
    }
    return EdgeList(std::move(edges));
  }

  int n() const noexcept { return static_cast<int>(edges_.size()); }
  const Edge& edge(Label label) const { return edges_.at(static_cast<std::size_t>(label) - 1); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Same arcs, labels dropped.
  Matching to_matching() const {
    std::vector<Position> partner(2 * edges_.size());
    for (const Edge& e : edges_) {
      partner[e.left] = e.right;
      partner[e.right] = e.left;
    }
    return Matching::from_partner(std::move(partner));
  }

  /// Exchanges the left endpoints of edges a and b. The result may need its
  /// endpoints reordered when a swapped left end lands past its right end;
  /// callers in this library only swap nested pairs, which never do that.
  EdgeList with_left_endpoints_swapped(Label a, Label b) const {
    check_label(a);
    check_label(b);
    if (a == b) throw DomainError("cannot swap edge " + std::to_string(a) + " with itself");
    EdgeList out = *this;
    Edge& ea = out.edges_[a - 1];
    Edge& eb = out.edges_[b - 1];
    std::swap(ea.left, eb.left);
    for (Edge* e : {&ea, &eb}) {
      if (e->left > e->right) std::swap(e->left, e->right);
    }
    return out;
  }

  void check_label(Label k) const {
    if (k < 1 || k > n())
      throw DomainError("edge label " + std::to_string(k) + " out of range [1, " +
                        std::to_string(n()) + "]");
  }

  friend bool operator==(const EdgeList&, const EdgeList&) = default;

 private:
  explicit EdgeList(std::vector<Edge> edges) : edges_(std::move(edges)) {}

  std::vector<Edge> edges_;
};

/// Edges labeled 1..n by increasing left endpoint.
inline std::vector<Edge> edges(const Matching& m) {
  const EdgeList list = EdgeList::of(m);
  return {list.edges().begin(), list.edges().end()};
}

/// Left/right endpoint word. Construction enforces the Dyck condition.
class LRSequence {
 public:
  static LRSequence from_string(std::string_view word) {
    int height = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i] == 'L') {
        ++height;
      } else if (word[i] == 'R') {
        if (--height < 0)
          throw InvalidMatching("LR word falls below zero at index " + std::to_string(i));
      } else {
        throw InvalidMatching(std::string("LR word has invalid symbol '") + word[i] + "'");
      }
    }
    if (word.empty()) throw InvalidMatching("LR word is empty");
    if (height != 0) throw InvalidMatching("LR word has unmatched L");
    return LRSequence(std::string(word));
  }

  const std::string& str() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  bool is_left(Position v) const { return word_.at(v) == 'L'; }

  friend auto operator<=>(const LRSequence&, const LRSequence&) = default;
  friend bool operator==(const LRSequence&, const LRSequence&) = default;

 private:
  explicit LRSequence(std::string word) : word_(std::move(word)) {}

  std::string word_;
};

inline LRSequence lr_sequence(const Matching& m) {
  std::string word(m.size(), 'R');
  for (Position v = 0; v < m.size(); ++v) {
    if (v < m.partner(v)) word[v] = 'L';
  }
  return LRSequence::from_string(word);
}

/// How two distinct arcs sit relative to each other.
enum class PairKind { kNested, kCrossing, kAligned };

inline PairKind classify_pair(const Edge& x, const Edge& y) {
  const Edge& outer = x.left < y.left ? x : y;
  const Edge& inner = x.left < y.left ? y : x;
  if (inner.left > outer.right) return PairKind::kAligned;
  return inner.right < outer.right ? PairKind::kNested : PairKind::kCrossing;
}

/// Pairs of a given kind, each as (min label, max label), sorted ascending.
struct PairSet {
  std::size_t count = 0;
  std::vector<LabelPair> pairs;
};

namespace detail {

inline PairSet pairs_of_kind(const EdgeList& list, PairKind kind) {
  PairSet out;
  const auto es = list.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (classify_pair(es[i], es[j]) == kind) {
        out.pairs.push_back({std::min(es[i].label, es[j].label),
                             std::max(es[i].label, es[j].label)});
      }
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  out.count = out.pairs.size();
  return out;
}

inline std::size_t count_of_kind(const Matching& m, PairKind kind) {
  const EdgeList list = EdgeList::of(m);
  const auto es = list.edges();
  std::size_t count = 0;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (classify_pair(es[i], es[j]) == kind) ++count;
    }
  }
  return count;
}

}  // namespace detail

inline PairSet nestings(const EdgeList& list) { return detail::pairs_of_kind(list, PairKind::kNested); }
inline PairSet nestings(const Matching& m) { return nestings(EdgeList::of(m)); }
inline PairSet crossings(const EdgeList& list) { return detail::pairs_of_kind(list, PairKind::kCrossing); }
inline PairSet crossings(const Matching& m) { return crossings(EdgeList::of(m)); }
inline PairSet alignments(const EdgeList& list) { return detail::pairs_of_kind(list, PairKind::kAligned); }
inline PairSet alignments(const Matching& m) { return alignments(EdgeList::of(m)); }

/// ne(M): number of nested pairs.
inline std::size_t ne(const Matching& m) { return detail::count_of_kind(m, PairKind::kNested); }
/// cr(M): number of crossing pairs.
inline std::size_t cr(const Matching& m) { return detail::count_of_kind(m, PairKind::kCrossing); }

struct MatchingStats {
  std::size_t ne = 0;
  std::size_t cr = 0;

  friend bool operator==(const MatchingStats&, const MatchingStats&) = default;
};

inline MatchingStats stats(const Matching& m) { return {ne(m), cr(m)}; }

inline bool is_noncrossing(const Matching& m) {
  // Noncrossing iff every right endpoint closes the most recent open arc.
  std::vector<Position> open;
  for (Position v = 0; v < m.size(); ++v) {
    if (v < m.partner(v)) {
      open.push_back(v);
    } else {
      if (open.back() != m.partner(v)) return false;
      open.pop_back();
    }
  }
  return true;
}

/// The noncrossing matching with the given LR word (stack pairing).
inline Matching noncrossing_from_lr(const LRSequence& word) {
  std::vector<Position> partner(word.size());
  std::vector<Position> open;
  for (Position v = 0; v < static_cast<Position>(word.size()); ++v) {
    if (word.is_left(v)) {
      open.push_back(v);
    } else {
      partner[v] = open.back();
      partner[open.back()] = v;
      open.pop_back();
    }
  }
  return Matching::from_partner(std::move(partner));
}

/// nc(M): the noncrossing matching sharing M's LR-sequence.
inline Matching nc(const Matching& m) { return noncrossing_from_lr(lr_sequence(m)); }

/// Labels in order of increasing right endpoint.
inline std::vector<Label> rperm(const EdgeList& list) {
  std::vector<Edge> es(list.edges().begin(), list.edges().end());
  std::sort(es.begin(), es.end(), [](const Edge& x, const Edge& y) { return x.right < y.right; });
  std::vector<Label> out;
  out.reserve(es.size());
  for (const Edge& e : es) out.push_back(e.label);
  return out;
}
inline std::vector<Label> rperm(const Matching& m) { return rperm(EdgeList::of(m)); }

/// Labels in order of increasing left endpoint. Identity for a freshly
/// labeled matching.
inline std::vector<Label> lperm(const EdgeList& list) {
  std::vector<Edge> es(list.edges().begin(), list.edges().end());
  std::sort(es.begin(), es.end(), [](const Edge& x, const Edge& y) { return x.left < y.left; });
  std::vector<Label> out;
  out.reserve(es.size());
  for (const Edge& e : es) out.push_back(e.label);
  return out;
}
inline std::vector<Label> lperm(const Matching& m) { return lperm(EdgeList::of(m)); }

/// Nested pairs (a, b), a < b, sorted by b first, then a.
inline std::vector<LabelPair> nep(const EdgeList& list) {
  std::vector<LabelPair> out = nestings(list).pairs;
  std::sort(out.begin(), out.end(), [](const LabelPair& x, const LabelPair& y) {
    return std::tie(x.b, x.a) < std::tie(y.b, y.a);
  });
  return out;
}
inline std::vector<LabelPair> nep(const Matching& m) { return nep(EdgeList::of(m)); }

/// Mirror image: position v maps to 2n-1-v.
inline Matching mirror(const Matching& m) {
  std::vector<Position> partner(m.size());
  const Position last = m.size() - 1;
  for (Position v = 0; v < m.size(); ++v) partner[last - v] = last - m.partner(v);
  return Matching::from_partner(std::move(partner));
}

/// Pairs (left, right) in increasing left order.
inline std::vector<std::pair<Position, Position>> to_pairs(const Matching& m) {
  std::vector<std::pair<Position, Position>> out;
  out.reserve(m.n());
  for (Position v = 0; v < m.size(); ++v) {
    if (v < m.partner(v)) out.emplace_back(v, m.partner(v));
  }
  return out;
}

struct MatchingHash {
  std::size_t operator()(const Matching& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Position v : m.partners()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace matchbij
