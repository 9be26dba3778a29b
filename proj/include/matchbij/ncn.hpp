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

#include <optional>
#include <string>

#include "matchbij/error.hpp"
#include "matchbij/matching.hpp"

namespace matchbij {

/// A noncrossing matching with an optional chosen nested pair. An absent pair
/// is the "no pair chosen" element, serialized as `nesting 0 0`.
class NCNTriple {
 public:
  /// Throws DomainError unless `base` is noncrossing and `pair`, when present,
  /// is a nested pair a < b of `base`.
  static NCNTriple make(Matching base, std::optional<LabelPair> pair) {
    if (!is_noncrossing(base)) throw DomainError("base matching has crossings");
    if (pair) {
      const EdgeList list = EdgeList::of(base);
      if (pair->a >= pair->b || pair->a < 1 || pair->b > base.n() ||
          classify_pair(list.edge(pair->a), list.edge(pair->b)) != PairKind::kNested) {
        throw DomainError("edges " + std::to_string(pair->a) + " and " +
                          std::to_string(pair->b) + " are not a nested pair of the base");
      }
    }
    return NCNTriple(std::move(base), pair);
  }

  const Matching& base() const noexcept { return base_; }
  const std::optional<LabelPair>& pair() const noexcept { return pair_; }

  friend bool operator==(const NCNTriple&, const NCNTriple&) = default;
  friend auto operator<=>(const NCNTriple&, const NCNTriple&) = default;

 private:
  NCNTriple(Matching base, std::optional<LabelPair> pair)
      : base_(std::move(base)), pair_(pair) {}

  Matching base_;
  std::optional<LabelPair> pair_;
};

}  // namespace matchbij
