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

// Arc diagrams: vertices on a baseline with arcs drawn above it.

#include <algorithm>
#include <string>
#include <vector>

#include "matchbij/matching.hpp"

namespace matchbij {

enum class RenderFormat { kText, kSvg };

struct RenderSpec {
  RenderFormat format = RenderFormat::kText;
  /// Target SVG width in pixels; 0 picks 40 px per vertex. Ignored for text.
  int width = 0;
  /// Target SVG height in pixels; 0 fits the tallest arc. Ignored for text.
  int height = 0;
  bool labels = false;
};

namespace detail {

/// Arc heights 1..n: shorter spans sit lower, ties broken by label, so
/// nested arcs always clear the arcs they enclose.
inline std::vector<int> arc_levels(const EdgeList& list) {
  std::vector<Label> order;
  for (const Edge& e : list.edges()) order.push_back(e.label);
  std::stable_sort(order.begin(), order.end(), [&](Label x, Label y) {
    return list.edge(x).right - list.edge(x).left < list.edge(y).right - list.edge(y).left;
  });
  std::vector<int> level(list.n() + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) level[order[i]] = static_cast<int>(i) + 1;
  return level;
}

inline std::string render_text(const Matching& m, const RenderSpec& spec) {
  const EdgeList list = EdgeList::of(m);
  const std::vector<int> level = arc_levels(list);
  const int cell = static_cast<int>(std::to_string(m.size() - 1).size()) + 1;
  const int width = cell * m.size();
  auto column = [cell](Position v) { return v * cell; };

  std::vector<std::string> rows(m.n(), std::string(width, ' '));  // rows[0] is the top
  for (const Edge& e : list.edges()) {
    std::string& row = rows[m.n() - level[e.label]];
    for (int x = column(e.left) + 1; x < column(e.right); ++x) row[x] = '-';
    row[column(e.left)] = '.';
    row[column(e.right)] = '.';
    if (spec.labels) {
      const std::string text = std::to_string(e.label);
      const int mid = (column(e.left) + column(e.right)) / 2 - static_cast<int>(text.size()) / 2;
      if (mid > column(e.left) && mid + static_cast<int>(text.size()) < column(e.right)) {
        row.replace(mid, text.size(), text);
      }
    }
  }
  for (const Edge& e : list.edges()) {
    for (int r = m.n() - level[e.label] + 1; r < m.n(); ++r) {
      for (Position v : {e.left, e.right}) {
        char& c = rows[r][column(v)];
        c = c == '-' ? '+' : '|';
      }
    }
  }

  std::string baseline(width, ' ');
  std::string numbers(width, ' ');
  for (Position v = 0; v < m.size(); ++v) {
    baseline[column(v)] = 'o';
    numbers.replace(column(v), std::to_string(v).size(), std::to_string(v));
  }
  rows.push_back(baseline);
  rows.push_back(numbers);

  std::string out;
  for (std::string& row : rows) {
    row.erase(row.find_last_not_of(' ') + 1);
    out += row + "\n";
  }
  return out;
}

inline std::string render_svg(const Matching& m, const RenderSpec& spec) {
  const EdgeList list = EdgeList::of(m);
  const int unit = spec.width > 0 ? std::max(8, spec.width / (m.size() + 1)) : 40;
  const int margin = unit;
  const int tallest = (m.size() - 1) * unit / 2;
  const int width = spec.width > 0 ? spec.width : margin * 2 + (m.size() - 1) * unit;
  const int height = spec.height > 0 ? spec.height : tallest + margin * 2 + 20;
  const int base_y = height - margin;
  auto x_of = [&](Position v) { return margin + v * unit; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
  out += "  <line x1=\"" + std::to_string(x_of(0)) + "\" y1=\"" + std::to_string(base_y) +
         "\" x2=\"" + std::to_string(x_of(m.size() - 1)) + "\" y2=\"" + std::to_string(base_y) +
         "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  for (const Edge& e : list.edges()) {
    const int radius = (x_of(e.right) - x_of(e.left)) / 2;
    out += "  <path d=\"M " + std::to_string(x_of(e.left)) + " " + std::to_string(base_y) +
           " A " + std::to_string(radius) + " " + std::to_string(radius) + " 0 0 1 " +
           std::to_string(x_of(e.right)) + " " + std::to_string(base_y) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    if (spec.labels) {
      out += "  <text x=\"" + std::to_string(x_of(e.left) + radius) + "\" y=\"" +
             std::to_string(base_y - radius - 4) +
             "\" font-size=\"12\" text-anchor=\"middle\">" + std::to_string(e.label) + "</text>\n";
    }
  }
  for (Position v = 0; v < m.size(); ++v) {
    out += "  <circle cx=\"" + std::to_string(x_of(v)) + "\" cy=\"" + std::to_string(base_y) +
           "\" r=\"4\" fill=\"black\"/>\n";
    out += "  <text x=\"" + std::to_string(x_of(v)) + "\" y=\"" + std::to_string(base_y + 18) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + std::to_string(v) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace detail

inline std::string render(const Matching& m, const RenderSpec& spec = {}) {
  return spec.format == RenderFormat::kSvg ? detail::render_svg(m, spec)
                                           : detail::render_text(m, spec);
}

}  // namespace matchbij
