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

// Text formats.
//
//   pairs      line 1 is n, then n lines "left right" (0-based). Emitted in
//              ascending left order; read in any order.
//   partner    one line of 2n integers, partner[v] for each position v.
//   dotbracket one line over the families (), [], {}, <>, Aa, ..., Zz. Each
//              family must balance; families may interleave.
//   lr         the LR word (output only).
//
// In every format '#' starts a comment and blank lines are ignored. An NCN
// triple is a matching followed by a final line "nesting a b", with
// "nesting 0 0" for the element without a chosen pair.

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "matchbij/error.hpp"
#include "matchbij/matching.hpp"
#include "matchbij/ncn.hpp"

namespace matchbij {

enum class InputFormat { kAuto, kPairs, kPartner, kDotBracket };
enum class OutputFormat { kPairs, kPartner, kDotBracket, kLR };

inline constexpr std::string_view kOpeners = "([{<ABCDEFGHIJKLMNOPQRSTUVWXYZ";
inline constexpr std::string_view kClosers = ")]}>abcdefghijklmnopqrstuvwxyz";

namespace detail {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

struct ContentLine {
  int number = 0;  // 1-based
  std::string_view text;  // comment stripped
  std::vector<Token> tokens;
};

inline std::vector<ContentLine> content_lines(std::string_view input) {
  std::vector<ContentLine> out;
  int number = 0;
  while (!input.empty() || number == 0) {
    ++number;
    const std::size_t end = input.find('\n');
    std::string_view line = input.substr(0, end);
    input = end == std::string_view::npos ? std::string_view{} : input.substr(end + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    ContentLine content{number, line, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) content.tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    if (!content.tokens.empty()) out.push_back(content);
    if (end == std::string_view::npos) break;
  }
  return out;
}

inline std::optional<long long> to_integer(std::string_view text) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

inline long long integer_token(const ContentLine& line, const Token& token) {
  const auto value = to_integer(token.text);
  if (!value) {
    throw ParseError(line.number, token.column,
                     "expected an integer, found '" + std::string(token.text) + "'");
  }
  return *value;
}

inline bool all_integers(const ContentLine& line) {
  for (const Token& t : line.tokens) {
    if (!to_integer(t.text)) return false;
  }
  return true;
}

inline Matching parse_pairs(const std::vector<ContentLine>& lines) {
  if (lines.empty()) throw ParseError(1, 1, "empty input");
  const ContentLine& header = lines.front();
  if (header.tokens.size() != 1) {
    throw ParseError(header.number, header.tokens[1].column,
                     "first line must hold only the edge count");
  }
  const long long n = integer_token(header, header.tokens[0]);
  if (n < 1 || n > 100000) {
    throw ParseError(header.number, header.tokens[0].column,
                     "edge count must be positive, got " + std::to_string(n));
  }
  if (static_cast<long long>(lines.size()) - 1 != n) {
    const ContentLine& where = lines.back();
    throw ParseError(where.number, 1,
                     "expected " + std::to_string(n) + " pair lines, found " +
                         std::to_string(lines.size() - 1));
  }
  std::vector<Position> partner(2 * n, -1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const ContentLine& line = lines[i];
    if (line.tokens.size() != 2) {
      throw ParseError(line.number, line.tokens.size() > 2 ? line.tokens[2].column : 1,
                       "expected two positions per line");
    }
    Position ends[2];
    for (int k = 0; k < 2; ++k) {
      const long long v = integer_token(line, line.tokens[k]);
      if (v < 0 || v >= 2 * n) {
        throw ParseError(line.number, line.tokens[k].column,
                         "position " + std::to_string(v) + " out of range [0, " +
                             std::to_string(2 * n - 1) + "]");
      }
      ends[k] = static_cast<Position>(v);
    }
    for (int k = 0; k < 2; ++k) {
      if (partner[ends[k]] != -1 || (k == 1 && ends[0] == ends[1])) {
        throw ParseError(line.number, line.tokens[k].column,
                         "duplicate position " + std::to_string(ends[k]));
      }
      partner[ends[k]] = ends[1 - k];
    }
  }
  return Matching::from_partner(std::move(partner));
}

inline Matching parse_partner(const std::vector<ContentLine>& lines) {
  if (lines.empty()) throw ParseError(1, 1, "empty input");
  if (lines.size() != 1) {
    throw ParseError(lines[1].number, 1, "partner array must fit on one line");
  }
  const ContentLine& line = lines.front();
  const std::size_t size = line.tokens.size();
  if (size % 2 != 0) {
    throw ParseError(line.number, line.tokens.back().column,
                     "partner array has odd length " + std::to_string(size));
  }
  std::vector<Position> partner(size);
  for (std::size_t v = 0; v < size; ++v) {
    const long long w = integer_token(line, line.tokens[v]);
    if (w < 0 || w >= static_cast<long long>(size)) {
      throw ParseError(line.number, line.tokens[v].column,
                       "position " + std::to_string(w) + " out of range [0, " +
                           std::to_string(size - 1) + "]");
    }
    partner[v] = static_cast<Position>(w);
  }
  for (std::size_t v = 0; v < size; ++v) {
    if (partner[v] == static_cast<Position>(v) || partner[partner[v]] != static_cast<Position>(v)) {
      throw ParseError(line.number, line.tokens[v].column,
                       "not an involution: position " + std::to_string(v) + " maps to " +
                           std::to_string(partner[v]) + " which maps to " +
                           std::to_string(partner[partner[v]]));
    }
  }
  return Matching::from_partner(std::move(partner));
}

inline Matching parse_dotbracket(const std::vector<ContentLine>& lines) {
  if (lines.empty()) throw ParseError(1, 1, "empty input");
  if (lines.size() != 1 || lines.front().tokens.size() != 1) {
    const ContentLine& where = lines.size() != 1 ? lines[1] : lines.front();
    throw ParseError(where.number, where.tokens.size() > 1 ? where.tokens[1].column : 1,
                     "dot-bracket structure must be a single token on one line");
  }
  const ContentLine& line = lines.front();
  const Token& token = line.tokens.front();
  const std::string_view text = token.text;
  if (text.size() % 2 != 0) {
    throw ParseError(line.number, token.column,
                     "structure has odd length " + std::to_string(text.size()));
  }
  std::vector<std::vector<Position>> open(kOpeners.size());
  std::vector<Position> partner(text.size(), -1);
  for (std::size_t v = 0; v < text.size(); ++v) {
    const int column = token.column + static_cast<int>(v);
    const char c = text[v];
    if (const auto f = kOpeners.find(c); f != std::string_view::npos) {
      open[f].push_back(static_cast<Position>(v));
    } else if (const auto g = kClosers.find(c); g != std::string_view::npos) {
      if (open[g].empty()) {
        throw ParseError(line.number, column, std::string("unbalanced '") + c + "' has no opener");
      }
      partner[v] = open[g].back();
      partner[open[g].back()] = static_cast<Position>(v);
      open[g].pop_back();
    } else if (c == '.') {
      throw ParseError(line.number, column, "unpaired position; only complete matchings are supported");
    } else {
      throw ParseError(line.number, column, std::string("unexpected symbol '") + c + "'");
    }
  }
  for (std::size_t f = 0; f < open.size(); ++f) {
    if (!open[f].empty()) {
      throw ParseError(line.number, token.column + open[f].front(),
                       std::string("unbalanced '") + kOpeners[f] + "' is never closed");
    }
  }
  return Matching::from_partner(std::move(partner));
}

inline Matching parse_lines(const std::vector<ContentLine>& lines, InputFormat format) {
  switch (format) {
    case InputFormat::kPairs:
      return parse_pairs(lines);
    case InputFormat::kPartner:
      return parse_partner(lines);
    case InputFormat::kDotBracket:
      return parse_dotbracket(lines);
    case InputFormat::kAuto:
      break;
  }
  if (lines.empty()) throw ParseError(1, 1, "empty input");
  bool numeric = true;
  for (const ContentLine& line : lines) numeric = numeric && all_integers(line);
  if (!numeric) return parse_dotbracket(lines);
  if (lines.size() == 1) return parse_partner(lines);
  return parse_pairs(lines);
}

}  // namespace detail

/// Decodes one matching. Auto-detection picks partner array for a single
/// numeric line, pair list for several numeric lines, dot-bracket otherwise.
inline Matching parse_input(std::string_view text, InputFormat format = InputFormat::kAuto) {
  return detail::parse_lines(detail::content_lines(text), format);
}

inline std::string emit_pairs(const Matching& m) {
  std::string out = std::to_string(m.n()) + "\n";
  for (const auto& [l, r] : to_pairs(m)) out += std::to_string(l) + " " + std::to_string(r) + "\n";
  return out;
}

inline std::string emit_partner(const Matching& m) {
  std::string out;
  for (Position v = 0; v < m.size(); ++v) {
    if (v > 0) out += ' ';
    out += std::to_string(m.partner(v));
  }
  return out + "\n";
}

/// Greedy family assignment: edges in left-endpoint order take the first
/// family in which they cross no earlier edge. No trailing newline.
inline std::string emit_dotbracket(const Matching& m) {
  const EdgeList list = EdgeList::of(m);
  std::vector<std::vector<Label>> families;
  std::string out(m.size(), '?');
  for (const Edge& e : list.edges()) {
    std::size_t f = 0;
    for (; f < families.size(); ++f) {
      bool clear = true;
      for (Label other : families[f]) {
        if (classify_pair(list.edge(other), e) == PairKind::kCrossing) {
          clear = false;
          break;
        }
      }
      if (clear) break;
    }
    if (f == kOpeners.size()) {
      throw Error("dot-bracket output needs more than " + std::to_string(kOpeners.size()) +
                  " bracket families");
    }
    if (f == families.size()) families.emplace_back();
    families[f].push_back(e.label);
    out[e.left] = kOpeners[f];
    out[e.right] = kClosers[f];
  }
  return out;
}

inline std::string emit(const Matching& m, OutputFormat format) {
  switch (format) {
    case OutputFormat::kPairs:
      return emit_pairs(m);
    case OutputFormat::kPartner:
      return emit_partner(m);
    case OutputFormat::kDotBracket:
      return emit_dotbracket(m) + "\n";
    case OutputFormat::kLR:
      return lr_sequence(m).str() + "\n";
  }
  return {};
}

inline std::string emit_ncn(const NCNTriple& t, OutputFormat format = OutputFormat::kPairs) {
  const LabelPair pair = t.pair().value_or(LabelPair{0, 0});
  return emit(t.base(), format) + "nesting " + std::to_string(pair.a) + " " +
         std::to_string(pair.b) + "\n";
}

/// Matching text followed by a final "nesting a b" line.
inline NCNTriple parse_ncn(std::string_view text, InputFormat format = InputFormat::kAuto) {
  std::vector<detail::ContentLine> lines = detail::content_lines(text);
  if (lines.empty() || lines.back().tokens.front().text != "nesting") {
    const int line = lines.empty() ? 1 : lines.back().number;
    throw ParseError(line, 1, "expected a final line 'nesting a b'");
  }
  const detail::ContentLine tail = lines.back();
  lines.pop_back();
  if (tail.tokens.size() != 3) {
    throw ParseError(tail.number, tail.tokens.front().column, "expected 'nesting a b'");
  }
  const long long a = detail::integer_token(tail, tail.tokens[1]);
  const long long b = detail::integer_token(tail, tail.tokens[2]);
  Matching base = detail::parse_lines(lines, format);
  if (a == 0 && b == 0) return NCNTriple::make(std::move(base), std::nullopt);
  if (a < 1 || b < 1 || a > base.n() || b > base.n()) {
    throw ParseError(tail.number, tail.tokens[1].column,
                     "edge labels must lie in [1, " + std::to_string(base.n()) + "] or be 0 0");
  }
  return NCNTriple::make(std::move(base),
                         LabelPair{static_cast<Label>(a), static_cast<Label>(b)});
}

}  // namespace matchbij
