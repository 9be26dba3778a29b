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

// Exhaustive property suites. Each suite checks one family of invariants over
// every object of size n and reports the first counterexample it meets.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "matchbij/bijections.hpp"
#include "matchbij/count.hpp"
#include "matchbij/enumerate.hpp"
#include "matchbij/io.hpp"
#include "matchbij/lp.hpp"
#include "matchbij/matching.hpp"
#include "matchbij/similarity.hpp"

namespace matchbij {

struct SuiteResult {
  std::string name;
  int n = 0;
  std::uint64_t checked = 0;
  std::string failure;  // empty when the suite passed

  bool passed() const noexcept { return failure.empty(); }
};

struct Suite {
  std::string name;
  std::string description;
  std::function<SuiteResult(int, const EnumerationCap&)> run;
};

namespace detail {

inline std::string describe(const Matching& m) {
  std::string text = emit_partner(m);
  text.pop_back();
  return "[" + text + "]";
}

inline std::string describe(const NCNTriple& t) {
  const LabelPair p = t.pair().value_or(LabelPair{0, 0});
  return describe(t.base()) + " nesting " + std::to_string(p.a) + " " + std::to_string(p.b);
}

/// Runs `check` on each element; `check` returns an empty string on success.
template <typename Stream, typename Check>
SuiteResult run_checks(std::string name, int n, Stream&& stream, Check&& check) {
  SuiteResult out{std::move(name), n, 0, {}};
  stream([&](const auto& item) {
    ++out.checked;
    if (std::string why = check(item); !why.empty()) {
      out.failure = describe(item) + ": " + why;
      return false;
    }
    return true;
  });
  return out;
}

inline SuiteResult suite_pair_partition(int n, const EnumerationCap& cap) {
  const std::size_t total = static_cast<std::size_t>(n) * (n - 1) / 2;
  return run_checks("pair-partition", n, [&](auto f) { all_matchings(n, f, cap); },
                    [&](const Matching& m) -> std::string {
                      const EdgeList list = EdgeList::of(m);
                      const std::size_t sum = nestings(list).count + crossings(list).count +
                                              alignments(list).count;
                      if (sum != total) return "ne + cr + alignments = " + std::to_string(sum);
                      if (nestings(list).count != ne(m) || crossings(list).count != cr(m))
                        return "pair lists disagree with counts";
                      return {};
                    });
}

inline SuiteResult suite_nc(int n, const EnumerationCap& cap) {
  return run_checks("nc-projection", n, [&](auto f) { all_matchings(n, f, cap); },
                    [](const Matching& m) -> std::string {
                      const Matching image = nc(m);
                      if (lr_sequence(image) != lr_sequence(m)) return "LR word changed";
                      if (!is_noncrossing(image)) return "nc(M) has crossings";
                      if (nc(image) != image) return "nc is not idempotent";
                      if ((image == m) != is_noncrossing(m)) return "nc(M) = M disagrees with noncrossing";
                      if (is_noncrossing(m) != (cr(m) == 0)) return "is_noncrossing disagrees with cr";
                      if (from_pairs(to_pairs(m), m.n()) != m) return "pair round trip failed";
                      return {};
                    });
}

inline SuiteResult suite_rperm(int n, const EnumerationCap& cap) {
  return run_checks("rperm-nesting", n, [&](auto f) { noncrossing_matchings(n, f, cap); },
                    [](const Matching& m) -> std::string {
                      const EdgeList list = EdgeList::of(m);
                      const std::vector<Label> order = rperm(list);
                      std::vector<int> rank(m.n() + 1);
                      for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
                      for (Label a = 1; a <= m.n(); ++a) {
                        for (Label b = a + 1; b <= m.n(); ++b) {
                          const bool nested =
                              classify_pair(list.edge(a), list.edge(b)) == PairKind::kNested;
                          if (nested != (rank[b] < rank[a]))
                            return "pair (" + std::to_string(a) + "," + std::to_string(b) + ")";
                        }
                      }
                      return {};
                    });
}

inline SuiteResult suite_nc_max(int n, const EnumerationCap& cap) {
  std::map<LRSequence, std::size_t> best;
  all_matchings(
      n,
      [&](const Matching& m) {
        std::size_t& b = best[lr_sequence(m)];
        b = std::max(b, ne(m));
      },
      cap);
  return run_checks("nc-max-nestings", n, [&](auto f) { noncrossing_matchings(n, f, cap); },
                    [&](const Matching& m) -> std::string {
                      if (ne(m) != best.at(lr_sequence(m)))
                        return "some matching with this LR word has more nestings";
                      return {};
                    });
}

inline SuiteResult suite_lp_census(int n, const EnumerationCap& cap) {
  SuiteResult out{"lp-census", n, 0, {}};
  BigCount count = 0;
  all_matchings(
      n,
      [&](const Matching& m) {
        ++out.checked;
        if (is_lp(m)) ++count;
      },
      cap);
  if (count != lp_count_formula(n)) {
    out.failure = "census " + count.str() + " != formula " + lp_count_formula(n).str();
  }
  return out;
}

inline SuiteResult suite_lp_structure(int n, const EnumerationCap& cap) {
  return run_checks(
      "lp-structure", n, [&](auto f) { enumerate_lp(n, f, cap); },
      [](const Matching& m) -> std::string {
        const HairpinDecomposition h = *find_inflated_hairpin(m);
        if (cr(m) != h.a.size() * h.b.size()) return "cr(M) != |A| |B|";
        if (h.a.empty() != h.b.empty()) return "one hairpin side is empty";
        if (!is_lp(mirror(m))) return "mirror image is not L & P";
        if (h.empty()) return {};
        const EdgeList list = EdgeList::of(m);
        std::vector<Label> expected(h.a.rbegin(), h.a.rend());
        expected.insert(expected.end(), h.b.rbegin(), h.b.rend());
        std::vector<Label> actual;
        for (Label x : rperm(list)) {
          if (std::binary_search(h.a.begin(), h.a.end(), x) ||
              std::binary_search(h.b.begin(), h.b.end(), x))
            actual.push_back(x);
        }
        if (actual != expected) return "hairpin right endpoints out of order";
        return {};
      });
}

inline SuiteResult suite_phi(int n, const EnumerationCap& cap) {
  SuiteResult forward = run_checks("phi-roundtrip", n, [&](auto f) { enumerate_lp(n, f, cap); },
                                   [](const Matching& m) -> std::string {
                                     if (phi_inv(phi(m)) != m) return "phi_inv(phi(M)) != M";
                                     return {};
                                   });
  if (!forward.passed()) return forward;
  SuiteResult backward = run_checks("phi-roundtrip", n, [&](auto f) { ncn_elements(n, f, cap); },
                                    [](const NCNTriple& t) -> std::string {
                                      const Matching m = phi_inv(t);
                                      if (!is_lp(m)) return "phi_inv result is not L & P";
                                      if (phi(m) != t) return "phi(phi_inv(t)) != t";
                                      return {};
                                    });
  backward.checked += forward.checked;
  return backward;
}

inline SuiteResult suite_tau(int n, const EnumerationCap& cap) {
  return run_checks("tau-roundtrip", n, [&](auto f) { ncn_elements(n, f, cap); },
                    [](const NCNTriple& t) -> std::string {
                      const Matching image = tau(t);
                      if (lr_sequence(image) != lr_sequence(t.base())) return "LR word changed";
                      if (tau_inv(image) != t) return "tau_inv(tau(t)) != t";
                      return {};
                    });
}

inline SuiteResult suite_swap_lemmas(int n, const EnumerationCap& cap) {
  return run_checks(
      "swap-lemmas", n, [&](auto f) { noncrossing_matchings(n, f, cap); },
      [](const Matching& m) -> std::string {
        const SwapTrace trace = swap_sequence(m);
        const std::vector<LabelPair> pairs = nep(m);
        const std::size_t k = pairs.size();
        for (std::size_t i = 0; i < trace.size(); ++i) {
          const auto& step = trace.steps[i];
          const std::string at = "step " + std::to_string(i) + ": ";
          if (step.ne != k - i || ne(step.edges.to_matching()) != k - i) return at + "ne != k - i";
          const std::vector<LabelPair> rest(pairs.begin() + static_cast<std::ptrdiff_t>(i), pairs.end());
          if (nep(step.edges) != rest) return at + "nep is not the suffix of nep(M)";
          if (lr_sequence(step.edges.to_matching()) != lr_sequence(m)) return at + "LR word changed";
          if (i < k) {
            const auto& perm = step.lperm;
            const auto pos = std::find(perm.begin(), perm.end(), pairs[i].a);
            if (pos + 1 >= perm.end() || *(pos + 1) != pairs[i].b)
              return at + "next pair is not adjacent in order in lperm";
          }
        }
        return {};
      });
}

inline SuiteResult suite_sigma(int n, const EnumerationCap& cap) {
  std::set<Matching> images;
  SuiteResult out = run_checks(
      "sigma-image", n, [&](auto f) { enumerate_lp(n, f, cap); },
      [&](const Matching& m) -> std::string {
        const Matching image = sigma(m);
        if (lr_sequence(image) != lr_sequence(m)) return "LR word changed";
        if (is_noncrossing(m) && image != m) return "sigma moved a noncrossing matching";
        if (!is_representative(image)) return "image is not a class representative";
        if (sigma_inv(image) != m) return "sigma_inv(sigma(M)) != M";
        if (!images.insert(image).second) return "sigma is not injective";
        return {};
      });
  if (out.passed() && images != ns_representative_set(n, cap)) {
    out.failure = "sigma image differs from the representative set";
  }
  return out;
}

inline SuiteResult suite_classes(int n, const EnumerationCap& cap) {
  SuiteResult out{"class-census", n, 0, {}};
  const Census c = census(n, cap);
  out.checked = c.matchings;
  const BigCount formula = lp_count_formula(n);
  if (BigCount(c.class_count()) != formula) {
    out.failure = "census found " + std::to_string(c.class_count()) + " classes, formula " +
                  formula.str();
    return out;
  }
  std::set<ClassKey> keys;
  std::size_t reps = 0;
  ns_representatives(
      n,
      [&](const Matching& m) {
        ++reps;
        keys.insert(class_key(m));
      },
      cap);
  if (BigCount(reps) != formula) {
    out.failure = "representative count " + std::to_string(reps) + " != formula";
  } else if (keys.size() != reps) {
    out.failure = "two representatives share a class key";
  } else {
    for (const auto& [key, count] : c.members) {
      if (!keys.count(key)) {
        out.failure = "class (" + key.lr.str() + ", " + std::to_string(key.ne) + ") has no representative";
        break;
      }
    }
  }
  return out;
}

inline SuiteResult suite_coverage(int n, const EnumerationCap& cap) {
  return run_checks("class-coverage", n, [&](auto f) { noncrossing_matchings(n, f, cap); },
                    [](const Matching& m) -> std::string {
                      const SwapTrace trace = swap_sequence(m);
                      const std::size_t k = ne(m);
                      std::set<std::size_t> seen;
                      for (std::size_t i = 0; i < trace.size(); ++i) {
                        const Matching step = trace.matching(i);
                        if (lr_sequence(step) != lr_sequence(m)) return "LR word changed";
                        seen.insert(ne(step));
                      }
                      if (seen.size() != k + 1 || *seen.rbegin() != k) return "nesting counts 0..k not all reached";
                      return {};
                    });
}

inline SuiteResult suite_enumeration(int n, const EnumerationCap& cap) {
  SuiteResult out{"enumeration-counts", n, 0, {}};
  std::unordered_set<Matching, MatchingHash> all;
  all_matchings(n, [&](const Matching& m) { all.insert(m); ++out.checked; }, cap);
  std::unordered_set<Matching, MatchingHash> noncrossing;
  std::uint64_t nc_stream = 0;
  bool subset = true;
  noncrossing_matchings(
      n,
      [&](const Matching& m) {
        ++nc_stream;
        noncrossing.insert(m);
        subset = subset && all.count(m) && is_noncrossing(m);
      },
      cap);
  std::uint64_t ncn = 0;
  ncn_elements(n, [&](const NCNTriple&) { ++ncn; }, cap);

  if (BigCount(out.checked) != matching_count(n) || all.size() != out.checked) {
    out.failure = "M(n) stream has " + std::to_string(out.checked) + " items, " +
                  std::to_string(all.size()) + " distinct; expected " + matching_count(n).str();
  } else if (BigCount(nc_stream) != catalan(n) || noncrossing.size() != nc_stream) {
    out.failure = "noncrossing stream length or distinctness wrong";
  } else if (!subset) {
    out.failure = "noncrossing stream yields a matching outside M(n) or with crossings";
  } else if (BigCount(ncn) != lp_count_formula(n)) {
    out.failure = "NCN stream has " + std::to_string(ncn) + " items, formula " +
                  lp_count_formula(n).str();
  }
  return out;
}

inline SuiteResult suite_io(int n, const EnumerationCap& cap) {
  return run_checks("io-roundtrip", n, [&](auto f) { all_matchings(n, f, cap); },
                    [](const Matching& m) -> std::string {
                      for (OutputFormat out : {OutputFormat::kPairs, OutputFormat::kPartner,
                                               OutputFormat::kDotBracket}) {
                        const std::string text = emit(m, out);
                        if (parse_input(text) != m) return "auto parse of '" + text + "' failed";
                      }
                      if (parse_input(emit_pairs(m), InputFormat::kPairs) != m ||
                          parse_input(emit_partner(m), InputFormat::kPartner) != m ||
                          parse_input(emit_dotbracket(m), InputFormat::kDotBracket) != m)
                        return "explicit-format parse failed";
                      if (is_noncrossing(m) &&
                          emit_dotbracket(m).find_first_not_of("()") != std::string::npos)
                        return "noncrossing matching used more than one bracket family";
                      return {};
                    });
}

}  // namespace detail

/// Every suite, in the order `verify` runs them.
inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"pair-partition", "ne + cr + alignments = n(n-1)/2", detail::suite_pair_partition},
      {"nc-projection", "nc preserves LR words, is idempotent, fixes exactly the noncrossing matchings",
       detail::suite_nc},
      {"rperm-nesting", "noncrossing: a < b nested iff b precedes a in rperm", detail::suite_rperm},
      {"nc-max-nestings", "nc(M) has the most nestings for its LR word", detail::suite_nc_max},
      {"lp-census", "number of L & P matchings equals the closed formula", detail::suite_lp_census},
      {"lp-structure", "hairpin right-endpoint order, cr = |A||B|, mirror closure",
       detail::suite_lp_structure},
      {"phi-roundtrip", "phi and phi_inv are mutually inverse", detail::suite_phi},
      {"tau-roundtrip", "tau_inv(tau(t)) = t on NCN_n", detail::suite_tau},
      {"swap-lemmas", "ne(M_i) = k - i, nep suffix, adjacency in lperm", detail::suite_swap_lemmas},
      {"sigma-image", "sigma is injective, preserves LR words, image = NS_n", detail::suite_sigma},
      {"class-census", "classes = representatives = formula", detail::suite_classes},
      {"class-coverage", "each noncrossing trace reaches every nesting count", detail::suite_coverage},
      {"enumeration-counts", "stream lengths match closed forms, no duplicates",
       detail::suite_enumeration},
      {"io-roundtrip", "every format parses back to the same matching", detail::suite_io},
  };
  return all;
}

inline const Suite* find_suite(std::string_view name) {
  for (const Suite& s : suites()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

}  // namespace matchbij
