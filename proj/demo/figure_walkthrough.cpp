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

// Walks the worked L & P example through phi, tau and back.

#include <iostream>

#include "matchbij/matchbij.hpp"

int main() {
  using namespace matchbij;

  const Matching lp = from_pairs({{0, 9}, {1, 6}, {2, 3}, {4, 13}, {5, 10}, {7, 8}, {11, 12}});
  std::cout << "L & P matching " << emit_dotbracket(lp) << "\n" << render(lp, {.labels = true});

  const auto hairpin = find_inflated_hairpin(lp);
  std::cout << "hairpin sides: A has " << hairpin->a.size() << " edges, B has "
            << hairpin->b.size() << "\n\n";

  const NCNTriple t = phi(lp);
  std::cout << "phi -> noncrossing base with chosen pair (" << t.pair()->a << ","
            << t.pair()->b << ")\n"
            << render(t.base(), {.labels = true}) << "\n";

  const Matching rep = tau(t);
  std::cout << "tau -> class representative, LR " << lr_sequence(rep).str() << ", " << ne(rep)
            << " nestings\n"
            << render(rep) << "\n";

  std::cout << "sigma_inv recovers the input: " << (sigma_inv(rep) == lp ? "yes" : "no") << "\n";
  return 0;
}
