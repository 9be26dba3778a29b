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

// Exact counting. Everything here is integer arithmetic on arbitrary-precision
// values; nothing passes through floating point.

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace matchbij {

using BigCount = boost::multiprecision::cpp_int;

/// m!! for odd m >= 1 (1 * 3 * ... * m). m == -1 gives the empty product.
inline BigCount double_factorial(int m) {
  if (m < -1 || (m > 0 && m % 2 == 0))
    throw std::invalid_argument("double_factorial expects an odd argument, got " +
                                std::to_string(m));
  BigCount out = 1;
  for (int k = 3; k <= m; k += 2) out *= k;
  return out;
}

inline BigCount binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;  // exact: out is C(n-k+i, i) after this step
  }
  return out;
}

/// C_n = C(2n, n) / (n + 1).
inline BigCount catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan expects n >= 0");
  return binomial(2 * n, n) / (n + 1);
}

/// Number of complete matchings with n edges: (2n-1)!!.
inline BigCount matching_count(int n) { return double_factorial(2 * n - 1); }

/// 2 * 4^(n-1) - (3n-1) C(2n, n) / (2n+2): the number of L & P matchings with
/// n edges, and the number of nesting-similarity classes of M(n).
inline BigCount lp_count_formula(int n) {
  if (n < 1) throw std::invalid_argument("lp_count_formula expects n >= 1");
  BigCount power = 2;
  for (int i = 1; i < n; ++i) power *= 4;
  const BigCount numerator = BigCount(3 * n - 1) * binomial(2 * n, n);
  const BigCount denominator = 2 * n + 2;
  if (numerator % denominator != 0)
    throw std::logic_error("(2n+2) does not divide (3n-1) C(2n,n) at n = " + std::to_string(n));
  return power - numerator / denominator;
}

}  // namespace matchbij
