// Copyright 2026 The isotree Authors
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

// The inner isoperimetric profile I_d(k) of T_d, the optimality criterion,
// extremal witnesses, balls and Cheeger constants. Integer arithmetic only.

#include <cstdint>

#include <boost/rational.hpp>

#include "isotree/domain.hpp"

namespace isotree {

using Rational = boost::rational<std::int64_t>;

// I_d(1) = 1 and I_d(k) = ceil(((d-2)k + 2) / (d-1)) for k >= 2.
// kBadParameter if d < 2 or k < 1.
std::int64_t profile_value(int d, std::int64_t k);

// |dD| = I_d(|D|); for |D| >= 2 this is decided through tau(D) <= d-2.
bool is_optimal(const Domain& dom);

// k - 2 = (d-1)s - q with s >= 1 and 0 <= q < d-1.
struct EuclidSplit {
  std::int64_t s = 0;
  std::int64_t q = 0;
};

// kBadParameter unless d >= 3 and k >= d + 1.
EuclidSplit euclid_split(int d, std::int64_t k);

// A domain of size k attaining I_d(k):
//  - k <= d (and every k when d = 2): the path on k vertices;
//  - otherwise a path x_1..x_s with all of its outer neighbors attached,
//    minus the q highest-numbered outer neighbors of x_s.
// The path occupies vertices 0..s-1.
Domain witness(int d, std::int64_t k);

// The ball of radius r around a vertex of T_d (vertex 0), d >= 3.
Domain ball(int d, int r);

struct CheegerValues {
  Rational h_in;
  std::int64_t h_out = 0;
  std::int64_t h_edge = 0;
};

CheegerValues cheeger(int d);

}  // namespace isotree
