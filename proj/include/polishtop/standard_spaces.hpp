// Copyright 2026 The polishtop Authors
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

#include <cstddef>

#include "polishtop/presentation.hpp"

namespace polishtop {

// Dyadic rationals of [0,1] with denominator <= 2^depth at coordinate 0,
// enumerated 0, 1, then level by level (1/2, 1/4, 3/4, 1/8, ...).
// 2^depth + 1 points.
Presentation dyadic_interval(int depth);

// n rational points on the unit circle in the plane (coordinates 0 and 1),
// obtained from the rational parametrization ((1-t^2)/(1+t^2), 2t/(1+t^2))
// with t = tan(theta/2) rounded to a multiple of 1/4096 for the equally
// spaced angles theta = 2*pi*k/n - pi. When n is a power of two the points
// are enumerated in bit-reversed order of k so that every prefix is spread
// around the circle.
Presentation rational_circle(std::size_t n);

// The points k/den for |k| <= reach*den on coordinate 0, enumerated
// 0, 1/den, -1/den, 2/den, -2/den, ...
Presentation line_segment_grid(int reach, int den);

// Dyadic rationals of [-reach, reach] with denominator <= 2^depth on
// coordinate 0: the integers 0, 1, -1, ..., reach, -reach first, then each
// finer level by increasing |x| (positive before negative), so every prefix
// is spread over the segment.
Presentation dyadic_line(int reach, int depth);

}  // namespace polishtop
