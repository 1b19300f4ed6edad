// Copyright 2026 The gkpcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef GKPCODE_GOLDEN_SECTION_HPP
#define GKPCODE_GOLDEN_SECTION_HPP

#include <cmath>
#include <cstddef>

#include "gkpcode/errors.hpp"

namespace gkp {

struct ScalarMinimum {
  double x = 0.0;
  double fx = 0.0;
  std::size_t evaluations = 0;
};

/// Golden-section search for a minimum of f on [a, b]; stops once the
/// bracket is narrower than rel_tol * |x| (or abs_tol). Assumes f is
/// unimodal on the bracket; callers bracket with a grid scan first.
template <class F>
ScalarMinimum golden_section_minimize(F&& f, double a, double b, double rel_tol = 1e-6,
                                      double abs_tol = 1e-300, std::size_t max_iter = 500) {
  if (!(b >= a)) {
    throw DomainError("golden_section_minimize: need a <= b");
  }
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  std::size_t evals = 2;
  for (std::size_t it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (a + b);
    if (b - a <= std::max(abs_tol, rel_tol * std::abs(mid))) {
      break;
    }
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++evals;
  }
  return fc <= fd ? ScalarMinimum{c, fc, evals} : ScalarMinimum{d, fd, evals};
}

}  // namespace gkp

#endif  // GKPCODE_GOLDEN_SECTION_HPP
