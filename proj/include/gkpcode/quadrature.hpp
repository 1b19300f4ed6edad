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


#ifndef GKPCODE_QUADRATURE_HPP
#define GKPCODE_QUADRATURE_HPP

#include <cmath>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gkpcode/errors.hpp"

namespace gkp {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // Kronrod error estimate
  double l1 = 0.0;     // integral of |f|
};

/// Adaptive 31-point Gauss-Kronrod on [a, b] (infinite limits allowed).
///
/// Throws NumericalError when the error estimate exceeds
/// max(abs_tol, rel_tol * l1) after refinement.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double rel_tol = 1e-11,
                           double abs_tol = 1e-15, unsigned max_depth = 15) {
  QuadratureResult r;
  r.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, a, b, max_depth, rel_tol, &r.error, &r.l1);
  if (!std::isfinite(r.value) || r.error > std::max(abs_tol, 10.0 * rel_tol * r.l1)) {
    std::ostringstream msg;
    msg << "quadrature on [" << a << ", " << b << "] did not converge: value " << r.value
        << ", error estimate " << r.error << ", L1 " << r.l1;
    throw NumericalError(msg.str());
  }
  return r;
}

}  // namespace gkp

#endif  // GKPCODE_QUADRATURE_HPP
