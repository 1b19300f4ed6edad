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


#ifndef GKPCODE_GKPCODE_HPP
#define GKPCODE_GKPCODE_HPP

#include "gkpcode/analytic.hpp"
#include "gkpcode/codes.hpp"
#include "gkpcode/decoders.hpp"
#include "gkpcode/errors.hpp"
#include "gkpcode/experiments.hpp"
#include "gkpcode/golden_section.hpp"
#include "gkpcode/modular.hpp"
#include "gkpcode/monte_carlo.hpp"
#include "gkpcode/noise.hpp"
#include "gkpcode/optimizer.hpp"
#include "gkpcode/quadrature.hpp"
#include "gkpcode/rng.hpp"
#include "gkpcode/statistics.hpp"
#include "gkpcode/symplectic.hpp"

#endif  // GKPCODE_GKPCODE_HPP
