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

#ifndef GKPCODE_CODES_HPP
#define GKPCODE_CODES_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "gkpcode/errors.hpp"
#include "gkpcode/symplectic.hpp"

namespace gkp {

enum class CodeFamily { GaussianRepetition, GkpRepetition, GkpTwoModeSqueezing, GkpSqueezedRepetition };

/// GKP ancillas are read modulo sqrt(2 pi); position eigenstates give the
/// reshaped ancilla noise exactly, with no modular ambiguity.
enum class AncillaKind { Gkp, PositionEigenstate };

inline const char* to_string(CodeFamily f) {
  switch (f) {
    case CodeFamily::GaussianRepetition:
      return "gaussian-repetition";
    case CodeFamily::GkpRepetition:
      return "gkp-repetition";
    case CodeFamily::GkpTwoModeSqueezing:
      return "gkp-tms";
    case CodeFamily::GkpSqueezedRepetition:
      return "gkp-squeezed-repetition";
  }
  return "unknown";
}

/// Data modes come first (modes 1..M), ancillas after.
struct CodeSpec {
  CodeFamily family = CodeFamily::GkpRepetition;
  std::size_t n_modes = 2;
  std::size_t data_modes = 1;
  SymplecticTransform encoder = SymplecticTransform::identity(2);
  std::vector<double> ancilla_sigma_gkp;
  AncillaKind ancilla_kind = AncillaKind::Gkp;
  double gain = 1.0;    // two-mode squeezing codes
  double lambda = 1.0;  // squeezed repetition

  std::size_t n_ancillas() const { return n_modes - data_modes; }

  /// Same finite-squeezing noise on every GKP ancilla.
  CodeSpec with_sigma_gkp(double sigma_gkp) const {
    if (!(sigma_gkp >= 0.0)) {
      throw DomainError("CodeSpec: sigma_gkp must be >= 0");
    }
    CodeSpec out = *this;
    out.ancilla_sigma_gkp.assign(n_ancillas(), sigma_gkp);
    return out;
  }

  void validate() const {
    if (data_modes == 0 || data_modes >= n_modes) {
      throw DimensionError("CodeSpec: need 0 < data_modes < n_modes");
    }
    if (encoder.n_modes() != n_modes) {
      throw DimensionError("CodeSpec: encoder acts on the wrong number of modes");
    }
    if (ancilla_sigma_gkp.size() != n_ancillas()) {
      throw DimensionError("CodeSpec: one sigma_gkp per ancilla required");
    }
  }
};

inline CodeSpec gaussian_repetition(std::size_t n) {
  if (n < 2) {
    throw DomainError("gaussian_repetition: n must be >= 2");
  }
  auto enc = SymplecticTransform::identity(n);
  for (std::size_t k = 2; k <= n; ++k) {
    enc = compose(sum_gate(1, k, n), enc);
  }
  CodeSpec spec{CodeFamily::GaussianRepetition, n, 1, enc, std::vector<double>(n - 1, 0.0),
                AncillaKind::PositionEigenstate};
  spec.validate();
  return spec;
}

inline CodeSpec gkp_repetition(double sigma_gkp = 0.0) {
  CodeSpec spec{CodeFamily::GkpRepetition, 2, 1, sum_gate(1, 2, 2), {0.0}, AncillaKind::Gkp};
  return spec.with_sigma_gkp(sigma_gkp);
}

inline CodeSpec gkp_tms(double gain, double sigma_gkp = 0.0) {
  CodeSpec spec{CodeFamily::GkpTwoModeSqueezing, 2, 1, two_mode_squeeze(gain, 1, 2, 2), {0.0},
                AncillaKind::Gkp, gain};
  return spec.with_sigma_gkp(sigma_gkp);
}

/// Two data modes (1, 2), each protected by its own ancilla (3, 4).
inline CodeSpec gkp_tms_pair(double gain) {
  auto enc = compose(two_mode_squeeze(gain, 1, 3, 4), two_mode_squeeze(gain, 2, 4, 4));
  CodeSpec spec{CodeFamily::GkpTwoModeSqueezing, 4, 2, enc, {0.0, 0.0}, AncillaKind::Gkp, gain};
  spec.validate();
  return spec;
}

namespace detail {

// S[2] = Sq1(1/l) Sq2(l) SUM1->2;
// S[N] = (I (+) S[N-1]) Sq2(l^{N-1}) Sq1(1/l) SUM1->2 Sq1(1/l^{N-2}).
inline SymplecticTransform squeezed_repetition_encoder(std::size_t n, double lam) {
  if (n == 2) {
    return compose(single_mode_squeeze(1.0 / lam, 1, 2),
                   compose(single_mode_squeeze(lam, 2, 2), sum_gate(1, 2, 2)));
  }
  const auto inner =
      direct_sum(SymplecticTransform::identity(1), squeezed_repetition_encoder(n - 1, lam));
  const double nd = static_cast<double>(n);
  auto s = compose(inner, single_mode_squeeze(std::pow(lam, nd - 1.0), 2, n));
  s = compose(s, single_mode_squeeze(1.0 / lam, 1, n));
  s = compose(s, sum_gate(1, 2, n));
  return compose(s, single_mode_squeeze(std::pow(lam, 2.0 - nd), 1, n));
}

}  // namespace detail

inline CodeSpec gkp_squeezed_repetition(std::size_t n, double lam, double sigma_gkp = 0.0) {
  if (n < 2) {
    throw DomainError("gkp_squeezed_repetition: n must be >= 2");
  }
  if (!(lam > 1.0) || !std::isfinite(lam)) {
    throw DomainError("gkp_squeezed_repetition: lambda must be finite and > 1");
  }
  CodeSpec spec{CodeFamily::GkpSqueezedRepetition,
                n,
                1,
                detail::squeezed_repetition_encoder(n, lam),
                std::vector<double>(n - 1, 0.0),
                AncillaKind::Gkp,
                1.0,
                lam};
  return spec.with_sigma_gkp(sigma_gkp);
}

/// Physical action of a logical Gaussian gate: Enc (gate (+) aux) Enc^{-1}.
inline SymplecticTransform logical_gate(const CodeSpec& spec, const SymplecticTransform& gate,
                                        const SymplecticTransform& aux) {
  if (gate.n_modes() != spec.data_modes) {
    throw DimensionError("logical_gate: gate must act on " + std::to_string(spec.data_modes) +
                         " data mode(s)");
  }
  if (aux.n_modes() != spec.n_ancillas()) {
    throw DimensionError("logical_gate: aux must act on " + std::to_string(spec.n_ancillas()) +
                         " ancilla mode(s)");
  }
  return compose(spec.encoder, compose(direct_sum(gate, aux), inverse(spec.encoder)));
}

}  // namespace gkp

#endif  // GKPCODE_CODES_HPP
