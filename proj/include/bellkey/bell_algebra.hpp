// Copyright 2026 The bellkey authors
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

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bellkey/errors.hpp"

namespace bellkey {

/// Index of one of the four Bell states |phi_1..4>.
///
/// The index is a pair of error bits (z, x) on the transmitted qubit:
///
///   1 <-> (0,0)  no error          |phi_1> = (|00> + |11>)/sqrt(2)
///   2 <-> (1,0)  phase error (Z)   |phi_2> = (I(x)Z)  |phi_1>
///   3 <-> (0,1)  bit error (X)     |phi_3> = (I(x)X)  |phi_1>
///   4 <-> (1,1)  both      (iY)    |phi_4> = (I(x)iY) |phi_1>
///
/// Entanglement swapping composes indices by XOR of the bit pairs, so the
/// four indices form a Klein four-group with identity 1.
class BellIndex {
 public:
  constexpr explicit BellIndex(int k) : k_(k) {
    if (k < 1 || k > 4) throw DomainError("BellIndex out of range 1..4");
  }

  static constexpr BellIndex from_bits(bool z, bool x) {
    return BellIndex(1 + (z ? 1 : 0) + (x ? 2 : 0));
  }

  constexpr int value() const { return k_; }
  constexpr bool z_bit() const { return ((k_ - 1) & 1) != 0; }
  constexpr bool x_bit() const { return ((k_ - 1) & 2) != 0; }

  constexpr auto operator<=>(const BellIndex&) const = default;

 private:
  int k_;
};

inline constexpr std::array<BellIndex, 4> kAllBellIndices{
    BellIndex(1), BellIndex(2), BellIndex(3), BellIndex(4)};

/// Error-group composition: the end-to-end Bell index produced when indices
/// i and j meet at a swapping node.  XOR on the (z, x) bit pairs.
constexpr BellIndex compose(BellIndex i, BellIndex j) {
  return BellIndex::from_bits(i.z_bit() != j.z_bit(), i.x_bit() != j.x_bit());
}

/// Probability vector (beta_1..beta_4) over Bell indices.  Describes either
/// a Bell-diagonal two-qubit state or the error statistics of a channel.
class BellDiagonalDist {
 public:
  static constexpr double kSimplexTol = 1e-12;

  explicit BellDiagonalDist(std::array<double, 4> beta) : beta_(beta) {
    double sum = 0.0;
    for (double& b : beta_) {
      if (b < 0.0) {
        if (b < -kSimplexTol) throw DomainError("negative Bell coefficient");
        b = 0.0;
      }
      sum += b;
    }
    if (std::abs(sum - 1.0) > kSimplexTol)
      throw DomainError("Bell coefficients must sum to 1");
  }

  BellDiagonalDist(double b1, double b2, double b3, double b4)
      : BellDiagonalDist(std::array<double, 4>{b1, b2, b3, b4}) {}

  static BellDiagonalDist point_mass(BellIndex k) {
    std::array<double, 4> b{0, 0, 0, 0};
    b[static_cast<std::size_t>(k.value() - 1)] = 1.0;
    return BellDiagonalDist(b);
  }

  /// Channel that imprints a phase error with probability q: (1-q, q, 0, 0).
  static BellDiagonalDist phase_noise(double q) {
    if (q < 0.0 || q > 1.0) throw DomainError("phase noise weight outside [0,1]");
    return BellDiagonalDist(1.0 - q, q, 0.0, 0.0);
  }

  double operator[](BellIndex k) const {
    return beta_[static_cast<std::size_t>(k.value() - 1)];
  }
  const std::array<double, 4>& beta() const { return beta_; }

 private:
  std::array<double, 4> beta_;
};

/// Convolution of two error distributions under the swapping group:
/// out_k = sum over i (+) j = k of a_i * b_j.
inline BellDiagonalDist convolve(const BellDiagonalDist& a,
                                 const BellDiagonalDist& b) {
  std::array<double, 4> out{0, 0, 0, 0};
  for (BellIndex i : kAllBellIndices)
    for (BellIndex j : kAllBellIndices)
      out[static_cast<std::size_t>(compose(i, j).value() - 1)] += a[i] * b[j];
  return BellDiagonalDist(out);
}

/// Group convolution of a whole list (left fold; the group is abelian so the
/// order does not matter).
inline BellDiagonalDist convolve(std::span<const BellDiagonalDist> dists) {
  if (dists.empty()) throw EmptyInput("convolve of empty list");
  BellDiagonalDist acc = dists[0];
  for (std::size_t m = 1; m < dists.size(); ++m) acc = convolve(acc, dists[m]);
  return acc;
}

inline BellDiagonalDist convolve(const std::vector<BellDiagonalDist>& dists) {
  return convolve(std::span<const BellDiagonalDist>(dists));
}

namespace detail {

using Amplitude = std::complex<double>;

/// <ab|phi_k>: with (z, x) = bits(k) the amplitude is nonzero iff b == a^x,
/// and then equals (-1)^(z*b) / sqrt(2).
inline Amplitude bell_amplitude(BellIndex k, int a, int b) {
  const int x = k.x_bit() ? 1 : 0;
  const int z = k.z_bit() ? 1 : 0;
  if (b != (a ^ x)) return {0.0, 0.0};
  const double sign = (z != 0 && b != 0) ? -1.0 : 1.0;
  return {sign / std::sqrt(2.0), 0.0};
}

/// Two-qubit pure state on (A, B), indexed 2*a + b.
using TwoQubit = std::array<Amplitude, 4>;

/// Project qubits (R1, R2) of |phi_i>_{A R1} (x) |phi_j>_{R2 B} onto
/// |phi_m>, leaving the unnormalized post-measurement state on (A, B).
inline TwoQubit project_middle(BellIndex i, BellIndex j, BellIndex m) {
  TwoQubit chi{};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      Amplitude s{0.0, 0.0};
      for (int r1 = 0; r1 < 2; ++r1)
        for (int r2 = 0; r2 < 2; ++r2)
          s += std::conj(bell_amplitude(m, r1, r2)) * bell_amplitude(i, a, r1) *
               bell_amplitude(j, r2, b);
      chi[static_cast<std::size_t>(2 * a + b)] = s;
    }
  }
  return chi;
}

/// Apply I (x) Z^z X^x to the B qubit.
inline TwoQubit apply_correction(const TwoQubit& chi, bool zc, bool xc) {
  const int z = zc ? 1 : 0;
  const int x = xc ? 1 : 0;
  TwoQubit out{};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const double sign = (z != 0 && b != 0) ? -1.0 : 1.0;
      out[static_cast<std::size_t>(2 * a + b)] =
          sign * chi[static_cast<std::size_t>(2 * a + (b ^ x))];
    }
  }
  return out;
}

inline double norm(const TwoQubit& v) {
  double n = 0.0;
  for (const Amplitude& c : v) n += std::norm(c);
  return std::sqrt(n);
}

/// |<phi_k|v>| for a normalized v.
inline double bell_overlap(BellIndex k, const TwoQubit& v) {
  Amplitude s{0.0, 0.0};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      s += std::conj(bell_amplitude(k, a, b)) *
           v[static_cast<std::size_t>(2 * a + b)];
  return std::abs(s);
}

}  // namespace detail

/// State-vector oracle for entanglement swapping.
///
/// Builds |phi_i>_{A R1} (x) |phi_j>_{R2 B} as an explicit 16-amplitude
/// vector, Bell-measures (R1, R2), and for each of the four outcomes applies
/// the correction frozen from the ideal i = j = 1 run (the swapping node has
/// no way to know the actual error pattern, so it always corrects as if the
/// inputs were ideal).  All four outcomes must leave (A, B) in the same Bell
/// state up to global phase; its index is returned and certifies compose().
inline BellIndex swap_oracle(BellIndex i, BellIndex j) {
  constexpr double kOverlapTol = 1e-10;

  auto identify = [&](const detail::TwoQubit& v) -> BellIndex {
    for (BellIndex k : kAllBellIndices)
      if (detail::bell_overlap(k, v) > 1.0 - kOverlapTol) return k;
    throw InternalAssertion(
        "swap_oracle: post-measurement state is not a Bell state");
  };

  // Corrections from the ideal case: outcome m leaves (A, B) in some Bell
  // state |phi_g>; the frozen correction for m is Z^z X^x with bits(g).
  std::array<std::pair<bool, bool>, 4> correction{};
  for (BellIndex m : kAllBellIndices) {
    detail::TwoQubit chi = detail::project_middle(BellIndex(1), BellIndex(1), m);
    const double n = detail::norm(chi);
    if (n <= 0.0) throw InternalAssertion("swap_oracle: vanishing ideal branch");
    for (auto& c : chi) c /= n;
    const BellIndex g = identify(chi);
    correction[static_cast<std::size_t>(m.value() - 1)] = {g.z_bit(), g.x_bit()};
  }

  int result = 0;
  for (BellIndex m : kAllBellIndices) {
    detail::TwoQubit chi = detail::project_middle(i, j, m);
    const double n = detail::norm(chi);
    if (n <= 0.0)
      throw InternalAssertion("swap_oracle: vanishing measurement branch");
    for (auto& c : chi) c /= n;
    const auto [zc, xc] = correction[static_cast<std::size_t>(m.value() - 1)];
    const detail::TwoQubit fixed = detail::apply_correction(chi, zc, xc);
    const BellIndex k = identify(fixed);
    if (result == 0) {
      result = k.value();
    } else if (result != k.value()) {
      throw InternalAssertion("swap_oracle: outcomes disagree on the index");
    }
  }
  return BellIndex(result);
}

}  // namespace bellkey
