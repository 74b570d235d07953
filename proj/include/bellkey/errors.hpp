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

#include <stdexcept>
#include <string>

namespace bellkey {

/// An argument fell outside its mathematical domain (probability out of
/// [0,1], malformed distribution, negative eigenvalue, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An operation that requires a non-empty input list received an empty one.
struct EmptyInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Local dimension too small to split into symmetric/antisymmetric parts.
struct BadDimension : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// QBER outside [0, 1/2].
struct BadQber : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Spectral operators from incompatible commuting families were combined
/// (different eigenbasis, conflicting eigenspace multiplicities, ...).
struct FamilyMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A matrix handed to the dense backend is not Hermitian within tolerance.
struct NotHermitian : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured size cap (chain enumeration,
/// dense matrix dimension).  Raised instead of silently truncating.
struct SizeLimit : std::length_error {
  using std::length_error::length_error;
};

/// Threshold search: the criterion never changes sign on [0, 1/2].
struct NoCrossing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Threshold search: the pre-scan found more than one sign change, so a
/// single threshold is not well defined.  Reported, never resolved silently.
struct MultipleCrossings : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A consistency check that can only fail through a bug fired.
struct InternalAssertion : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace bellkey
