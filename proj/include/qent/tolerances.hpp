// Copyright 2026 The qent authors
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

namespace qent {

// All numeric tolerances in one place. The entanglement criteria compare
// statistics against the sharp threshold 1, so every verdict carries its
// margin; `boundary` is the band around a threshold inside which a verdict
// is flagged as a boundary case instead of a detection.
struct Tolerances {
  double hermiticity = 1e-10;      // max entrywise |M - M^dagger|
  double jacobi_off_norm = 1e-13;  // off-diagonal Frobenius norm stop
  int jacobi_max_sweeps = 100;
  double psd_reject = -1e-8;    // eigenvalues below this are not PSD
  double normalization = 1e-10;  // pure-state norm defect
  double unit_vector = 1e-10;    // Bell measurement directions
  double diagonal = 1e-8;        // off-diagonal mass allowed by the
                                 // diagonal-sign witness constructor
  double boundary = 1e-8;        // verdict boundary band
  double tau_clip = 1e-14;       // spin-flip spectrum values below this
                                 // are treated as zero
};

inline constexpr Tolerances kTol{};

}  // namespace qent
