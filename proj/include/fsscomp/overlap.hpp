// Copyright 2026 The fsscomp Authors
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

#ifndef FSSCOMP_OVERLAP_HPP
#define FSSCOMP_OVERLAP_HPP

#include <complex>

#include "fsscomp/source.hpp"

namespace fsscomp {

/// Closed-form  integral of a(x1,x2) * conj(b(x1,x2))  over the intersection of
/// both wedges. Branch polarizations are ignored. Requires integrable branches.
std::complex<double> branch_overlap(const TwoPhotonBranch &a, const TwoPhotonBranch &b);

/// Sum of overlaps over branch pairs that share a polarization pair.
double state_norm(const TwoPhotonState &state);

}  // namespace fsscomp

#endif
