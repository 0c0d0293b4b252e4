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

#include "fsscomp/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fsscomp {
namespace {

using cplx = std::complex<double>;

// {x1 < p, x2 < slope * x1 + offset}
struct HalfStrip {
    double p;
    double slope;
    double offset;
};

HalfStrip to_half_strip(const Wedge &w) {
    return HalfStrip{-w.t1 / w.s1, w.s1 / w.s2, (w.t1 - w.t2) / w.s2};
}

// Integral of exp(a1 x1 + a2 x2) over lo < x1 < hi, x2 < slope x1 + offset.
// lo may be -inf. Re(a2) > 0 and Re(a1 + a2 slope) > 0.
cplx piece(cplx a1, cplx a2, double lo, double hi, double slope, double offset) {
    if (!(hi > lo)) {
        return {0.0, 0.0};
    }
    const cplx beta = a1 + a2 * slope;
    const cplx upper = std::exp(a2 * offset + beta * hi);
    const cplx lower = std::isinf(lo) ? cplx{0.0, 0.0} : std::exp(a2 * offset + beta * lo);
    return (upper - lower) / (a2 * beta);
}

}  // namespace

cplx branch_overlap(const TwoPhotonBranch &a, const TwoPhotonBranch &b) {
    a.check_integrable();
    b.check_integrable();
    const cplx a1{a.env1 + b.env1, a.kappa1 - b.kappa1};
    const cplx a2{a.env2 + b.env2, a.kappa2 - b.kappa2};
    const cplx prefactor = a.amp * std::conj(b.amp) * std::polar(1.0, a.phase0 - b.phase0);

    const HalfStrip ha = to_half_strip(a.wedge);
    const HalfStrip hb = to_half_strip(b.wedge);
    const double p = std::min(ha.p, hb.p);
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();

    cplx total{0.0, 0.0};
    if (ha.slope == hb.slope) {
        total = piece(a1, a2, kNegInf, p, ha.slope, std::min(ha.offset, hb.offset));
    } else {
        // Below the crossing the steeper line is the lower bound.
        const HalfStrip &steep = ha.slope > hb.slope ? ha : hb;
        const HalfStrip &shallow = ha.slope > hb.slope ? hb : ha;
        const double cross = (shallow.offset - steep.offset) / (steep.slope - shallow.slope);
        total = piece(a1, a2, kNegInf, std::min(p, cross), steep.slope, steep.offset);
        total += piece(a1, a2, cross, p, shallow.slope, shallow.offset);
    }
    return prefactor * total;
}

double state_norm(const TwoPhotonState &state) {
    double norm = 0.0;
    for (const auto &a : state.branches) {
        for (const auto &b : state.branches) {
            if (a.pol1 == b.pol1 && a.pol2 == b.pol2) {
                norm += branch_overlap(a, b).real();
            }
        }
    }
    return norm;
}

}  // namespace fsscomp
