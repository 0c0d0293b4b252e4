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

#ifndef FSSCOMP_SOURCE_HPP
#define FSSCOMP_SOURCE_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace fsscomp {

enum class Pol : std::uint8_t { H = 0, V = 1 };

inline Pol flipped(Pol p) { return p == Pol::H ? Pol::V : Pol::H; }
inline char pol_char(Pol p) { return p == Pol::H ? 'H' : 'V'; }

/// Emitter parameters in wavenumber form. k_V1 = k_H1 + k_S and
/// k_V2 = k_H2 - k_S, so both decay paths share k_0 = k_H1 + k_H2.
struct DotParams {
    double gamma = 0.0;  // decay rate, 1/s
    double k_h1 = 0.0;   // rad/m
    double k_h2 = 0.0;   // rad/m
    double k_s = 0.0;    // fine-structure splitting, rad/m

    double k_v1() const { return k_h1 + k_s; }
    double k_v2() const { return k_h2 - k_s; }
    double k_0() const { return k_h1 + k_h2; }
    double omega_s() const;
    /// c / gamma, the 1/e^2 intensity length of the envelope.
    double coherence_length() const;

    /// Throws InvalidArgument unless gamma > 0, k_H1, k_H2 > 0 and k_S >= 0.
    void validate() const;
    /// Soft diagnostics (currently: k_S / k_H1 > 1e-3).
    std::vector<std::string> warnings() const;

    /// photon energies and FSS in eV, gamma in 1/s.
    static DotParams from_energies(double photon1_ev, double photon2_ev, double gamma,
                                   double fss_ev);
    /// 1.3980 eV / 1.4000 eV photons, gamma = 1e9/s, S = 1 ueV.
    static DotParams defaults();
};

/// Support {0 > s1 x1 + t1 > s2 x2 + t2}. s1, s2 > 0.
struct Wedge {
    double s1 = 1.0;
    double t1 = 0.0;
    double s2 = 1.0;
    double t2 = 0.0;

    bool contains(double x1, double x2) const {
        const double u1 = s1 * x1 + t1;
        return u1 < 0.0 && u1 > s2 * x2 + t2;
    }
};

/// One polarization term of the two-photon position amplitude:
///   amp * exp(i phase0) * exp((env1 + i kappa1) x1 + (env2 + i kappa2) x2)
/// on the wedge, zero elsewhere.
struct TwoPhotonBranch {
    Pol pol1 = Pol::H;
    Pol pol2 = Pol::H;
    std::complex<double> amp{0.0, 0.0};
    double env1 = 0.0;
    double env2 = 0.0;
    double phase0 = 0.0;
    double kappa1 = 0.0;
    double kappa2 = 0.0;
    Wedge wedge;

    std::complex<double> value(double x1, double x2) const;
    /// Throws InvalidArgument if the branch is not square integrable.
    void check_integrable() const;
};

struct TwoPhotonState {
    std::vector<TwoPhotonBranch> branches;
};

/// Frequency-domain amplitude of one decay path (H or V) of the cascade.
std::complex<double> spectral_amplitude(double omega1, double omega2, Pol path,
                                        const DotParams &dot);

/// The emitted |H1H2> + |V1V2> state in position space, norm 1.
TwoPhotonState initial_state(const DotParams &dot);

/// Same as initial_state but with photon 1's polarization flipped before the
/// modulator: |V1H2> carries (k_H1, k_H2), |H1V2> carries (k_V1, k_V2).
TwoPhotonState initial_state_flipped(const DotParams &dot);

/// Swaps H <-> V on the given photon (1 or 2), leaving amplitudes untouched.
TwoPhotonState flip_photon(const TwoPhotonState &state, int photon);

}  // namespace fsscomp

#endif
