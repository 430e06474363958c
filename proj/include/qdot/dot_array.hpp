// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qdot/fock.hpp"

namespace qdot {

/// Tunneling link with a gauge (Peierls) phase. The phase is oriented: an
/// electron hopping a -> b along the stored orientation acquires e^{+i phase},
/// i.e. the link contributes
///     magnitude * e^{i phase} d_b^dag d_a + h.c.
/// so the flux through an oriented cycle is the signed sum of link phases.
struct TunnelLink {
    int a = 0;
    int b = 0;
    double magnitude = 0.0;
    double phase = 0.0;
};

/// Density-density Coulomb term: strength * n_a * n_b.
struct CoulombPair {
    int a = 0;
    int b = 0;
    double strength = 0.0;
};

/// Declarative dot-array model: site energies, tunneling links with gauge
/// phases, and Coulomb pairs. Natural units (hbar = 1, e = 1); a link phase
/// is the line integral of the vector potential along the link.
struct DotArraySpec {
    int n_dots = 0;
    std::vector<double> dot_energies;
    std::vector<TunnelLink> links;
    std::vector<CoulombPair> coulomb_pairs;

    /// Throws ArgumentError on out-of-range endpoints, duplicate pairs, or
    /// negative magnitudes.
    void validate() const;

    /// Unordered-pair lookup; nullptr if absent.
    const TunnelLink* find_link(int a, int b) const;
};

/// One entry of a link activation: which spec link is on, with an optional
/// magnitude override for this activation.
struct ActiveLink {
    int a = 0;
    int b = 0;
    std::optional<double> magnitude;
};

/// Set of simultaneously active links for one pulse segment.
struct LinkActivation {
    std::vector<ActiveLink> links;

    static LinkActivation none() { return {}; }
    static LinkActivation all(const DotArraySpec& spec);
    static LinkActivation single(int a, int b) { return {{ActiveLink{a, b, std::nullopt}}}; }
};

/// H = sum_i E_i n_i + sum Coulomb U n_a n_b + sum_active (t e^{i theta} d_b^dag d_a + h.c.).
/// Inactive links contribute zero. Hermitian by construction.
OperatorMatrix build_hamiltonian(const DotArraySpec& spec, const FockBasis& basis,
                                 const LinkActivation& active);

/// Gauge-invariant flux through a closed walk (cycle[k] -> cycle[k+1] -> ... -> cycle[0]):
/// signed sum of link phases, + along the stored orientation, - against it,
/// reduced to (-pi, pi]. Requires length >= 3 and every step to be a spec link.
double loop_flux(const DotArraySpec& spec, std::span<const int> cycle);

/// Local gauge transformation: theta_ab <- theta_ab + chi_a - chi_b; energies,
/// magnitudes, and Coulomb pairs unchanged. Leaves every loop flux invariant.
DotArraySpec gauge_transform(const DotArraySpec& spec, std::span<const double> site_phases);

} // namespace qdot
