// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "qdot/dot_array.hpp"

#include <cmath>
#include <complex>
#include <set>
#include <string>
#include <utility>

#include "qdot/angle.hpp"
#include "qdot/errors.hpp"

namespace qdot {

namespace {

std::pair<int, int> unordered(int a, int b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

std::string pair_str(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

} // namespace

void DotArraySpec::validate() const {
    if (n_dots < 1)
        throw ArgumentError("DotArraySpec: n_dots must be positive");
    if (static_cast<int>(dot_energies.size()) != n_dots)
        throw ArgumentError("DotArraySpec: expected " + std::to_string(n_dots) +
                            " dot energies, got " + std::to_string(dot_energies.size()));

    std::set<std::pair<int, int>> seen_links;
    for (const auto& link : links) {
        if (link.a < 0 || link.a >= n_dots || link.b < 0 || link.b >= n_dots)
            throw ArgumentError("DotArraySpec: link endpoint out of range " + pair_str(link.a, link.b));
        if (link.a == link.b)
            throw ArgumentError("DotArraySpec: link endpoints must differ " + pair_str(link.a, link.b));
        if (link.magnitude < 0.0)
            throw ArgumentError("DotArraySpec: negative link magnitude on " + pair_str(link.a, link.b));
        if (!seen_links.insert(unordered(link.a, link.b)).second)
            throw ArgumentError("DotArraySpec: duplicate link " + pair_str(link.a, link.b));
    }

    std::set<std::pair<int, int>> seen_pairs;
    for (const auto& cp : coulomb_pairs) {
        if (cp.a < 0 || cp.a >= n_dots || cp.b < 0 || cp.b >= n_dots)
            throw ArgumentError("DotArraySpec: Coulomb endpoint out of range " + pair_str(cp.a, cp.b));
        if (cp.a == cp.b)
            throw ArgumentError("DotArraySpec: Coulomb endpoints must differ " + pair_str(cp.a, cp.b));
        if (cp.strength < 0.0)
            throw ArgumentError("DotArraySpec: negative Coulomb strength on " + pair_str(cp.a, cp.b));
        if (!seen_pairs.insert(unordered(cp.a, cp.b)).second)
            throw ArgumentError("DotArraySpec: duplicate Coulomb pair " + pair_str(cp.a, cp.b));
    }
}

const TunnelLink* DotArraySpec::find_link(int a, int b) const {
    for (const auto& link : links)
        if (unordered(link.a, link.b) == unordered(a, b)) return &link;
    return nullptr;
}

LinkActivation LinkActivation::all(const DotArraySpec& spec) {
    LinkActivation act;
    act.links.reserve(spec.links.size());
    for (const auto& link : spec.links)
        act.links.push_back(ActiveLink{link.a, link.b, std::nullopt});
    return act;
}

OperatorMatrix build_hamiltonian(const DotArraySpec& spec, const FockBasis& basis,
                                 const LinkActivation& active) {
    spec.validate();
    if (basis.n_dots() != spec.n_dots)
        throw ArgumentError("build_hamiltonian: basis has " + std::to_string(basis.n_dots()) +
                            " dots, spec has " + std::to_string(spec.n_dots));

    const int dim = basis.size();
    OperatorMatrix h = OperatorMatrix::Zero(dim, dim);

    // Diagonal part: site energies and Coulomb pairs.
    for (int col = 0; col < dim; ++col) {
        const FockState s = basis.state(col);
        double e = 0.0;
        for (int k = 0; k < spec.n_dots; ++k)
            if (occupied(s, k)) e += spec.dot_energies[static_cast<std::size_t>(k)];
        for (const auto& cp : spec.coulomb_pairs)
            if (occupied(s, cp.a) && occupied(s, cp.b)) e += cp.strength;
        h(col, col) = e;
    }

    // Active tunneling links. Hop a -> b along the stored orientation carries
    // e^{+i theta}: t e^{i theta} d_b^dag d_a + h.c.
    for (const auto& al : active.links) {
        const TunnelLink* link = spec.find_link(al.a, al.b);
        if (link == nullptr)
            throw ArgumentError("build_hamiltonian: activation references missing link " +
                                pair_str(al.a, al.b));
        const double t = al.magnitude.value_or(link->magnitude);
        const std::complex<double> amp = t * std::exp(std::complex<double>(0.0, link->phase));
        const OperatorMatrix forward = hopping_matrix(basis, link->b, link->a);
        h += amp * forward;
        h += std::conj(amp) * forward.adjoint();
    }
    return h;
}

double loop_flux(const DotArraySpec& spec, std::span<const int> cycle) {
    spec.validate();
    if (cycle.size() < 3)
        throw ArgumentError("loop_flux: cycle must visit at least 3 dots");

    double flux = 0.0;
    const std::size_t n = cycle.size();
    for (std::size_t k = 0; k < n; ++k) {
        const int u = cycle[k];
        const int v = cycle[(k + 1) % n];
        const TunnelLink* link = spec.find_link(u, v);
        if (link == nullptr)
            throw ArgumentError("loop_flux: cycle step " + pair_str(u, v) + " is not a spec link");
        flux += (link->a == u) ? link->phase : -link->phase;
    }
    return wrap_pi(flux);
}

DotArraySpec gauge_transform(const DotArraySpec& spec, std::span<const double> site_phases) {
    spec.validate();
    if (static_cast<int>(site_phases.size()) != spec.n_dots)
        throw ArgumentError("gauge_transform: expected " + std::to_string(spec.n_dots) +
                            " site phases, got " + std::to_string(site_phases.size()));

    DotArraySpec out = spec;
    for (auto& link : out.links)
        link.phase += site_phases[static_cast<std::size_t>(link.a)] -
                      site_phases[static_cast<std::size_t>(link.b)];
    return out;
}

} // namespace qdot
