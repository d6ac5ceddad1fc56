/******************************************************************************
 *
 * vring - a laboratory for concentrated axisymmetric vortex rings
 *
 * This program is free software, distributed under the terms of the
 * Apache License, Version 2.0
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Lagrangian blob discretization of the axisymmetric equations in the
 * shifted frame. Particles carry constant circulation weights and advect
 * under the pairwise H-kernel field with the planar singularity softened
 * by a blob core of radius delta.
 *
 ******************************************************************************/

#ifndef VRING_BLOB_HPP
#define VRING_BLOB_HPP

#include <vector>

#include "vring/types.hpp"

namespace vring {

/// One ring of the initial data: signed intensity a_i, limit center zeta^i,
/// and the patch radius (0 means "use eps").
struct RingSpec {
    double intensity = 0.0;
    Vec2 center = Vec2::Zero();
    double patch_radius = 0.0;
};

/// Immutable particle snapshot. Weights are set at initialization and never
/// change, so per-ring circulation is conserved bitwise by construction.
struct ParticleSystem {
    std::vector<double> x1, x2; // positions in the shifted frame
    std::vector<double> w;      // circulation weights
    std::vector<int> ring;      // ring tag per particle

    int n_rings = 0;
    std::vector<double> intensity;     // a_i
    std::vector<int> ring_size;        // particles per ring
    std::vector<double> density_bound; // realized sup |omega| per ring

    double eps = 0.0;
    double alpha = 0.0;
    double delta = 0.0; // blob core radius
    double r_eps = 0.0; // alpha * |log eps|
    double spacing = 0.0; // initial grid spacing h
    double time = 0.0;

    int size() const { return static_cast<int>(x1.size()); }
};

enum class BlobScheme { Euler, RK4 };

/// Lay an n_side x n_side grid over each patch's bounding square (nodes
/// include the square boundary), keep the nodes strictly inside the patch
/// disk, and share the ring intensity equally among them. The blob core is
/// delta = h^delta_exponent with h the grid spacing; pass a negative
/// exponent to get delta = 0.
ParticleSystem init_particles(const std::vector<RingSpec>& rings, double eps,
                              double alpha, int n_side,
                              double delta_exponent = 0.9);

/// Velocity at an arbitrary point of the half-plane; `exclude` skips one
/// source index. With delta = 0, evaluating at a non-excluded particle
/// position raises SingularityError.
Vec2 velocity_field(const ParticleSystem& ps, const Vec2& x, int exclude = -1);

/// Advance one time step. Weights are carried over untouched. Every stage
/// position must stay in the half-plane r_eps + x2 > 0 (BlowupError names
/// the particle and time otherwise). delta > 0 is required whenever a ring
/// has more than one particle; with delta = 0 each particle sees only the
/// other rings' particles (a point blob has no self-induced velocity).
ParticleSystem step(const ParticleSystem& ps, double dt, BlobScheme scheme);

/// Per-time diagnostic record.
struct DiagnosticsFrame {
    double time = 0.0;
    std::vector<Vec2> centers;       // B^i, intensity-weighted mean positions
    std::vector<double> inertia;     // J_i >= 0
    std::vector<double> tail_mass;   // vorticity mass outside Sigma(B^i|R)
    std::vector<double> circulation; // per-ring weight sums
    std::vector<double> self_energy;   // E_i
    std::vector<double> cross_energy;  // E_ij for i<j, row-major
    double total_energy = 0.0;         // sum E_i + 2 sum_{i<j} E_ij
    double regularized_energy = 0.0;   // all pairs through the delta-softened S
};

/// Compute centers, moments of inertia, tail masses at radius R, per-ring
/// circulations and the stream-kernel energy decomposition. Off-diagonal
/// energy pairs use the exact S; self-pairs (p = q) use S with
/// |x-y|^2 -> |x-y|^2 + delta^2. The regularized_energy column applies that
/// softening to every pair; it is the exact invariant of the blob dynamics
/// and is what time-discretization error should be measured against.
DiagnosticsFrame diagnostics(const ParticleSystem& ps, double tail_radius);

/// The all-pairs delta-regularized interaction energy alone.
double regularized_energy(const ParticleSystem& ps);

/// Stable step suggestion from the realized vorticity maximum: the patch
/// turnover rate sup|omega|/2 is the fastest frequency in the system, so
/// dt = 0.4 / sup|omega| keeps RK4 comfortably inside its stability region.
double auto_dt(const ParticleSystem& ps);

} // namespace vring

#endif
