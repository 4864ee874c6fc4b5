#pragma once

#include <vector>

#include "linoep/vectorspace.hpp"

namespace linoep {

/// Result of the LINOEP transform and its NOEP extension.
///
/// The c-part is produced by linoep_transform. The c_set is linearly
/// independent, generally non-orthogonal, and energy preserving:
/// ||sum c_i||^2 = sum ||c_i||^2. It satisfies nested orthogonality,
/// c_k perpendicular to S_k = c_{k+1} + ... + c_n for every k < n, which is
/// what makes the energy identity telescope.
///
/// The d-part is filled in by noep_extend: d_i = (1+gamma) c_i for i <= n
/// plus one residual vector d_{n+1} = z2. The n+1 d vectors are linearly
/// dependent but still energy preserving, and they reconstruct the input
/// sum: sum d_i = sum y_i.
struct LinoepResult {
    VectorSet c_set;
    std::vector<double> alphas;  // alpha_1 .. alpha_{n-1}

    /// tail_sums[k-1] = S_k = c_{k+1} + ... + c_n, retained so invariant
    /// checks cost O(n*m) instead of O(n^2*m).
    std::vector<DenseVector> tail_sums;

    // Filled by noep_extend.
    std::vector<double> betas;  // beta_i = alpha_1 + ... + alpha_i
    double gamma = 0.0;
    VectorSet d_set;  // n+1 vectors
    DenseVector z2;

    /// Max-entry deviation of sum(d_set) from the caller-supplied input sum,
    /// computed by noep_extend against the caller's ground truth.
    double d_sum_residual = 0.0;

    bool extended = false;
};

/// Backward recursion: c_n = y_n, then for k = n-1 down to 1
///   S_k     = c_{k+1} + ... + c_n
///   alpha_k = <y_k, S_k> / <S_k, S_k>
///   c_k     = y_k - alpha_k * S_k
/// The running tail sum is accumulated incrementally, one vector addition
/// per step. A set with one vector is returned unchanged with no alphas.
///
/// Throws NotLinearlyIndependent when the input fails the rank test at tol,
/// DegenerateTailSum when some ||S_k||^2 <= tol^2 * (largest input norm)^2,
/// and EmptySet for an empty input.
LinoepResult linoep_transform(const VectorSet& input, double tol = kDefaultTol);

/// NOEP extension of a transform result. With beta_i the prefix sums of the
/// alphas, the input sum splits as sum y = p2 + p1 where p2 = sum c_i and
/// p1 = sum_{i<n} beta_i c_{i+1}. Projecting p1 onto z1 = p2 gives
/// gamma = <p1, z1> / <z1, z1> and the orthogonal remainder z2 = p1 - gamma z1,
/// so sum y = (1+gamma) z1 + z2 and the d vectors follow.
///
/// original_sum is the caller's ground truth for sum y; the reconstruction
/// deviation of sum(d) from it is stored in d_sum_residual rather than
/// recomputed from the inputs. Throws DegenerateTailSum when z1 = sum c_i
/// collapses below tol times the largest c norm (impossible for a linearly
/// independent c_set in exact arithmetic).
LinoepResult noep_extend(LinoepResult partial, const DenseVector& original_sum,
                         double tol = kDefaultTol);

struct EnergyReport {
    double sum_energy;        // ||sum v_i||^2
    double component_energy;  // sum ||v_i||^2
    double residual;          // |sum_energy - component_energy|
};

/// Compares the energy of the sum with the summed energies. The residual
/// equals the magnitude of the total cross term.
EnergyReport energy_report(const VectorSet& set);

}  // namespace linoep
