#pragma once

#include <cstdint>
#include <vector>

#include "linoep/linoep.hpp"
#include "linoep/vectorspace.hpp"

namespace linoep {

/// Exhaustive permutation work (nested-structure detection, sweeps) refuses
/// sets larger than this; 8! = 40320 transform runs.
inline constexpr std::size_t kMaxPermutationSize = 8;

/// How a vector set achieves (or fails) cross-term cancellation.
///
/// total_cross_term is 2 * sum_{i<j} <v_i, v_j>, the gap between the energy
/// of the sum and the summed energies. energy_gap is the same quantity
/// computed the direct way, ||sum v||^2 - sum ||v_i||^2, kept as a
/// consistency cross-check.
///
/// The family flags are only meaningful after classify():
///   - pairwise_orthogonal: every off-diagonal Gram entry is zero at tol.
///   - nested_permutations: orderings under which each vector is orthogonal
///     to the sum of the vectors after it. Pairwise orthogonality implies
///     every permutation qualifies.
///   - cancellation: energy preserving without either structure above, i.e.
///     the inner products cancel only in aggregate.
struct CrossTermReport {
    GramMatrix gram;
    double total_cross_term = 0.0;
    double energy_gap = 0.0;
    bool energy_preserving = false;

    bool classified = false;
    bool pairwise_orthogonal = false;
    std::vector<std::vector<std::size_t>> nested_permutations;  // lexicographic
    bool cancellation = false;
};

/// Gram matrix, total cross term and the energy-preservation flag, without
/// family classification. Throws EmptySet for an empty set.
CrossTermReport cross_term(const VectorSet& set, double tol = kDefaultTol);

/// cross_term plus family classification. Nested detection enumerates all
/// permutations; tolerances are relative to the operand norms so the
/// classification is invariant under uniform scaling.
/// Requires 2 <= n <= 8: throws TooManyPermutations above 8 (sampling could
/// silently misreport cancellation as such) and std::invalid_argument below 2.
CrossTermReport classify(const VectorSet& set, double tol = kDefaultTol);

/// Deterministic fixture generator: three vectors in R^3 whose pairwise
/// inner products are all nonzero yet sum to zero, so the set preserves
/// energy by aggregate cancellation alone. The third vector is solved from
/// the first two: c3 = t*w with t = -<c1,c2> / <c1+c2, w> for a random
/// direction w. Draws are retried until the classification margins are
/// comfortable; throws GenerationFailed after 1000 attempts.
VectorSet make_cancellation_example(std::uint64_t seed);

/// Deterministic fixture generator: three vectors in R^3 with the nested
/// structure <c1, c2+c3> = 0 and <c2, c3> = 0 but <c1,c2> != 0 and
/// <c1,c3> != 0 (nested, not pairwise orthogonal). Implemented by running
/// the LINOEP transform on random sets until the non-orthogonality margins
/// hold. Throws GenerationFailed after 1000 attempts.
VectorSet make_nested_example(std::uint64_t seed);

struct SweepEntry {
    std::vector<std::size_t> permutation;
    LinoepResult result;
    double energy_residual = 0.0;  // |‖sum c‖^2 - sum ‖c_i‖^2| for this entry
};

/// One LINOEP + NOEP run per permutation of the input, in lexicographic
/// permutation order.
struct SweepResult {
    std::vector<SweepEntry> entries;
};

/// Runs linoep_transform and noep_extend on every permutation of the input.
/// Throws NotLinearlyIndependent for rank-deficient input and
/// TooManyPermutations for n > 8.
SweepResult permutation_sweep(const VectorSet& input, double tol = kDefaultTol);

}  // namespace linoep
