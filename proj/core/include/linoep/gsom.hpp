#pragma once

#include <vector>

#include "linoep/vectorspace.hpp"

namespace linoep {

/// Output of classical Gram-Schmidt orthogonalization, with the coefficient
/// bookkeeping needed for the sum and energy identities.
///
/// The input set y relates to the orthogonal set s through a unit lower
/// triangular system: y_k = s_k + sum_{i<k} coeff_matrix[k][i] * s_i.
/// column_sums[i] is the sum of column i of that matrix; with it,
///   sum_k y_k = sum_i column_sums[i] * s_i
/// and, since the s_i are pairwise orthogonal,
///   ||sum_k y_k||^2 = sum_i column_sums[i]^2 * ||s_i||^2.
struct GsomResult {
    VectorSet orthogonal_set;                       // s_1 .. s_n
    std::vector<std::vector<double>> coeff_matrix;  // unit lower triangular
    std::vector<double> column_sums;
};

/// Classical Gram-Schmidt: s_1 = y_1, s_k = y_k - sum_{i<k} c_ki s_i with
/// c_ki = <y_k, s_i> / <s_i, s_i>. The classical (not modified) update is
/// used so the coefficients keep their defining inner-product meaning;
/// inputs with condition number above 1e6 are outside the accuracy contract.
///
/// Throws NotLinearlyIndependent when a residual s_k has norm at or below
/// tol times the largest input norm, and EmptySet for an empty input.
GsomResult gsom_transform(const VectorSet& input, double tol = kDefaultTol);

struct GsomEnergyReport {
    double lhs;       // ||sum y||^2, recomputed from the reconstruction
    double rhs;       // sum_i column_sums[i]^2 * ||s_i||^2
    double residual;  // |lhs - rhs|
};

/// Evaluates both sides of the Parseval-style identity on a transform result.
GsomEnergyReport gsom_energy_identity(const GsomResult& result);

}  // namespace linoep
