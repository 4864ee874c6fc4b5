#include "linoep/gsom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace linoep {

GsomResult gsom_transform(const VectorSet& input, double tol) {
    if (input.size() == 0) throw EmptySet("orthogonalization of an empty set");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

    const std::size_t n = input.size();
    const std::size_t m = input.dim();

    double max_norm = 0.0;
    for (const DenseVector& y : input) max_norm = std::max(max_norm, norm(y));
    const double threshold = tol * max_norm;

    std::vector<std::vector<double>> s;
    s.reserve(n);
    std::vector<double> s_norm_sq;
    s_norm_sq.reserve(n);
    std::vector<std::vector<double>> coeff(n, std::vector<double>(n, 0.0));

    for (std::size_t k = 0; k < n; ++k) {
        std::vector<double> residual = input[k].entries();
        for (std::size_t i = 0; i < k; ++i) {
            double proj = 0.0;
            for (std::size_t j = 0; j < m; ++j) proj += input[k][j] * s[i][j];
            const double c = proj / s_norm_sq[i];
            coeff[k][i] = c;
            for (std::size_t j = 0; j < m; ++j) residual[j] -= c * s[i][j];
        }
        coeff[k][k] = 1.0;

        double nsq = 0.0;
        for (double x : residual) nsq += x * x;
        if (std::sqrt(nsq) <= threshold) {
            throw NotLinearlyIndependent(
                "vector " + std::to_string(k + 1) +
                " is numerically dependent on its predecessors");
        }
        s.push_back(std::move(residual));
        s_norm_sq.push_back(nsq);
    }

    std::vector<double> column_sums(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t k = i; k < n; ++k) acc += coeff[k][i];
        column_sums[i] = acc;
    }

    std::vector<DenseVector> out;
    out.reserve(n);
    for (std::vector<double>& v : s) out.emplace_back(std::move(v));
    return GsomResult{VectorSet(std::move(out)), std::move(coeff),
                      std::move(column_sums)};
}

GsomEnergyReport gsom_energy_identity(const GsomResult& result) {
    const VectorSet& s = result.orthogonal_set;
    const std::size_t n = s.size();
    const std::size_t m = s.dim();

    // lhs rebuilds each input from the triangular representation and sums.
    std::vector<double> total(m, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i <= k; ++i) {
            const double c = result.coeff_matrix[k][i];
            for (std::size_t j = 0; j < m; ++j) total[j] += c * s[i][j];
        }
    }
    double lhs = 0.0;
    for (double x : total) lhs += x * x;

    double rhs = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        rhs += result.column_sums[i] * result.column_sums[i] * norm_sq(s[i]);
    }
    return GsomEnergyReport{lhs, rhs, std::abs(lhs - rhs)};
}

}  // namespace linoep
