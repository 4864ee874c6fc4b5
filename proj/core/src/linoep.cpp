#include "linoep/linoep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace linoep {

LinoepResult linoep_transform(const VectorSet& input, double tol) {
    if (input.size() == 0) throw EmptySet("transform of an empty set");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (!is_linearly_independent(input, tol)) {
        throw NotLinearlyIndependent("input set is numerically rank deficient");
    }

    const std::size_t n = input.size();
    const std::size_t m = input.dim();

    LinoepResult result;
    if (n == 1) {
        // Single vector: the recursion has nothing to project against.
        result.c_set = input;
        return result;
    }

    double max_norm = 0.0;
    for (const DenseVector& y : input) max_norm = std::max(max_norm, norm(y));
    const double floor_sq = (tol * max_norm) * (tol * max_norm);

    std::vector<std::vector<double>> c(n);
    std::vector<double> alphas(n - 1, 0.0);
    std::vector<DenseVector> tail_sums(n - 1);

    c[n - 1] = input[n - 1].entries();
    std::vector<double> tail = c[n - 1];

    for (std::size_t k = n - 1; k-- > 0;) {
        tail_sums[k] = DenseVector(tail);

        double tail_nsq = 0.0;
        for (double x : tail) tail_nsq += x * x;
        if (tail_nsq <= floor_sq) {
            throw DegenerateTailSum("tail sum " + std::to_string(k + 1) +
                                    " collapsed; input is numerically dependent");
        }

        double proj = 0.0;
        for (std::size_t j = 0; j < m; ++j) proj += input[k][j] * tail[j];
        const double alpha = proj / tail_nsq;
        alphas[k] = alpha;

        c[k].resize(m);
        for (std::size_t j = 0; j < m; ++j) c[k][j] = input[k][j] - alpha * tail[j];
        for (std::size_t j = 0; j < m; ++j) tail[j] += c[k][j];
    }

    std::vector<DenseVector> out;
    out.reserve(n);
    for (std::vector<double>& v : c) out.emplace_back(std::move(v));
    result.c_set = VectorSet(std::move(out));
    result.alphas = std::move(alphas);
    result.tail_sums = std::move(tail_sums);
    return result;
}

LinoepResult noep_extend(LinoepResult partial, const DenseVector& original_sum,
                         double tol) {
    const std::size_t n = partial.c_set.size();
    if (n == 0) throw EmptySet("extension of an empty result");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (partial.alphas.size() + 1 != n) {
        throw std::invalid_argument("result carries " +
                                    std::to_string(partial.alphas.size()) +
                                    " alphas for " + std::to_string(n) + " vectors");
    }
    const std::size_t m = partial.c_set.dim();
    if (original_sum.dim() != m) {
        throw DimensionMismatch("original_sum dimension " +
                                std::to_string(original_sum.dim()) +
                                " does not match set dimension " + std::to_string(m));
    }

    partial.betas.assign(n - 1, 0.0);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        acc += partial.alphas[i];
        partial.betas[i] = acc;
    }

    std::vector<double> p2(m, 0.0);
    for (const DenseVector& v : partial.c_set) {
        for (std::size_t j = 0; j < m; ++j) p2[j] += v[j];
    }
    std::vector<double> p1(m, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const DenseVector& next = partial.c_set[i + 1];
        for (std::size_t j = 0; j < m; ++j) p1[j] += partial.betas[i] * next[j];
    }

    double max_c_norm = 0.0;
    for (const DenseVector& v : partial.c_set) {
        max_c_norm = std::max(max_c_norm, norm(v));
    }
    double z1_nsq = 0.0;
    for (double x : p2) z1_nsq += x * x;
    if (z1_nsq <= (tol * max_c_norm) * (tol * max_c_norm)) {
        throw DegenerateTailSum("sum of the transformed set collapsed");
    }

    double p1_dot_z1 = 0.0;
    for (std::size_t j = 0; j < m; ++j) p1_dot_z1 += p1[j] * p2[j];
    const double gamma = p1_dot_z1 / z1_nsq;

    std::vector<double> z2(m);
    for (std::size_t j = 0; j < m; ++j) z2[j] = p1[j] - gamma * p2[j];

    std::vector<DenseVector> d;
    d.reserve(n + 1);
    const double scale = 1.0 + gamma;
    for (const DenseVector& v : partial.c_set) d.push_back(scale * v);
    d.emplace_back(z2);

    double max_dev = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        double dj = 0.0;
        for (const DenseVector& v : d) dj += v[j];
        max_dev = std::max(max_dev, std::abs(dj - original_sum[j]));
    }

    partial.gamma = gamma;
    partial.d_set = VectorSet(std::move(d));
    partial.z2 = DenseVector(std::move(z2));
    partial.d_sum_residual = max_dev;
    partial.extended = true;
    return partial;
}

EnergyReport energy_report(const VectorSet& set) {
    if (set.size() == 0) throw EmptySet("energy report of an empty set");
    const double sum_energy = norm_sq(sum_vectors(set));
    double component_energy = 0.0;
    for (const DenseVector& v : set) component_energy += norm_sq(v);
    return EnergyReport{sum_energy, component_energy,
                        std::abs(sum_energy - component_energy)};
}

}  // namespace linoep
