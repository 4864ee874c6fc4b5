#include "linoep/crossterm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

namespace linoep {

namespace {

constexpr int kGeneratorRetries = 1000;

// Generators retry until every classification margin clears this bound, so
// the emitted fixtures classify the same way at any tol at or below it.
constexpr double kGeneratorMargin = 1e-6;

std::vector<double> column_norms(const GramMatrix& g) {
    std::vector<double> norms(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) norms[i] = std::sqrt(g(i, i));
    return norms;
}

// Nested premise under one ordering: each vector orthogonal (at tol,
// relative) to the sum of the vectors after it.
bool is_nested_order(const VectorSet& set, const std::vector<std::size_t>& order,
                     const std::vector<double>& norms, double tol) {
    const std::size_t n = set.size();
    const std::size_t m = set.dim();
    std::vector<double> tail(m, 0.0);
    // Walk backward so each tail is one vector addition.
    for (std::size_t pos = n; pos-- > 1;) {
        const DenseVector& v = set[order[pos]];
        for (std::size_t j = 0; j < m; ++j) tail[j] += v[j];
        const DenseVector& head = set[order[pos - 1]];
        double dot = 0.0;
        double tail_nsq = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            dot += head[j] * tail[j];
            tail_nsq += tail[j] * tail[j];
        }
        if (std::abs(dot) > tol * norms[order[pos - 1]] * std::sqrt(tail_nsq)) {
            return false;
        }
    }
    return true;
}

DenseVector random_vector(std::mt19937_64& rng, std::size_t m) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> e(m);
    for (double& x : e) x = u(rng);
    return DenseVector(std::move(e));
}

}  // namespace

CrossTermReport cross_term(const VectorSet& set, double tol) {
    if (set.size() == 0) throw EmptySet("cross term of an empty set");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

    CrossTermReport report;
    report.gram = gram(set);
    const std::size_t n = set.size();

    double off_diag = 0.0;
    double component_energy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        component_energy += report.gram(i, i);
        for (std::size_t j = i + 1; j < n; ++j) off_diag += report.gram(i, j);
    }
    report.total_cross_term = 2.0 * off_diag;
    report.energy_gap = norm_sq(sum_vectors(set)) - component_energy;
    report.energy_preserving =
        std::abs(report.total_cross_term) <= tol * component_energy;
    return report;
}

CrossTermReport classify(const VectorSet& set, double tol) {
    const std::size_t n = set.size();
    if (n == 0) throw EmptySet("classification of an empty set");
    if (n == 1) throw std::invalid_argument("classification needs at least 2 vectors");
    if (n > kMaxPermutationSize) {
        throw TooManyPermutations("exhaustive nested detection limited to " +
                                  std::to_string(kMaxPermutationSize) + " vectors");
    }

    CrossTermReport report = cross_term(set, tol);
    const std::vector<double> norms = column_norms(report.gram);

    report.pairwise_orthogonal = true;
    for (std::size_t i = 0; i < n && report.pairwise_orthogonal; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(report.gram(i, j)) > tol * norms[i] * norms[j]) {
                report.pairwise_orthogonal = false;
                break;
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
        if (is_nested_order(set, order, norms, tol)) {
            report.nested_permutations.push_back(order);
        }
    } while (std::next_permutation(order.begin(), order.end()));

    report.cancellation = report.energy_preserving &&
                          !report.pairwise_orthogonal &&
                          report.nested_permutations.empty();
    report.classified = true;
    return report;
}

VectorSet make_cancellation_example(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kGeneratorRetries; ++attempt) {
        const DenseVector c1 = random_vector(rng, 3);
        const DenseVector c2 = random_vector(rng, 3);
        const double g12 = inner(c1, c2);
        if (std::abs(g12) < 0.1) continue;

        const DenseVector pair_sum = c1 + c2;
        const DenseVector w = random_vector(rng, 3);
        const double denom = inner(pair_sum, w);
        if (std::abs(denom) < 0.1 * norm(pair_sum) * norm(w)) continue;

        // <c1,c3> + <c2,c3> = -<c1,c2>, so the three products cancel.
        const double t = -g12 / denom;
        const DenseVector c3 = t * w;
        const double c3_norm = norm(c3);
        if (c3_norm < 1e-3 || c3_norm > 1e3) continue;

        VectorSet candidate(std::vector<DenseVector>{c1, c2, c3});
        const CrossTermReport report = classify(candidate, kGeneratorMargin);
        if (report.pairwise_orthogonal || !report.nested_permutations.empty()) {
            continue;
        }
        bool products_clear = true;
        const std::vector<double> norms = column_norms(report.gram);
        for (std::size_t i = 0; i < 3 && products_clear; ++i) {
            for (std::size_t j = i + 1; j < 3; ++j) {
                if (std::abs(report.gram(i, j)) <=
                    kGeneratorMargin * norms[i] * norms[j]) {
                    products_clear = false;
                    break;
                }
            }
        }
        if (!products_clear) continue;
        if (std::abs(report.total_cross_term) > 1e-12) continue;
        return candidate;
    }
    throw GenerationFailed("no cancellation example after " +
                           std::to_string(kGeneratorRetries) + " draws");
}

VectorSet make_nested_example(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::vector<std::size_t> identity{0, 1, 2};
    const std::vector<std::size_t> last_two_swapped{0, 2, 1};
    for (int attempt = 0; attempt < kGeneratorRetries; ++attempt) {
        std::vector<DenseVector> draw;
        draw.reserve(3);
        for (int i = 0; i < 3; ++i) draw.push_back(random_vector(rng, 3));
        VectorSet input(std::move(draw));
        if (!is_linearly_independent(input)) continue;

        VectorSet candidate = linoep_transform(input).c_set;
        const CrossTermReport report = classify(candidate, kGeneratorMargin);
        if (report.pairwise_orthogonal) continue;
        // The transform nests the identity order and, because the last two
        // vectors are mutually orthogonal, the order with those two swapped.
        // Reject draws with any further accidental structure.
        if (report.nested_permutations !=
            std::vector<std::vector<std::size_t>>{identity, last_two_swapped}) {
            continue;
        }
        const std::vector<double> norms = column_norms(report.gram);
        if (std::abs(report.gram(0, 1)) <= kGeneratorMargin * norms[0] * norms[1]) {
            continue;
        }
        if (std::abs(report.gram(0, 2)) <= kGeneratorMargin * norms[0] * norms[2]) {
            continue;
        }
        return candidate;
    }
    throw GenerationFailed("no nested example after " +
                           std::to_string(kGeneratorRetries) + " draws");
}

SweepResult permutation_sweep(const VectorSet& input, double tol) {
    const std::size_t n = input.size();
    if (n == 0) throw EmptySet("sweep of an empty set");
    if (n > kMaxPermutationSize) {
        throw TooManyPermutations("sweep limited to " +
                                  std::to_string(kMaxPermutationSize) +
                                  " vectors (" + std::to_string(n) + " given)");
    }
    if (!is_linearly_independent(input, tol)) {
        throw NotLinearlyIndependent("input set is numerically rank deficient");
    }

    SweepResult sweep;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
        const VectorSet permuted = input.permuted(order);
        LinoepResult result = linoep_transform(permuted, tol);
        result = noep_extend(std::move(result), sum_vectors(permuted), tol);
        const double residual = energy_report(result.c_set).residual;
        sweep.entries.push_back(SweepEntry{order, std::move(result), residual});
    } while (std::next_permutation(order.begin(), order.end()));
    return sweep;
}

}  // namespace linoep
