#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <linoep/gsom.hpp>

#include "support/makers.hpp"
#include "support/testsets.hpp"

using namespace linoep;

namespace {

double max_abs_diff(const DenseVector& a, const DenseVector& b) {
    double out = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) {
        out = std::max(out, std::abs(a[j] - b[j]));
    }
    return out;
}

double max_orthogonality(const VectorSet& s) {
    double out = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            out = std::max(out, std::abs(inner(s[i], s[j])) / (norm(s[i]) * norm(s[j])));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("orthogonal input is a fixed point") {
    const GsomResult result = gsom_transform(vset({{1, 0}, {0, 1}}));
    CHECK(result.orthogonal_set[0] == vec({1, 0}));
    CHECK(result.orthogonal_set[1] == vec({0, 1}));
    CHECK(result.coeff_matrix[1][0] == 0.0);
}

TEST_CASE("worked pair") {
    const GsomResult result = gsom_transform(vset({{1, 1, 0}, {1, 0, 1}}));
    CHECK(result.orthogonal_set[0] == vec({1, 1, 0}));
    CHECK(result.coeff_matrix[1][0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(max_abs_diff(result.orthogonal_set[1], vec({0.5, -0.5, 1})) <= 1e-15);
    CHECK(result.column_sums[0] == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(result.column_sums[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("dependent input is an error") {
    CHECK_THROWS_AS(gsom_transform(vset({{1, 1}, {2, 2}})), NotLinearlyIndependent);
    CHECK_THROWS_AS(gsom_transform(vset({{0, 0}})), NotLinearlyIndependent);
    CHECK_THROWS_AS(gsom_transform(VectorSet()), EmptySet);
}

TEST_CASE("energy identity on worked examples") {
    SUBCASE("pair") {
        const GsomResult result = gsom_transform(vset({{1, 1, 0}, {1, 0, 1}}));
        const GsomEnergyReport report = gsom_energy_identity(result);
        CHECK(report.lhs == doctest::Approx(6.0).epsilon(1e-14));
        CHECK(report.rhs == doctest::Approx(6.0).epsilon(1e-14));
        CHECK(report.residual <= 1e-14);
    }
    SUBCASE("orthonormal basis") {
        const GsomResult result =
            gsom_transform(vset({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
        const GsomEnergyReport report = gsom_energy_identity(result);
        CHECK(report.lhs == 3.0);
        CHECK(report.rhs == 3.0);
    }
    SUBCASE("random 4-set in R^6") {
        std::mt19937_64 rng(42);
        const VectorSet input = testsets::random_li_set(rng, 4, 6);
        const GsomEnergyReport report =
            gsom_energy_identity(gsom_transform(input));
        CHECK(report.residual <= 1e-9 * report.lhs);
    }
}

TEST_CASE("coefficient matrix is unit lower triangular") {
    std::mt19937_64 rng(5);
    const VectorSet input = testsets::random_li_set(rng, 5, 8);
    const GsomResult result = gsom_transform(input);
    for (std::size_t k = 0; k < 5; ++k) {
        CHECK(result.coeff_matrix[k][k] == 1.0);
        for (std::size_t i = k + 1; i < 5; ++i) {
            CHECK(result.coeff_matrix[k][i] == 0.0);
        }
    }
    // column sums match a direct recomputation
    for (std::size_t i = 0; i < 5; ++i) {
        double acc = 0.0;
        for (std::size_t k = i; k < 5; ++k) acc += result.coeff_matrix[k][i];
        CHECK(result.column_sums[i] == acc);
    }
}

TEST_CASE("property: transform invariants on random sets") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 6;
        const std::size_t m = n + trial % 5;
        const VectorSet input = testsets::random_li_set(rng, n, m);
        const GsomResult result = gsom_transform(input);

        CHECK(max_orthogonality(result.orthogonal_set) <= 1e-9);

        // reconstruction per vector: y_k = sum_{i<=k} coeff[k][i] s_i
        double max_input_norm = 0.0;
        for (const DenseVector& y : input) {
            max_input_norm = std::max(max_input_norm, norm(y));
        }
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<double> rebuilt(m, 0.0);
            for (std::size_t i = 0; i <= k; ++i) {
                for (std::size_t j = 0; j < m; ++j) {
                    rebuilt[j] += result.coeff_matrix[k][i] * result.orthogonal_set[i][j];
                }
            }
            CHECK(max_abs_diff(DenseVector(rebuilt), input[k]) <=
                  1e-10 * max_input_norm);
        }

        // sum identity: sum y = sum column_sums[i] * s_i
        const DenseVector input_sum = sum_vectors(input);
        std::vector<double> weighted(m, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                weighted[j] += result.column_sums[i] * result.orthogonal_set[i][j];
            }
        }
        CHECK(max_abs_diff(DenseVector(weighted), input_sum) <=
              1e-9 * norm(input_sum));

        const GsomEnergyReport energy = gsom_energy_identity(result);
        CHECK(energy.residual <= 1e-9 * energy.lhs);
    }
}

TEST_CASE("permutation multiplicity: distinct orthogonal sets per ordering") {
    std::mt19937_64 rng(77);
    for (std::size_t n : {2u, 3u, 4u}) {
        const VectorSet input = testsets::random_li_set(rng, n, n + 2);
        std::vector<VectorSet> outputs;
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        do {
            outputs.push_back(gsom_transform(input.permuted(order)).orthogonal_set);
        } while (std::next_permutation(order.begin(), order.end()));

        for (std::size_t a = 0; a < outputs.size(); ++a) {
            for (std::size_t b = a + 1; b < outputs.size(); ++b) {
                double diff = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    diff = std::max(diff, max_abs_diff(outputs[a][i], outputs[b][i]));
                }
                CHECK(diff > 1e-9);
            }
        }
    }
}
