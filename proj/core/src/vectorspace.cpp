#include "linoep/vectorspace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace linoep {

namespace {

void check_finite(const std::vector<double>& entries) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!std::isfinite(entries[i])) {
            throw InvalidVector("non-finite entry at index " + std::to_string(i));
        }
    }
}

}  // namespace

DenseVector::DenseVector(std::vector<double> entries)
    : entries_(std::move(entries)) {
    check_finite(entries_);
}

DenseVector DenseVector::zeros(std::size_t dim) {
    return DenseVector(std::vector<double>(dim, 0.0));
}

DenseVector operator+(const DenseVector& a, const DenseVector& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("dimension mismatch: " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
    }
    std::vector<double> out(a.dim());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return DenseVector(std::move(out));
}

DenseVector operator-(const DenseVector& a, const DenseVector& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("dimension mismatch: " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
    }
    std::vector<double> out(a.dim());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
    return DenseVector(std::move(out));
}

DenseVector operator*(double scalar, const DenseVector& v) {
    std::vector<double> out(v.dim());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = scalar * v[i];
    return DenseVector(std::move(out));
}

VectorSet::VectorSet(std::vector<DenseVector> vectors)
    : vectors_(std::move(vectors)) {
    if (vectors_.empty()) return;
    const std::size_t m = vectors_.front().dim();
    if (m == 0) throw InvalidVector("set member has dimension 0");
    for (std::size_t i = 1; i < vectors_.size(); ++i) {
        if (vectors_[i].dim() != m) {
            throw DimensionMismatch("set mixes dimensions " + std::to_string(m) +
                                    " and " + std::to_string(vectors_[i].dim()) +
                                    " (vector " + std::to_string(i) + ")");
        }
    }
}

VectorSet VectorSet::permuted(const std::vector<std::size_t>& order) const {
    if (order.size() != vectors_.size()) {
        throw std::invalid_argument("permutation length does not match set size");
    }
    std::vector<char> seen(vectors_.size(), 0);
    std::vector<DenseVector> out;
    out.reserve(vectors_.size());
    for (std::size_t idx : order) {
        if (idx >= vectors_.size() || seen[idx]) {
            throw std::invalid_argument("not a permutation of 0.." +
                                        std::to_string(vectors_.size() - 1));
        }
        seen[idx] = 1;
        out.push_back(vectors_[idx]);
    }
    return VectorSet(std::move(out));
}

double inner(const DenseVector& a, const DenseVector& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("dimension mismatch: " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
    return acc;
}

double norm_sq(const DenseVector& a) { return inner(a, a); }

double norm(const DenseVector& a) { return std::sqrt(norm_sq(a)); }

GramMatrix gram(const VectorSet& set) {
    const std::size_t n = set.size();
    std::vector<double> entries(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double v = inner(set[i], set[j]);
            entries[i * n + j] = v;
            entries[j * n + i] = v;
        }
    }
    return GramMatrix(n, std::move(entries));
}

bool is_linearly_independent(const VectorSet& set, double tol) {
    if (set.size() == 0) throw EmptySet("rank test on an empty set");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

    const std::size_t n = set.size();
    const std::size_t m = set.dim();
    if (m < n) return false;  // rank <= m < n

    std::vector<std::vector<double>> work(n);
    double max_norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        work[i] = set[i].entries();
        double nsq = 0.0;
        for (double x : work[i]) nsq += x * x;
        max_norm = std::max(max_norm, std::sqrt(nsq));
    }
    const double threshold = tol * max_norm;

    auto residual_norm = [m](const std::vector<double>& v) {
        double nsq = 0.0;
        for (std::size_t j = 0; j < m; ++j) nsq += v[j] * v[j];
        return std::sqrt(nsq);
    };

    // Greedy pivoting: accept the remaining column with the largest residual
    // norm, then orthogonalize the rest against it.
    std::vector<char> used(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        double best_norm = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i]) continue;
            const double r = residual_norm(work[i]);
            if (r > best_norm) {
                best_norm = r;
                best = i;
            }
        }
        if (best_norm <= threshold) return false;
        used[best] = 1;
        std::vector<double>& pivot = work[best];
        for (std::size_t j = 0; j < m; ++j) pivot[j] /= best_norm;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i]) continue;
            double proj = 0.0;
            for (std::size_t j = 0; j < m; ++j) proj += work[i][j] * pivot[j];
            for (std::size_t j = 0; j < m; ++j) work[i][j] -= proj * pivot[j];
        }
    }
    return true;
}

DenseVector sum_vectors(const VectorSet& set) {
    if (set.size() == 0) throw EmptySet("sum of an empty set");
    std::vector<double> acc(set.dim(), 0.0);
    for (const DenseVector& v : set) {
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += v[j];
    }
    return DenseVector(std::move(acc));
}

}  // namespace linoep
