#pragma once

#include <cstddef>
#include <vector>

#include "linoep/errors.hpp"

namespace linoep {

/// Default relative tolerance for rank and orthogonality residual checks.
inline constexpr double kDefaultTol = 1e-10;

/// Fixed-dimension real vector, the element of the inner product space.
/// Entries are validated to be finite at construction and are immutable
/// afterwards.
class DenseVector {
public:
    /// Empty vector (dimension 0). Used as a "not set" sentinel in result
    /// structs; operations require dimension >= 1.
    DenseVector() = default;

    /// Takes ownership of the entries. Throws InvalidVector if any entry is
    /// NaN or infinite.
    explicit DenseVector(std::vector<double> entries);

    static DenseVector zeros(std::size_t dim);

    std::size_t dim() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<double>& entries() const noexcept { return entries_; }

    bool operator==(const DenseVector& other) const = default;

private:
    std::vector<double> entries_;
};

DenseVector operator+(const DenseVector& a, const DenseVector& b);
DenseVector operator-(const DenseVector& a, const DenseVector& b);
DenseVector operator*(double scalar, const DenseVector& v);

/// Ordered list of vectors sharing one dimension. Order is significant:
/// every transform in this library depends on it.
class VectorSet {
public:
    /// Empty set. Most operations reject it with EmptySet.
    VectorSet() = default;

    /// Throws DimensionMismatch if the members disagree on dimension and
    /// InvalidVector if any member has dimension 0.
    explicit VectorSet(std::vector<DenseVector> vectors);

    std::size_t size() const noexcept { return vectors_.size(); }

    /// Common dimension of the members; 0 for the empty set.
    std::size_t dim() const noexcept {
        return vectors_.empty() ? 0 : vectors_.front().dim();
    }

    const DenseVector& operator[](std::size_t i) const { return vectors_[i]; }
    const std::vector<DenseVector>& vectors() const noexcept { return vectors_; }

    auto begin() const noexcept { return vectors_.begin(); }
    auto end() const noexcept { return vectors_.end(); }

    /// Returns the set reordered as {v[order[0]], v[order[1]], ...}.
    /// `order` must be a permutation of 0..size()-1.
    VectorSet permuted(const std::vector<std::size_t>& order) const;

    bool operator==(const VectorSet& other) const = default;

private:
    std::vector<DenseVector> vectors_;
};

/// Symmetric matrix of pairwise inner products. Entries above the diagonal
/// are computed once and mirrored, so G(i,j) == G(j,i) holds exactly.
class GramMatrix {
public:
    GramMatrix() = default;

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const {
        return entries_[i * n_ + j];
    }

private:
    friend GramMatrix gram(const VectorSet& set);
    GramMatrix(std::size_t n, std::vector<double> entries)
        : n_(n), entries_(std::move(entries)) {}

    std::size_t n_ = 0;
    std::vector<double> entries_;
};

/// Euclidean inner product. Throws DimensionMismatch when dimensions differ.
double inner(const DenseVector& a, const DenseVector& b);

/// Energy of a vector: squared Euclidean norm.
double norm_sq(const DenseVector& a);

double norm(const DenseVector& a);

GramMatrix gram(const VectorSet& set);

/// Numerical rank test via a pivoted orthogonal decomposition: a pivot
/// column is accepted while its residual norm exceeds tol times the largest
/// member norm, so the test is invariant under uniform scaling of the set.
/// Throws EmptySet for an empty set and std::invalid_argument for tol <= 0.
bool is_linearly_independent(const VectorSet& set, double tol = kDefaultTol);

/// Entrywise sum of all members. Throws EmptySet for an empty set.
DenseVector sum_vectors(const VectorSet& set);

}  // namespace linoep
