// fuzzy.hpp -- max-min algebra over [0,1]-valued matrices and vectors

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "posmc/possibility.hpp"

namespace posmc {

/// Square matrix of possibility degrees with named rows/columns.
/// Immutable after construction; the label order is the index order.
class FuzzyMatrix {
public:
    FuzzyMatrix(std::vector<std::string> labels, std::vector<Possibility> entries);

    static FuzzyMatrix zeros(std::vector<std::string> labels);
    static FuzzyMatrix identity(std::vector<std::string> labels);

    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    Possibility operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim() + col];
    }
    const std::vector<Possibility>& entries() const noexcept { return entries_; }

    bool operator==(const FuzzyMatrix&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<Possibility> entries_;  // row-major, dim x dim
};

/// Vector of possibility degrees with named entries.
class FuzzyVector {
public:
    FuzzyVector(std::vector<std::string> labels, std::vector<Possibility> entries);

    static FuzzyVector zeros(std::vector<std::string> labels);
    static FuzzyVector ones(std::vector<std::string> labels);

    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    Possibility operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Possibility>& entries() const noexcept { return entries_; }

    bool operator==(const FuzzyVector&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<Possibility> entries_;
};

// Entrywise joins and entrywise order.
FuzzyMatrix join(const FuzzyMatrix& a, const FuzzyMatrix& b);
FuzzyVector join(const FuzzyVector& a, const FuzzyVector& b);
bool leq(const FuzzyMatrix& a, const FuzzyMatrix& b);
bool leq(const FuzzyVector& a, const FuzzyVector& b);

/// Max-min composition: result(i,j) = max_k min(a(i,k), b(k,j)).
/// Operands must have identical dimension and labels.
FuzzyMatrix compose(const FuzzyMatrix& a, const FuzzyMatrix& b);

/// Max-min action on a vector: result(i) = max_k min(a(i,k), x(k)).
FuzzyVector apply(const FuzzyMatrix& a, const FuzzyVector& x);

/// Join of all positive powers of p: the least transitive matrix above p.
/// Powers beyond dim() add nothing, so the join is computed by repeatedly
/// squaring the running join (identical to the naive power accumulation).
FuzzyMatrix transitive_closure(const FuzzyMatrix& p);

struct FixedPointResult {
    FuzzyVector vector;
    /// Applications of the operator until the iterate repeated; at most dim().
    int iterations;
};

/// Least solution of X = (a o X) v b, by iteration from the zero vector.
/// Termination is detected by exact vector equality, which is reached after
/// at most dim() applications.
FixedPointResult least_fixed_point(const FuzzyMatrix& a, const FuzzyVector& b);

}  // namespace posmc
