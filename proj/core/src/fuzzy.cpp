#include "posmc/fuzzy.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace posmc {

namespace {

void check_labels_unique(const std::vector<std::string>& labels) {
    std::set<std::string_view> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second)
            throw ValidationError("duplicate index label '" + l + "'");
}

std::string shape_string(std::size_t dim, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << dim << " over [";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out << ",";
        out << labels[i];
    }
    out << "]";
    return out.str();
}

void require_same_labels(const char* op, const std::vector<std::string>& a,
                         const std::vector<std::string>& b) {
    if (a != b)
        throw DimensionError(std::string(op) + ": operand shapes differ: " +
                             shape_string(a.size(), a) + " vs " + shape_string(b.size(), b));
}

}  // namespace

FuzzyMatrix::FuzzyMatrix(std::vector<std::string> labels, std::vector<Possibility> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
    check_labels_unique(labels_);
    if (entries_.size() != labels_.size() * labels_.size())
        throw DimensionError("matrix over " + std::to_string(labels_.size()) +
                             " labels needs " + std::to_string(labels_.size() * labels_.size()) +
                             " entries, got " + std::to_string(entries_.size()));
}

FuzzyMatrix FuzzyMatrix::zeros(std::vector<std::string> labels) {
    const std::size_t n = labels.size();
    return FuzzyMatrix(std::move(labels), std::vector<Possibility>(n * n));
}

FuzzyMatrix FuzzyMatrix::identity(std::vector<std::string> labels) {
    const std::size_t n = labels.size();
    std::vector<Possibility> entries(n * n);
    for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = Possibility::one();
    return FuzzyMatrix(std::move(labels), std::move(entries));
}

FuzzyVector::FuzzyVector(std::vector<std::string> labels, std::vector<Possibility> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
    check_labels_unique(labels_);
    if (entries_.size() != labels_.size())
        throw DimensionError("vector over " + std::to_string(labels_.size()) +
                             " labels got " + std::to_string(entries_.size()) + " entries");
}

FuzzyVector FuzzyVector::zeros(std::vector<std::string> labels) {
    const std::size_t n = labels.size();
    return FuzzyVector(std::move(labels), std::vector<Possibility>(n));
}

FuzzyVector FuzzyVector::ones(std::vector<std::string> labels) {
    const std::size_t n = labels.size();
    return FuzzyVector(std::move(labels), std::vector<Possibility>(n, Possibility::one()));
}

FuzzyMatrix join(const FuzzyMatrix& a, const FuzzyMatrix& b) {
    require_same_labels("join", a.labels(), b.labels());
    std::vector<Possibility> out(a.entries().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = join(a.entries()[i], b.entries()[i]);
    return FuzzyMatrix(a.labels(), std::move(out));
}

FuzzyVector join(const FuzzyVector& a, const FuzzyVector& b) {
    require_same_labels("join", a.labels(), b.labels());
    std::vector<Possibility> out(a.entries().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = join(a.entries()[i], b.entries()[i]);
    return FuzzyVector(a.labels(), std::move(out));
}

bool leq(const FuzzyMatrix& a, const FuzzyMatrix& b) {
    require_same_labels("leq", a.labels(), b.labels());
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        if (b.entries()[i] < a.entries()[i]) return false;
    return true;
}

bool leq(const FuzzyVector& a, const FuzzyVector& b) {
    require_same_labels("leq", a.labels(), b.labels());
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        if (b.entries()[i] < a.entries()[i]) return false;
    return true;
}

FuzzyMatrix compose(const FuzzyMatrix& a, const FuzzyMatrix& b) {
    require_same_labels("compose", a.labels(), b.labels());
    const std::size_t n = a.dim();
    std::vector<Possibility> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Possibility aik = a(i, k);
            if (aik == Possibility::zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                out[i * n + j] = join(out[i * n + j], meet(aik, b(k, j)));
        }
    }
    return FuzzyMatrix(a.labels(), std::move(out));
}

FuzzyVector apply(const FuzzyMatrix& a, const FuzzyVector& x) {
    require_same_labels("apply", a.labels(), x.labels());
    const std::size_t n = a.dim();
    std::vector<Possibility> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) out[i] = join(out[i], meet(a(i, k), x[k]));
    return FuzzyVector(a.labels(), std::move(out));
}

FuzzyMatrix transitive_closure(const FuzzyMatrix& p) {
    const std::size_t n = p.dim();
    if (n == 0) return p;
    // running = join of the first `covered` powers; squaring the running join
    // doubles the covered range each round.
    FuzzyMatrix running = p;
    std::size_t covered = 1;
    while (covered < n) {
        running = join(running, compose(running, running));
        covered *= 2;
    }
    return running;
}

FixedPointResult least_fixed_point(const FuzzyMatrix& a, const FuzzyVector& b) {
    require_same_labels("least_fixed_point", a.labels(), b.labels());
    FuzzyVector x = FuzzyVector::zeros(b.labels());
    int iterations = 0;
    for (;;) {
        FuzzyVector next = join(apply(a, x), b);
        if (next == x) return {std::move(x), iterations};
        x = std::move(next);
        ++iterations;
        if (iterations > static_cast<int>(a.dim()))
            throw Error("least_fixed_point: not stable after dim iterations");
    }
}

}  // namespace posmc
