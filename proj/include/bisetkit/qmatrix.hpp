#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bisetkit/rational.hpp"

namespace bisetkit {

using QVec = std::vector<Rat>;

/// Dense matrix over the rationals. All arithmetic is exact.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(const std::vector<QVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QVec row(std::size_t r) const;
    void set_row(std::size_t r, const QVec& v);

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix scaled(const Rat& c) const;
    QMatrix transposed() const;
    QVec apply(const QVec& v) const;  // matrix * column vector

    bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
    bool is_zero() const;

    Rat trace() const;
    std::optional<QMatrix> inverse() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

/// Row space of a matrix kept in reduced row echelon form; the canonical
/// representation of a subspace of Q^n.
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<QVec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Reduce v against the current basis; returns the residue.
    QVec reduce(const QVec& v) const;
    /// Add v to the span. Returns true if the dimension grew.
    bool absorb(const QVec& v);
    bool contains(const QVec& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

    /// Coordinates of v in terms of (pivot-column) basis, if v lies in the span.
    std::optional<QVec> coordinates(const QVec& v) const;

private:
    std::size_t ambient_;
    std::vector<QVec> basis_;          // rref rows, pivot order increasing
    std::vector<std::size_t> pivots_;  // pivot column of each row
};

std::size_t rank(const QMatrix& m);
/// Reduced row echelon form; pivot columns appended to *pivots if non-null.
QMatrix rref(const QMatrix& m, std::vector<std::size_t>* pivots = nullptr);
/// Basis of the right kernel {x : m x = 0}.
std::vector<QVec> kernel(const QMatrix& m);
/// One solution of m x = b, if any.
std::optional<QVec> solve(const QMatrix& m, const QVec& b);

Subspace span_of(const std::vector<QVec>& vectors, std::size_t ambient);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

/// Smallest subspace containing `seeds` and invariant under every matrix in `action`.
Subspace spin(const std::vector<QVec>& seeds, const std::vector<QMatrix>& action, std::size_t ambient);

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec scaled(const QVec& v, const Rat& c);
bool is_zero(const QVec& v);

}  // namespace bisetkit
