#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hadstar/rational.hpp"

namespace hadstar {

// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RatMatrix from_rows(const std::vector<RatVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    RatVector row(std::size_t r) const;
    RatVector multiply(const RatVector& x) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

// Reduced row echelon form.  Pivot choice is the first nonzero entry in
// column order, scanning rows top-down, so results are reproducible.
RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank(const RatMatrix& m);

// Basis of {x : Mx = 0}, one vector per free column in ascending column
// order; empty when the kernel is trivial.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

// One exact solution of Mx = b (free variables set to zero), or absent
// when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

Rational determinant(const RatMatrix& m);

struct KernelScan {
    RatVector vector;        // Mv = 0 with every coordinate nonzero
    bool escalated = false;  // deterministic scan t = 1..64 failed; random t used
};

// A kernel vector with no zero coordinate, if one exists.
//
// Existence is decided exactly: such a vector exists iff no coordinate
// functional vanishes on the whole kernel, i.e. iff for every column j
// some kernel basis vector has a nonzero j-th coordinate (a subspace
// over Q is never a finite union of proper subspaces).  The witness is
// found by scanning v(t) = sum_i t^i b_i over the basis for t = 1..64,
// then for deterministically seeded random rational t; each coordinate
// of v(t) is a nonzero polynomial in t, so the scan terminates.
std::optional<KernelScan> all_nonzero_kernel_vector(const RatMatrix& m);

}  // namespace hadstar
