#include "hadstar/matrix.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace hadstar {

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("ragged rows in matrix construction");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

RatVector RatMatrix::row(std::size_t r) const {
    RatVector out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

RatVector RatMatrix::multiply(const RatVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in multiply");
    RatVector out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !x[c].is_zero()) out[r] += at(r, c) * x[c];
    return out;
}

RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t found = m.rows();
        for (std::size_t r = pivot_row; r < m.rows(); ++r) {
            if (!m.at(r, col).is_zero()) {
                found = r;
                break;
            }
        }
        if (found == m.rows()) continue;
        if (found != pivot_row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m.at(found, c), m.at(pivot_row, c));
        Rational inv = m.at(pivot_row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m.at(pivot_row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || m.at(r, col).is_zero()) continue;
            Rational factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m.at(r, c) -= factor * m.at(pivot_row, c);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++pivot_row;
    }
    return m;
}

std::size_t rank(const RatMatrix& m) {
    std::vector<std::size_t> pivots;
    rref(m, &pivots);
    return pivots.size();
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
    std::vector<std::size_t> pivots;
    RatMatrix r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVector v(m.cols(), Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("dimension mismatch in solve");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    std::vector<std::size_t> pivots;
    RatMatrix red = rref(std::move(aug), &pivots);
    for (std::size_t c : pivots)
        if (c == m.cols()) return std::nullopt;  // row (0 ... 0 | 1)
    RatVector x(m.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red.at(i, m.cols());
    return x;
}

Rational determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    RatMatrix a = m;
    std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t found = n;
        for (std::size_t r = col; r < n; ++r) {
            if (!a.at(r, col).is_zero()) {
                found = r;
                break;
            }
        }
        if (found == n) return Rational(0);
        if (found != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(found, c), a.at(col, c));
            det = -det;
        }
        det *= a.at(col, col);
        Rational inv = a.at(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            Rational factor = a.at(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) a.at(r, c) -= factor * a.at(col, c);
        }
    }
    return det;
}

namespace {

RatVector basis_combination(const std::vector<RatVector>& basis, const Rational& t) {
    RatVector v(basis.front().size(), Rational(0));
    Rational power(1);
    for (const auto& b : basis) {
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!b[j].is_zero()) v[j] += power * b[j];
        power *= t;
    }
    return v;
}

}  // namespace

std::optional<KernelScan> all_nonzero_kernel_vector(const RatMatrix& m) {
    std::vector<RatVector> basis = kernel_basis(m);
    if (basis.empty()) return std::nullopt;

    for (std::size_t j = 0; j < m.cols(); ++j) {
        bool column_reachable = false;
        for (const auto& b : basis) {
            if (!b[j].is_zero()) {
                column_reachable = true;
                break;
            }
        }
        if (!column_reachable) return std::nullopt;  // kernel inside {x_j = 0}
    }

    for (long t = 1; t <= 64; ++t) {
        RatVector v = basis_combination(basis, Rational(t));
        if (all_entries_nonzero(v)) return KernelScan{std::move(v), false};
    }

    // Each coordinate of v(t) is a nonzero polynomial of degree < dim(kernel),
    // so almost every t works; randomization only dodges the finitely many roots.
    std::mt19937_64 rng(0x4841445354415221ull);
    std::uniform_int_distribution<long> num_dist(-1'000'000'000L, 1'000'000'000L);
    std::uniform_int_distribution<long> den_dist(1L, 1'000'000L);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        long num = num_dist(rng);
        if (num == 0) continue;
        RatVector v = basis_combination(basis, Rational(num, den_dist(rng)));
        if (all_entries_nonzero(v)) return KernelScan{std::move(v), true};
    }
    throw std::logic_error("kernel scan failed to avoid finitely many roots");
}

}  // namespace hadstar
