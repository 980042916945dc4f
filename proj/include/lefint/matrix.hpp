#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace lefint {

using Rational = boost::multiprecision::cpp_rational;

/// Input failed structural validation (malformed complex, non-simplicial map, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation's mathematical precondition does not hold (non-invariant set, N = 0, ...).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense matrix over exact rationals. Sizes here are desk-scale, so all
/// elimination is plain Gaussian elimination with deterministic pivoting
/// (first nonzero row in column order).
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const {
        return a_[static_cast<size_t>(i) * cols_ + j];
    }

    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    QMatrix operator*(const QMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: size mismatch in product");
        QMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rational& x = (*this)(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols_; ++j)
                    if (o(k, j) != 0) r(i, j) += x * o(k, j);
            }
        return r;
    }

    Rational trace() const {
        Rational t = 0;
        int n = rows_ < cols_ ? rows_ : cols_;
        for (int i = 0; i < n; ++i) t += (*this)(i, i);
        return t;
    }

    /// Row-reduce in place; returns pivot column indices.
    std::vector<int> reduce() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int p = -1;
            for (int i = r; i < rows_; ++i)
                if ((*this)(i, c) != 0) { p = i; break; }
            if (p < 0) continue;
            if (p != r)
                for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
            Rational inv = 1 / (*this)(r, c);
            for (int j = c; j < cols_; ++j) (*this)(r, j) *= inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == r || (*this)(i, c) == 0) continue;
                Rational f = (*this)(i, c);
                for (int j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        QMatrix w = *this;
        return static_cast<int>(w.reduce().size());
    }

    /// Columns spanning the kernel, read off the RREF.
    QMatrix kernel_basis() const {
        QMatrix w = *this;
        std::vector<int> pivots = w.reduce();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivots) is_pivot[c] = true;
        int nullity = cols_ - static_cast<int>(pivots.size());
        QMatrix k(cols_, nullity);
        int col = 0;
        for (int free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            k(free, col) = 1;
            for (size_t r = 0; r < pivots.size(); ++r) k(pivots[r], col) = -w(static_cast<int>(r), free);
            ++col;
        }
        return k;
    }

    /// Solve A x = b exactly; throws PreconditionError if inconsistent.
    std::vector<Rational> solve(const std::vector<Rational>& b) const {
        if (static_cast<int>(b.size()) != rows_)
            throw std::invalid_argument("QMatrix::solve: size mismatch");
        QMatrix aug(rows_, cols_ + 1);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        std::vector<int> pivots = aug.reduce();
        std::vector<Rational> x(cols_, 0);
        for (size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] == cols_) throw PreconditionError("QMatrix::solve: inconsistent system");
            x[pivots[r]] = aug(static_cast<int>(r), cols_);
        }
        return x;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

}  // namespace lefint
