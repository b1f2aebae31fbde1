#pragma once

// Dense matrices over Q (GMP rationals) for rigorous rank certificates.

#include <gmpxx.h>

#include <random>
#include <vector>

namespace orbconv {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpq_class& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    const mpq_class& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator+(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;
    bool operator==(const RationalMatrix& rhs) const;

    /// Throws NumericFailure when singular.
    RationalMatrix inverse() const;

    /// Exact rank by Gaussian elimination over Q.
    int rank() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpq_class> data_;
};

/// Skew-symmetric n x n matrix with entries a/b, a uniform in [-64, 64],
/// b uniform in [1, 64].
RationalMatrix random_rational_skew(int n, std::mt19937_64& rng);

/// (I - S)(I + S)^{-1}: exactly orthogonal with determinant 1 for skew S.
RationalMatrix cayley_transform(const RationalMatrix& skew);

}  // namespace orbconv
