#include "orbconv/rational.hpp"

#include "orbconv/types.hpp"

#include <utility>

namespace orbconv {

RationalMatrix RationalMatrix::identity(int n)
{
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const
{
    if (cols_ != rhs.rows_) throw InvalidArgument("RationalMatrix: shape mismatch in product");
    RationalMatrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const mpq_class& a = (*this)(r, k);
            if (a == 0) continue;
            for (int c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
        }
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidArgument("RationalMatrix: shape mismatch in sum");
    RationalMatrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidArgument("RationalMatrix: shape mismatch in difference");
    RationalMatrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const
{
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

RationalMatrix RationalMatrix::inverse() const
{
    if (rows_ != cols_) throw InvalidArgument("RationalMatrix: inverse of a non-square matrix");
    const int n = rows_;
    RationalMatrix a(*this);
    RationalMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) throw NumericFailure("RationalMatrix: singular matrix");
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(a(pivot, c), a(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        const mpq_class scale = 1 / a(col, col);
        for (int c = 0; c < n; ++c) {
            a(col, c) *= scale;
            inv(col, c) *= scale;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            const mpq_class f = a(r, col);
            for (int c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

int RationalMatrix::rank() const
{
    RationalMatrix a(*this);
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = rank;
        while (pivot < rows_ && a(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            for (int c = col; c < cols_; ++c) std::swap(a(pivot, c), a(rank, c));
        for (int r = rank + 1; r < rows_; ++r) {
            if (a(r, col) == 0) continue;
            const mpq_class f = a(r, col) / a(rank, col);
            for (int c = col; c < cols_; ++c) a(r, c) -= f * a(rank, c);
        }
        ++rank;
    }
    return rank;
}

RationalMatrix random_rational_skew(int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-64, 64);
    std::uniform_int_distribution<int> den(1, 64);
    RationalMatrix s(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            mpq_class v(num(rng), den(rng));
            v.canonicalize();
            s(i, j) = v;
            s(j, i) = -v;
        }
    return s;
}

RationalMatrix cayley_transform(const RationalMatrix& skew)
{
    const RationalMatrix id = RationalMatrix::identity(skew.rows());
    return (id - skew) * (id + skew).inverse();
}

}  // namespace orbconv
