#ifndef CAUSALCOH_MATRIX_HPP
#define CAUSALCOH_MATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace causalcoh {

/// Exact coefficient field. GMP keeps every value in lowest terms with a
/// positive denominator, and zero as 0/1.
using Rational = mpq_class;

class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over the rationals. Zero-sized shapes (0 x k,
/// k x 0) are legal and used for degenerate degrees.
class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    MatrixQ(std::initializer_list<std::initializer_list<long>> init);

    static MatrixQ zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static MatrixQ identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    MatrixQ transpose() const;
    MatrixQ column(std::size_t c) const;
    MatrixQ columns(const std::vector<std::size_t>& which) const;

    /// [this | other]; row counts must agree.
    MatrixQ hstack(const MatrixQ& other) const;
    /// [this ; other]; column counts must agree.
    MatrixQ vstack(const MatrixQ& other) const;
    /// Block diagonal [this 0; 0 other].
    MatrixQ direct_sum(const MatrixQ& other) const;

    friend bool operator==(const MatrixQ& a, const MatrixQ& b);
    friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
    friend MatrixQ operator+(const MatrixQ& a, const MatrixQ& b);
    friend MatrixQ operator-(const MatrixQ& a, const MatrixQ& b);
    friend MatrixQ operator*(const Rational& s, const MatrixQ& a);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Result of Gauss-Jordan reduction: the reduced row echelon form and the
/// pivot column of each nonzero row, in increasing order.
struct EchelonForm {
    MatrixQ reduced;
    std::vector<std::size_t> pivots;
};

/// Fraction-free (Bareiss) forward elimination on integer-scaled rows,
/// followed by back substitution into reduced row echelon form. The pivot
/// in each column is the first nonzero entry at or below the current row.
EchelonForm row_reduce(const MatrixQ& m);

std::size_t rank(const MatrixQ& m);

/// Columns span the kernel; one column per free variable of the reduced
/// echelon form, with a 1 in that free position.
MatrixQ kernel_basis(const MatrixQ& m);

/// Some solution x of m * x = b (free variables set to zero), or nullopt.
/// b may have several columns; each is solved independently.
std::optional<MatrixQ> solve(const MatrixQ& m, const MatrixQ& b);

/// Indices of a maximal linearly independent subset of the columns,
/// chosen greedily left to right.
std::vector<std::size_t> independent_columns(const MatrixQ& m);

/// Inverse of a square invertible matrix; throws ShapeError otherwise.
MatrixQ inverse(const MatrixQ& m);

}  // namespace causalcoh

#endif  // CAUSALCOH_MATRIX_HPP
