#ifndef PENCILDIST_MATRIX_HPP
#define PENCILDIST_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "pencildist/errors.hpp"

namespace pencildist {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Dense complex matrix, row-major storage. The universal carrier for all
/// pencil/polynomial coefficient matrices in this library. Sizes stay small
/// (n <= 64), so everything is value-semantic and dense.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

    /// Row-major brace construction: {{1, 2}, {3, 4}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols);
    static ComplexMatrix diagonal(const std::vector<double>& d);
    static ComplexMatrix diagonal(const CVector& d);
    /// Rank-one product x * y^H.
    static ComplexMatrix outer(const CVector& x, const CVector& y);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& data() const { return data_; }
    std::vector<Complex>& data() { return data_; }

    ComplexMatrix adjoint() const;   // conjugate transpose
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    CVector column(std::size_t j) const;
    void set_column(std::size_t j, const CVector& v);

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= Complex(s, 0.0); }
    friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex(s, 0.0); }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

// Vector helpers. dot() is conjugate-linear in the first argument: x^H y.
Complex dot(const CVector& x, const CVector& y);
double norm(const CVector& x);
CVector operator+(const CVector& x, const CVector& y);
CVector operator-(const CVector& x, const CVector& y);
CVector operator*(Complex s, const CVector& x);
CVector scaled(const CVector& x, Complex s);
CVector normalized(const CVector& x);
CVector conjugated(const CVector& x);

/// A * x.
CVector matvec(const ComplexMatrix& A, const CVector& x);
/// A^H * x.
CVector adjoint_matvec(const ComplexMatrix& A, const CVector& x);

double frobenius_norm(const ComplexMatrix& A);
double max_abs(const ComplexMatrix& A);
/// Frobenius distance to the Hermitian part, ||A - A^H||_F.
double hermitian_defect(const ComplexMatrix& A);
/// Frobenius distance to the skew-Hermitian part, ||A + A^H||_F.
double skew_hermitian_defect(const ComplexMatrix& A);

/// (A + A^H) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix& A);

/// Rows of `top` stacked above rows of `bottom` (column counts must agree).
ComplexMatrix vstack(const ComplexMatrix& top, const ComplexMatrix& bottom);

/// Assemble a 2x2 block matrix; all blocks must be square of equal size.
ComplexMatrix block2x2(const ComplexMatrix& a11, const ComplexMatrix& a12,
                       const ComplexMatrix& a21, const ComplexMatrix& a22);

} // namespace pencildist

#endif
