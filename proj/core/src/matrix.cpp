#include "pencildist/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace pencildist {

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionMismatch("ragged initializer for ComplexMatrix");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
    return I;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    ComplexMatrix D(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) D(i, i) = d[i];
    return D;
}

ComplexMatrix ComplexMatrix::diagonal(const CVector& d) {
    ComplexMatrix D(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) D(i, i) = d[i];
    return D;
}

ComplexMatrix ComplexMatrix::outer(const CVector& x, const CVector& y) {
    ComplexMatrix M(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) M(i, j) = x[i] * std::conj(y[j]);
    return M;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix T(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) T(j, i) = std::conj((*this)(i, j));
    return T;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix T(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
    return T;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix C(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) C.data_[i] = std::conj(data_[i]);
    return C;
}

CVector ComplexMatrix::column(std::size_t j) const {
    CVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void ComplexMatrix::set_column(std::size_t j, const CVector& v) {
    if (v.size() != rows_) throw DimensionMismatch("set_column size mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix addition shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix subtraction shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& v : data_) v *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Complex dot(const CVector& x, const CVector& y) {
    if (x.size() != y.size()) throw DimensionMismatch("dot size mismatch");
    Complex s(0.0, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

double norm(const CVector& x) {
    double s = 0.0;
    for (const auto& v : x) s += std::norm(v);
    return std::sqrt(s);
}

CVector operator+(const CVector& x, const CVector& y) {
    if (x.size() != y.size()) throw DimensionMismatch("vector addition size mismatch");
    CVector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
    return z;
}

CVector operator-(const CVector& x, const CVector& y) {
    if (x.size() != y.size()) throw DimensionMismatch("vector subtraction size mismatch");
    CVector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
    return z;
}

CVector operator*(Complex s, const CVector& x) { return scaled(x, s); }

CVector scaled(const CVector& x, Complex s) {
    CVector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = s * x[i];
    return z;
}

CVector normalized(const CVector& x) {
    const double n = norm(x);
    if (n == 0.0) throw ZeroVector("cannot normalize the zero vector");
    return scaled(x, Complex(1.0 / n, 0.0));
}

CVector conjugated(const CVector& x) {
    CVector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = std::conj(x[i]);
    return z;
}

CVector matvec(const ComplexMatrix& A, const CVector& x) {
    if (A.cols() != x.size()) throw DimensionMismatch("matvec size mismatch");
    CVector y(A.rows(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Complex s(0.0, 0.0);
        for (std::size_t j = 0; j < A.cols(); ++j) s += A(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

CVector adjoint_matvec(const ComplexMatrix& A, const CVector& x) {
    if (A.rows() != x.size()) throw DimensionMismatch("adjoint_matvec size mismatch");
    CVector y(A.cols(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) y[j] += std::conj(A(i, j)) * x[i];
    return y;
}

double frobenius_norm(const ComplexMatrix& A) {
    double s = 0.0;
    for (const auto& v : A.data()) s += std::norm(v);
    return std::sqrt(s);
}

double max_abs(const ComplexMatrix& A) {
    double m = 0.0;
    for (const auto& v : A.data()) m = std::max(m, std::abs(v));
    return m;
}

double hermitian_defect(const ComplexMatrix& A) {
    if (!A.is_square()) throw NotSquare("hermitian_defect requires a square matrix");
    double s = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) s += std::norm(A(i, j) - std::conj(A(j, i)));
    return std::sqrt(s);
}

double skew_hermitian_defect(const ComplexMatrix& A) {
    if (!A.is_square()) throw NotSquare("skew_hermitian_defect requires a square matrix");
    double s = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) s += std::norm(A(i, j) + std::conj(A(j, i)));
    return std::sqrt(s);
}

ComplexMatrix hermitian_part(const ComplexMatrix& A) {
    if (!A.is_square()) throw NotSquare("hermitian_part requires a square matrix");
    ComplexMatrix H(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) H(i, j) = 0.5 * (A(i, j) + std::conj(A(j, i)));
    return H;
}

ComplexMatrix vstack(const ComplexMatrix& top, const ComplexMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw DimensionMismatch("vstack column mismatch");
    ComplexMatrix S(top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) S(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < bottom.cols(); ++j) S(top.rows() + i, j) = bottom(i, j);
    return S;
}

ComplexMatrix block2x2(const ComplexMatrix& a11, const ComplexMatrix& a12,
                       const ComplexMatrix& a21, const ComplexMatrix& a22) {
    const std::size_t n = a11.rows();
    if (a11.cols() != n || a12.rows() != n || a12.cols() != n || a21.rows() != n ||
        a21.cols() != n || a22.rows() != n || a22.cols() != n)
        throw DimensionMismatch("block2x2 requires four equal square blocks");
    ComplexMatrix B(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            B(i, j) = a11(i, j);
            B(i, n + j) = a12(i, j);
            B(n + i, j) = a21(i, j);
            B(n + i, n + j) = a22(i, j);
        }
    }
    return B;
}

} // namespace pencildist
