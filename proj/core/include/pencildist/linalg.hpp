#ifndef PENCILDIST_LINALG_HPP
#define PENCILDIST_LINALG_HPP

#include <vector>

#include "pencildist/matrix.hpp"

namespace pencildist {

/// Full spectrum of a Hermitian matrix: eigenvalues ascending, unit
/// eigenvectors in the matching columns of `vectors`.
struct EigenDecomposition {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// The input is symmetrized as (H + H^H)/2 internally; asymmetry beyond
/// 1e-10 * (1 + ||H||_F) raises NotHermitian. Deterministic, stable at the
/// dense sizes this library targets.
EigenDecomposition hermitian_eig(const ComplexMatrix& H);

double lambda_min(const ComplexMatrix& hermitian);
double lambda_max(const ComplexMatrix& hermitian);
/// Second-largest eigenvalue of a Hermitian matrix (requires dim >= 2).
double lambda_second_largest(const ComplexMatrix& hermitian);

/// Full SVD, singular values descending. U is rows x rows, V is cols x cols,
/// both unitary; M = U diag(sigma) V^H with sigma padded by zeros as needed.
struct SingularValueDecomposition {
    ComplexMatrix U;
    std::vector<double> singular_values;
    ComplexMatrix V;
};

/// One-sided Jacobi SVD (implicit cyclic Jacobi on the Gram matrix, with the
/// left factor recovered from the rotated columns).
SingularValueDecomposition svd(const ComplexMatrix& M);

double sigma_min(const ComplexMatrix& M);
double sigma_max(const ComplexMatrix& M);
/// Spectral norm, sigma_max(M).
double spectral_norm(const ComplexMatrix& M);

/// Orthonormal basis of ker(M) as the columns of an n x k matrix (k may be 0).
/// A singular value counts as zero when it is <= rank_tol * (1 + sigma_max).
ComplexMatrix null_space_basis(const ComplexMatrix& M, double rank_tol = 1e-10);

/// Lower-triangular L with H = L L^H. Pivot breakdown (H not positive
/// definite within tolerance) raises NotPositiveDefinite.
ComplexMatrix cholesky(const ComplexMatrix& H);

/// Moore-Penrose pseudoinverse of a nonzero vector: the covector v^H/||v||^2,
/// returned as its entries (apply as a row).
CVector vector_pseudoinverse(const CVector& v);

/// Inverse by Gauss-Jordan elimination with partial pivoting.
ComplexMatrix inverse(const ComplexMatrix& M);

/// Solve L y = b with L lower-triangular.
CVector forward_substitution(const ComplexMatrix& L, const CVector& b);
/// Solve L^H y = b with L lower-triangular.
CVector adjoint_back_substitution(const ComplexMatrix& L, const CVector& b);

} // namespace pencildist

#endif
