#ifndef PENCILDIST_MAPS_HPP
#define PENCILDIST_MAPS_HPP

#include "pencildist/matrix.hpp"
#include "pencildist/model.hpp"

namespace pencildist {

/// Least spectral-norm solutions of small structured mapping problems. Each
/// constructor returns a matrix attaining the known minimal norm; mapping
/// residuals are checked at construction time.

/// Minimal unstructured Delta with Delta x = y: the rank-one y x^dagger,
/// norm ||y||/||x||.
ComplexMatrix rank_one_map(const CVector& x, const CVector& y);

/// Minimal Hermitian H with H x = y. Feasible iff Im(x^H y) = 0 (within
/// 1e-10 ||x|| ||y||); attains ||H|| = ||y||/||x||.
ComplexMatrix hermitian_map(const CVector& x, const CVector& y);

/// Minimal skew-Hermitian Delta with Delta x = y, via Delta = i H where
/// H x = -i y. Feasible iff Re(x^H y) = 0; attains ||Delta|| = ||y||/||x||.
ComplexMatrix skew_hermitian_map(const CVector& x, const CVector& y);

/// Minimal negative-semidefinite Delta with Delta x = y. Feasible iff
/// x^H y is real negative; the rank-one y y^H / (x^H y) attains
/// ||Delta|| = ||y||^2 / |x^H y|.
ComplexMatrix negative_semidefinite_map(const CVector& x, const CVector& y);

/// Minimal Delta with Delta x = y and Delta^star x = z, where star is the
/// conjugate transpose or the transpose. Feasible iff x^star y = z^star x;
/// attains ||Delta|| = max(||y||, ||z||)/||x|| (Parrott completion of the
/// bordered block).
ComplexMatrix two_sided_map(const CVector& x, const CVector& y, const CVector& z, Star star);

/// Minimal Delta with Delta = Delta^star and Delta x = y (used for the
/// self-adjoint middle coefficient of even-degree palindromic polynomials).
ComplexMatrix star_self_map(const CVector& x, const CVector& y, Star star);

/// Apply the star adjoint named by `star`.
ComplexMatrix star_adjoint(const ComplexMatrix& M, Star star);
/// x^star y as a scalar: x^H y for the conjugate transpose, x^T y otherwise.
Complex star_bilinear(const CVector& x, const CVector& y, Star star);

} // namespace pencildist

#endif
