#include "pencildist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pencildist {

namespace {

struct JacobiRotation {
    double c = 1.0;
    double s = 0.0;
    Complex phase{1.0, 0.0}; // e^{i arg(pivot)}
};

// Rotation R = diag(1, e^{-i phi}) * [[c, s], [-s, c]] diagonalizing the
// Hermitian 2x2 [[a, w], [conj(w), b]] under R^H (.) R.
JacobiRotation make_rotation(double a, double b, Complex w) {
    JacobiRotation rot;
    const double r = std::abs(w);
    rot.phase = w / r;
    const double tau = (b - a) / (2.0 * r);
    const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    rot.c = 1.0 / std::sqrt(1.0 + t * t);
    rot.s = t * rot.c;
    return rot;
}

// Columns p and q of M <- M * R.
void apply_on_columns(ComplexMatrix& M, std::size_t p, std::size_t q, const JacobiRotation& rot) {
    const Complex cphase = std::conj(rot.phase);
    for (std::size_t k = 0; k < M.rows(); ++k) {
        const Complex tp = M(k, p);
        const Complex tq = cphase * M(k, q);
        M(k, p) = rot.c * tp - rot.s * tq;
        M(k, q) = rot.s * tp + rot.c * tq;
    }
}

// Rows p and q of M <- R^H * M.
void apply_on_rows(ComplexMatrix& M, std::size_t p, std::size_t q, const JacobiRotation& rot) {
    for (std::size_t k = 0; k < M.cols(); ++k) {
        const Complex tp = M(p, k);
        const Complex tq = rot.phase * M(q, k);
        M(p, k) = rot.c * tp - rot.s * tq;
        M(q, k) = rot.s * tp + rot.c * tq;
    }
}

void sort_eigen_ascending(std::vector<double>& values, ComplexMatrix& vectors) {
    const std::size_t n = values.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
    std::vector<double> sorted_values(n);
    ComplexMatrix sorted_vectors(vectors.rows(), n);
    for (std::size_t k = 0; k < n; ++k) {
        sorted_values[k] = values[idx[k]];
        sorted_vectors.set_column(k, vectors.column(idx[k]));
    }
    values = std::move(sorted_values);
    vectors = std::move(sorted_vectors);
}

// Rotate a column so its largest-magnitude entry is real positive; returns
// the applied factor so paired factors can be kept consistent.
Complex column_phase(const ComplexMatrix& V, std::size_t j) {
    std::size_t imax = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < V.rows(); ++i) {
        const double a = std::abs(V(i, j));
        if (a > best) {
            best = a;
            imax = i;
        }
    }
    if (best <= 0.0) return Complex(1.0, 0.0);
    return std::conj(V(imax, j)) / best;
}

void scale_column(ComplexMatrix& V, std::size_t j, Complex z) {
    for (std::size_t i = 0; i < V.rows(); ++i) V(i, j) *= z;
}

double offdiag_norm(const ComplexMatrix& A) {
    double s = 0.0;
    for (std::size_t p = 0; p + 1 < A.rows(); ++p)
        for (std::size_t q = p + 1; q < A.cols(); ++q) s += 2.0 * std::norm(A(p, q));
    return std::sqrt(s);
}

// Extend the orthonormal columns in V (count `have`) to a full basis.
void complete_orthonormal_basis(ComplexMatrix& V, std::size_t have) {
    const std::size_t n = V.rows();
    std::size_t next = have;
    for (std::size_t cand = 0; cand < n && next < V.cols(); ++cand) {
        CVector v(n, Complex(0.0, 0.0));
        v[cand] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < next; ++j) {
                const CVector col = V.column(j);
                const Complex c = dot(col, v);
                for (std::size_t i = 0; i < n; ++i) v[i] -= c * col[i];
            }
        }
        const double nv = norm(v);
        if (nv > 1e-8) {
            V.set_column(next, scaled(v, Complex(1.0 / nv, 0.0)));
            ++next;
        }
    }
    if (next < V.cols()) throw NumericalFailure("failed to complete an orthonormal basis");
}

} // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& H) {
    if (!H.is_square()) throw NotSquare("hermitian_eig requires a square matrix");
    const std::size_t n = H.rows();
    const double scale = frobenius_norm(H);
    if (hermitian_defect(H) > 1e-10 * (1.0 + scale))
        throw NotHermitian("hermitian_eig: input is not Hermitian within tolerance");

    ComplexMatrix A = hermitian_part(H);
    ComplexMatrix V = ComplexMatrix::identity(n);
    EigenDecomposition out;
    if (n <= 1) {
        out.values.assign(n, n == 1 ? A(0, 0).real() : 0.0);
        out.vectors = V;
        return out;
    }

    const double stop = 1e-15 * (1.0 + scale);
    const double skip = 1e-300;
    const int max_sweeps = 80;
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (offdiag_norm(A) <= stop) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex w = A(p, q);
                if (std::abs(w) <= skip) {
                    A(p, q) = A(q, p) = 0.0;
                    continue;
                }
                const JacobiRotation rot = make_rotation(A(p, p).real(), A(q, q).real(), w);
                apply_on_rows(A, p, q, rot);
                apply_on_columns(A, p, q, rot);
                A(p, q) = A(q, p) = 0.0;
                A(p, p) = A(p, p).real();
                A(q, q) = A(q, q).real();
                apply_on_columns(V, p, q, rot);
            }
        }
    }
    if (!converged && offdiag_norm(A) > 1e-10 * (1.0 + scale))
        throw NoConvergence("hermitian_eig: Jacobi sweep cap reached");

    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = A(i, i).real();
    out.vectors = std::move(V);
    sort_eigen_ascending(out.values, out.vectors);
    for (std::size_t j = 0; j < n; ++j) scale_column(out.vectors, j, column_phase(out.vectors, j));
    return out;
}

double lambda_min(const ComplexMatrix& hermitian) { return hermitian_eig(hermitian).values.front(); }

double lambda_max(const ComplexMatrix& hermitian) { return hermitian_eig(hermitian).values.back(); }

double lambda_second_largest(const ComplexMatrix& hermitian) {
    const auto eig = hermitian_eig(hermitian);
    if (eig.values.size() < 2) throw DimensionMismatch("lambda_second_largest requires dim >= 2");
    return eig.values[eig.values.size() - 2];
}

SingularValueDecomposition svd(const ComplexMatrix& M) {
    if (M.rows() < M.cols()) {
        SingularValueDecomposition t = svd(M.adjoint());
        return {std::move(t.V), std::move(t.singular_values), std::move(t.U)};
    }
    const std::size_t m = M.rows(), n = M.cols();
    SingularValueDecomposition out;
    out.U = ComplexMatrix::identity(m);
    out.V = ComplexMatrix::identity(n);
    out.singular_values.assign(n, 0.0);
    if (n == 0) return out;

    ComplexMatrix W = M;
    ComplexMatrix V = ComplexMatrix::identity(n);
    const double eps = 1e-15;
    const int max_sweeps = 80;
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                double a = 0.0, b = 0.0;
                Complex g(0.0, 0.0);
                for (std::size_t k = 0; k < m; ++k) {
                    a += std::norm(W(k, i));
                    b += std::norm(W(k, j));
                    g += std::conj(W(k, i)) * W(k, j);
                }
                if (std::abs(g) <= eps * std::sqrt(a * b) || a == 0.0 || b == 0.0) continue;
                converged = false;
                const JacobiRotation rot = make_rotation(a, b, g);
                apply_on_columns(W, i, j, rot);
                apply_on_columns(V, i, j, rot);
            }
        }
    }
    if (!converged) {
        // Orthogonality may already be adequate; check before giving up.
        double worst = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Complex g(0.0, 0.0);
                double a = 0.0, b = 0.0;
                for (std::size_t k = 0; k < m; ++k) {
                    a += std::norm(W(k, i));
                    b += std::norm(W(k, j));
                    g += std::conj(W(k, i)) * W(k, j);
                }
                if (a > 0.0 && b > 0.0) worst = std::max(worst, std::abs(g) / std::sqrt(a * b));
            }
        if (worst > 1e-10) throw NoConvergence("svd: one-sided Jacobi sweep cap reached");
    }

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) sigma[j] = norm(W.column(j));

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

    ComplexMatrix U(m, m);
    ComplexMatrix Vs(n, n);
    const double smax = sigma.empty() ? 0.0 : sigma[idx[0]];
    const double dead = 1e-290 + 1e-15 * smax;
    std::size_t live = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = idx[k];
        out.singular_values[k] = sigma[src];
        CVector vcol = V.column(src);
        const Complex ph = column_phase(V, src);
        vcol = scaled(vcol, ph);
        Vs.set_column(k, vcol);
        if (sigma[src] > dead) {
            U.set_column(k, scaled(W.column(src), ph / sigma[src]));
            live = k + 1;
        }
    }
    complete_orthonormal_basis(U, live);
    out.U = std::move(U);
    out.V = std::move(Vs);
    return out;
}

double sigma_min(const ComplexMatrix& M) {
    const auto d = svd(M);
    return d.singular_values.empty() ? 0.0 : d.singular_values.back();
}

double sigma_max(const ComplexMatrix& M) {
    const auto d = svd(M);
    return d.singular_values.empty() ? 0.0 : d.singular_values.front();
}

double spectral_norm(const ComplexMatrix& M) { return sigma_max(M); }

ComplexMatrix null_space_basis(const ComplexMatrix& M, double rank_tol) {
    const auto d = svd(M);
    const std::size_t n = M.cols();
    std::vector<double> sigma = d.singular_values;
    sigma.resize(n, 0.0); // columns beyond the row count are automatic kernel directions
    const double smax = sigma.empty() ? 0.0 : sigma.front();
    const double thr = rank_tol * (1.0 + smax);
    std::size_t k = 0;
    for (double s : sigma)
        if (s <= thr) ++k;
    ComplexMatrix basis(n, k);
    for (std::size_t j = 0; j < k; ++j) basis.set_column(j, d.V.column(n - k + j));
    return basis;
}

ComplexMatrix cholesky(const ComplexMatrix& H) {
    if (!H.is_square()) throw NotSquare("cholesky requires a square matrix");
    const std::size_t n = H.rows();
    const double scale = frobenius_norm(H);
    if (hermitian_defect(H) > 1e-10 * (1.0 + scale))
        throw NotHermitian("cholesky: input is not Hermitian within tolerance");
    ComplexMatrix L(n, n);
    const double breakdown = 1e-13 * (1.0 + scale);
    for (std::size_t j = 0; j < n; ++j) {
        double d = H(j, j).real();
        for (std::size_t k = 0; k < j; ++k) d -= std::norm(L(j, k));
        if (d <= breakdown) throw NotPositiveDefinite("cholesky: pivot breakdown");
        L(j, j) = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            Complex s = H(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= L(i, k) * std::conj(L(j, k));
            L(i, j) = s / L(j, j).real();
        }
    }
    return L;
}

CVector vector_pseudoinverse(const CVector& v) {
    const double n2 = norm(v);
    if (n2 == 0.0) throw ZeroVector("vector_pseudoinverse of the zero vector");
    CVector w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = std::conj(v[i]) / (n2 * n2);
    return w;
}

ComplexMatrix inverse(const ComplexMatrix& M) {
    if (!M.is_square()) throw NotSquare("inverse requires a square matrix");
    const std::size_t n = M.rows();
    ComplexMatrix A = M;
    ComplexMatrix B = ComplexMatrix::identity(n);
    const double tol = 1e-14 * (1.0 + frobenius_norm(M));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(A(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double a = std::abs(A(r, col));
            if (a > best) {
                best = a;
                piv = r;
            }
        }
        if (best <= tol) throw SingularMatrix("inverse: matrix is numerically singular");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(A(piv, j), A(col, j));
                std::swap(B(piv, j), B(col, j));
            }
        }
        const Complex inv_p = Complex(1.0, 0.0) / A(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            A(col, j) *= inv_p;
            B(col, j) *= inv_p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const Complex f = A(r, col);
            if (f == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                A(r, j) -= f * A(col, j);
                B(r, j) -= f * B(col, j);
            }
        }
    }
    return B;
}

CVector forward_substitution(const ComplexMatrix& L, const CVector& b) {
    const std::size_t n = L.rows();
    if (b.size() != n) throw DimensionMismatch("forward_substitution size mismatch");
    CVector y(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= L(i, k) * y[k];
        y[i] = s / L(i, i);
    }
    return y;
}

CVector adjoint_back_substitution(const ComplexMatrix& L, const CVector& b) {
    const std::size_t n = L.rows();
    if (b.size() != n) throw DimensionMismatch("adjoint_back_substitution size mismatch");
    CVector y(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Complex s = b[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= std::conj(L(k, ii)) * y[k];
        y[ii] = s / std::conj(L(ii, ii));
    }
    return y;
}

} // namespace pencildist
