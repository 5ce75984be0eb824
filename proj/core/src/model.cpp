#include "pencildist/model.hpp"

#include <algorithm>
#include <cmath>

#include "pencildist/errors.hpp"
#include "pencildist/linalg.hpp"
#include "pencildist/rng.hpp"

namespace pencildist {

std::string to_string(StructureTag tag) {
    switch (tag) {
        case StructureTag::Unstructured: return "unstructured";
        case StructureTag::Hermitian: return "hermitian";
        case StructureTag::SkewHermitian: return "skew-hermitian";
        case StructureTag::StarEven: return "star-even";
        case StructureTag::StarOdd: return "star-odd";
        case StructureTag::StarPalindromic: return "star-palindromic";
        case StructureTag::TPalindromic: return "t-palindromic";
        case StructureTag::DissipativeHamiltonian: return "dissipative-hamiltonian";
    }
    throw UnsupportedTag("unknown structure tag");
}

StructureTag tag_from_string(const std::string& name) {
    if (name == "unstructured") return StructureTag::Unstructured;
    if (name == "hermitian") return StructureTag::Hermitian;
    if (name == "skew-hermitian") return StructureTag::SkewHermitian;
    if (name == "star-even") return StructureTag::StarEven;
    if (name == "star-odd") return StructureTag::StarOdd;
    if (name == "star-palindromic") return StructureTag::StarPalindromic;
    if (name == "t-palindromic") return StructureTag::TPalindromic;
    if (name == "dissipative-hamiltonian" || name == "dh") return StructureTag::DissipativeHamiltonian;
    throw UnsupportedTag("unknown structure tag: " + name);
}

namespace {

double rel_scale(const ComplexMatrix& M) { return 1.0 + frobenius_norm(M); }

void check_hermitian(std::vector<std::string>& out, const ComplexMatrix& M, const std::string& name) {
    if (hermitian_defect(M) > kStructureTol * rel_scale(M)) out.push_back(name + " is not Hermitian");
}

void check_skew(std::vector<std::string>& out, const ComplexMatrix& M, const std::string& name) {
    if (skew_hermitian_defect(M) > kStructureTol * rel_scale(M)) out.push_back(name + " is not skew-Hermitian");
}

void check_psd(std::vector<std::string>& out, const ComplexMatrix& M, const std::string& name) {
    if (hermitian_defect(M) > kStructureTol * rel_scale(M)) {
        out.push_back(name + " is not Hermitian");
        return;
    }
    const double lmin = lambda_min(hermitian_part(M));
    if (lmin < -kStructureTol * rel_scale(M)) out.push_back(name + " is not positive semidefinite");
}

void check_equal(std::vector<std::string>& out, const ComplexMatrix& M, const ComplexMatrix& N,
                 const std::string& what) {
    if (M.rows() != N.rows() || M.cols() != N.cols()) {
        out.push_back(what + " (shape mismatch)");
        return;
    }
    if (frobenius_norm(M - N) > kStructureTol * (1.0 + frobenius_norm(M) + frobenius_norm(N)))
        out.push_back(what);
}

void check_finite(std::vector<std::string>& out, const ComplexMatrix& M, const std::string& name) {
    for (const auto& z : M.data()) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            out.push_back(name + " has non-finite entries");
            return;
        }
    }
}

} // namespace

std::vector<std::string> validate(const StructuredPencil& pencil) {
    std::vector<std::string> out;
    if (!pencil.A.is_square() || !pencil.E.is_square()) out.push_back("A and E must be square");
    if (pencil.A.rows() != pencil.E.rows()) out.push_back("A and E must have equal size");
    if (!out.empty()) return out;
    check_finite(out, pencil.A, "A");
    check_finite(out, pencil.E, "E");
    switch (pencil.tag) {
        case StructureTag::Unstructured:
            break;
        case StructureTag::Hermitian:
            check_hermitian(out, pencil.A, "A");
            check_hermitian(out, pencil.E, "E");
            break;
        case StructureTag::SkewHermitian:
            check_skew(out, pencil.A, "A");
            check_skew(out, pencil.E, "E");
            break;
        case StructureTag::StarEven:
            check_hermitian(out, pencil.A, "A");
            check_skew(out, pencil.E, "E");
            break;
        case StructureTag::StarOdd:
            check_skew(out, pencil.A, "A");
            check_hermitian(out, pencil.E, "E");
            break;
        case StructureTag::StarPalindromic:
            check_equal(out, pencil.E, pencil.A.adjoint(), "E != A^H (star-palindromic)");
            break;
        case StructureTag::TPalindromic:
            check_equal(out, pencil.E, pencil.A.transpose(), "E != A^T (T-palindromic)");
            break;
        case StructureTag::DissipativeHamiltonian:
            out.push_back("dissipative-hamiltonian data belongs in a DHTriple, not a pencil");
            break;
    }
    return out;
}

std::vector<std::string> validate(const DHTriple& triple) {
    std::vector<std::string> out;
    if (!triple.J.is_square() || !triple.R.is_square() || !triple.E.is_square())
        out.push_back("J, R, E must be square");
    else if (triple.J.rows() != triple.R.rows() || triple.J.rows() != triple.E.rows())
        out.push_back("J, R, E must have equal size");
    if (!out.empty()) return out;
    check_finite(out, triple.J, "J");
    check_finite(out, triple.R, "R");
    check_finite(out, triple.E, "E");
    check_skew(out, triple.J, "J");
    check_psd(out, triple.R, "R");
    check_psd(out, triple.E, "E");
    return out;
}

std::vector<std::string> validate(const MatrixPolynomial& poly) {
    std::vector<std::string> out;
    if (poly.coeffs.empty()) {
        out.push_back("polynomial has no coefficients");
        return out;
    }
    const std::size_t n = poly.coeffs.front().rows();
    for (std::size_t j = 0; j < poly.coeffs.size(); ++j) {
        const auto& C = poly.coeffs[j];
        if (!C.is_square() || C.rows() != n) {
            out.push_back("coefficient " + std::to_string(j) + " has inconsistent shape");
            return out;
        }
        check_finite(out, C, "coefficient " + std::to_string(j));
    }
    const std::size_t m = poly.degree();
    switch (poly.tag) {
        case StructureTag::Unstructured:
            break;
        case StructureTag::Hermitian:
            for (std::size_t j = 0; j <= m; ++j)
                check_hermitian(out, poly.coeffs[j], "coefficient " + std::to_string(j));
            break;
        case StructureTag::SkewHermitian:
            for (std::size_t j = 0; j <= m; ++j)
                check_skew(out, poly.coeffs[j], "coefficient " + std::to_string(j));
            break;
        case StructureTag::StarEven:
            for (std::size_t j = 0; j <= m; ++j) {
                if (j % 2 == 0)
                    check_hermitian(out, poly.coeffs[j], "coefficient " + std::to_string(j));
                else
                    check_skew(out, poly.coeffs[j], "coefficient " + std::to_string(j));
            }
            break;
        case StructureTag::StarOdd:
            for (std::size_t j = 0; j <= m; ++j) {
                if (j % 2 == 0)
                    check_skew(out, poly.coeffs[j], "coefficient " + std::to_string(j));
                else
                    check_hermitian(out, poly.coeffs[j], "coefficient " + std::to_string(j));
            }
            break;
        case StructureTag::StarPalindromic:
            for (std::size_t j = 0; j <= m; ++j)
                check_equal(out, poly.coeffs[j], poly.coeffs[m - j].adjoint(),
                            "A_" + std::to_string(j) + " != A_" + std::to_string(m - j) + "^H");
            break;
        case StructureTag::TPalindromic:
            for (std::size_t j = 0; j <= m; ++j)
                check_equal(out, poly.coeffs[j], poly.coeffs[m - j].transpose(),
                            "A_" + std::to_string(j) + " != A_" + std::to_string(m - j) + "^T");
            break;
        case StructureTag::DissipativeHamiltonian:
            out.push_back("dissipative-hamiltonian polynomials are not supported");
            break;
    }
    return out;
}

namespace {

ComplexMatrix random_hermitian(Rng& rng, std::size_t n) {
    return hermitian_part(rng.gaussian_matrix(n, n));
}

ComplexMatrix random_skew(Rng& rng, std::size_t n) {
    const ComplexMatrix B = rng.gaussian_matrix(n, n);
    return (B - B.adjoint()) * Complex(0.5, 0.0);
}

ComplexMatrix random_psd(Rng& rng, std::size_t n, std::size_t rank) {
    const std::size_t k = (rank == 0 || rank > n) ? n : rank;
    const ComplexMatrix B = rng.gaussian_matrix(k, n);
    return B.adjoint() * B;
}

} // namespace

StructuredPencil random_pencil(StructureTag tag, std::size_t n, std::uint64_t seed) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(tag)));
    StructuredPencil p;
    p.tag = tag;
    switch (tag) {
        case StructureTag::Unstructured:
            p.A = rng.gaussian_matrix(n, n);
            p.E = rng.gaussian_matrix(n, n);
            break;
        case StructureTag::Hermitian:
            p.A = random_hermitian(rng, n);
            p.E = random_hermitian(rng, n);
            break;
        case StructureTag::SkewHermitian:
            p.A = random_skew(rng, n);
            p.E = random_skew(rng, n);
            break;
        case StructureTag::StarEven:
            p.A = random_hermitian(rng, n);
            p.E = random_skew(rng, n);
            break;
        case StructureTag::StarOdd:
            p.A = random_skew(rng, n);
            p.E = random_hermitian(rng, n);
            break;
        case StructureTag::StarPalindromic:
            p.A = rng.gaussian_matrix(n, n);
            p.E = p.A.adjoint();
            break;
        case StructureTag::TPalindromic:
            p.A = rng.gaussian_matrix(n, n);
            p.E = p.A.transpose();
            break;
        case StructureTag::DissipativeHamiltonian:
            throw UnsupportedTag("use random_dh for dissipative Hamiltonian triples");
    }
    return p;
}

DHTriple random_dh(std::size_t n, std::uint64_t seed, std::size_t rank_r, std::size_t rank_e) {
    Rng rng(derive_seed(seed, 0xD4));
    DHTriple t;
    t.J = random_skew(rng, n);
    t.R = random_psd(rng, n, rank_r);
    t.E = random_psd(rng, n, rank_e);
    return t;
}

MatrixPolynomial random_polynomial(StructureTag tag, std::size_t n, std::size_t degree,
                                   std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0x90 + static_cast<std::uint64_t>(tag)));
    MatrixPolynomial p;
    p.tag = tag;
    p.coeffs.resize(degree + 1);
    switch (tag) {
        case StructureTag::Unstructured:
            for (auto& C : p.coeffs) C = rng.gaussian_matrix(n, n);
            break;
        case StructureTag::Hermitian:
            for (auto& C : p.coeffs) C = random_hermitian(rng, n);
            break;
        case StructureTag::SkewHermitian:
            for (auto& C : p.coeffs) C = random_skew(rng, n);
            break;
        case StructureTag::StarEven:
            for (std::size_t j = 0; j <= degree; ++j)
                p.coeffs[j] = (j % 2 == 0) ? random_hermitian(rng, n) : random_skew(rng, n);
            break;
        case StructureTag::StarOdd:
            for (std::size_t j = 0; j <= degree; ++j)
                p.coeffs[j] = (j % 2 == 0) ? random_skew(rng, n) : random_hermitian(rng, n);
            break;
        case StructureTag::StarPalindromic:
        case StructureTag::TPalindromic: {
            const bool conj_star = (tag == StructureTag::StarPalindromic);
            for (std::size_t j = 0; j <= degree / 2; ++j) {
                ComplexMatrix C = rng.gaussian_matrix(n, n);
                if (2 * j == degree) {
                    // middle coefficient must be its own star adjoint
                    C = conj_star ? hermitian_part(C)
                                  : (C + C.transpose()) * Complex(0.5, 0.0);
                }
                p.coeffs[j] = C;
                p.coeffs[degree - j] = conj_star ? C.adjoint() : C.transpose();
            }
            break;
        }
        case StructureTag::DissipativeHamiltonian:
            throw UnsupportedTag("dissipative-hamiltonian polynomials are not supported");
    }
    return p;
}

StructuredInstance random_structured(StructureTag tag, std::size_t n, std::uint64_t seed) {
    if (tag == StructureTag::DissipativeHamiltonian) return random_dh(n, seed);
    return random_pencil(tag, n, seed);
}

RegularityProbe is_regular(const StructuredPencil& pencil, std::size_t probes, std::uint64_t seed) {
    if (probes == 0) probes = 1;
    const double norm_a = spectral_norm(pencil.A);
    const double norm_e = spectral_norm(pencil.E);
    const double radius = 1.0 + norm_a / (1.0 + sigma_min(pencil.E));
    Rng rng(seed);
    RegularityProbe result;
    for (std::size_t i = 0; i < probes; ++i) {
        Complex lambda;
        do {
            lambda = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        } while (std::abs(lambda) > 1.0);
        lambda *= radius;
        const double margin = sigma_min(pencil.A + lambda * pencil.E);
        const double threshold = 1e-10 * (1.0 + norm_a + std::abs(lambda) * norm_e);
        result.probes_used = i + 1;
        if (margin > threshold) {
            result.regular = true;
            result.certificate_lambda = lambda;
            result.margin = margin;
            return result;
        }
        result.margin = std::max(result.margin, margin);
    }
    result.regular = false;
    return result;
}

bool OptimizerTrace::has_flag(const std::string& f) const {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
}

void OptimizerTrace::add_flag(const std::string& f) {
    if (!has_flag(f)) flags.push_back(f);
}

double combined_perturbation_norm(const DistanceReport& report) {
    double s = 0.0;
    for (const auto& p : report.perturbations) {
        const double v = spectral_norm(p.matrix);
        s += v * v;
    }
    return std::sqrt(s);
}

double combined_perturbation_frobenius_norm(const DistanceReport& report) {
    double s = 0.0;
    for (const auto& p : report.perturbations) {
        const double v = frobenius_norm(p.matrix);
        s += v * v;
    }
    return std::sqrt(s);
}

} // namespace pencildist
