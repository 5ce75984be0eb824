#ifndef PENCILDIST_MODEL_HPP
#define PENCILDIST_MODEL_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pencildist/matrix.hpp"

namespace pencildist {

enum class StructureTag {
    Unstructured,
    Hermitian,
    SkewHermitian,
    StarEven,
    StarOdd,
    StarPalindromic,
    TPalindromic,
    DissipativeHamiltonian,
};

/// Which adjoint a palindromic structure uses: conjugate transpose or plain
/// transpose.
enum class Star { ConjugateTranspose, Transpose };

std::string to_string(StructureTag tag);
StructureTag tag_from_string(const std::string& name);

/// Matrix pencil L(s) = A + s E carrying its symmetry class.
struct StructuredPencil {
    ComplexMatrix A;
    ComplexMatrix E;
    StructureTag tag = StructureTag::Unstructured;

    std::size_t size() const { return A.rows(); }
};

/// Dissipative Hamiltonian triple: pencil s E + (J - R) with J skew-Hermitian
/// and R, E positive semidefinite.
struct DHTriple {
    ComplexMatrix J;
    ComplexMatrix R;
    ComplexMatrix E;

    std::size_t size() const { return J.rows(); }
};

/// P(s) = sum_j s^j A_j with a symmetry class on the coefficient list.
struct MatrixPolynomial {
    std::vector<ComplexMatrix> coeffs;
    StructureTag tag = StructureTag::Unstructured;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    std::size_t size() const { return coeffs.empty() ? 0 : coeffs.front().rows(); }
};

/// Relative tolerance used by all structure validation checks.
inline constexpr double kStructureTol = 1e-10;

/// Violated invariants, human-readable; empty means valid.
std::vector<std::string> validate(const StructuredPencil& pencil);
std::vector<std::string> validate(const DHTriple& triple);
std::vector<std::string> validate(const MatrixPolynomial& poly);

/// Deterministic structured random instances (PSD factors built as B^H B).
StructuredPencil random_pencil(StructureTag tag, std::size_t n, std::uint64_t seed);
/// rank_r / rank_e < n produce rank-deficient R / E to exercise kernel
/// branches of the DH distance formulas.
DHTriple random_dh(std::size_t n, std::uint64_t seed, std::size_t rank_r = 0, std::size_t rank_e = 0);
MatrixPolynomial random_polynomial(StructureTag tag, std::size_t n, std::size_t degree,
                                   std::uint64_t seed);

using StructuredInstance = std::variant<StructuredPencil, DHTriple>;
StructuredInstance random_structured(StructureTag tag, std::size_t n, std::uint64_t seed);

struct RegularityProbe {
    bool regular = false;
    Complex certificate_lambda{0.0, 0.0};
    double margin = 0.0;
    std::size_t probes_used = 0;
};

/// Probabilistic regularity test: random lambdas in a disk scaled to the
/// pencil; "regular" comes with a certificate lambda where sigma_min is
/// comfortably positive, "singular" only means every probe failed.
RegularityProbe is_regular(const StructuredPencil& pencil, std::size_t probes = 16,
                           std::uint64_t seed = 0x5eedULL);

struct NamedPerturbation {
    std::string name;
    ComplexMatrix matrix;
};

struct OptimizerTrace {
    std::size_t evaluations = 0;
    std::vector<double> best_point;
    double best_value = 0.0;
    std::vector<std::string> flags;

    bool has_flag(const std::string& f) const;
    void add_flag(const std::string& f);
};

/// Sign conventions: pencil and polynomial reports perturb as X - Delta_X;
/// DH reports perturb as X + Delta_X (so the witness lies in every kernel of
/// the perturbed matrices either way).
enum class PerturbationConvention { Subtract, Add };

/// Result of a distance computation: the value, the optimal perturbations,
/// the witness direction certifying them, and optimizer diagnostics.
struct DistanceReport {
    double value = std::numeric_limits<double>::infinity();
    std::vector<NamedPerturbation> perturbations;
    std::optional<CVector> witness;
    std::optional<OptimizerTrace> trace;
    std::map<std::string, double> metadata;
    std::string attained_by;
    PerturbationConvention convention = PerturbationConvention::Subtract;

    bool finite() const { return std::isfinite(value); }
};

inline double infinite_distance() { return std::numeric_limits<double>::infinity(); }

/// sqrt(sum of squared spectral norms) over all perturbations in the report.
double combined_perturbation_norm(const DistanceReport& report);
/// sqrt(sum of squared Frobenius norms) over all perturbations.
double combined_perturbation_frobenius_norm(const DistanceReport& report);

} // namespace pencildist

#endif
