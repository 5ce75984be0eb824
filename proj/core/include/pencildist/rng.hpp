#ifndef PENCILDIST_RNG_HPP
#define PENCILDIST_RNG_HPP

#include <cstdint>
#include <random>

#include "pencildist/matrix.hpp"

namespace pencildist {

/// Seeded random source with a self-contained Box-Muller Gaussian, so that
/// identical seeds produce bitwise-identical streams on every platform
/// (std::normal_distribution is implementation-defined; we avoid it).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double uniform();
    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);
    /// Standard real Gaussian.
    double gaussian();
    /// Complex Gaussian with E|z|^2 = 1.
    Complex complex_gaussian();

    /// Uniformly distributed point on the complex unit sphere in C^n.
    CVector unit_vector(std::size_t n);
    /// n x m matrix with independent complex Gaussian entries.
    ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols);

    std::uint64_t next_raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Stateless seed mixer (splitmix64): derives independent per-task seeds from
/// a base seed and a counter, so parallel trial loops stay deterministic.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter);

} // namespace pencildist

#endif
