#include "pencildist/rng.hpp"

#include <cmath>

namespace pencildist {

double Rng::uniform() {
    // 53 random bits -> [0, 1)
    return (engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

Complex Rng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re * M_SQRT1_2, im * M_SQRT1_2);
}

CVector Rng::unit_vector(std::size_t n) {
    CVector v(n);
    double s = 0.0;
    do {
        for (auto& z : v) z = complex_gaussian();
        s = norm(v);
    } while (s == 0.0);
    return scaled(v, Complex(1.0 / s, 0.0));
}

ComplexMatrix Rng::gaussian_matrix(std::size_t rows, std::size_t cols) {
    ComplexMatrix M(rows, cols);
    for (auto& z : M.data()) z = complex_gaussian();
    return M;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (counter + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace pencildist
