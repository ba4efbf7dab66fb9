#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "esdlab/linalg.hpp"

namespace esdlab::test {

// Deterministic PRNG so every platform sees the same pseudo-random inputs.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [-1, 1)
    double symmetric() {
        return 2.0 * (static_cast<double>(next() >> 11) * 0x1.0p-53) - 1.0;
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

inline Matrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = cplx{rng.symmetric(), rng.symmetric()};
    return m;
}

inline Matrix random_hermitian(SplitMix64& rng, std::size_t n) {
    const Matrix a = random_matrix(rng, n, n);
    Matrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return h;
}

// rho = A A^dag / tr(A A^dag): a full-rank random mixed state.
inline Matrix random_density(SplitMix64& rng, std::size_t dim) {
    const Matrix a = random_matrix(rng, dim, dim);
    Matrix rho = a * dagger(a);
    const double tr = rho.trace().real();
    rho *= cplx{1.0 / tr, 0.0};
    return rho;
}

inline Matrix random_pure_density(SplitMix64& rng, std::size_t dim) {
    Matrix psi(dim, 1);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        psi(i, 0) = cplx{rng.symmetric(), rng.symmetric()};
        norm2 += std::norm(psi(i, 0));
    }
    const double scale = 1.0 / std::sqrt(norm2);
    Matrix rho(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            rho(i, j) = psi(i, 0) * std::conj(psi(j, 0)) * scale * scale;
    return rho;
}

inline Matrix random_pure_vector(SplitMix64& rng, std::size_t dim) {
    Matrix psi(dim, 1);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        psi(i, 0) = cplx{rng.symmetric(), rng.symmetric()};
        norm2 += std::norm(psi(i, 0));
    }
    const cplx scale{1.0 / std::sqrt(norm2), 0.0};
    for (std::size_t i = 0; i < dim; ++i) psi(i, 0) *= scale;
    return psi;
}

// Random unitary by Gram-Schmidt on a random complex matrix.
inline Matrix random_unitary(SplitMix64& rng, std::size_t n) {
    Matrix a = random_matrix(rng, n, n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t prev = 0; prev < col; ++prev) {
            cplx overlap = 0.0;
            for (std::size_t r = 0; r < n; ++r) overlap += std::conj(a(r, prev)) * a(r, col);
            for (std::size_t r = 0; r < n; ++r) a(r, col) -= overlap * a(r, prev);
        }
        double norm2 = 0.0;
        for (std::size_t r = 0; r < n; ++r) norm2 += std::norm(a(r, col));
        const cplx inv{1.0 / std::sqrt(norm2), 0.0};
        for (std::size_t r = 0; r < n; ++r) a(r, col) *= inv;
    }
    return a;
}

inline double max_entry_diff(const Matrix& a, const Matrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

}  // namespace esdlab::test
