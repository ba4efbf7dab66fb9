#pragma once

#include <vector>

#include "esdlab/linalg.hpp"

namespace esdlab {

// Bipartition of a register: side_a tensor side_b after tracing out
// `discarded`. The three lists are disjoint and cover the register.
struct BipartitionSpec {
    std::vector<std::size_t> side_a;
    std::vector<std::size_t> side_b;
    std::vector<std::size_t> discarded;

    std::size_t d1() const { return std::size_t{1} << side_a.size(); }
    std::size_t d2() const { return std::size_t{1} << side_b.size(); }
    void validate(const QubitRegister& reg) const;
};

// SO(d) generators L_ab = -i(|a><b| - |b><a|) for a < b, entries of modulus
// one so that d = 2 reduces exactly to sigma_y.
struct GeneratorSet {
    std::size_t dim;
    std::vector<Matrix> generators;  // d(d-1)/2 of them
};
GeneratorSet so_generators(std::size_t d);

// Wootters concurrence of a normalized two-qubit state. The spin-flip
// spectrum is extracted through the Hermitian form sqrt(rho) rho~ sqrt(rho),
// which shares the spectrum of rho rho~.
double wootters_concurrence(const Matrix& rho);

// Wootters concurrence of the (i, j) reduction.
double pairwise_concurrence(const Matrix& rho, const QubitRegister& reg,
                            std::size_t i, std::size_t j);

// Generalized bipartite concurrence BC = sqrt(sum_mn C_mn^2) over all
// generator pairs S_mn = L_m (x) L_n, with C_mn built from the four largest
// clamped eigenvalue roots of rho rho~_mn. Values below 1e-9 report as 0.
double bipartite_concurrence(const Matrix& rho, const QubitRegister& reg,
                             const BipartitionSpec& part);

// Pure-state oracle sqrt(2 (1 - tr rho_A^2)). The partition must not discard
// any qubit.
double i_concurrence_pure(const Matrix& psi, const BipartitionSpec& part);

}  // namespace esdlab
