#pragma once

#include <string>

#include "esdlab/linalg.hpp"

namespace esdlab {

enum class StateKind { W, Ghz, Cluster4 };

// Identifies one of the factory states. CLI string forms: "w:N", "ghz:N",
// "cluster4".
struct StateId {
    StateKind kind;
    std::size_t n_qubits;

    static StateId w(std::size_t n);
    static StateId ghz(std::size_t n);
    static StateId cluster4();
    static StateId parse(const std::string& text);
    std::string to_string() const;
};

// Unit-norm column vector (2^N x 1). All amplitudes real, fixed sign pattern:
// W_N puts 1/sqrt(N) on each single-excitation basis state; GHZ_N puts
// 1/sqrt(2) on |0...0> and |1...1>; the 4-qubit cluster state puts +1/2 on
// |0000>, |0011>, |1100> and -1/2 on |1111>.
Matrix make_pure(const StateId& id);

// rho = |psi><psi| for a unit-norm vector.
Matrix density_from_pure(const Matrix& psi);

}  // namespace esdlab
