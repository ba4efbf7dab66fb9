#include "esdlab/states.hpp"

#include <cmath>
#include <stdexcept>

namespace esdlab {

namespace {

std::size_t parse_count(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    unsigned long n = 0;
    try {
        n = std::stoul(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("StateId: bad qubit count in '" + what + "'");
    }
    if (pos != text.size()) throw std::invalid_argument("StateId: bad qubit count in '" + what + "'");
    return static_cast<std::size_t>(n);
}

}  // namespace

StateId StateId::w(std::size_t n) {
    if (n < 2) throw std::invalid_argument("StateId: W state needs at least 2 qubits");
    return {StateKind::W, n};
}

StateId StateId::ghz(std::size_t n) {
    if (n < 2) throw std::invalid_argument("StateId: GHZ state needs at least 2 qubits");
    return {StateKind::Ghz, n};
}

StateId StateId::cluster4() { return {StateKind::Cluster4, 4}; }

StateId StateId::parse(const std::string& text) {
    if (text == "cluster4") return cluster4();
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string head = text.substr(0, colon);
        const std::size_t n = parse_count(text.substr(colon + 1), text);
        if (head == "w") return w(n);
        if (head == "ghz") return ghz(n);
    }
    throw std::invalid_argument("StateId: unknown state '" + text + "' (expected w:N, ghz:N or cluster4)");
}

std::string StateId::to_string() const {
    switch (kind) {
        case StateKind::W: return "w:" + std::to_string(n_qubits);
        case StateKind::Ghz: return "ghz:" + std::to_string(n_qubits);
        case StateKind::Cluster4: return "cluster4";
    }
    return {};
}

Matrix make_pure(const StateId& id) {
    QubitRegister reg(id.n_qubits);
    const std::size_t dim = reg.dimension();
    Matrix psi(dim, 1);
    switch (id.kind) {
        case StateKind::W: {
            const double amp = 1.0 / std::sqrt(static_cast<double>(id.n_qubits));
            for (std::size_t q = 0; q < id.n_qubits; ++q)
                psi(std::size_t{1} << (id.n_qubits - 1 - q), 0) = amp;
            break;
        }
        case StateKind::Ghz: {
            const double amp = 1.0 / std::sqrt(2.0);
            psi(0, 0) = amp;
            psi(dim - 1, 0) = amp;
            break;
        }
        case StateKind::Cluster4: {
            psi(0b0000, 0) = 0.5;
            psi(0b0011, 0) = 0.5;
            psi(0b1100, 0) = 0.5;
            psi(0b1111, 0) = -0.5;
            break;
        }
    }
    return psi;
}

Matrix density_from_pure(const Matrix& psi) {
    if (psi.cols() != 1) throw std::invalid_argument("density_from_pure: expected a column vector");
    double norm2 = 0.0;
    for (std::size_t i = 0; i < psi.rows(); ++i) norm2 += std::norm(psi(i, 0));
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw std::invalid_argument("density_from_pure: vector is not normalized");
    Matrix rho(psi.rows(), psi.rows());
    for (std::size_t i = 0; i < psi.rows(); ++i) {
        if (psi(i, 0) == cplx{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < psi.rows(); ++j)
            rho(i, j) = psi(i, 0) * std::conj(psi(j, 0));
    }
    return rho;
}

}  // namespace esdlab
