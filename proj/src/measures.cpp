#include "esdlab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace esdlab {

namespace {

// Concurrences this small are rounding residue of max{0, .}.
constexpr double kZeroThreshold = 1e-9;

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void require_normalized_state(const Matrix& rho, const char* where) {
    require(rho.is_square(), where);
    if (std::abs(rho.trace() - cplx{1.0, 0.0}) > 1e-8)
        throw std::invalid_argument(std::string(where) + ": state is not normalized");
}

// Descending square roots of the spectrum of rho rho~, computed from the
// Hermitian PSD matrix sqrt(rho) rho~ sqrt(rho).
std::vector<double> spin_flip_roots(const Matrix& sqrt_rho, const Matrix& rho_tilde) {
    Matrix herm = sqrt_rho * rho_tilde * sqrt_rho;
    // Symmetrize away rounding before the eigensolver sees it.
    Matrix sym(herm.rows(), herm.cols());
    for (std::size_t i = 0; i < herm.rows(); ++i)
        for (std::size_t j = 0; j < herm.cols(); ++j)
            sym(i, j) = 0.5 * (herm(i, j) + std::conj(herm(j, i)));
    std::vector<double> eigs = hermitian_eigenvalues(sym);
    // Eigenvalues at rounding scale are numerical zeros; without this floor
    // the square root inflates them to ~1e-8 each.
    const double floor = eigs.empty() || eigs.front() <= 0.0 ? 0.0 : eigs.front() * 1e-13;
    for (double& lambda : eigs) lambda = lambda > floor ? std::sqrt(lambda) : 0.0;
    return eigs;  // already descending
}

double concurrence_from_roots(const std::vector<double>& roots) {
    double value = roots.empty() ? 0.0 : roots[0];
    for (std::size_t k = 1; k < std::min<std::size_t>(roots.size(), 4); ++k) value -= roots[k];
    value = std::max(0.0, value);
    return value < kZeroThreshold ? 0.0 : value;
}

}  // namespace

void BipartitionSpec::validate(const QubitRegister& reg) const {
    require(!side_a.empty() && !side_b.empty(), "BipartitionSpec: both sides must be nonempty");
    std::vector<int> seen(reg.n_qubits, 0);
    auto mark = [&](const std::vector<std::size_t>& group) {
        for (std::size_t q : group) {
            require(q < reg.n_qubits, "BipartitionSpec: qubit index out of range");
            require(seen[q] == 0, "BipartitionSpec: groups must be disjoint");
            seen[q] = 1;
        }
    };
    mark(side_a);
    mark(side_b);
    mark(discarded);
    for (std::size_t q = 0; q < reg.n_qubits; ++q)
        require(seen[q] == 1, "BipartitionSpec: groups must cover the register");
}

GeneratorSet so_generators(std::size_t d) {
    require(d >= 2, "so_generators: dimension must be at least 2");
    GeneratorSet set;
    set.dim = d;
    set.generators.reserve(d * (d - 1) / 2);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a + 1; b < d; ++b) {
            Matrix l(d, d);
            l(a, b) = cplx{0.0, -1.0};
            l(b, a) = cplx{0.0, 1.0};
            set.generators.push_back(std::move(l));
        }
    }
    return set;
}

double wootters_concurrence(const Matrix& rho) {
    require(rho.rows() == 4 && rho.cols() == 4, "wootters_concurrence: expected a 4x4 state");
    require_normalized_state(rho, "wootters_concurrence");

    const Matrix flip = kron(pauli::sigma_y(), pauli::sigma_y());
    const Matrix rho_tilde = flip * rho.conjugate() * flip;
    const Matrix root = psd_sqrt(rho);
    return concurrence_from_roots(spin_flip_roots(root, rho_tilde));
}

double pairwise_concurrence(const Matrix& rho, const QubitRegister& reg,
                            std::size_t i, std::size_t j) {
    require(i != j, "pairwise_concurrence: qubits must differ");
    require(i < reg.n_qubits && j < reg.n_qubits, "pairwise_concurrence: qubit out of range");
    return wootters_concurrence(partial_trace(rho, reg, {i, j}));
}

double bipartite_concurrence(const Matrix& rho, const QubitRegister& reg,
                             const BipartitionSpec& part) {
    part.validate(reg);
    require_normalized_state(rho, "bipartite_concurrence");

    // Trace out the discarded qubits, then reorder so side_a precedes side_b.
    std::vector<std::size_t> keep = part.side_a;
    keep.insert(keep.end(), part.side_b.begin(), part.side_b.end());
    std::vector<std::size_t> keep_sorted = keep;
    std::sort(keep_sorted.begin(), keep_sorted.end());
    Matrix reduced = partial_trace(rho, reg, keep_sorted);

    QubitRegister sub(keep.size());
    std::vector<std::size_t> order(keep.size());
    for (std::size_t pos = 0; pos < keep.size(); ++pos) {
        const auto it = std::find(keep_sorted.begin(), keep_sorted.end(), keep[pos]);
        order[pos] = static_cast<std::size_t>(it - keep_sorted.begin());
    }
    reduced = permute_qubits(reduced, sub, order);

    const Matrix reduced_conj = reduced.conjugate();
    const Matrix root = psd_sqrt(reduced);
    const GeneratorSet left = so_generators(part.d1());
    const GeneratorSet right = so_generators(part.d2());

    double sum_sq = 0.0;
    for (const Matrix& lm : left.generators) {
        for (const Matrix& ln : right.generators) {
            const Matrix s = kron(lm, ln);
            const Matrix rho_tilde = s * reduced_conj * s;
            const double c = concurrence_from_roots(spin_flip_roots(root, rho_tilde));
            sum_sq += c * c;
        }
    }
    const double bc = std::sqrt(sum_sq);
    return bc < kZeroThreshold ? 0.0 : bc;
}

double i_concurrence_pure(const Matrix& psi, const BipartitionSpec& part) {
    require(psi.cols() == 1, "i_concurrence_pure: expected a state vector");
    require(part.discarded.empty(), "i_concurrence_pure: partition must not discard qubits");

    double norm2 = 0.0;
    for (std::size_t i = 0; i < psi.rows(); ++i) norm2 += std::norm(psi(i, 0));
    if (std::abs(norm2 - 1.0) > 1e-10)
        throw std::invalid_argument("i_concurrence_pure: input is not a normalized pure state");

    std::size_t n = 0;
    while ((std::size_t{1} << n) < psi.rows()) ++n;
    QubitRegister reg(n);
    part.validate(reg);

    Matrix rho(psi.rows(), psi.rows());
    for (std::size_t i = 0; i < psi.rows(); ++i)
        for (std::size_t j = 0; j < psi.rows(); ++j)
            rho(i, j) = psi(i, 0) * std::conj(psi(j, 0));
    const Matrix rho_a = partial_trace(rho, reg, part.side_a);
    const double purity = (rho_a * rho_a).trace().real();
    const double val = std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
    return val < kZeroThreshold ? 0.0 : val;
}

}  // namespace esdlab
