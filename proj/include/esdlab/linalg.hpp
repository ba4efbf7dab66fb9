#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace esdlab {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Sized for multi-qubit density matrices
// (dimension <= 2^8); no sparse storage.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<cplx>& data() const { return data_; }

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(cplx scale);

    cplx trace() const;
    Matrix conjugate() const;
    double frobenius_norm() const;
    double max_abs() const;           // largest entry modulus
    bool is_square() const { return rows_ == cols_; }

    // Throws if any entry is NaN or infinite.
    void require_finite(const char* where) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(cplx scale, Matrix a);

// Fixed basis convention: qubit 0 is the leftmost tensor factor and the most
// significant bit of the basis index, so |q0 q1 ... q_{N-1}> has index
// sum_i q_i 2^{N-1-i}. All modules inherit this ordering.
struct QubitRegister {
    explicit QubitRegister(std::size_t n);
    std::size_t n_qubits;
    std::size_t dimension() const { return std::size_t{1} << n_qubits; }
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix dagger(const Matrix& a);

// Reduced state on `keep` (order of kept qubits preserved).
Matrix partial_trace(const Matrix& rho, const QubitRegister& reg,
                     const std::vector<std::size_t>& keep);

// Full 2^N operator acting as ops[i] on targets[i] and identity elsewhere.
// Each op must be 2x2; targets must be distinct and in range.
Matrix embed_on_qubits(const std::vector<Matrix>& ops,
                       const std::vector<std::size_t>& targets,
                       const QubitRegister& reg);

// Relabel tensor factors: new_order[p] is the old qubit sitting at new
// position p. Returns rho expressed in the permuted basis.
Matrix permute_qubits(const Matrix& rho, const QubitRegister& reg,
                      const std::vector<std::size_t>& new_order);

// Eigenvalues of a Hermitian matrix, descending. Cyclic Jacobi sweeps,
// off-diagonal Frobenius threshold 1e-14, at most 100 sweeps.
std::vector<double> hermitian_eigenvalues(const Matrix& a);

struct EigenSystem {
    std::vector<double> values;  // descending
    Matrix vectors;              // column k pairs with values[k]
};
EigenSystem hermitian_eigensystem(const Matrix& a);

// Hermitian PSD square root. Eigenvalues in [-1e-8, 0) are clamped to zero;
// anything below -1e-8 is rejected as genuinely non-PSD.
Matrix psd_sqrt(const Matrix& a);

namespace pauli {
Matrix sigma_y();
}

}  // namespace esdlab
