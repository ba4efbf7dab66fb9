#include "esdlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace esdlab {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    require(data_.size() == rows_ * cols_, "Matrix: entry count does not match dimensions");
    require_finite("Matrix");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

Matrix& Matrix::operator+=(const Matrix& other) {
    require(rows_ == other.rows_ && cols_ == other.cols_, "Matrix +=: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    require(rows_ == other.rows_ && cols_ == other.cols_, "Matrix -=: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(cplx scale) {
    for (auto& z : data_) z *= scale;
    return *this;
}

cplx Matrix::trace() const {
    require(is_square(), "trace: matrix not square");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Matrix Matrix::conjugate() const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = std::conj(data_[i]);
    return out;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

void Matrix::require_finite(const char* where) const {
    for (const auto& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument(std::string(where) + ": non-finite entry");
    }
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "Matrix *: inner dimension mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Matrix operator*(cplx scale, Matrix a) { return a *= scale; }

QubitRegister::QubitRegister(std::size_t n) : n_qubits(n) {
    require(n >= 1, "QubitRegister: need at least one qubit");
    require(n <= 10, "QubitRegister: dimension cap is 2^10");
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const cplx aij = a(i1, j1);
            if (aij == cplx{0.0, 0.0}) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    out(i1 * b.rows() + i2, j1 * b.cols() + j2) = aij * b(i2, j2);
        }
    return out;
}

Matrix dagger(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

Matrix partial_trace(const Matrix& rho, const QubitRegister& reg,
                     const std::vector<std::size_t>& keep) {
    const std::size_t n = reg.n_qubits;
    require(rho.is_square() && rho.rows() == reg.dimension(),
            "partial_trace: state dimension does not match register");
    require(!keep.empty(), "partial_trace: keep set must be nonempty");

    std::vector<bool> kept(n, false);
    for (std::size_t q : keep) {
        require(q < n, "partial_trace: qubit index out of range");
        require(!kept[q], "partial_trace: repeated qubit index");
        kept[q] = true;
    }
    std::vector<std::size_t> dropped;
    for (std::size_t q = 0; q < n; ++q)
        if (!kept[q]) dropped.push_back(q);

    const std::size_t dk = std::size_t{1} << keep.size();
    const std::size_t dd = std::size_t{1} << dropped.size();
    auto bit_of = [n](std::size_t q) { return std::size_t{1} << (n - 1 - q); };

    Matrix out(dk, dk);
    for (std::size_t i = 0; i < dk; ++i) {
        for (std::size_t j = 0; j < dk; ++j) {
            std::size_t base_i = 0, base_j = 0;
            for (std::size_t b = 0; b < keep.size(); ++b) {
                if ((i >> (keep.size() - 1 - b)) & 1u) base_i |= bit_of(keep[b]);
                if ((j >> (keep.size() - 1 - b)) & 1u) base_j |= bit_of(keep[b]);
            }
            cplx sum = 0.0;
            for (std::size_t e = 0; e < dd; ++e) {
                std::size_t env = 0;
                for (std::size_t b = 0; b < dropped.size(); ++b)
                    if ((e >> (dropped.size() - 1 - b)) & 1u) env |= bit_of(dropped[b]);
                sum += rho(base_i | env, base_j | env);
            }
            out(i, j) = sum;
        }
    }
    return out;
}

Matrix embed_on_qubits(const std::vector<Matrix>& ops,
                       const std::vector<std::size_t>& targets,
                       const QubitRegister& reg) {
    require(ops.size() == targets.size(), "embed_on_qubits: ops/targets size mismatch");
    std::vector<bool> used(reg.n_qubits, false);
    for (std::size_t q : targets) {
        require(q < reg.n_qubits, "embed_on_qubits: target out of range");
        require(!used[q], "embed_on_qubits: repeated target");
        used[q] = true;
    }
    for (const auto& op : ops)
        require(op.rows() == 2 && op.cols() == 2, "embed_on_qubits: operators must be 2x2");

    Matrix out(1, 1);
    out(0, 0) = 1.0;
    for (std::size_t q = 0; q < reg.n_qubits; ++q) {
        const Matrix* factor = nullptr;
        for (std::size_t t = 0; t < targets.size(); ++t)
            if (targets[t] == q) factor = &ops[t];
        out = factor ? kron(out, *factor) : kron(out, Matrix::identity(2));
    }
    return out;
}

Matrix permute_qubits(const Matrix& rho, const QubitRegister& reg,
                      const std::vector<std::size_t>& new_order) {
    const std::size_t n = reg.n_qubits;
    require(new_order.size() == n, "permute_qubits: order must list every qubit");
    require(rho.is_square() && rho.rows() == reg.dimension(),
            "permute_qubits: state dimension does not match register");
    std::vector<bool> seen(n, false);
    for (std::size_t q : new_order) {
        require(q < n && !seen[q], "permute_qubits: order must be a permutation");
        seen[q] = true;
    }

    const std::size_t dim = reg.dimension();
    std::vector<std::size_t> old_index(dim, 0);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::size_t old = 0;
        for (std::size_t pos = 0; pos < n; ++pos)
            if ((idx >> (n - 1 - pos)) & 1u) old |= std::size_t{1} << (n - 1 - new_order[pos]);
        old_index[idx] = old;
    }
    Matrix out(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) out(i, j) = rho(old_index[i], old_index[j]);
    return out;
}

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kOffDiagThreshold = 1e-14;
constexpr int kMaxSweeps = 100;

double hermiticity_defect(const Matrix& a) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    return worst;
}

double offdiag_frobenius(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One cyclic Jacobi pass over the strict upper triangle of A, rotating pairs
// (p,q) to annihilate A(p,q). V accumulates the eigenvector basis if present.
void jacobi_sweep(Matrix& a, Matrix* v) {
    const std::size_t n = a.rows();
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const cplx apq = a(p, q);
            const double mag = std::abs(apq);
            if (mag == 0.0) continue;

            const cplx phase = apq / mag;  // e^{i phi}
            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            const double tau = (aqq - app) / (2.0 * mag);
            const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;

            // Columns of the plane rotation: J(:,p) = (c, -s e^{-i phi}),
            // J(:,q) = (s phase^* ... ) arranged so that (J^dag A J)(p,q) = 0.
            const cplx jpp = c;
            const cplx jqp = -s * std::conj(phase);
            const cplx jpq = s * phase;
            const cplx jqq = c;

            // A <- J^dag A J. Update columns then rows.
            for (std::size_t k = 0; k < n; ++k) {
                const cplx akp = a(k, p);
                const cplx akq = a(k, q);
                a(k, p) = akp * jpp + akq * jqp;
                a(k, q) = akp * jpq + akq * jqq;
            }
            for (std::size_t k = 0; k < n; ++k) {
                const cplx apk = a(p, k);
                const cplx aqk = a(q, k);
                a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
            }
            a(p, q) = 0.0;
            a(q, p) = 0.0;
            a(p, p) = cplx{a(p, p).real(), 0.0};
            a(q, q) = cplx{a(q, q).real(), 0.0};

            if (v) {
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = (*v)(k, p);
                    const cplx vkq = (*v)(k, q);
                    (*v)(k, p) = vkp * jpp + vkq * jqp;
                    (*v)(k, q) = vkp * jpq + vkq * jqq;
                }
            }
        }
    }
}

EigenSystem jacobi_eigensystem(const Matrix& input, bool want_vectors) {
    require(input.is_square(), "hermitian eigensolver: matrix not square");
    require(hermiticity_defect(input) <= kHermitianTol,
            "hermitian eigensolver: input is not Hermitian");

    Matrix a = input;
    const std::size_t n = a.rows();
    Matrix v = want_vectors ? Matrix::identity(n) : Matrix();

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_frobenius(a) <= kOffDiagThreshold) break;
        jacobi_sweep(a, want_vectors ? &v : nullptr);
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&a](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });

    EigenSystem out;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = a(order[i], order[i]).real();
    if (want_vectors) {
        out.vectors = Matrix(n, n);
        for (std::size_t col = 0; col < n; ++col)
            for (std::size_t row = 0; row < n; ++row) out.vectors(row, col) = v(row, order[col]);
    }
    return out;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const Matrix& a) {
    return jacobi_eigensystem(a, false).values;
}

EigenSystem hermitian_eigensystem(const Matrix& a) { return jacobi_eigensystem(a, true); }

Matrix psd_sqrt(const Matrix& a) {
    EigenSystem es = hermitian_eigensystem(a);
    for (double& lambda : es.values) {
        if (lambda < -1e-8)
            throw std::invalid_argument("psd_sqrt: matrix has a significantly negative eigenvalue");
        if (lambda < 0.0) lambda = 0.0;
    }
    const std::size_t n = a.rows();
    Matrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double root = std::sqrt(es.values[k]);
        if (root == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx vik = es.vectors(i, k);
            if (vik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += root * vik * std::conj(es.vectors(j, k));
        }
    }
    return out;
}

namespace pauli {

Matrix sigma_y() {
    Matrix m(2, 2);
    m(0, 1) = cplx{0.0, -1.0};
    m(1, 0) = cplx{0.0, 1.0};
    return m;
}

}  // namespace pauli

}  // namespace esdlab
