#include "esdlab/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace esdlab {

GadParams::GadParams(double gamma_, double p_) : gamma(gamma_), p(p_) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::invalid_argument("GadParams: gamma must lie in [0, 1]");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("GadParams: p must lie in [0, 1]");
}

FilterParams::FilterParams(double kappa_) : kappa(kappa_) {
    if (!(kappa > 0.0 && kappa < 1.0))
        throw std::invalid_argument("FilterParams: kappa must lie in (0, 1)");
}

KrausChannel::KrausChannel(std::vector<Matrix> ops, bool trace_preserving_)
    : operators(std::move(ops)), trace_preserving(trace_preserving_) {
    if (operators.empty()) return;
    const std::size_t d = operators.front().rows();
    for (const auto& op : operators) {
        if (!op.is_square() || op.rows() != d)
            throw std::invalid_argument("KrausChannel: operators must be square with equal dims");
        op.require_finite("KrausChannel");
    }
    Matrix sum = Matrix::zero(d, d);
    for (const auto& op : operators) sum += dagger(op) * op;
    if (trace_preserving) {
        sum -= Matrix::identity(d);
        if (sum.max_abs() > 1e-12)
            throw std::invalid_argument("KrausChannel: operators do not satisfy completeness");
    } else {
        const auto eigs = hermitian_eigenvalues(sum);
        if (!eigs.empty() && eigs.front() > 1.0 + 1e-12)
            throw std::invalid_argument("KrausChannel: sum K^dag K exceeds the identity");
    }
}

KrausChannel gad_channel(const GadParams& params) {
    const double rq = std::sqrt(1.0 - params.p);
    const double rp = std::sqrt(params.p);
    const double keep = std::sqrt(1.0 - params.gamma);
    const double jump = std::sqrt(params.gamma);

    Matrix k1(2, 2), k2(2, 2), k3(2, 2), k4(2, 2);
    k1(0, 0) = rq;
    k1(1, 1) = rq * keep;
    k2(0, 1) = rq * jump;
    k3(0, 0) = rp * keep;
    k3(1, 1) = rp;
    k4(1, 0) = rp * jump;
    return KrausChannel({k1, k2, k3, k4}, true);
}

KrausChannel filter_channel(const FilterParams& params) {
    Matrix f(2, 2);
    f(0, 0) = std::sqrt(1.0 - params.kappa);
    f(1, 1) = std::sqrt(params.kappa);
    return KrausChannel({f}, false);
}

ChannelResult apply_channels(const Matrix& rho, const QubitRegister& reg,
                             const std::map<std::size_t, KrausChannel>& assignment) {
    if (!rho.is_square() || rho.rows() != reg.dimension())
        throw std::invalid_argument("apply_channels: state dimension does not match register");
    if (std::abs(rho.trace() - cplx{1.0, 0.0}) > 1e-10)
        throw std::invalid_argument("apply_channels: input state must have unit trace");

    // Product channels factor qubit by qubit, so applying them sequentially
    // reproduces the joint operator sum exactly.
    Matrix state = rho;
    for (const auto& [qubit, channel] : assignment) {
        if (qubit >= reg.n_qubits)
            throw std::invalid_argument("apply_channels: assigned qubit out of range");
        if (channel.dim() != 2)
            throw std::invalid_argument("apply_channels: expected single-qubit channels");
        Matrix next = Matrix::zero(state.rows(), state.cols());
        for (const auto& op : channel.operators) {
            const Matrix full = embed_on_qubits({op}, {qubit}, reg);
            next += full * state * dagger(full);
        }
        state = std::move(next);
    }
    const double prob = state.trace().real();
    return {std::move(state), prob};
}

double completeness_defect(const KrausChannel& channel) {
    if (channel.operators.empty()) return 1.0;  // the zero map
    const std::size_t d = channel.dim();
    Matrix sum = Matrix::zero(d, d);
    for (const auto& op : channel.operators) sum += dagger(op) * op;
    sum -= Matrix::identity(d);
    return sum.max_abs();
}

}  // namespace esdlab
