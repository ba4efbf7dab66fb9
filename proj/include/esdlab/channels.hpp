#pragma once

#include <map>
#include <vector>

#include "esdlab/linalg.hpp"

namespace esdlab {

// Generalized amplitude damping knobs: gamma is the damping strength, p the
// thermal mixing weight (1/2 throughout the stock scenarios).
struct GadParams {
    double gamma = 0.0;
    double p = 0.5;
    GadParams() = default;
    GadParams(double gamma_, double p_);
};

struct FilterParams {
    double kappa;
    explicit FilterParams(double kappa_);
};

// Ordered Kraus operators of one channel. Trace preserving means
// sum K^dag K = I; otherwise the sum must stay below the identity.
struct KrausChannel {
    std::vector<Matrix> operators;
    bool trace_preserving = true;

    KrausChannel(std::vector<Matrix> ops, bool trace_preserving_);
    std::size_t dim() const { return operators.empty() ? 0 : operators.front().rows(); }
};

// The four GAD Kraus operators:
//   K1 = sqrt(1-p) diag(1, sqrt(1-gamma))      K2 = sqrt(1-p) sqrt(gamma) |0><1|
//   K3 = sqrt(p)   diag(sqrt(1-gamma), 1)      K4 = sqrt(p)   sqrt(gamma) |1><0|
KrausChannel gad_channel(const GadParams& params);

// Single-operator filter F = sqrt(1-kappa)|0><0| + sqrt(kappa)|1><1|.
KrausChannel filter_channel(const FilterParams& params);

struct ChannelResult {
    Matrix rho;           // unnormalized output; callers normalize explicitly
    double success_prob;  // trace of the output
};

// Applies one channel per assigned qubit (identity elsewhere). Input must be
// a normalized density matrix on the register.
ChannelResult apply_channels(const Matrix& rho, const QubitRegister& reg,
                             const std::map<std::size_t, KrausChannel>& assignment);

// Max-entry norm of sum K^dag K - I.
double completeness_defect(const KrausChannel& channel);

}  // namespace esdlab
