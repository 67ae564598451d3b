#include "cbal/params.hpp"

#include <stdexcept>

namespace cbal {

double AlgoParams::default_alpha(int context_dim, int arm_dim) {
    return 1.0 / (context_dim + arm_dim + 2);
}

double AlgoParams::default_gamma(int context_dim, int arm_dim) {
    return static_cast<double>(arm_dim + 1) / (context_dim + arm_dim + 2);
}

double AlgoParams::default_margin(double lip_context, double lip_arm) {
    return 4.0 * (lip_context + lip_arm) + 1.0;
}

void AlgoParams::finalize() {
    if (alpha == 0.0) alpha = default_alpha(context_dim, arm_dim);
    if (gamma == 0.0) gamma = default_gamma(context_dim, arm_dim);
    if (margin == 0.0) margin = default_margin(lip_context, lip_arm);
}

void AlgoParams::validate() const {
    auto fail = [](const std::string& msg) { throw std::invalid_argument("AlgoParams: " + msg); };
    if (context_dim < 1) fail("context_dim must be >= 1");
    if (arm_dim < 1) fail("arm_dim must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0)) fail("alpha must lie in (0,1)");
    if (!(gamma > 0.0 && gamma < 1.0)) fail("gamma must lie in (0,1)");
    if (lip_context < 0.0) fail("lip_context must be >= 0");
    if (lip_arm < 0.0) fail("lip_arm must be >= 0");
    if (!(margin > 4.0 * (lip_context + lip_arm)))
        fail("margin must exceed 4*(lip_context + lip_arm)");
    if (!(cost_scale > 0.0)) fail("cost_scale must be positive");
    if (!(cost_eta > 0.0)) fail("cost_eta must be positive");
    if (cost_beta1 < 1.0) fail("cost_beta1 must be >= 1");
    if (cost_beta2 < 1.0) fail("cost_beta2 must be >= 1");
}

}  // namespace cbal
