#pragma once
#include <string>

namespace cbal {

// All algorithm and cost-model constants. alpha, gamma and margin may be
// left at 0 in a config file, in which case finalize() fills the standard
// choices alpha = 1/(d_X+d_K+2), gamma = (d_K+1)/(d_X+d_K+2) and
// margin = 4*(L_X+L_K) + 1.
struct AlgoParams {
    int context_dim = 1;      // d_X
    int arm_dim = 1;          // d_K
    double alpha = 0.0;       // partition refinement exponent, in (0,1)
    double gamma = 0.0;       // confidence exponent, in (0,1)
    double lip_context = 0.5; // L_X
    double lip_arm = 0.5;     // L_K
    double margin = 0.0;      // L, must exceed 4*(L_X + L_K)
    double cost_scale = 0.5;  // c in the query-cost model
    double cost_eta = 1.0;    // eta
    double cost_beta1 = 1.0;  // exponent on the interval width, >= 1
    double cost_beta2 = 2.0;  // exponent on the confidence delta, >= 1

    // Fill zero-valued alpha/gamma/margin with their defaults.
    void finalize();
    // Throws std::invalid_argument with a diagnostic on the first violated
    // constraint. finalize() must have run (or all fields set explicitly).
    void validate() const;

    static double default_alpha(int context_dim, int arm_dim);
    static double default_gamma(int context_dim, int arm_dim);
    static double default_margin(double lip_context, double lip_arm);
};

}  // namespace cbal
