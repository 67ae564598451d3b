#include "cbal/controls.hpp"

#include <cmath>
#include <stdexcept>

#include "cbal/geometry.hpp"

namespace cbal {

double deviation_bound(std::uint64_t round, std::uint64_t epoch_len, double gamma) {
    if (round == 0) throw std::invalid_argument("deviation_bound: round must be >= 1");
    if (epoch_len == 0) throw std::invalid_argument("deviation_bound: epoch length must be >= 1");
    // ln(2 T^(1+gamma)) computed in log space so large epochs cannot overflow
    const double log_term =
        std::log(2.0) + (1.0 + gamma) * std::log(static_cast<double>(epoch_len));
    return std::sqrt(log_term / (2.0 * static_cast<double>(round)));
}

double optimality_margin(int epoch, const AlgoParams& p) {
    return p.margin * nominal_radius(epoch, p.alpha);
}

namespace {

double lipschitz_slack(int epoch, const AlgoParams& p) {
    const double rho = nominal_radius(epoch, p.alpha);
    return 2.0 * p.lip_context * rho + 2.0 * p.lip_arm * rho;
}

}  // namespace

double elimination_threshold(int epoch, std::uint64_t round, const AlgoParams& p) {
    return optimality_margin(epoch, p) +
           2.0 * deviation_bound(round, epoch_length(epoch), p.gamma) +
           lipschitz_slack(epoch, p);
}

double stopping_threshold(int epoch, std::uint64_t round, const AlgoParams& p) {
    return 2.0 * optimality_margin(epoch, p) -
           (2.0 * deviation_bound(round, epoch_length(epoch), p.gamma) +
            lipschitz_slack(epoch, p));
}

double stop_round_bound(int epoch, const AlgoParams& p) {
    const double t = static_cast<double>(epoch_length(epoch));
    const double gap = p.margin - 4.0 * p.lip_context - 4.0 * p.lip_arm;
    const double log_term = std::log(2.0) + (p.gamma + 1.0) * std::log(t);
    return 8.0 * std::pow(t, 2.0 * p.alpha) * log_term / (gap * gap);
}

double prior_delta(int epoch, double gamma) {
    return std::pow(static_cast<double>(epoch_length(epoch)), -(1.0 + gamma));
}

}  // namespace cbal
