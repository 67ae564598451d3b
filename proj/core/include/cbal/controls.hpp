#pragma once
/*
Control functions of the elimination schedule.

  D(s)    = sqrt(ln(2 T^(1+gamma)) / (2 s))        per-round deviation bound
  eps(i)  = L * T_i^(-alpha)                       optimality margin
  D1(i,s) = eps(i) + 2 D(s) + 2 L_X rho + 2 L_K rho    de-activation threshold
  D2(i,s) = 2 eps(i) - (2 D(s) + 2 L_X rho + 2 L_K rho) stopping threshold

with rho the nominal radius T_i^(-alpha). D1 + D2 == 3 eps(i) identically.
A cluster whose stopping condition fires at round s satisfies
s <= ceil(8 T^(2 alpha) ln(2 T^(gamma+1)) / (L - 4L_X - 4L_K)^2), the first
integer round where D1 <= D2.
*/
#include <cstdint>

#include "cbal/params.hpp"

namespace cbal {

double deviation_bound(std::uint64_t round, std::uint64_t epoch_len, double gamma);
double optimality_margin(int epoch, const AlgoParams& p);
double elimination_threshold(int epoch, std::uint64_t round, const AlgoParams& p);
double stopping_threshold(int epoch, std::uint64_t round, const AlgoParams& p);

// Real-valued crossing point of D1 <= D2; stop rounds are checked against
// max(1, ceil(...)) of this value.
double stop_round_bound(int epoch, const AlgoParams& p);

// Confidence delta attached to priors from round 2 on: T_i^-(1+gamma).
double prior_delta(int epoch, double gamma);

}  // namespace cbal
