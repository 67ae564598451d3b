#pragma once
// Reference constants computed by tests/oracle/derived_values.py (mpmath,
// 50 digits), frozen before the implementation was written. Do not edit by
// hand; rerun the script and paste.

namespace frozen {

// deviation_bound(s, T, gamma)
inline constexpr double dev_s1_t1_g05 = 0.58870501125773734551;
inline constexpr double dev_s1_t64_g05 = 1.8616487055295170664;
inline constexpr double dev_s100_t64_g05 = 0.18616487055295170664;
inline constexpr double dev_s400_t4096_g05 = 0.12830528258142258228;
inline constexpr double dev_s64_t256_g05 = 0.26532576302654713272;

// elimination/stopping thresholds
inline constexpr double elim_i6_s100 = 3.8723297411059034133;
inline constexpr double elim_i0_s1_nolip = 6.177410022515474691;
inline constexpr double stop_i6_s100 = 3.6276702588940965867;

// prior interval at epoch 12, round 401, mean 0.6, lip 0.5/0.5, alpha 1/6
inline constexpr double prior_i12_r401_a = -0.15661056516284516456;
inline constexpr double prior_i12_r401_b = 1.3566105651628451646;
inline constexpr double prior_i12_r401_delta = 3.814697265625e-6;

// annotator costs
inline constexpr double cost_plain = 0.5001;
inline constexpr double cost_wide = 2.2898420039614255008;

// stop-round bound, epoch 13, d_X=d_K=1 defaults
inline constexpr double stop_bound_i13_d1 = 10288.789473845871324;

// Monte Carlo tolerances
inline constexpr double bern_3sigma_1e6_p03 = 0.001374772708486752002;
inline constexpr double abnormal_theory_t256_g05 = 0.000244140625;

}  // namespace frozen
