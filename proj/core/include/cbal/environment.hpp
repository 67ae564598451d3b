#pragma once
/*
Synthetic Lipschitz reward landscapes, Bernoulli reward generation, the
cost-charging annotator and the analytic oracle. Landscapes are built so the
oracle is exact: the best arm for context x is x itself with expected reward
1, which removes oracle-approximation error from the regret accounting.
*/
#include <optional>
#include <utility>

#include "cbal/geometry.hpp"
#include "cbal/params.hpp"
#include "cbal/policy.hpp"
#include "cbal/rng.hpp"

namespace cbal {

enum class LandscapeFamily { peak, dome };

// peak: mu(x,k) = max(0, 1 - lambda * dist_inf(k, x)),   L_X = L_K = lambda
// dome: mu(x,k) = max(0, 1 - lambda * dist_inf(k, x)^2), L_X = L_K = 2*lambda
// Both families need matching context/arm dimensions.
class Landscape {
public:
    Landscape(LandscapeFamily family, double steepness, int context_dim, int arm_dim);

    double mean_reward(const Point& x, const Point& k) const;
    std::pair<Point, double> oracle_best(const Point& x) const;  // (x, 1.0)

    double lip_context() const { return lip_; }
    double lip_arm() const { return lip_; }
    LandscapeFamily family() const { return family_; }
    double steepness() const { return steepness_; }
    int context_dim() const { return dim_; }
    int arm_dim() const { return dim_; }

private:
    LandscapeFamily family_;
    double steepness_;
    int dim_;
    double lip_;
};

// One Bernoulli draw with success probability mu.
double sample_reward(double mu, Rng& rng);

// i.i.d. uniform context from the unit cube.
Point context_arrival(Rng& rng, int context_dim);

struct Annotation {
    double reward = 0.0;              // ground truth, revealed only on query
    double cost = 0.0;
    std::optional<bool> prior_valid;  // mu within [lo, hi]; present iff query
};

// Charges c * ((hi-lo)^beta1 + eta * delta^beta2) when a prior accompanies
// the slot, zero otherwise. 0^beta2 is 0 for beta2 >= 1.
Annotation annotate(const std::optional<PriorInfo>& prior, double sampled_reward,
                    double mean_reward, const AlgoParams& p);

// Lattice approximation of max mu(x,k) over a (context cell, arm cell) pair,
// grid_n points per axis, endpoints included. Verification-only.
double cluster_oracle(const Landscape& land, const Cell& context_cell,
                      const Cell& arm_cell, int grid_n);

}  // namespace cbal
