#include "cbal/environment.hpp"

#include <cmath>
#include <stdexcept>

namespace cbal {

Landscape::Landscape(LandscapeFamily family, double steepness, int context_dim,
                     int arm_dim)
    : family_(family), steepness_(steepness), dim_(context_dim) {
    if (context_dim != arm_dim)
        throw std::invalid_argument("Landscape: context and arm dimensions must match");
    if (context_dim < 1) throw std::invalid_argument("Landscape: dimension must be >= 1");
    if (!(steepness > 0.0)) throw std::invalid_argument("Landscape: steepness must be positive");
    lip_ = family == LandscapeFamily::peak ? steepness : 2.0 * steepness;
}

double Landscape::mean_reward(const Point& x, const Point& k) const {
    const double d = dist_inf(k, x);
    const double mu = family_ == LandscapeFamily::peak
                          ? 1.0 - steepness_ * d
                          : 1.0 - steepness_ * d * d;
    return mu > 0.0 ? mu : 0.0;
}

std::pair<Point, double> Landscape::oracle_best(const Point& x) const {
    return {x, 1.0};
}

double sample_reward(double mu, Rng& rng) {
    if (!(mu >= 0.0 && mu <= 1.0))
        throw std::invalid_argument("sample_reward: mean outside [0,1]");
    return rng.bernoulli(mu) ? 1.0 : 0.0;
}

Point context_arrival(Rng& rng, int context_dim) {
    Point x(static_cast<std::size_t>(context_dim));
    for (auto& c : x) c = rng.uniform01();
    return x;
}

Annotation annotate(const std::optional<PriorInfo>& prior, double sampled_reward,
                    double mean_reward, const AlgoParams& p) {
    Annotation a;
    a.reward = sampled_reward;
    if (!prior) return a;  // no query: nothing charged, nothing revealed

    const double width = prior->width();
    const double width_term = std::pow(width, p.cost_beta1);
    const double conf_term = prior->delta == 0.0 ? 0.0 : std::pow(prior->delta, p.cost_beta2);
    a.cost = p.cost_scale * (width_term + p.cost_eta * conf_term);
    a.prior_valid = prior->lo <= mean_reward && mean_reward <= prior->hi;
    return a;
}

namespace {

// odometer over grid_n^dim lattice points of a cell, endpoints included
void lattice_points(const Cell& cell, int grid_n, std::vector<Point>& out) {
    const int dim = static_cast<int>(cell.lo.size());
    std::vector<int> idx(dim, 0);
    Point p(dim);
    for (;;) {
        for (int a = 0; a < dim; ++a) {
            const double f = grid_n == 1 ? 0.5 : static_cast<double>(idx[a]) / (grid_n - 1);
            p[a] = cell.lo[a] + f * (cell.hi[a] - cell.lo[a]);
        }
        out.push_back(p);
        int a = dim - 1;
        while (a >= 0 && ++idx[a] == grid_n) idx[a--] = 0;
        if (a < 0) break;
    }
}

}  // namespace

double cluster_oracle(const Landscape& land, const Cell& context_cell,
                      const Cell& arm_cell, int grid_n) {
    if (grid_n < 2) throw std::invalid_argument("cluster_oracle: grid_n must be >= 2");
    std::vector<Point> xs, ks;
    lattice_points(context_cell, grid_n, xs);
    lattice_points(arm_cell, grid_n, ks);
    double best = 0.0;
    for (const auto& x : xs)
        for (const auto& k : ks) best = std::max(best, land.mean_reward(x, k));
    return best;
}

}  // namespace cbal
