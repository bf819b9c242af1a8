#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rcrl/rng.hpp"
#include "rcrl/types.hpp"

namespace rcrl::envs {

/// Stationary stochastic policy over a tabular MDP: one probability row per
/// state.
struct BehaviorPolicy {
    int n_states = 0;
    int n_actions = 0;
    std::vector<double> table;  // [s][a]

    std::span<const double> row(int s) const {
        return {table.data() + static_cast<std::size_t>(s) * n_actions,
                static_cast<std::size_t>(n_actions)};
    }
    double prob(int s, int a) const { return table[static_cast<std::size_t>(s) * n_actions + a]; }

    void validate() const;

    static BehaviorPolicy uniform(int n_states, int n_actions);
    static BehaviorPolicy from_table(int n_states, int n_actions, std::vector<double> table);
};

/// Named environment bundle: the MDP, its canonical behavior policy and the
/// RTG bucket grid used by models trained on it.
struct CatalogEnv {
    std::string name;
    Mdp mdp;
    BehaviorPolicy default_behavior;
    BucketSpec buckets;
};

/// Two-arm single-decision environment: either arm pays 1 or 0 with equal
/// probability (reward is carried by the win/lose successor state). Ground
/// truth posterior: p(up | R=1) = beta(up), i.e. 0.5 under uniform behavior.
CatalogEnv bandit_fig1();

/// Stair climb: 5 stair cells, an absorbing top, and an absorbing dead end.
/// Actions: climb (+1), down (-1, wastes time), off (-> dead end). Reward +1
/// on the move that reaches the top. gamma < 1, so a wasted move makes the
/// undelayed return level infeasible while a positive return stays reachable.
CatalogEnv stairs_fig2();

/// n-cell chain plus an absorbing trap. Action 1 moves right, action 0 falls
/// into the trap; the move out of the last cell pays +1. Every chain cell is
/// visited at exactly one timestep, which keeps time-pooled and per-time RTG
/// laws identical.
CatalogEnv chain(int n);

/// Random tabular instance for theorem suites: Dirichlet(1,..,1) transition
/// rows, rewards drawn from {0, 0.5, 1}, sizes within the given caps.
Mdp random_mdp(std::uint64_t seed, int max_states = 6, int max_actions = 3, int max_horizon = 5);

/// Looks up "bandit", "stairs" or "chainN" (e.g. "chain3").
CatalogEnv get_env(const std::string& name);

/// epsilon-greedy around the finite-horizon optimal action of each state.
BehaviorPolicy eps_greedy_optimal(const Mdp& mdp, double eps);

/// Samples a successor state.
int step(const Mdp& mdp, int s, int a, Rng& rng);

/// Rolls out `n_episodes` episodes of `beta`. Episodes run to the horizon
/// (done on the last step) and RTG labels are filled in. Each episode owns
/// an RNG stream derived from (seed, episode index), so generation is
/// deterministic and parallelizable.
Dataset generate_dataset(const Mdp& mdp, const BehaviorPolicy& beta, int n_episodes,
                         std::uint64_t seed);

/// Keeps the complete episodes whose initial RTG ranks in the top `fraction`
/// (ties broken toward lower episode id). Output preserves input order.
Dataset filter_top_fraction(const Dataset& dataset, double fraction);

/// Canonical pathological bandit draw: 6 episodes, exactly 3 with return 1,
/// all of which took the down arm (and the 3 zero-return episodes took up).
/// Deterministically searches generation seeds starting at `base_seed`.
Dataset figure1_dataset(std::uint64_t base_seed = 0);

}  // namespace rcrl::envs
