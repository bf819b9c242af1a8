#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rcrl {

/// Finite tabular MDP. Rewards are deterministic per (state, action);
/// stochastic outcomes are modeled through reward-carrying successor states.
struct Mdp {
    int n_states = 0;
    int n_actions = 0;
    std::vector<double> transition;  // [s][a][s'] row-major
    std::vector<double> reward;      // [s][a]
    int horizon = 0;
    double discount = 1.0;
    int initial_state = 0;

    double p(int s, int a, int s2) const {
        return transition[(static_cast<std::size_t>(s) * n_actions + a) * n_states + s2];
    }
    double& p(int s, int a, int s2) {
        return transition[(static_cast<std::size_t>(s) * n_actions + a) * n_states + s2];
    }
    double r(int s, int a) const { return reward[static_cast<std::size_t>(s) * n_actions + a]; }
    double& r(int s, int a) { return reward[static_cast<std::size_t>(s) * n_actions + a]; }

    std::span<const double> transition_row(int s, int a) const {
        return {transition.data() + (static_cast<std::size_t>(s) * n_actions + a) * n_states,
                static_cast<std::size_t>(n_states)};
    }

    /// Throws std::invalid_argument if shapes, probabilities or row sums are off.
    void validate() const;
};

/// One offline transition. RTG labels live in Dataset, not here: they depend
/// on the discount and are derived at load time.
struct Transition {
    std::int64_t episode = 0;
    int t = 0;
    int state = 0;
    int action = 0;
    double reward = 0.0;
    bool done = false;
};

/// Discounted reward-to-go labels for one complete episode:
/// out[t] = sum_{k>=t} gamma^{k-t} r_k.
std::vector<double> compute_rtg(std::span<const double> rewards, double gamma);

/// Offline dataset: ordered transitions plus derived RTG labels.
struct Dataset {
    std::vector<Transition> transitions;
    std::vector<double> rtg;  // parallel to transitions once computed

    std::size_t size() const { return transitions.size(); }
    bool empty() const { return transitions.empty(); }

    /// Checks episode structure (t strictly increasing, exactly one done).
    void validate() const;

    /// Fills the rtg column from the reward sequence of each episode.
    void recompute_rtg(double gamma);

    /// [begin, end) index ranges of consecutive same-episode transitions.
    std::vector<std::pair<std::size_t, std::size_t>> episode_ranges() const;
};

/// Evenly spaced discretization grid for RTG values.
class BucketSpec {
  public:
    BucketSpec(double v_min, double v_max, int n_buckets);

    double v_min() const { return v_min_; }
    double v_max() const { return v_max_; }
    int n_buckets() const { return n_; }
    double width() const { return width_; }
    const std::vector<double>& centers() const { return centers_; }

    /// Bounds-checked center lookup; an out-of-range index is a programming
    /// fault and throws std::out_of_range.
    double center(int i) const;

    /// Nearest-center index. Values outside [v_min, v_max] are clamped first;
    /// exact ties go to the higher index.
    int discretize(double r) const;

  private:
    double v_min_, v_max_, width_;
    int n_;
    std::vector<double> centers_;
};

/// Thrown when a conditioning RTG has (numerically) zero probability mass.
struct OodConditioningError : std::runtime_error {
    explicit OodConditioningError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rcrl
