#include "rcrl/types.hpp"

#include <cmath>
#include <stdexcept>

namespace rcrl {

void Mdp::validate() const {
    if (n_states <= 0 || n_actions <= 0) throw std::invalid_argument("Mdp: state/action counts must be positive");
    if (horizon <= 0) throw std::invalid_argument("Mdp: horizon must be positive");
    if (!(discount > 0.0 && discount <= 1.0)) throw std::invalid_argument("Mdp: discount must be in (0,1]");
    if (initial_state < 0 || initial_state >= n_states) throw std::invalid_argument("Mdp: initial state out of range");
    const std::size_t nt = static_cast<std::size_t>(n_states) * n_actions * n_states;
    if (transition.size() != nt) throw std::invalid_argument("Mdp: transition table has wrong size");
    if (reward.size() != static_cast<std::size_t>(n_states) * n_actions)
        throw std::invalid_argument("Mdp: reward table has wrong size");
    for (int s = 0; s < n_states; ++s) {
        for (int a = 0; a < n_actions; ++a) {
            double row_sum = 0.0;
            for (int s2 = 0; s2 < n_states; ++s2) {
                const double pr = p(s, a, s2);
                if (pr < 0.0 || pr > 1.0) throw std::invalid_argument("Mdp: probability outside [0,1]");
                row_sum += pr;
            }
            if (std::abs(row_sum - 1.0) > 1e-12) throw std::invalid_argument("Mdp: transition row does not sum to 1");
        }
    }
}

std::vector<double> compute_rtg(std::span<const double> rewards, double gamma) {
    if (!(gamma > 0.0 && gamma <= 1.0)) throw std::invalid_argument("compute_rtg: gamma must be in (0,1]");
    std::vector<double> out(rewards.size());
    double acc = 0.0;
    for (std::size_t i = rewards.size(); i-- > 0;) {
        acc = rewards[i] + gamma * acc;
        out[i] = acc;
    }
    return out;
}

void Dataset::validate() const {
    std::size_t i = 0;
    while (i < transitions.size()) {
        const std::int64_t ep = transitions[i].episode;
        std::size_t j = i;
        int dones = 0;
        int last_t = transitions[i].t - 1;
        while (j < transitions.size() && transitions[j].episode == ep) {
            if (transitions[j].t <= last_t)
                throw std::invalid_argument("Dataset: timesteps must strictly increase within an episode");
            last_t = transitions[j].t;
            dones += transitions[j].done ? 1 : 0;
            ++j;
        }
        if (dones != 1) throw std::invalid_argument("Dataset: each episode must contain exactly one done=true");
        if (!transitions[j - 1].done)
            throw std::invalid_argument("Dataset: done=true must be the last transition of an episode");
        i = j;
    }
}

void Dataset::recompute_rtg(double gamma) {
    rtg.assign(transitions.size(), 0.0);
    for (auto [b, e] : episode_ranges()) {
        double acc = 0.0;
        for (std::size_t i = e; i-- > b;) {
            acc = transitions[i].reward + gamma * acc;
            rtg[i] = acc;
        }
    }
}

std::vector<std::pair<std::size_t, std::size_t>> Dataset::episode_ranges() const {
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    std::size_t i = 0;
    while (i < transitions.size()) {
        std::size_t j = i;
        while (j < transitions.size() && transitions[j].episode == transitions[i].episode) ++j;
        ranges.emplace_back(i, j);
        i = j;
    }
    return ranges;
}

BucketSpec::BucketSpec(double v_min, double v_max, int n_buckets)
    : v_min_(v_min), v_max_(v_max), n_(n_buckets) {
    if (!(v_min < v_max)) throw std::invalid_argument("BucketSpec: v_min must be < v_max");
    if (n_buckets < 2) throw std::invalid_argument("BucketSpec: need at least 2 buckets");
    width_ = (v_max - v_min) / static_cast<double>(n_ - 1);
    centers_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) centers_[static_cast<std::size_t>(i)] = v_min_ + width_ * i;
    centers_.back() = v_max_;  // pin the top center exactly
}

double BucketSpec::center(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("BucketSpec::center: index out of range");
    return centers_[static_cast<std::size_t>(i)];
}

int BucketSpec::discretize(double r) const {
    double x = r;
    if (x < v_min_) x = v_min_;
    if (x > v_max_) x = v_max_;
    int lo = static_cast<int>(std::floor((x - v_min_) / width_));
    if (lo < 0) lo = 0;
    if (lo > n_ - 2) lo = n_ - 2;
    const double d_lo = x - centers_[static_cast<std::size_t>(lo)];
    const double d_hi = centers_[static_cast<std::size_t>(lo) + 1] - x;
    // equidistant values (up to fp noise) round to the higher index
    const double tie_eps = 1e-9 * width_;
    return (d_lo + tie_eps < d_hi) ? lo : lo + 1;
}

}  // namespace rcrl
