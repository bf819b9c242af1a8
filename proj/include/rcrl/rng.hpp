#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace rcrl {

/// Mixes a base seed with a stream id (episode index, worker index, ...) so
/// that derived streams are decorrelated even for adjacent ids.
inline std::uint64_t stream_seed(std::uint64_t base, std::uint64_t id) {
    std::uint64_t z = base ^ (id + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic random source. The engine is std::mt19937_64 (its sequence
/// is pinned by the standard); all variate transforms are implemented here
/// instead of through std::*_distribution, whose output is
/// implementation-defined and would break byte-for-byte reproducibility.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(stream_seed(seed, 0)) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; pairs are cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    /// Uniform integer in [0, n).
    int uniform_int(int n) {
        if (n <= 0) throw std::invalid_argument("Rng::uniform_int: n must be positive");
        // rejection sampling to avoid modulo bias
        const std::uint64_t un = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
        std::uint64_t x = eng_();
        while (x >= limit) x = eng_();
        return static_cast<int>(x % un);
    }

    /// Index drawn from an (unnormalized) weight vector.
    int categorical(std::span<const double> weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        if (!(total > 0.0)) throw std::invalid_argument("Rng::categorical: weights sum to zero");
        double u = uniform() * total;
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            u -= weights[i];
            if (u < 0.0) return static_cast<int>(i);
        }
        return static_cast<int>(weights.size() - 1);
    }

    /// Dirichlet(1,...,1) row: normalized unit exponentials.
    std::vector<double> dirichlet(int k) {
        std::vector<double> row(static_cast<std::size_t>(k));
        double total = 0.0;
        for (auto& x : row) {
            double u = 0.0;
            while (u <= 0.0) u = uniform();
            x = -std::log(u);
            total += x;
        }
        for (auto& x : row) x /= total;
        return row;
    }

  private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace rcrl
