#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

// Deterministic random numbers. std::mt19937_64 has a standardized bit
// stream, but the std distributions do not, so all variate transforms are
// spelled out here. Substreams are derived by hashing (seed, index) so
// trial results do not depend on execution order or thread count.

namespace ionchain::rng {

// splitmix64 finalizer
inline std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
    return mix(master ^ mix(index));
}

class Generator {
public:
    explicit Generator(std::uint64_t seed) : engine_(seed) {}

    // uniform in [0, 1)
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // exponential with the given mean; mean 0 gives exactly 0
    double exponential(double mean) {
        if (mean <= 0.0) return 0.0;
        return -mean * std::log1p(-uniform01());
    }

    // standard normal, Box-Muller (one value per call; spare cached)
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // thermal (Bose/geometric) occupation number with mean nbar
    long thermal_occupation(double nbar) {
        if (nbar <= 0.0) return 0;
        // P(n) = (1/(nbar+1)) (nbar/(nbar+1))^n; inverse CDF on a uniform
        const double u = uniform01();
        const double lr = std::log(nbar / (nbar + 1.0));
        return static_cast<long>(std::floor(std::log1p(-u) / lr));
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Neumaier compensated summation; reductions over fixed index order stay
// reproducible no matter how the work was scheduled.
class KahanSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace ionchain::rng
