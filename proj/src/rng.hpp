#ifndef CAROUSEL_RNG_HPP
#define CAROUSEL_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace carousel {

// splitmix64 step; used to derive independent sub-seeds from one master seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Thin deterministic wrapper around mt19937_64. All variate algorithms are
// spelled out here so that a given seed produces the same stream everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // uniform on [0,1), 53-bit resolution
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double exponential(double rate) { return -std::log1p(-uniform01()) / rate; }

    // sum of k unit-rate exponentials, scaled; products of uniforms are
    // flushed to the log before they can underflow
    double erlang(int k, double rate) {
        double sum = 0.0;
        double prod = 1.0;
        for (int i = 0; i < k; ++i) {
            prod *= 1.0 - uniform01();
            if (prod < 1e-280) {
                sum -= std::log(prod);
                prod = 1.0;
            }
        }
        sum -= std::log(prod);
        return sum / rate;
    }

    // categorical draw from cumulative weights (last entry ~ 1)
    int categorical(const std::vector<double>& cumulative) {
        const double u = uniform01();
        for (std::size_t i = 0; i + 1 < cumulative.size(); ++i)
            if (u < cumulative[i]) return static_cast<int>(i);
        return static_cast<int>(cumulative.size()) - 1;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace carousel

#endif
