#pragma once

/**
 * Deterministic pseudorandom polynomial stream for reproducible identity
 * sweeps. Values are drawn from a seeded mt19937_64 by modulo reduction
 * (not std distributions) so the stream is identical across toolchains.
 */

#include <cstdint>
#include <random>
#include <vector>

#include "zpsym/polynomial.hpp"
#include "zpsym/rational.hpp"

namespace zpsym {

inline constexpr std::uint64_t default_sampler_seed = 314159;

class polynomial_sampler {
public:
    polynomial_sampler(std::uint64_t seed, unsigned degree_max, long numerator_bound,
                       long denominator_bound)
        : rng_(seed), degree_max_(degree_max), num_bound_(numerator_bound),
          den_bound_(denominator_bound) {}

    /// Next polynomial: degree <= degree_max, coefficients num/den with
    /// |num| <= numerator_bound and 1 <= den <= denominator_bound.
    polynomial next() {
        const unsigned d = static_cast<unsigned>(rng_() % (degree_max_ + 1));
        std::vector<rational> c(d + 1);
        for (auto& coeff : c) {
            const long num =
                static_cast<long>(rng_() % (2 * num_bound_ + 1)) - num_bound_;
            const long den = static_cast<long>(rng_() % den_bound_) + 1;
            coeff = rational(num, den);
        }
        return polynomial(std::move(c));
    }

private:
    std::mt19937_64 rng_;
    unsigned long degree_max_;
    long num_bound_;
    long den_bound_;
};

} // namespace zpsym
