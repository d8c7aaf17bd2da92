#pragma once

#include "ellschub/elliptic.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <string>

namespace ellschub {

// Seeded source of generic values for the formal variables.
//   exact:   p/q with 1 <= |p| <= 99, 1 <= q <= 99
//   complex: modulus uniform in [0.5, 2], argument uniform in [-pi, pi)
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    mpq_class rational();
    std::complex<double> complex_value();

    template <class Coeff>
    Coeff value()
    {
        if constexpr (std::is_same_v<Coeff, mpq_class>) {
            return rational();
        } else {
            return complex_value();
        }
    }

    template <class Coeff>
    std::vector<Coeff> values(std::size_t n)
    {
        std::vector<Coeff> v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            v.push_back(value<Coeff>());
        }
        return v;
    }

    template <class Coeff>
    EvalPoint<Coeff> point(int rank)
    {
        return EvalPoint<Coeff>(rank, values<Coeff>(static_cast<std::size_t>(2 * rank + 1)));
    }

    std::mt19937_64 &engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline constexpr int max_sampling_attempts = 10;

// The point could not be made nonsingular within max_sampling_attempts.
class SamplingFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Calls attempt(sampler) until it returns without SingularPoint/ZeroArgument.
template <class F>
auto with_resampling(Sampler &sampler, F &&attempt) -> decltype(attempt(sampler))
{
    std::string last;
    for (int i = 0; i < max_sampling_attempts; ++i) {
        try {
            return attempt(sampler);
        } catch (const SingularPoint &e) {
            last = e.what();
        } catch (const ZeroArgument &e) {
            last = e.what();
        }
    }
    throw SamplingFailure("no nonsingular point after " + std::to_string(max_sampling_attempts) +
                          " attempts (last: " + last + ")");
}

} // namespace ellschub
