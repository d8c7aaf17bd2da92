#include "ellschub/sampling.hpp"

#include <numbers>

namespace ellschub {

mpq_class Sampler::rational()
{
    std::uniform_int_distribution<int> num(1, 99);
    std::uniform_int_distribution<int> den(1, 99);
    std::bernoulli_distribution negative(0.5);
    mpq_class x(num(rng_), den(rng_));
    x.canonicalize();
    if (negative(rng_)) {
        x = -x;
    }
    return x;
}

std::complex<double> Sampler::complex_value()
{
    std::uniform_real_distribution<double> modulus(0.5, 2.0);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    const double r = modulus(rng_);
    return std::polar(r, angle(rng_));
}

} // namespace ellschub
