#include "entlab/random.hpp"

#include <cmath>
#include <numbers>

namespace entlab {

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) { return Rng(mix64(mix64(seed) ^ mix64(~index))); }

double Rng::uniform() { return static_cast<double>(engine_() >> 11U) * 0x1.0p-53; }

double Rng::normal() {
    if(has_cached_) {
        has_cached_ = false;
        return cached_normal_;
    }
    double u1 = uniform();
    while(u1 == 0.0) u1 = uniform();
    const double u2     = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle  = 2.0 * std::numbers::pi * u2;
    cached_normal_      = radius * std::sin(angle);
    has_cached_         = true;
    return radius * std::cos(angle);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    // rejection sampling keeps the result unbiased
    const std::uint64_t limit = bound == 0 ? 0 : (~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound);
    std::uint64_t       x     = engine_();
    while(x > limit) x = engine_();
    return x % bound;
}

} // namespace entlab
