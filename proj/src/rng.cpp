#include "malmquist/rng.hpp"

#include <cmath>

namespace malmquist {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t Rng::uniform_index(std::uint64_t n) {
    if (n == 0) return 0;
    // Rejection sampling keeps the distribution exactly uniform.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = gen_();
    } while (x >= limit);
    return x % n;
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return mag * std::cos(kTwoPi * u2);
}

cplx Rng::complex_gaussian() {
    return cplx(gaussian(), gaussian()) / std::sqrt(2.0);
}

cplx Rng::on_circle(double rho) {
    const double theta = kTwoPi * uniform();
    return cplx(rho * std::cos(theta), rho * std::sin(theta));
}

cplx Rng::in_disc(double rmax) {
    const double rho = rmax * std::sqrt(uniform());
    return on_circle(rho);
}

Rng Rng::derive(std::uint64_t stream) const {
    Rng copy = *this;  // capture current seed state cheaply via a fresh draw
    const std::uint64_t base = copy.gen_();
    return Rng(splitmix64(base ^ splitmix64(stream)));
}

}  // namespace malmquist
