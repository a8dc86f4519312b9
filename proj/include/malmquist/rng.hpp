#pragma once

#include <cstdint>
#include <random>

#include "malmquist/taylor.hpp"

namespace malmquist {

/// Deterministic random source. All transforms (uniform doubles, gaussians)
/// are implemented on top of the mt19937_64 word stream so that identical
/// seeds give identical values on every platform; std::*_distribution is
/// avoided because its output is implementation defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t uniform_index(std::uint64_t n);  // uniform in {0,...,n-1}

    double gaussian();

    /// Standard complex gaussian (independent N(0,1/2) parts).
    cplx complex_gaussian();

    /// Uniform on the circle of radius rho.
    cplx on_circle(double rho = 1.0);

    /// Uniform (area measure) in the closed disc of radius rmax.
    cplx in_disc(double rmax);

    /// Independent generator for a named substream; order of use elsewhere
    /// does not perturb it.
    Rng derive(std::uint64_t stream) const;

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace malmquist
