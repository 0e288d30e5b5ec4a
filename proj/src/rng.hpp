#pragma once

#include "linalg.hpp"

#include <cstdint>

namespace tcsd {

/// Deterministic random source (xoshiro256** seeded through splitmix64) with
/// explicit distributions, so seeded runs reproduce bit-identically regardless
/// of the standard library in use.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    double uniform();   // [0, 1)
    double gaussian();  // standard normal, Box-Muller
    Cplx cgaussian();   // standard complex normal

    Vec cgaussian_vec(int n);
    Mat ginibre(int rows, int cols);
    /// Haar-distributed unitary (QR of a Ginibre matrix, phases fixed).
    Mat haar_unitary(int n);

    /// Independent stream derived from this one; the parent state advances once.
    Rng fork(std::uint64_t salt);

private:
    std::uint64_t state_[4];
    bool have_cached_ = false;
    double cached_ = 0.0;
};

}  // namespace tcsd
