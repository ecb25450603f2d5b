#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace edgespec {

/// Independent stream for trial `index` of an experiment seeded with `seed`.
/// Results do not depend on which thread runs the trial.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t index);

/// Uniform integer in [0, bound) by rejection; bound >= 1. Unlike
/// std::uniform_int_distribution the output is identical across standard
/// libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// k distinct elements of {0, ..., n-1}, uniformly, in ascending order.
std::vector<int> sample_indices(std::mt19937_64& rng, int n, int k);

}  // namespace edgespec
