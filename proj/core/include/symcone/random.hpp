#pragma once

#include <cstdint>
#include <random>

#include "symcone/element.hpp"

namespace symcone {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of independent stream `index` derived from a base seed. Streams are
/// used per sampling chunk and per role (X, Y, grid), so results do not
/// depend on how work is split across threads.
std::uint64_t stream_seed(std::uint64_t base, std::uint64_t index);

/// Coordinates iid N(0, 1).
Element random_element(const AlgebraPtr& algebra, Rng& rng);

/// g^2 + shift * e with g = random_element / sqrt(n); lies in the open cone
/// for shift > 0.
Element random_cone_element(const AlgebraPtr& algebra, Rng& rng, double shift = 0.5);

}  // namespace symcone
