#pragma once

#include <cstdint>

#include "seifert/rational.hpp"

namespace seifert {

/// Deterministic Miller-Rabin over the first twelve prime bases; exact for
/// every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Exact for values that fit in 64 bits; beyond that falls back to GMP's
/// probabilistic test with 40 rounds.
bool is_prime(const Integer& n);

}  // namespace seifert
