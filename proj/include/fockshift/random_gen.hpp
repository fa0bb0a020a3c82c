// Deterministic random generation for tests and seeded CLI runs: rational
// weight tops, complex weight tables and divisor sequences, all driven by a
// caller-owned engine so identical seeds give identical artifacts.

#ifndef FOCKSHIFT_RANDOM_GEN_HPP
#define FOCKSHIFT_RANDOM_GEN_HPP

#include "fockshift/classify.hpp"
#include "fockshift/periodicity.hpp"

#include <cstdint>
#include <random>

namespace fockshift {

// Value of FOCKSHIFT_SEED (decimal), or fallback when the variable is unset.
// A set but non-numeric value is a configuration error.
std::uint64_t seed_from_env(std::uint64_t fallback = 0);

// Uniform p/q with 1 <= p <= max_numerator, 1 <= q <= max_denominator.
Rational random_positive_rational(std::mt19937_64& engine, int max_numerator = 16,
                                  int max_denominator = 16);

// Both coordinates uniform in {-max..max}/{1..max}; may be zero.
GaussianRational random_gaussian(std::mt19937_64& engine, int max_magnitude = 8);

// Complete period-k table of positive rationals.
WeightTop random_top(int alphabet_size, std::size_t period, std::mt19937_64& engine);

// Strictly increasing divisor chain with terms <= max_term.
DivisorSequence random_divisor_sequence(std::mt19937_64& engine, std::int64_t max_term = 64,
                                        std::size_t max_terms = 5);

}  // namespace fockshift

#endif  // FOCKSHIFT_RANDOM_GEN_HPP
