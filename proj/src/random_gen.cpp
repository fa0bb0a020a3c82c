#include "fockshift/random_gen.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace fockshift {

std::uint64_t seed_from_env(std::uint64_t fallback) {
    const char* raw = std::getenv("FOCKSHIFT_SEED");
    if (raw == nullptr || *raw == '\0') return fallback;
    try {
        std::size_t used = 0;
        const std::uint64_t seed = std::stoull(raw, &used);
        if (raw[used] != '\0') throw std::invalid_argument(raw);
        return seed;
    } catch (const std::exception&) {
        throw std::invalid_argument("FOCKSHIFT_SEED must be a decimal integer, got \"" +
                                    std::string(raw) + "\"");
    }
}

Rational random_positive_rational(std::mt19937_64& engine, int max_numerator,
                                  int max_denominator) {
    std::uniform_int_distribution<int> num(1, max_numerator);
    std::uniform_int_distribution<int> den(1, max_denominator);
    return Rational(num(engine), den(engine));
}

GaussianRational random_gaussian(std::mt19937_64& engine, int max_magnitude) {
    std::uniform_int_distribution<int> num(-max_magnitude, max_magnitude);
    std::uniform_int_distribution<int> den(1, max_magnitude);
    return GaussianRational(Rational(num(engine), den(engine)),
                            Rational(num(engine), den(engine)));
}

WeightTop random_top(int alphabet_size, std::size_t period, std::mt19937_64& engine) {
    WeightTop::Table table;
    for (std::size_t len = 0; len < period; ++len)
        for (const Word& u : enumerate_words(alphabet_size, len))
            for (int i = 1; i <= alphabet_size; ++i)
                table[{i, u}] = random_positive_rational(engine);
    return WeightTop(alphabet_size, period, std::move(table));
}

DivisorSequence random_divisor_sequence(std::mt19937_64& engine, std::int64_t max_term,
                                        std::size_t max_terms) {
    std::uniform_int_distribution<std::int64_t> start(1, 4);
    std::uniform_int_distribution<std::int64_t> factor(2, 4);
    std::uniform_int_distribution<std::size_t> length(1, max_terms);
    const std::size_t target = length(engine);
    std::vector<std::int64_t> terms{start(engine)};
    while (terms.size() < target) {
        const std::int64_t next = terms.back() * factor(engine);
        if (next > max_term) break;
        terms.push_back(next);
    }
    return DivisorSequence(std::move(terms));
}

}  // namespace fockshift
