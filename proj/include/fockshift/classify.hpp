// Classification machinery: divisor sequences and their supernatural
// numbers, the dimension-divisibility lemma with its digit witness, and the
// K0 order surrogate for isomorphism of the limit algebras.

#ifndef FOCKSHIFT_CLASSIFY_HPP
#define FOCKSHIFT_CLASSIFY_HPP

#include "fockshift/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fockshift {

// Finite prefix of an increasing sequence n_1 < n_2 < ... with each term
// dividing the next.
class DivisorSequence {
public:
    explicit DivisorSequence(std::vector<std::int64_t> terms);

    // Comma-separated positive integers, e.g. "2,4,8".
    static DivisorSequence parse(const std::string& text);

    const std::vector<std::int64_t>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    std::string str() const;

private:
    std::vector<std::int64_t> terms_;
};

// Formal product of prime powers; a nullopt exponent means infinity, which
// is never inferred from a finite prefix, only declared by a caller.
struct SupernaturalNumber {
    std::map<std::int64_t, std::optional<int>> factors;
    // True when computed from a sequence prefix: exponents are lower bounds
    // for the limit object, exact for the prefix.
    bool prefix_semantics = false;

    std::string str() const;  // factored form "2^3 · 3^∞", "1" if empty

    friend bool operator==(const SupernaturalNumber& a, const SupernaturalNumber& b) {
        return a.factors == b.factors;
    }
};

// Prime factorization of the product over the prefix: each prime's exponent
// is the max over the terms.
SupernaturalNumber supernatural_from_sequence(const DivisorSequence& seq);

// Mutual-divisibility criterion on the prefixes: every term of each sequence
// divides some term of the other.
bool supernatural_eq(const DivisorSequence& a, const DivisorSequence& b);

// d(N, n) = 1 + N + ... + N^{n-1} at arbitrary precision.
Integer dimension_big(int base, std::size_t n);

// (d(N,n) | d(N,m), n | m); the classification lemma makes these agree for
// every N >= 2.
std::pair<bool, bool> d_divides_iff(int base, std::size_t n, std::size_t m);

struct ExpansionWitness {
    Integer quotient;             // d(N,m) / d(N,n)
    std::vector<Integer> digits;  // base N^n, least significant first
    bool all_ones = false;
    bool count_matches = false;  // digit count == m / n
};

// Base-N^n expansion of d(N,m)/d(N,n); requires n | m, under which the
// digits are all 1 and there are m/n of them.
ExpansionWitness expansion_witness(int base, std::size_t n, std::size_t m);

struct K0Order {
    int base = 0;
    std::size_t exponent = 0;
    Integer order;  // base^exponent - 1
};

K0Order k0_order(int base, std::size_t exponent);

// Mutual divisibility of the order sets {N^{n_k} - 1} and {N^{m_j} - 1} over
// the prefixes; agrees with supernatural_eq.
bool k0_isomorphic(int base, const DivisorSequence& a, const DivisorSequence& b);

}  // namespace fockshift

#endif  // FOCKSHIFT_CLASSIFY_HPP
