#include "fockshift/classify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fockshift {

DivisorSequence::DivisorSequence(std::vector<std::int64_t> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("divisor sequence needs at least one term");
    for (std::size_t j = 0; j < terms_.size(); ++j) {
        if (terms_[j] < 1)
            throw std::invalid_argument("sequence term " + std::to_string(terms_[j]) +
                                        " is not positive");
        if (j == 0) continue;
        if (terms_[j] <= terms_[j - 1])
            throw std::invalid_argument("sequence not strictly increasing at terms " +
                                        std::to_string(terms_[j - 1]) + ", " +
                                        std::to_string(terms_[j]));
        if (terms_[j] % terms_[j - 1] != 0)
            throw std::invalid_argument("sequence term " + std::to_string(terms_[j - 1]) +
                                        " does not divide " + std::to_string(terms_[j]));
    }
}

DivisorSequence DivisorSequence::parse(const std::string& text) {
    std::vector<std::int64_t> terms;
    std::istringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        const auto begin = piece.find_first_not_of(" \t");
        if (begin == std::string::npos)
            throw std::invalid_argument("empty entry in sequence \"" + text + "\"");
        const auto end = piece.find_last_not_of(" \t");
        const std::string token = piece.substr(begin, end - begin + 1);
        try {
            std::size_t used = 0;
            terms.push_back(std::stoll(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw std::invalid_argument("sequence entry \"" + token + "\" is not an integer");
        }
    }
    if (terms.empty()) throw std::invalid_argument("sequence \"" + text + "\" has no terms");
    return DivisorSequence(std::move(terms));
}

std::string DivisorSequence::str() const {
    std::ostringstream out;
    for (std::size_t j = 0; j < terms_.size(); ++j) {
        if (j > 0) out << ",";
        out << terms_[j];
    }
    return out.str();
}

std::string SupernaturalNumber::str() const {
    if (factors.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [prime, exponent] : factors) {
        if (!first) out << " · ";
        first = false;
        out << prime;
        if (!exponent)
            out << "^∞";
        else if (*exponent != 1)
            out << "^" << *exponent;
    }
    return out.str();
}

SupernaturalNumber supernatural_from_sequence(const DivisorSequence& seq) {
    SupernaturalNumber result;
    result.prefix_semantics = true;
    for (std::int64_t term : seq.terms()) {
        for (std::int64_t p = 2; p * p <= term; ++p) {
            if (term % p != 0) continue;
            int exponent = 0;
            while (term % p == 0) {
                term /= p;
                ++exponent;
            }
            auto& stored = result.factors[p];
            stored = std::max(stored.value_or(0), exponent);
        }
        if (term > 1) {
            auto& stored = result.factors[term];
            stored = std::max(stored.value_or(0), 1);
        }
    }
    return result;
}

namespace {

bool each_divides_some(const std::vector<std::int64_t>& from, const std::vector<std::int64_t>& to) {
    for (std::int64_t x : from) {
        bool found = false;
        for (std::int64_t y : to)
            if (y % x == 0) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

}  // namespace

bool supernatural_eq(const DivisorSequence& a, const DivisorSequence& b) {
    return each_divides_some(a.terms(), b.terms()) && each_divides_some(b.terms(), a.terms());
}

Integer dimension_big(int base, std::size_t n) {
    if (base < 2) throw std::invalid_argument("base must be at least 2");
    if (n < 1) throw std::invalid_argument("exponent must be at least 1");
    const Integer power = boost::multiprecision::pow(Integer(base), static_cast<unsigned>(n));
    return (power - 1) / (base - 1);
}

std::pair<bool, bool> d_divides_iff(int base, std::size_t n, std::size_t m) {
    const Integer dn = dimension_big(base, n);
    const Integer dm = dimension_big(base, m);
    return {dm % dn == 0, m % n == 0};
}

ExpansionWitness expansion_witness(int base, std::size_t n, std::size_t m) {
    if (m % n != 0)
        throw std::invalid_argument(std::to_string(n) + " does not divide " + std::to_string(m));
    const Integer dn = dimension_big(base, n);
    const Integer dm = dimension_big(base, m);

    ExpansionWitness witness;
    witness.quotient = dm / dn;
    const Integer radix = boost::multiprecision::pow(Integer(base), static_cast<unsigned>(n));
    Integer c = witness.quotient;
    while (c > 0) {
        witness.digits.push_back(c % radix);
        c /= radix;
    }
    witness.all_ones =
        std::all_of(witness.digits.begin(), witness.digits.end(),
                    [](const Integer& digit) { return digit == 1; });
    witness.count_matches = witness.digits.size() == m / n;
    return witness;
}

K0Order k0_order(int base, std::size_t exponent) {
    if (base < 2) throw std::invalid_argument("base must be at least 2");
    if (exponent < 1) throw std::invalid_argument("exponent must be at least 1");
    K0Order result;
    result.base = base;
    result.exponent = exponent;
    result.order = boost::multiprecision::pow(Integer(base), static_cast<unsigned>(exponent)) - 1;
    return result;
}

bool k0_isomorphic(int base, const DivisorSequence& a, const DivisorSequence& b) {
    if (base < 2) throw std::invalid_argument("base must be at least 2");
    auto orders = [base](const DivisorSequence& seq) {
        std::vector<Integer> out;
        out.reserve(seq.size());
        for (std::int64_t term : seq.terms())
            out.push_back(k0_order(base, static_cast<std::size_t>(term)).order);
        return out;
    };
    const std::vector<Integer> oa = orders(a);
    const std::vector<Integer> ob = orders(b);
    auto covered = [](const std::vector<Integer>& from, const std::vector<Integer>& to) {
        for (const Integer& x : from) {
            bool found = false;
            for (const Integer& y : to)
                if (y % x == 0) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
        return true;
    };
    return covered(oa, ob) && covered(ob, oa);
}

}  // namespace fockshift
