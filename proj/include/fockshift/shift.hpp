// Weighted shifts T_i xi_w = lambda_{i,w} xi_{iw}: construction from a weight
// function, diagonal-unitary normalization of complex weights, the L_i W_i
// factorization, sup-formula norms, the bounded-below test and recovery of
// the creation operators.

#ifndef FOCKSHIFT_SHIFT_HPP
#define FOCKSHIFT_SHIFT_HPP

#include "fockshift/fock.hpp"

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace fockshift {

// Immutable evaluation rule (i, w) -> weight. `depth` is the largest |w| the
// rule is defined for; nullopt means every word (periodic rules). Rules built
// from a period-k tree top carry `periodic_k` so suprema can be taken over
// the finite top.
template <typename T>
class WeightFunctionT {
public:
    using Eval = std::function<T(int, const Word&)>;

    WeightFunctionT(int alphabet_size, std::optional<std::size_t> depth, Eval eval,
                    std::optional<std::size_t> periodic_k = std::nullopt)
        : alphabet_size_(alphabet_size),
          depth_(depth),
          periodic_k_(periodic_k),
          eval_(std::move(eval)) {
        if (alphabet_size_ < 1) throw std::invalid_argument("alphabet size must be at least 1");
    }

    static WeightFunctionT constant(int alphabet_size, T value) {
        return WeightFunctionT(alphabet_size, std::nullopt,
                               [value](int, const Word&) { return value; }, 1);
    }

    // Explicit finite-depth table; must contain every (i, u) with |u| <= depth.
    static WeightFunctionT from_table(int alphabet_size, std::size_t depth,
                                      std::map<std::pair<int, Word>, T> table);

    int alphabet_size() const { return alphabet_size_; }
    std::optional<std::size_t> depth() const { return depth_; }
    std::optional<std::size_t> periodic_k() const { return periodic_k_; }

    T operator()(int letter, const Word& w) const {
        if (letter < 1 || letter > alphabet_size_)
            throw std::invalid_argument("weight letter outside alphabet");
        if (w.alphabet_size() != alphabet_size_)
            throw std::invalid_argument("weight word alphabet mismatch");
        if (depth_ && w.length() > *depth_)
            throw std::out_of_range("weight undefined at depth " + std::to_string(w.length()) +
                                    " (defined through " + std::to_string(*depth_) + ")");
        return eval_(letter, w);
    }

private:
    int alphabet_size_;
    std::optional<std::size_t> depth_;
    std::optional<std::size_t> periodic_k_;
    Eval eval_;
};

using WeightFunction = WeightFunctionT<Rational>;
using RawWeightFunction = WeightFunctionT<GaussianRational>;

template <typename T>
WeightFunctionT<T> WeightFunctionT<T>::from_table(int alphabet_size, std::size_t depth,
                                                  std::map<std::pair<int, Word>, T> table) {
    const std::size_t expected =
        static_cast<std::size_t>(alphabet_size) * count_words_below(alphabet_size, depth + 1);
    if (table.size() != expected)
        throw std::invalid_argument("weight table has " + std::to_string(table.size()) +
                                    " entries, expected " + std::to_string(expected));
    auto shared = std::make_shared<std::map<std::pair<int, Word>, T>>(std::move(table));
    return WeightFunctionT(
        alphabet_size, depth, [shared](int i, const Word& w) {
            auto it = shared->find({i, w});
            if (it == shared->end()) throw std::out_of_range("weight table missing (i, u) entry");
            return it->second;
        });
}

// T_i with entry lambda(i, w) at (iw, w) for |w| < L.
template <typename T>
std::vector<SparseOperator<T>> build_shift(const WeightFunctionT<T>& weights,
                                           const TruncatedFockSpace& space) {
    if (weights.alphabet_size() != space.alphabet_size())
        throw std::invalid_argument("weight alphabet does not match space");
    if (weights.depth() && space.max_length() > 0 && *weights.depth() < space.max_length() - 1)
        throw std::invalid_argument("weights defined to depth " + std::to_string(*weights.depth()) +
                                    ", need depth " + std::to_string(space.max_length() - 1));
    std::vector<SparseOperator<T>> ops;
    ops.reserve(space.alphabet_size());
    const std::size_t source_count =
        space.max_length() == 0 ? 0 : space.level_offset(space.max_length());
    for (int i = 1; i <= space.alphabet_size(); ++i) {
        SparseOperator<T> op(space);
        for (WordIndex col = 0; col < source_count; ++col) {
            const Word w = space.word_at(col);
            op.set(space.index_of(w.prepend(i)), col, weights(i, w));
        }
        ops.push_back(std::move(op));
    }
    return ops;
}

// Diagonal unitary U xi_w = mu_w xi_w. Phases are exact Gaussian rationals
// when every required modulus is rational; otherwise the whole run falls back
// to floating complex phases and is marked inexact.
struct DiagonalUnitary {
    int alphabet_size = 0;
    std::size_t depth = 0;  // phases defined for |w| <= depth
    bool exact = true;
    std::map<Word, GaussianRational> exact_phase;
    std::map<Word, std::complex<double>> float_phase;

    std::complex<double> phase_as_complex(const Word& w) const;
    SparseOperator<GaussianRational> to_operator(const TruncatedFockSpace& space) const;
};

struct NormalizationResult {
    DiagonalUnitary unitary;  // depth = weight depth + 1
    bool exact = true;
    // Exact mode: |lambda| as rationals.
    std::map<std::pair<int, Word>, Rational> canonical;
    // Float fallback: |lambda| as doubles.
    std::map<std::pair<int, Word>, double> canonical_float;
    // Sites whose phase has no exact rational-coordinate unit vector.
    std::vector<std::pair<int, Word>> inexact_sites;

    WeightFunction canonical_weights() const;  // exact mode only
};

NormalizationResult normalize_weights(const RawWeightFunction& raw, std::size_t depth);

// Diagonal weight part W of a single shift generator: W xi_w = lambda_{i,w} xi_w.
// The generating letter is inferred from the (iw, w) entry pattern.
SparseOperator<Rational> weight_operator(const SparseOperator<Rational>& shift_op);

struct NormEstimate {
    Rational value;
    // True when the sup is attained on an enumerated finite set (periodic
    // weights); false means a depth-limited lower bound.
    bool exact_sup = true;
    std::size_t depth_used = 0;
};

NormEstimate shift_norm(const WeightFunction& weights, int letter);
NormEstimate row_norm(const WeightFunction& weights);

struct BoundedBelowVerdict {
    bool bounded = false;
    // True when only a finite depth was inspected (non-periodic weights).
    bool depth_limited = false;
    Rational min_weight;
    int min_letter = 0;
    Word min_word{1};
};

BoundedBelowVerdict is_bounded_below(const WeightFunction& weights);

// Raised when an operation requires invertible weight parts.
class ZeroWeightError : public std::domain_error {
public:
    ZeroWeightError(int letter, const Word& word)
        : std::domain_error("zero weight at (i, w) = (" + std::to_string(letter) + ", " +
                            word.str() + ")"),
          letter_(letter),
          word_(word.str()) {}
    int letter() const { return letter_; }
    const std::string& word() const { return word_; }

private:
    int letter_;
    std::string word_;
};

// T W^{-1}; equals the creation operator of the inferred letter on columns of
// length <= L-1. Throws ZeroWeightError when some weight at depth < L is zero.
SparseOperator<Rational> recover_creation(const SparseOperator<Rational>& shift_op);

}  // namespace fockshift

#endif  // FOCKSHIFT_SHIFT_HPP
